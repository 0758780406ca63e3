"""External activity lattices of ordered matroids and their topology."""

from .activity import ActivityReport, active_set, ext_set, max_bas, top, top_prime
from .complexes import (
    SimplicialComplex,
    atom_join_complex,
    atom_join_cover,
    dual_top_restriction,
    independence_complex,
    nerve,
    order_complex,
)
from .flats import (
    bjorner_homology,
    closure,
    delta_homology_closed_form,
    flat_lattice,
    mobius_closed_form,
    reduced_mobius,
)
from .homology import HomologyProfile, homology, reduced_euler
from .lattice import (
    ExternalLattice,
    build_external_lattice,
    check_sublattice_embedding,
    exin_order,
    internal_order,
    join,
)
from .matroid import (
    Multigraph,
    OrderedMatroid,
    contract,
    dual,
    fundamental_circuit,
    graphic,
    is_independent,
    parse_matroid,
    rank_of,
    reorder,
    restrict,
    uniform,
    validate,
)
from .poset import FinitePoset
from .theorems import check_ball_sphere, check_cone_criterion, verify_main_theorem

__version__ = "0.1.0"
