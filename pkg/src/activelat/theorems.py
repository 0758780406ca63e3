"""Checks of the homotopy theorem and its applications on concrete matroids.

Every check computes both sides independently and reports them; nothing
here trusts a closed form without comparing it to a computed value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .activity import top
from .complexes import (
    DEFAULT_MAX_FACES,
    atom_join_complex,
    atom_join_cover,
    dual_top_restriction,
    independence_complex,
    nerve,
    order_complex,
)
from .errors import CapExceededError
from .homology import HomologyProfile, homology, reduced_euler
from .lattice import DEFAULT_MAX_LATTICE_BASES, ExternalLattice, build_external_lattice
from .matroid import Multigraph, OrderedMatroid, is_spanning, rank_of


@dataclass
class MainTheoremReport:
    delta: HomologyProfile | None = None
    independence: HomologyProfile | None = None
    atom_join: HomologyProfile | None = None
    nerve: HomologyProfile | None = None
    nerve_isomorphic: bool | None = None
    mobius: int | None = None
    euler_delta: int | None = None
    lattice_rank: int | None = None
    delta_dim: int | None = None
    skipped: list[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.skipped

    @property
    def ok(self) -> bool:
        """All computed quantities agree (partial reports compare what was computed)."""
        profiles = [p for p in (self.delta, self.independence, self.atom_join, self.nerve) if p is not None]
        if any(p != profiles[0] for p in profiles):
            return False
        if self.nerve_isomorphic is False:
            return False
        if self.delta is not None and self.mobius is not None:
            if not (self.mobius == self.euler_delta == self.delta.euler()):
                return False
        return True

    @property
    def homology_below_top(self) -> bool:
        """Homology of the order complex in a dimension below ``rho(T) - 2``."""
        if self.delta is None or self.lattice_rank is None:
            return False
        return any(i < self.lattice_rank - 2 for i in self.delta.nonzero())


def nerve_isomorphism(lat: ExternalLattice) -> bool:
    """Check that ``S -> {j : t_j in S}`` maps ``IN(M*|T')`` onto the nerve of the atom cover."""
    tp, cover = atom_join_cover(lat)
    ner = nerve(cover, atom_join_complex(lat))
    ind = dual_top_restriction(lat.matroid, prime=True)
    # restriction relabels T' to 0..|T'|-1 in order, which is exactly j
    assert list(ind.index_map) == tp
    return ner == independence_complex(ind)


def verify_main_theorem(
    m: OrderedMatroid,
    *,
    max_bases: int = DEFAULT_MAX_LATTICE_BASES,
    max_faces: int = DEFAULT_MAX_FACES,
) -> MainTheoremReport:
    """Homology of ``Delta(L(M))``, ``IN(M*|T)``, the atom-join complex and the nerve."""
    rep = MainTheoremReport()
    ind = independence_complex(dual_top_restriction(m))
    try:
        rep.independence = homology(ind, max_faces)
    except CapExceededError as exc:
        rep.skipped.append(f"independence: {exc}")
    try:
        lat = build_external_lattice(m, max_bases=max_bases)
    except CapExceededError as exc:
        rep.skipped.append(f"lattice: {exc}")
        return rep
    rep.lattice_rank = lat.rank[lat.top]
    rep.mobius = lat.mobius()
    delta = order_complex(lat.poset)
    rep.delta_dim = delta.dim
    try:
        rep.delta = homology(delta, max_faces)
        rep.euler_delta = reduced_euler(delta, max_faces)
    except CapExceededError as exc:
        rep.skipped.append(f"order complex: {exc}")
    jc = atom_join_complex(lat)
    try:
        rep.atom_join = homology(jc, max_faces)
    except CapExceededError as exc:
        rep.skipped.append(f"atom-join: {exc}")
    _, cover = atom_join_cover(lat)
    try:
        rep.nerve = homology(nerve(cover, jc), max_faces)
        rep.nerve_isomorphic = nerve_isomorphism(lat)
    except CapExceededError as exc:
        rep.skipped.append(f"nerve: {exc}")
    return rep


# ---------------------------------------------------------------------------
# sufficient conditions for vanishing or spherical homology


@dataclass
class CriterionReport:
    name: str
    hypothesis: bool
    witness: object = None
    predicted: HomologyProfile | None = None
    predicted_mobius: int | None = None
    computed: HomologyProfile | None = None
    computed_mobius: int | None = None

    @property
    def ok(self) -> bool:
        if not self.hypothesis:
            return True
        return self.predicted == self.computed and self.predicted_mobius == self.computed_mobius


def _computed(m, max_faces):
    lat = build_external_lattice(m)
    return homology(order_complex(lat.poset), max_faces), lat.mobius()


def cone_elements(m: OrderedMatroid) -> list[int]:
    """Elements ``t`` of ``T`` with ``rk(E - T) = rk((E - T) + t)``."""
    t = top(m)
    rest = m.ground - t
    r = rank_of(m, rest)
    return [x for x in sorted(t) if rank_of(m, rest | {x}) == r]


def graph_cone_edges(m: OrderedMatroid) -> list[int]:
    """Edges of ``T`` joining two vertices in one component of ``G - E(T)``."""
    if m.graph is None:
        raise ValueError("not a graphic matroid")
    t = top(m)
    comp = m.graph.components(m.ground - t)
    return [e for e in sorted(t) if comp[m.graph.edges[e][0]] == comp[m.graph.edges[e][1]]]


def check_cone_criterion(m: OrderedMatroid, max_faces: int = DEFAULT_MAX_FACES) -> CriterionReport:
    elems = cone_elements(m)
    rep = CriterionReport("cone", bool(elems), witness=elems)
    if elems:
        rep.predicted = HomologyProfile.zero()
        rep.predicted_mobius = 0
        rep.computed, rep.computed_mobius = _computed(m, max_faces)
    return rep


def check_ball_sphere(m: OrderedMatroid, max_faces: int = DEFAULT_MAX_FACES) -> CriterionReport:
    """Ball case: ``M|(E-T)`` spanning.  Sphere case: ``M|(E-S)`` spanning for
    every proper ``S`` of ``T`` but not for ``S = T``."""
    t = top(m)
    r = m.rank
    rep = CriterionReport("ball-sphere", False)
    if r < 1:
        return rep
    if is_spanning(m, m.ground - t):
        rep.hypothesis, rep.witness = True, "ball"
        rep.predicted, rep.predicted_mobius = HomologyProfile.zero(), 0
    else:
        # spanning is monotone, so checking the maximal proper subsets suffices
        if all(is_spanning(m, m.ground - (t - {x})) for x in t):
            rep.hypothesis, rep.witness = True, "sphere"
            rep.predicted = HomologyProfile.concentrated(r - 2, 1)
            rep.predicted_mobius = -1 if (r - 2) % 2 else 1
    if rep.hypothesis:
        rep.computed, rep.computed_mobius = _computed(m, max_faces)
    return rep


def classify(m: OrderedMatroid) -> str:
    """Which vanishing/sphere criterion applies: ``spanning``, ``sphere``, ``cone`` or ``none``."""
    if m.rank >= 1:
        t = top(m)
        if is_spanning(m, m.ground - t):
            return "spanning"
        if all(is_spanning(m, m.ground - (t - {x})) for x in t):
            return "sphere"
    if cone_elements(m):
        return "cone"
    return "none"


def internal_vertices(graph: Multigraph, edge_subset: Iterable[int]) -> list[int]:
    """Vertices of the subgraph all of whose incident edges in ``graph`` lie in ``edge_subset``."""
    sub = set(edge_subset)
    touched = {v for i in sub for v in graph.edges[i]}
    out = []
    for v in sorted(touched):
        if all(i in sub for i, e in enumerate(graph.edges) if v in e):
            out.append(v)
    return out


def complete_graph_prediction(m: OrderedMatroid, n: int) -> tuple[bool, HomologyProfile, int]:
    """Expected profile and Möbius value of an ordered ``K_n`` from internal vertices of ``T``."""
    has_internal = bool(internal_vertices(m.graph, top(m)))
    if has_internal:
        return True, HomologyProfile.concentrated(n - 3, 1), -1 if (n - 3) % 2 else 1
    return False, HomologyProfile.zero(), 0


def wheel_prediction(m: OrderedMatroid, n: int) -> tuple[str, int | None, HomologyProfile, int]:
    """Case analysis for an ordered wheel ``W_n``.

    Returns ``(case, k, profile, mu)`` where ``case`` is ``"cone"`` or
    ``"components"`` and ``k + 1`` is the number of components of ``W_n - E(T)``.
    """
    if graph_cone_edges(m):
        return "cone", None, HomologyProfile.zero(), 0
    t = top(m)
    comp = m.graph.components(m.ground - t)
    k = len(set(comp)) - 1
    i = n - k - 1
    return "components", k, HomologyProfile.concentrated(i, 1), -1 if i % 2 else 1
