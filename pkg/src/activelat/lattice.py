"""The external lattice of an ordered matroid and the related basis orders.

Element 0 of every :class:`ExternalLattice` is the synthetic bottom; elements
``1..len(bases)`` are the bases in canonical (sorted-tuple) order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .activity import ext_set, max_bas, top
from .errors import CapExceededError, NotSpanningError, OrderConflictError
from .matroid import OrderedMatroid, _check_subset, dual, is_spanning, restrict
from .poset import FinitePoset, transitive_closure

DEFAULT_MAX_LATTICE_BASES = 5000
BOTTOM = "bottom"


def _key(s):
    return tuple(sorted(s))


@dataclass(frozen=True, eq=False)
class ExternalLattice:
    matroid: OrderedMatroid
    bases: tuple[frozenset[int], ...]
    ext: tuple[frozenset[int], ...]
    poset: FinitePoset
    top: int
    rank: tuple[int, ...]

    @cached_property
    def index(self) -> dict[frozenset[int], int]:
        return {b: i + 1 for i, b in enumerate(self.bases)}

    def element(self, i: int):
        return BOTTOM if i == 0 else self.bases[i - 1]

    @property
    def top_basis(self) -> frozenset[int]:
        return self.bases[self.top - 1]

    def leq(self, a: Iterable[int], b: Iterable[int]) -> bool:
        return bool(self.poset.leq[self.index[frozenset(a)], self.index[frozenset(b)]])

    @cached_property
    def atoms(self) -> list[int]:
        return [j for i, j in self.poset.covers if i == 0]

    @property
    def covers(self) -> list[tuple[int, int]]:
        return self.poset.covers

    def rank_sequence(self) -> list[int]:
        """Number of elements at each rank, starting with the bottom."""
        counts = [0] * (max(self.rank) + 1)
        for r in self.rank:
            counts[r] += 1
        return counts

    def mobius(self) -> int:
        return self.poset.mobius()

    def to_dict(self) -> dict:
        labels = self.matroid.labels
        elems = ["bottom"] + [[_label(labels[e]) for e in sorted(b)] for b in self.bases]
        return {
            "elements": elems,
            "covers": [list(c) for c in self.covers],
            "rank": list(self.rank),
            "top": self.top,
            "mobius": self.mobius(),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _label(x):
    return list(x) if isinstance(x, tuple) else x


def build_external_lattice(
    m: OrderedMatroid, *, max_bases: int = DEFAULT_MAX_LATTICE_BASES, crosscheck: bool = False
) -> ExternalLattice:
    """``L(M)``: bases ordered by ``A <= B`` iff ``A`` lies in ``B + Ext(B)``, plus a bottom.

    Ranks are ``|Ext(B) - loops| + 1``; for loopless matroids this is the
    usual ``|Ext(B)| + 1``.  Loops are externally active for every basis and
    would otherwise shift every rank by the same constant.
    """
    if len(m.bases) > max_bases:
        raise CapExceededError(f"{len(m.bases)} bases exceeds the lattice cap of {max_bases}")
    bases = m.bases
    ext = tuple(ext_set(m, b) for b in bases)
    n = len(bases) + 1
    r = np.zeros((n, n), dtype=bool)
    r[0, :] = True
    for j, (b, x) in enumerate(zip(bases, ext), start=1):
        up = b | x
        for i, a in enumerate(bases, start=1):
            r[i, j] = a <= up
    if crosscheck:
        for j, b in enumerate(bases, start=1):
            for i, a in enumerate(bases, start=1):
                lex = max_bas(m, a | b) == b
                if lex != r[i, j]:
                    raise AssertionError(f"order mismatch for {_key(a)} <= {_key(b)}")
    t = top(m)
    t_idx = bases.index(t) + 1
    poset = FinitePoset(("bottom",) + tuple(_key(b) for b in bases), r, 0, t_idx)
    loops = m.loops
    rank = (0,) + tuple(len(x - loops) + 1 for x in ext)
    return ExternalLattice(m, bases, ext, poset, t_idx, rank)


def join(lat: ExternalLattice, bs: Sequence[Iterable[int]]) -> frozenset[int]:
    """Join of bases, ``MaxBas`` of their union."""
    bs = [frozenset(b) for b in bs]
    if not bs:
        raise ValueError("join of an empty family")
    return max_bas(lat.matroid, frozenset().union(*bs))


@dataclass(frozen=True)
class LatticeCheck:
    is_lattice: bool
    graded: bool
    rank_matches_height: bool
    atoms_have_no_ext: bool
    top_is_max: bool

    @property
    def ok(self):
        return all((self.is_lattice, self.graded, self.rank_matches_height, self.atoms_have_no_ext, self.top_is_max))


def check_lattice(lat: ExternalLattice, *, exhaustive_lattice: bool = True) -> LatticeCheck:
    p = lat.poset
    p.check_partial_order()
    heights = p.heights
    graded = len(p.maximal_chain_lengths()) == 1
    loops = lat.matroid.loops
    atom_set = set(lat.atoms)
    no_ext = {i + 1 for i, x in enumerate(lat.ext) if not (x - loops)}
    return LatticeCheck(
        is_lattice=p.is_lattice() if exhaustive_lattice else True,
        graded=graded,
        rank_matches_height=list(heights) == list(lat.rank),
        atoms_have_no_ext=atom_set == no_ext,
        top_is_max=bool(p.leq[:, lat.top].all()),
    )


def external_order(m: OrderedMatroid) -> FinitePoset:
    """The external order on the bases alone (no synthetic bottom)."""
    lat = build_external_lattice(m)
    idx = np.arange(1, len(lat.bases) + 1)
    return FinitePoset(lat.poset.elements[1:], lat.poset.leq[np.ix_(idx, idx)])


def internal_order(m: OrderedMatroid) -> FinitePoset:
    """``A <= B`` iff ``E - B <= E - A`` externally in the dual; a top is adjoined."""
    d = dual(m)
    dlat = build_external_lattice(d)
    ground = m.ground
    bases = m.bases
    n = len(bases) + 1
    r = np.zeros((n, n), dtype=bool)
    r[:, n - 1] = True
    for i, a in enumerate(bases):
        ia = dlat.index[ground - a]
        for j, b in enumerate(bases):
            r[i, j] = dlat.poset.leq[dlat.index[ground - b], ia]
    return FinitePoset(tuple(_key(b) for b in bases) + ("top",), r, None, n - 1)


def exin_order(m: OrderedMatroid) -> FinitePoset:
    """Union of the external and internal orders on the bases, transitively closed.

    Raises :class:`OrderConflictError` if some pair is strictly ordered one
    way externally and the other way internally.
    """
    ext = external_order(m).leq
    inte = internal_order(m).leq[:-1, :-1]
    conflict = ext & inte.T
    np.fill_diagonal(conflict, False)
    if conflict.any():
        i, j = map(int, np.argwhere(conflict)[0])
        pair = (m.bases[i], m.bases[j])
        raise OrderConflictError(f"{_key(pair[0])} <ext {_key(pair[1])} but >int", pair)
    r = transitive_closure(ext | inte)
    p = FinitePoset(tuple(_key(b) for b in m.bases), r)
    p.check_partial_order()
    return p


@dataclass
class EmbeddingReport:
    order_embedding: bool
    # per basis of M|F (labelled in M): (rank in L(M|F), rank in L(M), Ext_M(B) - F is loops only)
    ranks: dict[tuple[int, ...], tuple[int, int, bool]] = field(default_factory=dict)
    criterion_a: bool = True
    contains_complement_of_top: bool = False
    initial_segment: bool = False
    all_ranks_preserved: bool = False

    @property
    def ok(self) -> bool:
        if not (self.order_embedding and self.criterion_a):
            return False
        if (self.contains_complement_of_top or self.initial_segment) and not self.all_ranks_preserved:
            return False
        return True


def check_sublattice_embedding(m: OrderedMatroid, f: Iterable[int]) -> EmbeddingReport:
    """Compare ``L(M|F)`` with its image in ``L(M)`` for a spanning ``F``."""
    f = _check_subset(m, f)
    if not is_spanning(m, f):
        raise NotSpanningError(f"{sorted(f)} does not span the matroid")
    k = restrict(m, f)
    back = k.index_map
    lm = build_external_lattice(m)
    lk = build_external_lattice(k)
    to_m = [frozenset(back[e] for e in b) for b in lk.bases]

    embedding = True
    for i, a in enumerate(to_m):
        for j, b in enumerate(to_m):
            if bool(lk.poset.leq[i + 1, j + 1]) != lm.leq(a, b):
                embedding = False

    loops = m.loops
    report = EmbeddingReport(order_embedding=embedding)
    preserved_all = True
    for i, b in enumerate(to_m):
        rk = lk.rank[i + 1]
        rm = lm.rank[lm.index[b]]
        ext_m = lm.ext[lm.index[b] - 1]
        inside = not ((ext_m - f) - loops)
        report.ranks[_key(b)] = (rk, rm, inside)
        if (rk == rm) != inside:
            report.criterion_a = False
        preserved_all &= rk == rm
    report.all_ranks_preserved = preserved_all
    report.contains_complement_of_top = (m.ground - lm.top_basis) <= f
    rest = m.ground - f
    report.initial_segment = not rest or max(f, default=-1) < min(rest)
    return report


def initial_segment_order(m: OrderedMatroid, f: Iterable[int]) -> list[int]:
    """A permutation putting ``f`` first (keeping its relative order), for :func:`reorder`."""
    f = sorted(_check_subset(m, f))
    return f + [e for e in range(m.size) if e not in set(f)]
