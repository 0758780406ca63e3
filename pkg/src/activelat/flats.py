"""Lattice of flats, the reduced Möbius function and the closed-form
homology predictions built on them."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .activity import top
from .errors import CapExceededError
from .homology import HomologyProfile
from .matroid import OrderedMatroid, _check_subset, contract, dual, rank_of, restrict
from .poset import FinitePoset

DEFAULT_MAX_GROUND = 16
SUBSET_SCAN_LIMIT = 10


def closure(m: OrderedMatroid, s: Iterable[int]) -> frozenset[int]:
    s = _check_subset(m, s)
    r = rank_of(m, s)
    return frozenset(e for e in range(m.size) if e in s or rank_of(m, s | {e}) == r)


@dataclass(frozen=True, eq=False)
class FlatLattice:
    matroid: OrderedMatroid
    flats: tuple[frozenset[int], ...]
    poset: FinitePoset

    @cached_property
    def ranks(self) -> list[int]:
        return [rank_of(self.matroid, f) for f in self.flats]

    def mobius(self) -> int:
        return self.poset.mobius()

    def to_dict(self) -> dict:
        labels = self.matroid.labels
        return {
            "flats": [[_plain(labels[e]) for e in sorted(f)] for f in self.flats],
            "covers": [list(c) for c in self.poset.covers],
            "mobius": self.mobius(),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _plain(x):
    return list(x) if isinstance(x, tuple) else x


def flats_by_covers(m: OrderedMatroid) -> set[frozenset[int]]:
    """Flats generated from the closure of the empty set by adding one element and closing."""
    start = closure(m, ())
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for f in frontier:
            for e in range(m.size):
                if e not in f:
                    g = closure(m, f | {e})
                    if g not in seen:
                        seen.add(g)
                        nxt.append(g)
        frontier = nxt
    return seen


def flats_by_subsets(m: OrderedMatroid) -> set[frozenset[int]]:
    """Closures of all ``2^n`` subsets (oracle for small ground sets)."""
    return {closure(m, s) for r in range(m.size + 1) for s in itertools.combinations(range(m.size), r)}


def flat_lattice(m: OrderedMatroid, *, max_ground: int = DEFAULT_MAX_GROUND, method: str = "covers") -> FlatLattice:
    if m.size > max_ground:
        raise CapExceededError(f"ground set of size {m.size} exceeds the flat-lattice cap {max_ground}")
    if method == "covers":
        fl = flats_by_covers(m)
    elif method == "subsets":
        fl = flats_by_subsets(m)
    else:
        raise ValueError(f"unknown method {method!r}")
    flats = tuple(sorted(fl, key=lambda f: (rank_of(m, f), len(f), sorted(f))))
    r = np.array([[a <= b for b in flats] for a in flats], dtype=bool)
    bottom = 0
    top_idx = flats.index(m.ground)
    poset = FinitePoset(tuple(tuple(sorted(f)) for f in flats), r, bottom, top_idx)
    return FlatLattice(m, flats, poset)


def reduced_mobius(m: OrderedMatroid) -> int:
    """``|mu(L_F(M))|`` for a loopless matroid, 0 otherwise."""
    if m.loops:
        return 0
    return abs(flat_lattice(m).mobius())


def bjorner_homology(m: OrderedMatroid) -> HomologyProfile:
    """Predicted homology of ``IN(M)``: ``Z^mu~(M*)`` in dimension ``rk(M) - 1``."""
    return HomologyProfile.concentrated(m.rank - 1, reduced_mobius(dual(m)))


def delta_homology_closed_form(m: OrderedMatroid) -> HomologyProfile:
    """Predicted homology of the order complex of ``L(M)`` from ``M.T``:
    ``Z^mu~(M.T)`` in dimension ``rk(M*|T) - 1``."""
    t = top(m)
    r_star = restrict(dual(m), t).rank
    return HomologyProfile.concentrated(r_star - 1, reduced_mobius(contract(m, t)))


def mobius_closed_form(m: OrderedMatroid) -> int:
    """``mu(L(M)) = (-1)^(r-1) mu(L_F(M.T))`` when ``M.T`` is loopless, else 0."""
    mt = contract(m, top(m))
    if mt.loops:
        return 0
    sign = -1 if (m.rank - 1) % 2 else 1
    return sign * flat_lattice(mt).mobius()
