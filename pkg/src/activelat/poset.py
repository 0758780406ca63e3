"""Finite posets stored as a reflexive-transitive boolean matrix."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import MissingBoundsError

RECURSION_LIMIT = 64


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """``leq[i, j]`` is true iff ``elements[i] <= elements[j]``."""

    elements: tuple
    leq: np.ndarray
    bottom: int | None = None
    top: int | None = None

    def __post_init__(self):
        leq = np.asarray(self.leq, dtype=bool)
        n = len(self.elements)
        if leq.shape != (n, n):
            raise ValueError(f"relation has shape {leq.shape}, expected {(n, n)}")
        leq.setflags(write=False)
        object.__setattr__(self, "leq", leq)

    @classmethod
    def from_relation(cls, elements: Sequence, relation, *, bottom=None, top=None, close=True) -> "FinitePoset":
        """Build from any relation matrix; reflexive and (optionally) transitive closure applied."""
        r = np.array(relation, dtype=bool)
        np.fill_diagonal(r, True)
        if close:
            r = transitive_closure(r)
        return cls(tuple(elements), r, bottom, top)

    def __len__(self):
        return len(self.elements)

    def check_partial_order(self) -> None:
        r = self.leq
        if not r.diagonal().all():
            raise AssertionError("relation is not reflexive")
        both = r & r.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise AssertionError(f"antisymmetry fails for elements {i} and {j}")
        if (transitive_closure(r) != r).any():
            raise AssertionError("relation is not transitive")

    @cached_property
    def less(self) -> np.ndarray:
        s = self.leq.copy()
        np.fill_diagonal(s, False)
        return s

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` with ``j`` covering ``i`` (transitive reduction)."""
        s = self.less.astype(np.int64)
        two_step = (s @ s) > 0
        red = self.less & ~two_step
        return [(int(i), int(j)) for i, j in np.argwhere(red)]

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        up: list[list[int]] = [[] for _ in self.elements]
        for i, j in self.covers:
            up[i].append(j)
        return up

    @cached_property
    def linear_extension(self) -> list[int]:
        # sorting by number of elements below gives a linear extension
        below = self.leq.sum(axis=0)
        return sorted(range(len(self)), key=lambda i: (int(below[i]), i))

    def minimal_elements(self) -> list[int]:
        return [i for i in range(len(self)) if not self.less[:, i].any()]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(len(self)) if not self.less[i, :].any()]

    def upper_bounds(self, idx: Sequence[int]) -> np.ndarray:
        mask = np.ones(len(self), dtype=bool)
        for i in idx:
            mask &= self.leq[i]
        return np.flatnonzero(mask)

    def lower_bounds(self, idx: Sequence[int]) -> np.ndarray:
        mask = np.ones(len(self), dtype=bool)
        for i in idx:
            mask &= self.leq[:, i]
        return np.flatnonzero(mask)

    def join(self, idx: Sequence[int]) -> int | None:
        """Least upper bound by search, or ``None`` when there is none."""
        ub = self.upper_bounds(idx)
        for u in ub:
            if all(self.leq[u, v] for v in ub):
                return int(u)
        return None

    def meet(self, idx: Sequence[int]) -> int | None:
        lb = self.lower_bounds(idx)
        for u in lb:
            if all(self.leq[v, u] for v in lb):
                return int(u)
        return None

    def is_lattice(self) -> bool:
        n = len(self)
        for i in range(n):
            for j in range(i + 1, n):
                if self.join([i, j]) is None or self.meet([i, j]) is None:
                    return False
        return True

    @cached_property
    def heights(self) -> list[int]:
        """Length of the longest chain from a minimal element to each element."""
        h = [0] * len(self)
        for j in self.linear_extension:
            below = np.flatnonzero(self.less[:, j])
            if below.size:
                h[j] = 1 + max(h[i] for i in below)
        return h

    def maximal_chain_lengths(self) -> set[int]:
        """Lengths (edge counts) of all maximal chains, by dynamic programming over covers."""
        lengths: dict[int, set[int]] = {}
        for i in reversed(self.linear_extension):
            ups = self.upper_covers[i]
            if not ups:
                lengths[i] = {0}
            else:
                lengths[i] = {1 + x for j in ups for x in lengths[j]}
        out: set[int] = set()
        for i in self.minimal_elements():
            out |= lengths[i]
        return out

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.elements, self.leq.T.copy(), bottom=self.top, top=self.bottom)

    def with_bounds(self, bottom_label="bottom", top_label="top") -> "FinitePoset":
        """Adjoin a new minimum and maximum."""
        n = len(self)
        r = np.zeros((n + 2, n + 2), dtype=bool)
        r[1 : n + 1, 1 : n + 1] = self.leq
        r[0, :] = True
        r[:, n + 1] = True
        return FinitePoset((bottom_label,) + tuple(self.elements) + (top_label,), r, 0, n + 1)

    # Möbius function -----------------------------------------------------

    def _require_bounds(self):
        if self.bottom is None or self.top is None:
            raise MissingBoundsError("poset needs both a bottom and a top element")

    def mobius_from(self, x: int) -> dict[int, int]:
        """``mu(x, y)`` for all ``y >= x`` by the defining recursion."""
        mu = {x: 1}
        for y in self.linear_extension:
            if y == x or not self.leq[x, y]:
                continue
            mu[y] = -sum(mu[z] for z in mu if self.less[z, y])
        return mu

    def mobius_matrix(self) -> np.ndarray:
        """Full Möbius matrix (object dtype, exact ints) as the inverse of the zeta matrix."""
        order = self.linear_extension
        n = len(order)
        zeta = self.leq[np.ix_(order, order)]
        # zeta - I is strictly upper triangular, hence nilpotent
        nil = np.where(zeta, 1, 0).astype(object)
        for i in range(n):
            nil[i, i] = 0
        result = np.zeros((n, n), dtype=object)
        for i in range(n):
            result[i, i] = 1
        term = result.copy()
        sign = 1
        while True:
            term = term.dot(nil)
            if not term.any():
                break
            sign = -sign
            result = result + sign * term
        inv = np.empty(n, dtype=int)
        inv[order] = np.arange(n)
        return result[np.ix_(inv, inv)]

    def mobius(self, method: str = "auto") -> int:
        """``mu(bottom, top)``."""
        self._require_bounds()
        if method == "auto":
            method = "recursion" if len(self) <= RECURSION_LIMIT else "zeta"
        if method == "recursion":
            return int(self.mobius_from(self.bottom)[self.top])
        if method == "zeta":
            return int(self.mobius_matrix()[self.bottom, self.top])
        raise ValueError(f"unknown method {method!r}")


def transitive_closure(r: np.ndarray) -> np.ndarray:
    r = np.array(r, dtype=bool)
    n = r.shape[0]
    for k in range(n):
        r |= np.outer(r[:, k], r[k, :])
    return r


def boolean_lattice(n: int) -> FinitePoset:
    """Subsets of ``{0..n-1}`` ordered by inclusion."""
    subsets = list(range(1 << n))
    r = np.array([[a & b == a for b in subsets] for a in subsets], dtype=bool)
    return FinitePoset(tuple(subsets), r, 0, (1 << n) - 1)


def chain(n: int) -> FinitePoset:
    r = np.triu(np.ones((n, n), dtype=bool))
    return FinitePoset(tuple(range(n)), r, 0, n - 1)
