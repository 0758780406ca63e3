"""Abstract simplicial complexes and the constructions attached to L(M).

A complex is stored by its facets; faces are the nonempty subsets of
facets.  The complex with no facets has only the empty face.
"""

from __future__ import annotations

import itertools
import json
from typing import Hashable, Iterable, Mapping, Sequence

from .activity import top, top_prime
from .errors import CapExceededError, InvalidCoverError
from .lattice import ExternalLattice, join
from .matroid import OrderedMatroid, dual, restrict
from .poset import FinitePoset

DEFAULT_MAX_FACES = 200_000


def _maximal(sets: Iterable[frozenset]) -> list[frozenset]:
    uniq = sorted({s for s in sets if s}, key=len, reverse=True)
    kept: list[frozenset] = []
    for s in uniq:
        if not any(s <= k for k in kept):
            kept.append(s)
    return kept


class SimplicialComplex:
    """Family of nonempty faces closed under taking nonempty subsets."""

    def __init__(self, facets: Iterable[Iterable[Hashable]] = ()):
        fs = _maximal(frozenset(f) for f in facets)
        self.facets: tuple[frozenset, ...] = tuple(sorted(fs, key=lambda f: (len(f), sorted(f))))
        self.vertices: tuple = tuple(sorted(set().union(*self.facets))) if self.facets else ()

    def __repr__(self):
        return f"SimplicialComplex(vertices={len(self.vertices)}, facets={len(self.facets)}, dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash(frozenset(self.facets))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_empty(self) -> bool:
        return not self.facets

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def cone_points(self) -> frozenset:
        """Vertices lying in every facet."""
        if not self.facets:
            return frozenset()
        return frozenset.intersection(*self.facets)

    def contains(self, face: Iterable) -> bool:
        face = frozenset(face)
        return bool(face) and any(face <= f for f in self.facets)

    def faces(self, max_faces: int = DEFAULT_MAX_FACES) -> list[list[tuple]]:
        """Faces grouped by dimension (index ``k`` holds the ``k``-faces as sorted tuples)."""
        return self._faces_capped(max_faces)

    def _faces_capped(self, max_faces):
        cached = self.__dict__.get("_faces")
        if cached is not None:
            return cached
        top_size = self.dim + 1
        by_size: list[set] = [set() for _ in range(top_size + 1)]
        for f in self.facets:
            by_size[len(f)].add(tuple(sorted(f)))
        total = 0
        for size in range(top_size, 1, -1):
            level = by_size[size]
            total += len(level)
            if total > max_faces:
                raise CapExceededError(f"more than {max_faces} faces (reached dimension {size - 1})")
            lower = by_size[size - 1]
            for face in level:
                for i in range(size):
                    lower.add(face[:i] + face[i + 1 :])
        total += len(by_size[1]) if top_size >= 1 else 0
        if total > max_faces:
            raise CapExceededError(f"more than {max_faces} faces")
        out = [sorted(by_size[s]) for s in range(1, top_size + 1)]
        self.__dict__["_faces"] = out
        return out

    def f_vector(self, max_faces: int = DEFAULT_MAX_FACES) -> list[int]:
        return [len(level) for level in self.faces(max_faces)]

    def relabel(self, mapping: Mapping) -> "SimplicialComplex":
        return SimplicialComplex([{mapping[v] for v in f} for f in self.facets])

    def to_json(self) -> str:
        return json.dumps([sorted(_plain(v) for v in f) for f in self.facets])


def _plain(v):
    return list(v) if isinstance(v, tuple) else v


def simplex(vertices: Iterable) -> SimplicialComplex:
    return SimplicialComplex([vertices])


def skeleton_of_simplex(n: int, k: int) -> SimplicialComplex:
    """All faces of dimension at most ``k`` of the simplex on ``0..n-1``."""
    return SimplicialComplex(itertools.combinations(range(n), k + 1))


# ---------------------------------------------------------------------------
# complexes built from posets and matroids


def maximal_chains(p: FinitePoset) -> list[list[int]]:
    """Maximal chains from the bottom to the top, as index lists."""
    p._require_bounds()
    out: list[list[int]] = []
    stack = [(p.bottom, [p.bottom])]
    ups = p.upper_covers
    while stack:
        x, path = stack.pop()
        if x == p.top:
            out.append(path)
            continue
        for y in ups[x]:
            stack.append((y, path + [y]))
    return out


def order_complex(p: FinitePoset) -> SimplicialComplex:
    """Chains of the open interval ``(bottom, top)``; facets are maximal chains."""
    return SimplicialComplex(c[1:-1] for c in maximal_chains(p))


def independence_complex(m: OrderedMatroid) -> SimplicialComplex:
    """Nonempty independent sets; the facets are the bases."""
    return SimplicialComplex(m.bases)


def dual_top_restriction(m: OrderedMatroid, prime: bool = False) -> OrderedMatroid:
    """``M*|T`` (or ``M*|T'`` with ``prime``), elements labelled by their index in ``E``."""
    t = top_prime(m) if prime else top(m)
    return restrict(dual(m), t)


def atom_join_cover(lat: ExternalLattice) -> tuple[list[int], list[frozenset[int]]]:
    """``T' = (t_0, ..., t_n)`` and the cover ``F_i = {atoms avoiding t_i}``.

    Atoms are given as lattice element indices.  Every maximal face of the
    atom-join complex appears among the ``F_i``, but an ``F_i`` may sit
    strictly inside another one, so this is a cover by faces rather than
    by facets.
    """
    tp = sorted(top_prime(lat.matroid))
    atoms = lat.atoms
    cover = [frozenset(a for a in atoms if t not in lat.element(a)) for t in tp]
    return tp, cover


def atom_join_complex(lat: ExternalLattice, method: str = "facets") -> SimplicialComplex:
    """Sets of atoms whose join is not the top.

    ``method="facets"`` uses the facets ``F_i`` of :func:`atom_join_cover`;
    ``method="brute"`` evaluates the join of every atom subset.
    """
    if method == "facets":
        return SimplicialComplex(atom_join_cover(lat)[1])
    if method == "brute":
        atoms = lat.atoms
        t = lat.top_basis
        faces = []
        for r in range(1, len(atoms) + 1):
            for sub in itertools.combinations(atoms, r):
                if join(lat, [lat.element(a) for a in sub]) != t:
                    faces.append(sub)
        return SimplicialComplex(faces)
    raise ValueError(f"unknown method {method!r}")


def nerve(cover: Sequence[Iterable], complex_: SimplicialComplex | None = None, *, facets_only: bool = False) -> SimplicialComplex:
    """Nerve of a cover multiset: ``J`` is a face iff the ``F_j``, ``j`` in ``J``, share a vertex.

    With ``complex_`` given, every member is checked to be a face (a facet
    with ``facets_only``) and every facet of the complex to lie in some member.
    Each member is a simplex, so nonempty intersections are simplices and the
    nerve has the homotopy type of the complex either way.
    """
    cover = [frozenset(f) for f in cover]
    if complex_ is not None:
        facets = set(complex_.facets)
        for f in cover:
            if facets_only and f not in facets:
                raise InvalidCoverError(f"{sorted(f)} is not a facet")
            if not complex_.contains(f):
                raise InvalidCoverError(f"{sorted(f)} is not a face")
        for f in complex_.facets:
            if not any(f <= c for c in cover):
                raise InvalidCoverError(f"facet {sorted(f)} is not covered")
    members: dict = {}
    for j, f in enumerate(cover):
        for v in f:
            members.setdefault(v, set()).add(j)
    return SimplicialComplex(members.values())
