"""Reduced integer homology via Smith normal form.

Boundary matrices are kept sparse.  Unit pivots are eliminated first (the
usual case for boundary matrices); whatever remains is diagonalised densely
with minimum-modulus pivoting over Python ints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable

import numpy as np
import scipy.sparse as sps

from .complexes import DEFAULT_MAX_FACES, SimplicialComplex


# ---------------------------------------------------------------------------
# Smith normal form


def _dense_diagonal(a: list[list[int]]) -> list[int]:
    diag: list[int] = []
    rows = [r[:] for r in a if any(r)]
    while rows:
        ncols = len(rows[0])
        live = [j for j in range(ncols) if any(r[j] for r in rows)]
        rows = [[r[j] for j in live] for r in rows]
        if not live:
            break
        while True:
            pr, pc, best = -1, -1, None
            for i, r in enumerate(rows):
                for j, v in enumerate(r):
                    if v and (best is None or abs(v) < best):
                        pr, pc, best = i, j, abs(v)
                        if best == 1:
                            break
                if best == 1:
                    break
            p = rows[pr][pc]
            dirty = False
            for i, r in enumerate(rows):
                if i != pr and r[pc]:
                    q = r[pc] // p
                    if q:
                        prow = rows[pr]
                        for j in range(len(r)):
                            if prow[j]:
                                r[j] -= q * prow[j]
                    dirty |= r[pc] != 0
            prow = rows[pr]
            for j in range(len(prow)):
                if j != pc and prow[j]:
                    q = prow[j] // p
                    if q:
                        for r in rows:
                            if r[pc]:
                                r[j] -= q * r[pc]
                    dirty |= prow[j] != 0
            if not dirty:
                break
        diag.append(abs(p))
        del rows[pr]
        for r in rows:
            del r[pc]
        rows = [r for r in rows if any(r)]
    return diag


def invariant_factors_from_diagonal(diag: Iterable[int]) -> list[int]:
    """Turn any diagonal form into the divisibility chain ``d_1 | d_2 | ...``."""
    d = sorted(abs(x) for x in diag if x)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] // g * d[j]
    return d


def smith_diagonal(entries: dict[tuple[int, int], int]) -> list[int]:
    """Invariant factors of a sparse integer matrix given as ``{(row, col): value}``."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = int(v)
            cols.setdefault(c, set()).add(r)
    diag: list[int] = []
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            rs = cols.get(c)
            if not rs:
                cols.pop(c, None)
                continue
            best = None
            for r in rs:
                if abs(rows[r][c]) == 1 and (best is None or len(rows[r]) < len(rows[best])):
                    best = r
            if best is None:
                continue
            prow = rows.pop(best)
            pv = prow[c]
            for cc in prow:
                cols[cc].discard(best)
            for r in list(cols[c]):
                row = rows[r]
                factor = row[c] * pv
                for cc, vv in prow.items():
                    nv = row.get(cc, 0) - factor * vv
                    if nv:
                        if cc not in row:
                            cols[cc].add(r)
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
                        cols[cc].discard(r)
                if not row:
                    del rows[r]
            del cols[c]
            diag.append(1)
            progress = True
    if rows:
        live_cols = sorted({c for row in rows.values() for c in row})
        cidx = {c: j for j, c in enumerate(live_cols)}
        dense = []
        for row in rows.values():
            line = [0] * len(live_cols)
            for c, v in row.items():
                line[cidx[c]] = v
            dense.append(line)
        diag.extend(_dense_diagonal(dense))
    return invariant_factors_from_diagonal(diag)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True, eq=False)
class HomologyProfile:
    """Reduced homology ``H_i = Z^betti[i] + sum Z/torsion[i]`` for ``i >= -1``."""

    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]]

    def nonzero(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        out = {}
        for i in sorted(set(self.betti) | set(self.torsion)):
            b = self.betti.get(i, 0)
            t = tuple(self.torsion.get(i, ()))
            if b or t:
                out[i] = (b, t)
        return out

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def __hash__(self):
        return hash(tuple(self.nonzero().items()))

    def __repr__(self):
        parts = []
        for i, (b, t) in self.nonzero().items():
            s = f"Z^{b}" if b else ""
            if t:
                s += ("+" if s else "") + "+".join(f"Z/{x}" for x in t)
            parts.append(f"H{i}={s}")
        return "HomologyProfile(" + (", ".join(parts) or "acyclic") + ")"

    @property
    def is_zero(self) -> bool:
        return not self.nonzero()

    @property
    def has_torsion(self) -> bool:
        return any(self.torsion.values())

    def euler(self) -> int:
        """Alternating sum of Betti numbers, the reduced Euler characteristic."""
        return sum(-b if i % 2 else b for i, b in self.betti.items())

    def to_dict(self) -> dict:
        dims = sorted(set(self.betti) | set(self.torsion))
        return {str(i): {"betti": self.betti.get(i, 0), "torsion": list(self.torsion.get(i, ()))} for i in dims}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def concentrated(cls, dim: int, rank: int) -> "HomologyProfile":
        """``Z^rank`` in one dimension, zero elsewhere."""
        return cls({dim: rank}, {})

    @classmethod
    def zero(cls) -> "HomologyProfile":
        return cls({}, {})


def _face_index(faces):
    return {f: i for i, f in enumerate(faces)}


def boundary_entries(faces_k: list[tuple], faces_km1: list[tuple]) -> dict[tuple[int, int], int]:
    """Sparse boundary map from ``k``-faces to ``(k-1)``-faces; ``k = 0`` gives the augmentation."""
    out: dict[tuple[int, int], int] = {}
    if faces_k and len(faces_k[0]) == 1:
        for j in range(len(faces_k)):
            out[(0, j)] = 1
        return out
    idx = _face_index(faces_km1)
    for j, f in enumerate(faces_k):
        for i in range(len(f)):
            out[(idx[f[:i] + f[i + 1 :]], j)] = -1 if i % 2 else 1
    return out


def boundary_matrix(c: SimplicialComplex, k: int, max_faces: int = DEFAULT_MAX_FACES) -> sps.csr_array:
    """``k``-th boundary matrix as a scipy sparse array (rows: ``(k-1)``-faces)."""
    faces = c.faces(max_faces)
    fk = faces[k] if 0 <= k < len(faces) else []
    fkm1 = [()] if k == 0 else (faces[k - 1] if 0 <= k - 1 < len(faces) else [])
    ent = boundary_entries(fk, fkm1)
    if not ent:
        return sps.csr_array((len(fkm1), len(fk)), dtype=np.int64)
    (rows, cols), vals = zip(*ent.keys()), list(ent.values())
    return sps.csr_array((vals, (rows, cols)), shape=(len(fkm1), len(fk)), dtype=np.int64)


def homology(c: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> HomologyProfile:
    """Reduced homology over the integers, dimensions ``-1 .. dim(c)``."""
    faces = c.faces(max_faces)
    d = len(faces) - 1
    # sizes[k + 1] = number of k-faces, k = -1..d
    sizes = [1] + [len(level) for level in faces]
    ranks = [0] * (d + 3)  # ranks[k + 1] = rank of boundary from k-faces, k = -1..d+1
    tors: dict[int, tuple[int, ...]] = {}
    for k in range(0, d + 1):
        lower = [()] if k == 0 else faces[k - 1]
        inv = smith_diagonal(boundary_entries(faces[k], lower))
        ranks[k + 1] = len(inv)
        t = tuple(x for x in inv if x > 1)
        if t:
            tors[k - 1] = t
    betti = {}
    for k in range(-1, d + 1):
        betti[k] = sizes[k + 1] - ranks[k + 1] - ranks[k + 2]
    return HomologyProfile(betti, tors)


def reduced_euler(c: SimplicialComplex, max_faces: int = DEFAULT_MAX_FACES) -> int:
    """``-1 + sum_k (-1)^k f_k`` from face counts."""
    return -1 + sum(-n if k % 2 else n for k, n in enumerate(c.f_vector(max_faces)))
