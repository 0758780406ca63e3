"""Ordered matroids given by an explicit list of bases.

Ground sets are ``0..size-1`` and the linear order is the integer order, so
"minimal" always means "smallest index".  A different order is obtained with
:func:`reorder`, which relabels elements and keeps the original labels
around for reporting.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CapExceededError, MalformedInputError, NotAMatroidError, ParseError

DEFAULT_MAX_BASES = 10**6


def _mask(s: Iterable[int]) -> int:
    m = 0
    for e in s:
        m |= 1 << e
    return m


def _members(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


@dataclass(frozen=True)
class Multigraph:
    """Edge ``i`` of ``edges`` is ground-set element ``i``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.vertex_count:
                raise MalformedInputError(f"edge ({u}, {v}) out of range for {self.vertex_count} vertices")
            edges.append((u, v))
        object.__setattr__(self, "edges", tuple(edges))

    def components(self, edge_subset: Iterable[int]) -> list[int]:
        """Component representative of every vertex in the subgraph ``(V, edge_subset)``."""
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in edge_subset:
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return [find(x) for x in range(self.vertex_count)]

    def is_acyclic(self, edge_subset: Iterable[int]) -> bool:
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in edge_subset:
            u, v = self.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


@dataclass(frozen=True, eq=False)
class OrderedMatroid:
    """A matroid on ``{0, ..., size-1}`` ordered by the integers.

    ``labels[i]`` is the user-facing name of element ``i`` (an int for
    abstract matroids, an edge ``(u, v)`` for graphic ones).  ``index_map``
    is set on restrictions and contractions and sends each element to its
    index in the parent matroid.
    """

    size: int
    bases: tuple[frozenset[int], ...]
    kind: str = "explicit"
    labels: tuple = ()
    graph: Multigraph | None = None
    index_map: tuple[int, ...] | None = None
    params: tuple = field(default=())

    def __post_init__(self):
        if self.size < 0:
            raise MalformedInputError("ground set size must be nonnegative")
        bases = sorted({frozenset(b) for b in self.bases}, key=_key)
        if not bases:
            raise NotAMatroidError("empty list of bases")
        for b in bases:
            if any(e < 0 or e >= self.size for e in b):
                raise MalformedInputError(f"basis {_key(b)} has an element outside 0..{self.size - 1}")
        object.__setattr__(self, "bases", tuple(bases))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.size)))
        elif len(self.labels) != self.size:
            raise MalformedInputError("labels must have one entry per element")

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(self.size))

    @cached_property
    def _basis_masks(self) -> tuple[int, ...]:
        return tuple(_mask(b) for b in self.bases)

    @cached_property
    def _basis_set(self) -> frozenset[frozenset[int]]:
        return frozenset(self.bases)

    def basis_family(self) -> frozenset[frozenset[int]]:
        return self._basis_set

    def is_basis(self, s: Iterable[int]) -> bool:
        return frozenset(s) in self._basis_set

    @cached_property
    def loops(self) -> frozenset[int]:
        union = 0
        for b in self._basis_masks:
            union |= b
        return frozenset(e for e in range(self.size) if not union >> e & 1)

    @cached_property
    def coloops(self) -> frozenset[int]:
        inter = (1 << self.size) - 1
        for b in self._basis_masks:
            inter &= b
        return _members(inter)

    @cached_property
    def circuits(self) -> tuple[frozenset[int], ...]:
        """All circuits, each one a fundamental circuit of some basis."""
        found = {frozenset([e]) for e in self.loops}
        for b in self.bases:
            for e in range(self.size):
                if e not in b and e not in self.loops:
                    found.add(fundamental_circuit(self, b, e))
        return tuple(sorted(found, key=lambda c: (len(c), _key(c))))

    def __repr__(self):
        return f"OrderedMatroid(kind={self.kind!r}, size={self.size}, rank={self.rank}, bases={len(self.bases)})"


def _check_subset(m: OrderedMatroid, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for e in s:
        if not isinstance(e, int) or e < 0 or e >= m.size:
            raise MalformedInputError(f"element {e!r} is not in the ground set 0..{m.size - 1}")
    return s


# ---------------------------------------------------------------------------
# basis enumeration


def enumerate_bases(size: int, is_independent, max_bases: int = DEFAULT_MAX_BASES) -> list[frozenset[int]]:
    """All bases reachable by single exchanges from the greedy basis.

    The basis graph of a matroid is connected, so breadth-first search over
    exchanges ``B - b + e`` visits every basis.
    """
    start: list[int] = []
    for e in reversed(range(size)):
        if is_independent(start + [e]):
            start.append(e)
    start_set = frozenset(start)
    seen = {start_set}
    queue = deque([start_set])
    while queue:
        b = queue.popleft()
        outside = [e for e in range(size) if e not in b]
        for x in b:
            rest = b - {x}
            for e in outside:
                cand = rest | {e}
                if cand in seen:
                    continue
                if is_independent(cand):
                    seen.add(cand)
                    if len(seen) > max_bases:
                        raise CapExceededError(f"more than {max_bases} bases")
                    queue.append(cand)
    return list(seen)


# ---------------------------------------------------------------------------
# constructors


def from_bases(size: int, bases: Iterable[Iterable[int]], *, check: bool = True) -> OrderedMatroid:
    m = OrderedMatroid(size, tuple(frozenset(b) for b in bases), kind="explicit")
    if check:
        report = validate(m)
        if not report.ok:
            raise NotAMatroidError(report.message)
    return m


def uniform(n: int, k: int) -> OrderedMatroid:
    if not 0 <= k <= n:
        raise MalformedInputError(f"uniform matroid needs 0 <= k <= n, got n={n}, k={k}")
    bases = tuple(frozenset(c) for c in itertools.combinations(range(n), k))
    return OrderedMatroid(n, bases, kind="uniform", params=(n, k))


def free(n: int) -> OrderedMatroid:
    return uniform(n, n)


def graphic(vertex_count: int, edges: Sequence[tuple[int, int]], max_bases: int = DEFAULT_MAX_BASES) -> OrderedMatroid:
    """Cycle matroid of a multigraph; bases are the spanning forests."""
    g = Multigraph(vertex_count, tuple(edges))
    bases = enumerate_bases(len(g.edges), g.is_acyclic, max_bases)
    return OrderedMatroid(len(g.edges), tuple(bases), kind="graphic", labels=g.edges, graph=g)


# ---------------------------------------------------------------------------
# axioms and oracles


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    message: str = "ok"
    violation: tuple | None = None  # (A, B, a)


def validate(m: OrderedMatroid) -> ValidationReport:
    """Check equal cardinality and the basis-exchange axiom over all pairs."""
    if not m.bases:
        raise NotAMatroidError("empty list of bases")
    r = m.rank
    for b in m.bases:
        if len(b) != r:
            return ValidationReport(False, f"basis {_key(b)} has size {len(b)}, expected {r}", (b, None, None))
    family = m.basis_family()
    for a_set in m.bases:
        for b_set in m.bases:
            if a_set == b_set:
                continue
            for a in sorted(a_set - b_set):
                if not any((a_set - {a}) | {b} in family for b in b_set - a_set):
                    msg = f"exchange fails for A={_key(a_set)}, B={_key(b_set)}, a={a}"
                    return ValidationReport(False, msg, (a_set, b_set, a))
    return ValidationReport(True)


def rank_of(m: OrderedMatroid, s: Iterable[int]) -> int:
    s = _mask(_check_subset(m, s))
    return max((b & s).bit_count() for b in m._basis_masks)


def is_independent(m: OrderedMatroid, s: Iterable[int]) -> bool:
    s = _check_subset(m, s)
    mask = _mask(s)
    return any(b & mask == mask for b in m._basis_masks)


def is_spanning(m: OrderedMatroid, s: Iterable[int]) -> bool:
    return rank_of(m, s) == m.rank


def fundamental_circuit(m: OrderedMatroid, b: Iterable[int], e: int) -> frozenset[int]:
    """The unique circuit inside ``b + e``."""
    b = frozenset(b)
    if e in b:
        raise MalformedInputError(f"element {e} already lies in the basis")
    if not m.is_basis(b):
        raise MalformedInputError(f"{_key(b)} is not a basis")
    if e in m.loops:
        return frozenset([e])
    return frozenset([e] + [x for x in b if m.is_basis((b - {x}) | {e})])


# ---------------------------------------------------------------------------
# derived matroids


def dual(m: OrderedMatroid) -> OrderedMatroid:
    ground = m.ground
    return OrderedMatroid(
        m.size,
        tuple(ground - b for b in m.bases),
        kind="dual",
        labels=m.labels,
        graph=None,
        index_map=None,
    )


def restrict(m: OrderedMatroid, f: Iterable[int]) -> OrderedMatroid:
    """``M|F`` relabelled onto ``0..|F|-1`` in the induced order."""
    f = _check_subset(m, f)
    idx = tuple(sorted(f))
    pos = {e: i for i, e in enumerate(idx)}
    best = max(len(b & f) for b in m.bases)
    bases = {frozenset(pos[e] for e in b & f) for b in m.bases if len(b & f) == best}
    return OrderedMatroid(
        len(idx),
        tuple(bases),
        kind="restriction",
        labels=tuple(m.labels[e] for e in idx),
        graph=None,
        index_map=idx,
    )


def contract(m: OrderedMatroid, f: Iterable[int]) -> OrderedMatroid:
    """``M.F``, the contraction of ``M`` to ``F``, computed as ``(M*|F)*``."""
    r = restrict(dual(m), f)
    d = dual(r)
    return OrderedMatroid(d.size, d.bases, kind="contraction", labels=d.labels, index_map=r.index_map)


def delete(m: OrderedMatroid, d: Iterable[int]) -> OrderedMatroid:
    return restrict(m, m.ground - _check_subset(m, d))


def reorder(m: OrderedMatroid, perm: Sequence[int]) -> OrderedMatroid:
    """Apply a new element order: ``perm[p]`` becomes the ``p``-th smallest element."""
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(m.size)):
        raise MalformedInputError(f"order must be a permutation of 0..{m.size - 1}")
    pos = {old: new for new, old in enumerate(perm)}
    bases = tuple(frozenset(pos[e] for e in b) for b in m.bases)
    graph = None
    if m.graph is not None:
        graph = Multigraph(m.graph.vertex_count, tuple(m.graph.edges[old] for old in perm))
    return OrderedMatroid(
        m.size,
        bases,
        kind=m.kind,
        labels=tuple(m.labels[old] for old in perm),
        graph=graph,
        index_map=None if m.index_map is None else tuple(m.index_map[old] for old in perm),
        params=m.params,
    )


def relabel_back(m: OrderedMatroid, s: Iterable[int]) -> list:
    """User-facing labels of an element set, in element order."""
    return [m.labels[e] for e in sorted(s)]


# ---------------------------------------------------------------------------
# text format


def parse_matroid(text: str) -> OrderedMatroid:
    """Parse the line-oriented matroid format.

    ``uniform <n> <k>``, ``graph <vertex_count>`` plus edge lines, or
    ``bases <n>`` plus basis lines (``-`` is the empty basis), optionally
    followed by ``order <perm>``.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines:
        raise ParseError("empty input", 1)

    def ints(lineno, toks):
        try:
            return [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"expected integers, got {' '.join(toks)!r}", lineno) from None

    order = None
    if lines[-1][1][0] == "order":
        lineno, toks = lines.pop()
        order = (lineno, ints(lineno, toks[1:]))
    if not lines:
        raise ParseError("missing matroid header", order[0])

    lineno, head = lines[0]
    body = lines[1:]
    kw = head[0]
    if kw == "uniform":
        if len(head) != 3:
            raise ParseError("usage: uniform <n> <k>", lineno)
        if body:
            raise ParseError("unexpected line after uniform header", body[0][0])
        n, k = ints(lineno, head[1:])
        try:
            m = uniform(n, k)
        except MalformedInputError as exc:
            raise ParseError(str(exc), lineno) from None
    elif kw == "graph":
        if len(head) != 2:
            raise ParseError("usage: graph <vertex_count>", lineno)
        (vc,) = ints(lineno, head[1:])
        edges = []
        for ln, toks in body:
            if toks[0] == "order":
                raise ParseError("order must be the last line", ln)
            uv = ints(ln, toks)
            if len(uv) != 2:
                raise ParseError("an edge line needs exactly two vertices", ln)
            if not (0 <= min(uv) and max(uv) < vc):
                raise ParseError(f"edge {uv} out of range for {vc} vertices", ln)
            edges.append(tuple(uv))
        m = graphic(vc, edges)
    elif kw == "bases":
        if len(head) != 2:
            raise ParseError("usage: bases <n>", lineno)
        (n,) = ints(lineno, head[1:])
        bases = []
        for ln, toks in body:
            if toks[0] == "order":
                raise ParseError("order must be the last line", ln)
            b = [] if toks == ["-"] else ints(ln, toks)
            if any(e < 0 or e >= n for e in b):
                raise ParseError(f"basis element out of range 0..{n - 1}", ln)
            if len(set(b)) != len(b):
                raise ParseError("repeated element in basis", ln)
            bases.append(frozenset(b))
        if not bases:
            raise ParseError("no bases listed", lineno)
        m = OrderedMatroid(n, tuple(bases), kind="explicit")
        report = validate(m)
        if not report.ok:
            raise NotAMatroidError(report.message)
    else:
        raise ParseError(f"unknown header {kw!r}", lineno)

    if order is not None:
        ln, perm = order
        if sorted(perm) != list(range(m.size)):
            raise ParseError(f"order must be a permutation of 0..{m.size - 1}", ln)
        m = reorder(m, perm)
    return m


def format_matroid(m: OrderedMatroid) -> str:
    """Serialize as ``bases`` text (or ``graph`` text for graphic matroids)."""
    if m.graph is not None:
        lines = [f"graph {m.graph.vertex_count}"] + [f"{u} {v}" for u, v in m.graph.edges]
    else:
        lines = [f"bases {m.size}"] + [" ".join(map(str, _key(b))) or "-" for b in m.bases]
    return "\n".join(lines) + "\n"
