"""Named matroid families with their customary edge orders.

Unless stated otherwise graph edges are written ``(u, v)`` with ``u < v``
and ordered lexicographically.
"""

from __future__ import annotations

from typing import Sequence

from .errors import MalformedInputError
from .matroid import OrderedMatroid, graphic, reorder, uniform

FAMILIES = ("cycle", "parallel", "complete", "fan", "triangle", "wheel", "uniform")


def _lex_graph(vertex_count, edges, family, params):
    m = graphic(vertex_count, sorted(edges))
    return _tag(m, family, params)


def _tag(m: OrderedMatroid, family: str, params: tuple) -> OrderedMatroid:
    return OrderedMatroid(m.size, m.bases, kind="graphic", labels=m.labels, graph=m.graph, params=(family,) + params)


def cycle(n: int) -> OrderedMatroid:
    """Cycle graph ``C_n`` on vertices ``0..n-1``."""
    if n < 1:
        raise MalformedInputError("cycle needs n >= 1")
    if n == 1:
        return _tag(graphic(1, [(0, 0)]), "cycle", (1,))
    if n == 2:
        return _tag(graphic(2, [(0, 1), (0, 1)]), "cycle", (2,))
    return _lex_graph(n, [(i, (i + 1) % n) if i + 1 < n else (0, n - 1) for i in range(n)], "cycle", (n,))


def parallel(n: int) -> OrderedMatroid:
    """Two vertices joined by ``n`` parallel edges."""
    if n < 1:
        raise MalformedInputError("parallel needs n >= 1")
    return _tag(graphic(2, [(0, 1)] * n), "parallel", (n,))


def complete(n: int) -> OrderedMatroid:
    if n < 2:
        raise MalformedInputError("complete graph needs n >= 2")
    return _lex_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], "complete", (n,))


def fan(n: int) -> OrderedMatroid:
    """Path ``1..n`` plus a vertex 0 joined to every path vertex."""
    if n < 2:
        raise MalformedInputError("fan needs n >= 2")
    edges = [(0, i) for i in range(1, n + 1)] + [(i, i + 1) for i in range(1, n)]
    return _lex_graph(n + 1, edges, "fan", (n,))


def fan_top(n: int) -> list[tuple[int, int]]:
    """Edges of the top basis of the fan: ``0n, 12, 23, ..., (n-1)n``."""
    return [(0, n)] + [(i, i + 1) for i in range(1, n)]


def triangle(n: int) -> OrderedMatroid:
    """``n`` triangles glued along edge ``e_0``; triangle ``i`` is ``{e_0, e_i, e_(n+i)}``.

    Edge ``e_j`` is element ``j``.  Vertices: ``e_0 = 01``, apexes ``2..n+1``,
    ``e_i = (0, i+1)`` and ``e_(n+i) = (1, i+1)``.
    """
    if n < 1:
        raise MalformedInputError("triangle graph needs n >= 1")
    edges = [(0, 1)] + [(0, i + 1) for i in range(1, n + 1)] + [(1, i + 1) for i in range(1, n + 1)]
    return _tag(graphic(n + 2, edges), "triangle", (n,))


def triangle_top(n: int) -> list[int]:
    return list(range(n, 2 * n + 1))


def wheel(n: int) -> OrderedMatroid:
    """Rim cycle on ``1..n`` plus hub 0 adjacent to every rim vertex."""
    if n < 3:
        raise MalformedInputError("wheel needs n >= 3")
    rim = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    spokes = [(0, i) for i in range(1, n + 1)]
    return _lex_graph(n + 1, spokes + rim, "wheel", (n,))


def make(family: str, n: int, k: int | None = None, order: Sequence[int] | None = None) -> OrderedMatroid:
    """Construct a named family, optionally applying an element order."""
    if family == "uniform":
        if k is None:
            raise MalformedInputError("uniform needs k")
        m = uniform(n, k)
    elif family in FAMILIES:
        m = globals()[family](n)
    else:
        raise MalformedInputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family in ("fan", "triangle") and order is None:
        from .activity import top

        t = top(m)
        expected = (
            {m.labels.index(e) for e in fan_top(n)} if family == "fan" else set(triangle_top(n))
        )
        assert t == expected, f"{family}({n}) top {sorted(t)} != {sorted(expected)}"
    if order is not None:
        m = reorder(m, order)
    return m
