"""Active and externally active elements, MaxBas and the lattice top."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MalformedInputError, NotSpanningError
from .matroid import OrderedMatroid, _check_subset, fundamental_circuit, is_independent, rank_of

CIRCUIT_SCAN_THRESHOLD = 20


@dataclass(frozen=True)
class ActivityReport:
    subject: frozenset[int]
    active: frozenset[int]
    external: frozenset[int]
    witness: dict[int, frozenset[int]]


def _active_by_circuits(m: OrderedMatroid, f: frozenset[int]) -> dict[int, frozenset[int]]:
    # e is active iff some circuit C has min(C) == e and C - e inside f
    found: dict[int, frozenset[int]] = {}
    for c in m.circuits:
        e = min(c)
        if e not in found and c - {e} <= f:
            found[e] = c
    return found


def _active_by_rank(m: OrderedMatroid, f: frozenset[int]) -> dict[int, frozenset[int]]:
    # e is active iff e lies in the closure of {x in f : x > e}; the witness is
    # the fundamental circuit of e over a greedy independent subset of that set
    found: dict[int, frozenset[int]] = {}
    for e in range(m.size):
        above = [x for x in f if x > e]
        indep: list[int] = []
        for x in sorted(above, reverse=True):
            if is_independent(m, indep + [x]):
                indep.append(x)
        if is_independent(m, indep + [e]):
            continue
        circuit = {e}
        base = set(indep) | {e}
        for x in indep:
            if is_independent(m, base - {x}):
                circuit.add(x)
        found[e] = frozenset(circuit)
    return found


def active_set(m: OrderedMatroid, f: Iterable[int], method: str = "auto") -> ActivityReport:
    """``Act(F)``: elements ``e`` (possibly in ``F``) that are the minimum of a
    circuit contained in ``F + e``.

    ``method`` is ``"circuits"`` (scan every circuit of ``m``), ``"rank"``
    (closure test against the larger elements of ``F``) or ``"auto"``.
    """
    f = _check_subset(m, f)
    if method == "auto":
        method = "circuits" if len(f) <= CIRCUIT_SCAN_THRESHOLD else "rank"
    if method == "circuits":
        witness = _active_by_circuits(m, f)
    elif method == "rank":
        witness = _active_by_rank(m, f)
    else:
        raise ValueError(f"unknown method {method!r}")
    active = frozenset(witness)
    return ActivityReport(subject=f, active=active, external=active - f, witness=witness)


def ext_set(m: OrderedMatroid, b: Iterable[int]) -> frozenset[int]:
    """Externally active elements of a basis."""
    b = frozenset(b)
    if not m.is_basis(b):
        raise MalformedInputError(f"{sorted(b)} is not a basis")
    return frozenset(e for e in range(m.size) if e not in b and min(fundamental_circuit(m, b, e)) == e)


def max_bas(m: OrderedMatroid, a: Iterable[int], *, crosscheck: bool = False) -> frozenset[int]:
    """Lexicographically maximum basis inside a spanning set ``a``.

    Greedy from the largest element down; with ``crosscheck`` the result is
    compared with ``a - Act(a)``.
    """
    a = _check_subset(m, a)
    if rank_of(m, a) != m.rank:
        raise NotSpanningError(f"{sorted(a)} does not span the matroid")
    chosen: list[int] = []
    for e in sorted(a, reverse=True):
        if is_independent(m, chosen + [e]):
            chosen.append(e)
    result = frozenset(chosen)
    if crosscheck:
        other = a - active_set(m, a).active
        if other != result:
            raise AssertionError(f"MaxBas mismatch on {sorted(a)}: greedy {sorted(result)} vs A-Act(A) {sorted(other)}")
    return result


def top(m: OrderedMatroid) -> frozenset[int]:
    """``T = MaxBas(E)``, the top of the external lattice."""
    return max_bas(m, m.ground)


def top_prime(m: OrderedMatroid) -> frozenset[int]:
    """``T`` without the coloops of ``m``."""
    return top(m) - m.coloops
