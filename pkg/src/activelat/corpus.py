"""Instance corpora and the per-instance check suite.

The check suite is what ``activelat verify`` runs; the corpus runner
produces the CSV summary (one row per instance, deterministic order).
"""

from __future__ import annotations

import csv
import hashlib
import io
import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from . import families
from .errors import CapExceededError
from .flats import bjorner_homology, delta_homology_closed_form, mobius_closed_form
from .homology import HomologyProfile, homology
from .lattice import build_external_lattice
from .matroid import OrderedMatroid, dual, from_bases, graphic, reorder, uniform, validate
from .complexes import independence_complex, order_complex
from .theorems import (
    check_ball_sphere,
    check_cone_criterion,
    classify,
    complete_graph_prediction,
    verify_main_theorem,
    wheel_prediction,
)

CSV_HEADER = [
    "instance",
    "family",
    "n",
    "params",
    "order_hash",
    "num_bases",
    "lattice_rank",
    "mu",
    "mu_zero",
    "criterion",
    "betti_profile",
    "runtime_ms",
]


@dataclass
class Instance:
    name: str
    family: str
    matroid: OrderedMatroid
    n: int | None = None
    k: int | None = None
    order: tuple[int, ...] | None = None

    @property
    def params(self) -> str:
        if self.family == "uniform":
            return f"k={self.k}"
        if self.order is not None:
            return "order=" + " ".join(map(str, self.order))
        return ""


def order_hash(m: OrderedMatroid) -> str:
    return hashlib.sha1(repr(m.labels).encode()).hexdigest()[:10]


def uniform_prediction(n: int, k: int) -> tuple[HomologyProfile, int]:
    """Closed form for ``Delta(L(U_{n,k}))``: rank ``C(k-1, 2k-n-1)`` in dimension ``n-k-1``."""
    j = 2 * k - n - 1
    b = comb(k - 1, j) if j >= 0 else 0
    i = n - k - 1
    sign = -1 if i % 2 else 1
    return HomologyProfile.concentrated(i, b), sign * b


# ---------------------------------------------------------------------------
# corpora


def named_instances(include_slow: bool = False) -> list[Instance]:
    out = []
    for n in range(2, 7):
        for k in range(0, n + 1):
            out.append(Instance(f"U{n},{k}", "uniform", uniform(n, k), n, k))
    for n in range(3, 7):
        out.append(Instance(f"C{n}", "cycle", families.cycle(n), n))
    for n in range(1, 7):
        out.append(Instance(f"P{n}", "parallel", families.parallel(n), n))
    out.append(Instance("K4", "complete", families.complete(4), 4))
    if include_slow:
        out.append(Instance("K5", "complete", families.complete(5), 5))
    for n in (3, 4):
        out.append(Instance(f"F{n}", "fan", families.fan(n), n))
    for n in (3, 4):
        out.append(Instance(f"T{n}", "triangle", families.triangle(n), n))
    for n in (3, 4):
        out.append(Instance(f"W{n}", "wheel", families.wheel(n), n))
    return out


def _random_matroid(rng: random.Random, kind: str, max_elements: int) -> tuple[str, OrderedMatroid]:
    if kind == "graph":
        while True:
            v = rng.randint(2, 6)
            e = rng.randint(2, max_elements)
            edges = []
            for _ in range(e):
                a, b = rng.randrange(v), rng.randrange(v)
                if a == b and rng.random() > 0.15:
                    b = (a + 1) % v
                edges.append((min(a, b), max(a, b)))
            m = graphic(v, edges)
            if m.rank >= 1:
                return "graphic", m
    if kind == "uniform":
        n = rng.randint(2, max_elements)
        return "uniform", uniform(n, rng.randint(1, n))
    # random basis system: sample k-subsets, keep if it is a matroid
    for _ in range(10_000):
        n = rng.randint(3, min(6, max_elements))
        k = rng.randint(1, 2)
        subsets = list(itertools.combinations(range(n), k))
        chosen = [s for s in subsets if rng.random() < 0.6]
        if not chosen:
            continue
        try:
            m = from_bases(n, chosen, check=False)
        except Exception:
            continue
        if validate(m).ok:
            if rng.random() < 0.5:
                d = dual(m)
                m = from_bases(n, d.bases, check=False)
            return "explicit", m
    raise RuntimeError("rejection sampling failed")


def random_instances(count: int, seed: int, max_elements: int = 7) -> list[Instance]:
    """``count`` random matroids on at most ``max_elements`` elements, each under a random order."""
    rng = random.Random(seed)
    kinds = ["graph", "explicit", "graph", "uniform"]
    out = []
    for i in range(count):
        fam, m = _random_matroid(rng, kinds[i % len(kinds)], max_elements)
        perm = list(range(m.size))
        rng.shuffle(perm)
        m = reorder(m, perm)
        inst = Instance(f"random{i:03d}", fam, m, m.size, m.rank if fam == "uniform" else None, tuple(perm))
        out.append(inst)
    return out


def standard_corpus(seed: int = 0, random_count: int = 50, include_slow: bool = False) -> list[Instance]:
    return named_instances(include_slow) + random_instances(random_count, seed)


def small_corpus(seed: int = 0) -> list[Instance]:
    return random_instances(20, seed, max_elements=6)


def wheel_orders(n: int, seed: int, count: int) -> list[Instance]:
    """Wheel instances: spokes-last order (all-spoke top) plus ``count`` seeded random orders."""
    base = families.wheel(n)
    spokes = [i for i, e in enumerate(base.labels) if e[0] == 0]
    rim = [i for i in range(base.size) if i not in spokes]
    out = [Instance(f"W{n}/spokes-last", "wheel", reorder(base, rim + spokes), n, order=tuple(rim + spokes))]
    rng = random.Random(seed)
    for j in range(count):
        perm = list(range(base.size))
        rng.shuffle(perm)
        out.append(Instance(f"W{n}/order{j}", "wheel", reorder(base, perm), n, order=tuple(perm)))
    return out


# ---------------------------------------------------------------------------
# check suite


@dataclass
class Check:
    name: str
    computed: object
    expected: object
    ok: bool | None  # None means skipped

    @property
    def status(self) -> str:
        return "SKIPPED" if self.ok is None else ("PASS" if self.ok else "FAIL")


@dataclass
class SuiteResult:
    instance: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok is not False for c in self.checks)

    @property
    def skipped(self) -> bool:
        return any(c.ok is None for c in self.checks)


def run_suite(inst: Instance, max_bases: int = 5000, max_faces: int = 200_000) -> SuiteResult:
    """Main theorem plus every closed form that applies to the instance."""
    m = inst.matroid
    res = SuiteResult(inst.name)
    add = res.checks.append
    rep = verify_main_theorem(m, max_bases=max_bases, max_faces=max_faces)
    if rep.skipped:
        add(Check("main theorem", "; ".join(rep.skipped), None, None))
        if rep.delta is None:
            return res
    add(Check("main theorem: H(Delta) = H(IN(M*|T))", rep.delta, rep.independence, rep.delta == rep.independence))
    if rep.atom_join is not None:
        add(Check("atom-join complex", rep.atom_join, rep.delta, rep.atom_join == rep.delta))
    if rep.nerve is not None:
        add(Check("nerve of the atom cover", (rep.nerve, rep.nerve_isomorphic), rep.delta,
                  rep.nerve == rep.delta and bool(rep.nerve_isomorphic)))
    add(Check("mu = reduced Euler = alternating Betti", (rep.mobius, rep.euler_delta, rep.delta.euler()),
              rep.mobius, rep.mobius == rep.euler_delta == rep.delta.euler()))
    try:
        closed = delta_homology_closed_form(m)
        add(Check("homology from M.T", rep.delta, closed, rep.delta == closed))
        mu_cf = mobius_closed_form(m)
        add(Check("mobius from L_F(M.T)", rep.mobius, mu_cf, rep.mobius == mu_cf))
        in_h = homology(independence_complex(m), max_faces)
        bj = bjorner_homology(m)
        add(Check("IN(M) homology (Bjorner)", in_h, bj, in_h == bj))
    except CapExceededError as exc:
        add(Check("closed forms", str(exc), None, None))
    cone = check_cone_criterion(m, max_faces)
    if cone.hypothesis:
        add(Check(f"cone at {cone.witness}", (cone.computed, cone.computed_mobius),
                  (cone.predicted, cone.predicted_mobius), cone.ok))
    bs = check_ball_sphere(m, max_faces)
    if bs.hypothesis:
        add(Check(f"{bs.witness} criterion", (bs.computed, bs.computed_mobius),
                  (bs.predicted, bs.predicted_mobius), bs.ok))
    if inst.family == "uniform" and inst.k:
        prof, mu = uniform_prediction(m.size, m.rank)
        add(Check("uniform closed form", (rep.delta, rep.mobius), (prof, mu), rep.delta == prof and rep.mobius == mu))
    if inst.family == "complete" and inst.n is not None:
        _, prof, mu = complete_graph_prediction(m, inst.n)
        add(Check("complete graph corollary", (rep.delta, rep.mobius), (prof, mu), rep.delta == prof and rep.mobius == mu))
    if inst.family in ("fan", "triangle") and inst.order is None:
        zero = HomologyProfile.zero()
        add(Check(f"{inst.family} vanishing", (rep.delta, rep.mobius), (zero, 0), rep.delta.is_zero and rep.mobius == 0))
    if inst.family == "wheel" and inst.n is not None:
        case, k, prof, mu = wheel_prediction(m, inst.n)
        add(Check(f"wheel ({case}, k={k})", (rep.delta, rep.mobius), (prof, mu), rep.delta == prof and rep.mobius == mu))
    return res


# ---------------------------------------------------------------------------
# CSV summary


def _betti_text(p: HomologyProfile | None) -> str:
    if p is None:
        return "skipped"
    nz = p.nonzero()
    if not nz:
        return "acyclic"
    parts = []
    for i, (b, t) in nz.items():
        s = f"{i}:{b}"
        if t:
            s += "/" + "|".join(map(str, t))
        parts.append(s)
    return ";".join(parts)


def corpus_row(inst: Instance, timing: bool = False, max_faces: int = 200_000) -> dict:
    start = time.perf_counter()
    m = inst.matroid
    lat = build_external_lattice(m)
    try:
        prof = homology(order_complex(lat.poset), max_faces)
    except CapExceededError:
        prof = None
    mu = lat.mobius()
    row = {
        "instance": inst.name,
        "family": inst.family,
        "n": m.size,
        "params": inst.params,
        "order_hash": order_hash(m),
        "num_bases": len(m.bases),
        "lattice_rank": lat.rank[lat.top],
        "mu": mu,
        "mu_zero": int(mu == 0),
        "criterion": classify(m),
        "betti_profile": _betti_text(prof),
        "runtime_ms": "",
    }
    if timing:
        row["runtime_ms"] = f"{(time.perf_counter() - start) * 1000:.1f}"
    return row


def run_corpus(instances: list[Instance], jobs: int = 1, timing: bool = False) -> list[dict]:
    """Rows in instance order regardless of completion order."""
    if jobs <= 1:
        return [corpus_row(i, timing) for i in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(corpus_row, instances, itertools.repeat(timing)))


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
