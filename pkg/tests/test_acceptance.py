"""Acceptance criteria 1-10, each at exact tolerance.

Every case is recorded in ``conftest.ACCEPTANCE`` so the terminal summary
prints one pass/fail line per criterion.  Run with ``--slow`` to add K5.
"""

import itertools
import json
from math import comb

import pytest

import oracles
from conftest import ACCEPTANCE
from activelat import families
from activelat.activity import active_set, top
from activelat.cli import main
from activelat.complexes import independence_complex, order_complex
from activelat.corpus import (
    named_instances,
    random_instances,
    rows_to_csv,
    run_corpus,
    standard_corpus,
    wheel_orders,
)
from activelat.flats import bjorner_homology
from activelat.homology import HomologyProfile, homology, reduced_euler
from activelat.lattice import (
    build_external_lattice,
    check_sublattice_embedding,
    exin_order,
    external_order,
    internal_order,
    join,
)
from activelat.matroid import is_spanning, reorder, restrict, uniform
from activelat.theorems import complete_graph_prediction, internal_vertices, verify_main_theorem, wheel_prediction

SEED = 0


def record(num, label, ok):
    ACCEPTANCE.setdefault(num, []).append((label, bool(ok)))
    return bool(ok)


def check_all(num, cases):
    """Record ``(label, ok)`` pairs and fail with the list of bad labels."""
    bad = [label for label, ok in cases if not record(num, label, ok)]
    assert not bad, f"criterion {num} failed for {bad}"


@pytest.fixture(scope="module")
def corpus():
    return standard_corpus(seed=SEED)


@pytest.fixture(scope="module")
def lattices(corpus):
    return {inst.name: build_external_lattice(inst.matroid) for inst in corpus}


# 1 ---------------------------------------------------------------------------


def _main_theorem_case(inst):
    rep = verify_main_theorem(inst.matroid)
    # the criterion compares these two profiles only; for K5 the atom-join
    # side exceeds the face cap and is reported as skipped
    return inst.name, rep.delta is not None and rep.independence is not None and rep.delta == rep.independence


def test_c01_main_theorem_standard_corpus(corpus):
    names = {i.name for i in corpus}
    assert {"K4", "F3", "F4", "T3", "T4", "W3", "W4", "C6", "P6", "U6,3"} <= names
    assert sum(n.startswith("random") for n in names) == 50
    assert all(i.matroid.size <= 7 for i in corpus if i.name.startswith("random"))
    check_all(1, [_main_theorem_case(i) for i in corpus])


@pytest.mark.slow
def test_c01_main_theorem_k5():
    k5 = [i for i in named_instances(include_slow=True) if i.name == "K5"]
    check_all(1, [_main_theorem_case(i) for i in k5])


# 2 ---------------------------------------------------------------------------


def test_c02_uniform_closed_forms():
    cases = []
    for n in range(1, 8):
        for k in range(1, n + 1):
            lat = build_external_lattice(uniform(n, k))
            h = homology(order_complex(lat.poset))
            b = comb(k - 1, 2 * k - n - 1) if 2 * k - n - 1 >= 0 else 0
            want = HomologyProfile.concentrated(n - k - 1, b)
            mu_ok = lat.mobius() == (-1) ** (n - k - 1) * b
            zero_ok = h.is_zero if 2 * k <= n else True
            cases.append((f"U{n},{k}", h == want and not h.has_torsion and mu_ok and zero_ok))
    check_all(2, cases)


# 3 ---------------------------------------------------------------------------


def test_c03_cycle_and_parallel_shapes():
    cases = []
    for n in range(2, 9):
        lat = build_external_lattice(families.cycle(n))
        t = lat.top
        mid = [i for i in range(1, len(lat.poset)) if i != t]
        want = {(0, i) for i in mid} | {(i, t) for i in mid}
        cases.append((f"C{n}", len(mid) == n - 1 and set(lat.covers) == want))
    for n in range(1, 9):
        lat = build_external_lattice(families.parallel(n))
        order = sorted(range(len(lat.poset)), key=lambda i: lat.rank[i])
        chain_ok = len(order) == n + 1 and set(lat.covers) == set(zip(order, order[1:]))
        cases.append((f"P{n}", chain_ok))
    check_all(3, cases)


# 4 ---------------------------------------------------------------------------


def _complete_case(n):
    m = families.complete(n)
    internal = bool(internal_vertices(m.graph, top(m)))
    has, prof, mu = complete_graph_prediction(m, n)
    rep = verify_main_theorem(m)
    want = HomologyProfile.concentrated(n - 3, 1) if internal else HomologyProfile.zero()
    mu_want = (-1) ** (n - 3) if internal else 0
    return f"K{n}", has == internal and prof == want and rep.delta == want and rep.mobius == mu_want


@pytest.mark.parametrize("n", [3, 4])
def test_c04_complete_graphs(n):
    check_all(4, [_complete_case(n)])


@pytest.mark.slow
def test_c04_complete_graph_k5():
    check_all(4, [_complete_case(5)])


# 5 ---------------------------------------------------------------------------


def test_c05_fans_and_triangles():
    cases = []
    for fam in ("fan", "triangle"):
        for n in (3, 4, 5):
            lat = build_external_lattice(families.make(fam, n))
            h = homology(order_complex(lat.poset))
            cases.append((f"{fam}{n}", lat.mobius() == 0 and h.is_zero))
    check_all(5, cases)


# 6 ---------------------------------------------------------------------------


def test_c06_wheels_across_orders():
    cases = []
    kinds = set()
    for n in (3, 4):
        for inst in wheel_orders(n, seed=SEED, count=12):
            case, k, prof, mu = wheel_prediction(inst.matroid, n)
            kinds.add(case)
            lat = build_external_lattice(inst.matroid)
            h = homology(order_complex(lat.poset))
            cases.append((inst.name, h == prof and lat.mobius() == mu))
    cases.append(("both cases exercised", kinds == {"cone", "components"}))
    check_all(6, cases)


# 7 ---------------------------------------------------------------------------


def test_c07_mobius_equals_reduced_euler(corpus, lattices):
    cases = []
    for inst in corpus:
        lat = lattices[inst.name]
        delta = order_complex(lat.poset)
        mu = lat.mobius()
        mu_zeta = lat.poset.mobius(method="zeta")
        cases.append((inst.name, mu == mu_zeta == reduced_euler(delta) == homology(delta).euler()))
    check_all(7, cases)


# 8 ---------------------------------------------------------------------------


def test_c08_bjorner(corpus):
    cases = []
    for inst in corpus:
        m = inst.matroid
        if m.size > 7:
            continue
        h = homology(independence_complex(m))
        want = bjorner_homology(m)
        cases.append((inst.name, h == want and not h.has_torsion))
    check_all(8, cases)


# 9 ---------------------------------------------------------------------------


def _subsets(items):
    items = sorted(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]


def test_c09_restriction_identity(corpus):
    cases = []
    for inst in corpus:
        m = inst.matroid
        if m.size > 6:
            continue
        ok = True
        for f in _subsets(m.ground):
            k = restrict(m, f)
            back = k.index_map
            for j in _subsets(range(k.size)):
                got = {back[e] for e in active_set(k, j).active}
                ok &= got == active_set(m, {back[e] for e in j}).active & f
        cases.append((inst.name, ok))
    check_all(9, cases)


def test_c09_order_characterization(corpus, lattices):
    cases = []
    for inst in corpus:
        m = inst.matroid
        lat = lattices[inst.name]
        ok = all(
            lat.leq(a, b) == (oracles.lex_max_basis_within(m.bases, a | b) == b)
            for a, b in itertools.product(m.bases, repeat=2)
        )
        cases.append((inst.name, ok))
    check_all(9, cases)


def test_c09_join_is_lub(corpus, lattices):
    cases = []
    for inst in corpus:
        lat = lattices[inst.name]
        if len(lat.bases) > 500:
            continue
        ok = all(
            lat.poset.join([lat.index[a], lat.index[b]]) == lat.index[join(lat, [a, b])]
            for a, b in itertools.combinations_with_replacement(lat.bases, 2)
        )
        cases.append((inst.name, ok))
    check_all(9, cases)


def test_c09_inclusion_preserves_rank(corpus):
    cases = []
    for inst in corpus:
        m = inst.matroid
        if m.size > 6:
            continue
        t = top(m)
        ok = True
        for f in _subsets(m.ground):
            if not is_spanning(m, f):
                continue
            rep = check_sublattice_embedding(m, f)
            ok &= rep.order_embedding and rep.criterion_a
            if (m.ground - t) <= f or rep.initial_segment:
                ok &= rep.all_ranks_preserved
        cases.append((inst.name, ok))
    check_all(9, cases)


def test_c09_order_insensitivity_all_orders(corpus):
    cases = []
    fives = [i for i in corpus if i.matroid.size == 5]
    assert fives
    for inst in fives:
        m = inst.matroid
        groups: dict = {}
        sizes = set()
        for perm in itertools.permutations(range(5)):
            mm = reorder(m, perm)
            lat = build_external_lattice(mm)
            old = [frozenset(perm[e] for e in b) for b in lat.bases]
            rel = frozenset(
                (old[i], old[j]) for i in range(len(old)) for j in range(len(old)) if lat.poset.leq[i + 1, j + 1]
            )
            act = tuple(perm[e] for e in sorted(active_set(mm, mm.ground).active))
            groups.setdefault(act, set()).add(rel)
            sizes.add(tuple(lat.rank_sequence()))
        cases.append((inst.name, all(len(v) == 1 for v in groups.values()) and len(sizes) == 1))
    check_all(9, cases)


def test_c09_exin_consistency(corpus):
    cases = []
    for inst in corpus:
        m = inst.matroid
        ex = external_order(m).leq
        inn = internal_order(m).leq[:-1, :-1]
        n = len(m.bases)
        conflict = any(ex[i, j] and inn[j, i] for i in range(n) for j in range(n) if i != j)
        p = exin_order(m)
        cases.append((inst.name, not conflict and bool((p.leq >= (ex | inn)).all())))
    check_all(9, cases)


# 10 --------------------------------------------------------------------------


def test_c10_determinism(capsys):
    cases = []
    inst = standard_corpus(seed=SEED, random_count=10)
    a = rows_to_csv(run_corpus(inst))
    b = rows_to_csv(run_corpus(inst, jobs=2))
    c = rows_to_csv(run_corpus(standard_corpus(seed=SEED, random_count=10)))
    cases.append(("corpus CSV", a == b == c))

    outputs = []
    for _ in range(2):
        main(["corpus", "--corpus", "small", "--seed", "11"])
        main(["verify", "--corpus", "small", "--seed", "11", "--json"])
        main(["lattice", "--family", "wheel", "--n", "4", "--order", "7 6 5 4 3 2 1 0", "--json"])
        outputs.append(capsys.readouterr().out)
    cases.append(("CLI CSV and JSON", outputs[0] == outputs[1]))
    json.loads(outputs[0].splitlines()[-1])
    different = rows_to_csv(run_corpus(random_instances(10, seed=SEED + 1)))
    cases.append(("seed changes corpus", different != rows_to_csv(run_corpus(random_instances(10, seed=SEED)))))
    check_all(10, cases)
