import itertools
from math import comb

import pytest

import oracles
from activelat import families
from activelat.activity import top
from activelat.errors import CapExceededError
from activelat.flats import (
    bjorner_homology,
    closure,
    delta_homology_closed_form,
    flat_lattice,
    flats_by_subsets,
    mobius_closed_form,
    reduced_mobius,
)
from activelat.homology import HomologyProfile
from activelat.matroid import contract, free, uniform


def test_closure_of_empty_is_loops(zoo):
    for m in zoo.values():
        assert closure(m, ()) == m.loops


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (5, 1)])
def test_uniform_closure(n, k):
    m = uniform(n, k)
    for r in range(n + 1):
        for s in itertools.combinations(range(n), r):
            assert closure(m, s) == (frozenset(s) if r < k else m.ground)


def test_closure_in_k4():
    k4 = families.complete(4)
    ix = {e: i for i, e in enumerate(k4.labels)}
    path = {ix[(0, 1)], ix[(1, 2)]}
    assert closure(k4, path) == {ix[(0, 1)], ix[(1, 2)], ix[(0, 2)]}


def test_closure_matches_rank_oracle(zoo):
    for m in zoo.values():
        for r in range(m.size + 1):
            for s in itertools.combinations(range(m.size), r):
                rk = oracles.rank(m.bases, s)
                want = {e for e in range(m.size) if oracles.rank(m.bases, set(s) | {e}) == rk}
                assert closure(m, s) == want


def test_flats_two_ways(zoo):
    for m in zoo.values():
        assert set(flat_lattice(m).flats) == flats_by_subsets(m)
        assert set(flat_lattice(m, method="subsets").flats) == flats_by_subsets(m)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 2), (5, 5)])
def test_uniform_flats_are_truncated_boolean(n, k):
    fl = flat_lattice(uniform(n, k))
    want = {frozenset(s) for r in range(k) for s in itertools.combinations(range(n), r)} | {frozenset(range(n))}
    assert set(fl.flats) == want
    assert reduced_mobius(uniform(n, k)) == comb(n - 1, k - 1)


def test_free_matroid_flats_boolean():
    fl = flat_lattice(free(4))
    assert len(fl.flats) == 16 and fl.mobius() == 1


def test_reduced_mobius_with_loop(zoo):
    assert reduced_mobius(zoo["loopy"]) == 0


def test_flat_lattice_is_geometric(zoo):
    for m in zoo.values():
        fl = flat_lattice(m)
        p = fl.poset
        assert p.is_lattice()
        # graded by matroid rank
        assert list(p.heights) == fl.ranks


def test_flat_cap():
    with pytest.raises(CapExceededError):
        flat_lattice(uniform(20, 2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_wheel_non_cone_contraction_is_boolean(n):
    from activelat.corpus import wheel_orders
    from activelat.theorems import wheel_prediction

    seen = 0
    for inst in wheel_orders(n, seed=1, count=20):
        case, k, _, _ = wheel_prediction(inst.matroid, n)
        if case != "components":
            continue
        seen += 1
        mt = contract(inst.matroid, top(inst.matroid))
        fl = flat_lattice(mt)
        assert len(fl.flats) == 2 ** k
        assert fl.poset.maximal_chain_lengths() == {k}
        assert reduced_mobius(mt) == 1
    assert seen


def test_bjorner_uniform_3_2():
    assert bjorner_homology(uniform(3, 2)) == HomologyProfile.concentrated(1, 1)


def test_bjorner_coloop_gives_zero(zoo):
    assert bjorner_homology(zoo["bridge"]).is_zero


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(1, n + 1)])
def test_uniform_closed_forms(n, k):
    m = uniform(n, k)
    if 2 * k <= n:
        assert mobius_closed_form(m) == 0
        assert delta_homology_closed_form(m).is_zero
    else:
        b = comb(k - 1, 2 * k - n - 1)
        assert mobius_closed_form(m) == (-1) ** (n - k - 1) * b
        assert delta_homology_closed_form(m) == HomologyProfile.concentrated(n - k - 1, b)
