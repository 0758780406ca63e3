from math import comb

import pytest

from activelat import families
from activelat.activity import top
from activelat.corpus import run_suite, small_corpus, uniform_prediction, wheel_orders
from activelat.homology import HomologyProfile
from activelat.matroid import free, reorder, uniform
from activelat.theorems import (
    check_ball_sphere,
    check_cone_criterion,
    classify,
    complete_graph_prediction,
    graph_cone_edges,
    internal_vertices,
    verify_main_theorem,
    wheel_prediction,
)


def test_main_theorem_uniform_4_3():
    rep = verify_main_theorem(uniform(4, 3))
    assert rep.complete and rep.ok
    assert rep.delta == rep.independence == HomologyProfile.concentrated(0, 2)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_main_theorem_cycles(n):
    rep = verify_main_theorem(families.cycle(n))
    assert rep.ok and rep.delta == HomologyProfile.concentrated(0, n - 2)


def test_main_theorem_free():
    rep = verify_main_theorem(free(3))
    assert rep.ok and rep.delta == HomologyProfile.concentrated(-1, 1)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(1, n + 1)])
def test_uniform_homology_only_in_top_dimension(n, k):
    rep = verify_main_theorem(uniform(n, k))
    assert rep.ok and not rep.homology_below_top
    assert rep.delta_dim == rep.lattice_rank - 2


def test_k4_homology_below_top_dimension():
    # H_1 while the order complex has dimension rho - 2 = 2: not shellable
    rep = verify_main_theorem(families.complete(4))
    assert rep.lattice_rank == 4 and rep.delta_dim == 2
    assert rep.delta == HomologyProfile.concentrated(1, 1)
    assert rep.homology_below_top


@pytest.mark.parametrize("n", [3, 4, 5])
def test_fan_cone_at_edge_12(n):
    m = families.fan(n)
    rep = check_cone_criterion(m)
    assert rep.hypothesis and rep.ok
    assert m.labels.index((1, 2)) in rep.witness
    assert m.labels.index((1, 2)) in graph_cone_edges(m)
    assert rep.computed_mobius == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_triangle_cone_at_e_n_plus_1(n):
    m = families.triangle(n)
    rep = check_cone_criterion(m)
    assert rep.hypothesis and rep.ok
    assert n + 1 in rep.witness
    assert rep.computed_mobius == 0


def test_cone_elements_agree_with_graph_components(corpus_instances):
    from activelat.theorems import cone_elements

    for inst in corpus_instances:
        m = inst.matroid
        if m.graph is not None:
            assert cone_elements(m) == graph_cone_edges(m)


def test_ball_and_sphere(corpus_instances):
    fired = set()
    for inst in corpus_instances:
        rep = check_ball_sphere(inst.matroid)
        assert rep.ok, inst.name
        if rep.hypothesis:
            fired.add(rep.witness)
    assert fired == {"ball", "sphere"}


def test_classify_labels(corpus_instances):
    seen = {classify(i.matroid) for i in corpus_instances}
    assert seen <= {"spanning", "sphere", "cone", "none"}
    assert classify(uniform(4, 1)) == "spanning"
    assert classify(families.fan(4)) == "cone"


@pytest.mark.parametrize("n", [3, 4])
def test_complete_graph_lex(n):
    m = families.complete(n)
    internal, prof, mu = complete_graph_prediction(m, n)
    rep = verify_main_theorem(m)
    assert rep.delta == prof and rep.mobius == mu


def test_complete_graph_internal_vertex_detection():
    k4 = families.complete(4)
    # star at vertex 3 as the top: vertex 3 is internal
    star = [k4.labels.index(e) for e in [(0, 3), (1, 3), (2, 3)]]
    assert internal_vertices(k4.graph, star) == [3]
    path = [k4.labels.index(e) for e in [(0, 1), (1, 2), (2, 3)]]
    assert internal_vertices(k4.graph, path) == []


def test_complete_graph_all_orders_agree():
    import itertools

    k4 = families.complete(4)
    for perm in itertools.islice(itertools.permutations(range(6)), 0, 720, 7):
        m = reorder(k4, perm)
        _, prof, mu = complete_graph_prediction(m, 4)
        rep = verify_main_theorem(m)
        assert rep.delta == prof and rep.mobius == mu


@pytest.mark.parametrize("n", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_wheel_orders(n):
    cases = set()
    for inst in wheel_orders(n, seed=3, count=12):
        case, k, prof, mu = wheel_prediction(inst.matroid, n)
        cases.add(case)
        rep = verify_main_theorem(inst.matroid)
        assert rep.delta == prof and rep.mobius == mu, inst.name
    assert "components" in cases


def test_wheel_spokes_last_has_all_spoke_top():
    inst = wheel_orders(4, seed=0, count=0)[0]
    m = inst.matroid
    assert all(m.labels[e][0] == 0 for e in top(m))
    # removing the spokes leaves the rim and an isolated hub
    case, k, prof, mu = wheel_prediction(m, 4)
    assert case == "components" and k == 1
    assert prof == HomologyProfile.concentrated(2, 1) and mu == 1


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 8) for k in range(1, n + 1)])
def test_uniform_prediction(n, k):
    prof, mu = uniform_prediction(n, k)
    rep = verify_main_theorem(uniform(n, k))
    assert rep.delta == prof and rep.mobius == mu
    if 2 * k <= n:
        assert prof.is_zero and mu == 0
    else:
        assert prof == HomologyProfile.concentrated(n - k - 1, comb(k - 1, 2 * k - n - 1))


def test_run_suite_small_corpus():
    for inst in small_corpus(seed=7):
        res = run_suite(inst)
        assert res.ok and not res.skipped, (inst.name, [c for c in res.checks if c.ok is False])


def test_run_suite_skip_is_reported():
    from activelat.corpus import Instance

    inst = Instance("K4", "complete", families.complete(4), 4)
    res = run_suite(inst, max_faces=5)
    assert res.ok and res.skipped
