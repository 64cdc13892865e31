import numpy as np
import pytest

from app.antiplex.graph import SignedGraph
from app.antiplex.models import Params
from app.antiplex.oracle import enumerate_bruteforce
from app.antiplex.preprocess import (
    dichromatic_onehop,
    dichromatic_reduction,
    dichromatic_twohop,
    two_hop_raw,
    vertex_reduction,
    vr_thresholds,
)
from tests.plex_testing_utils import planted_instance, random_instance


def test_vr_thresholds():
    assert vr_thresholds(Params.of(2, 4)) == (2, 3, 6)
    assert vr_thresholds(Params.of(1, 1)) == (0, 1, 1)


def test_vr_removes_vertex_without_negative_edges(fixtures):
    onehop = fixtures["onehop"]
    reduced, report = vertex_reduction(onehop.graph, onehop.params)
    assert 5 not in report.survivors
    assert report.removed_vr == 1
    assert reduced.degree(5) == 0
    assert reduced.n == onehop.graph.n


def test_vr_empties_positive_clique():
    g = SignedGraph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])
    reduced, report = vertex_reduction(g, Params.of(2, 3))
    assert report.survivors == frozenset()
    assert report.removed_vr == 6
    assert reduced.m == 0


def test_vr_keeps_every_vertex_of_example(example_plex):
    reduced, report = vertex_reduction(example_plex.graph, example_plex.params)
    assert report.survivors == frozenset(range(9))
    assert reduced is example_plex.graph
    assert report.edge_visits == 0


def test_vr_cascades():
    # thresholds (1, 2, 3); 0, 1 and 2 pass at first and only fall once 3 and 4 are gone
    g = SignedGraph.from_edges(5, [(0, 1), (2, 3)], [(0, 2), (0, 4), (1, 2), (1, 3)])
    _, report = vertex_reduction(g, Params.of(1, 2))
    assert report.survivors == frozenset()
    assert report.edge_visits > 0

    _, report = vertex_reduction(g, Params.of(1, 1))
    assert report.survivors == frozenset(range(5))


@pytest.mark.parametrize("index", range(0, 60, 7))
def test_vr_result_is_independent_of_order(index):
    g, params = random_instance(index)
    _, expected = vertex_reduction(g, params)
    rng = np.random.default_rng(index)
    for _ in range(3):
        order = [int(v) for v in rng.permutation(g.n)]
        _, report = vertex_reduction(g, params, order=order)
        assert report.survivors == expected.survivors


@pytest.mark.parametrize("index", range(0, 40, 3))
def test_vr_is_monotone_in_t(index):
    g, params = planted_instance(index)
    previous = None
    for t in range(params.t, params.t + 4):
        _, report = vertex_reduction(g, Params.of(params.k, t))
        if previous is not None:
            assert report.survivors <= previous
        previous = report.survivors


@pytest.mark.parametrize("t", [3, 5, 7])
@pytest.mark.parametrize("index", range(0, 40, 3))
def test_vr_is_monotone_in_k(index, t):
    for g in (planted_instance(index)[0], random_instance(index)[0]):
        previous = None
        for k in range(1, (t + 1) // 2 + 1):
            _, report = vertex_reduction(g, Params.of(k, t))
            if previous is not None:
                assert previous <= report.survivors
            previous = report.survivors


@pytest.mark.parametrize("index", range(0, 40, 3))
def test_vr_work_is_linear(index):
    g, params = random_instance(index)
    _, report = vertex_reduction(g, params)
    assert report.edge_visits <= 2 * g.m


def test_onehop_drops_weak_friend(fixtures):
    onehop = fixtures["onehop"]
    l1, r1 = dichromatic_onehop(onehop.graph, 0, onehop.params)
    assert l1 == frozenset({1, 2, 3, 4})
    assert r1 == frozenset({6, 7, 8, 9})


def test_onehop_with_vacuous_thresholds_keeps_the_ego():
    g = SignedGraph.from_edges(3, [(0, 1)], [(0, 2)])
    l1, r1 = dichromatic_onehop(g, 0, Params.of(1, 1))
    assert (l1, r1) == (frozenset({1}), frozenset({2}))


def test_twohop_keeps_well_supported_vertex(fixtures):
    twohop = fixtures["twohop"]
    g, params = twohop.graph, twohop.params
    l1, r1 = dichromatic_onehop(g, 0, params)
    l2, _ = two_hop_raw(g, 0, l1, r1)
    assert {10, 11} <= l2
    ln, rn = dichromatic_twohop(g, 0, l1, r1, params)
    assert 10 in ln
    assert 11 not in ln
    assert ln >= l1 and rn >= r1
    assert rn == frozenset({6, 7, 8, 9})


def test_reduction_of_isolated_seed_is_empty():
    g = SignedGraph.from_edges(3, [(1, 2)])
    hop = dichromatic_reduction(g, 0, Params.of(1, 1))
    assert hop.l1 == hop.r1 == hop.ln == hop.rn == frozenset()
    assert hop.size == 0


def test_reduction_keeps_intermediate_sets(fixtures):
    twohop = fixtures["twohop"]
    hop = dichromatic_reduction(twohop.graph, 0, twohop.params)
    assert hop.l1 == frozenset({1, 2, 3, 4})
    assert hop.ln == frozenset({1, 2, 3, 4, 10})
    assert hop.size == 9


def _instances():
    for index in range(0, 90, 4):
        yield random_instance(index)
    for index in range(30):
        yield planted_instance(index)


def test_reductions_never_drop_a_result_member():
    checked = 0
    for g, params in _instances():
        _, report = vertex_reduction(g, params)
        for plex in enumerate_bruteforce(g, params):
            assert plex.members <= report.survivors
            for side, other in ((plex.left, plex.right), (plex.right, plex.left)):
                for seed in side:
                    hop = dichromatic_reduction(g, seed, params)
                    assert set(side) - {seed} <= hop.ln
                    assert set(other) <= hop.rn
                    checked += 1
    assert checked > 0
