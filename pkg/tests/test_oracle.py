from itertools import combinations

import pytest

from app.antiplex.core.exceptions import OracleRefusalError
from app.antiplex.graph import SignedGraph
from app.antiplex.models import AntagonisticPlex, Params
from app.antiplex.oracle import (
    EdgeFilter,
    Violation,
    antagonistic_bipartition,
    check_sides,
    enumerate_bruteforce,
    is_antagonistic_kplex,
    is_kplex,
    validate_plex,
)
from tests.plex_testing_utils import planted_instance, plex, random_instance, subset_scan

LEFT4 = (0, 1, 2, 3)
RIGHT4 = (4, 5, 6, 7)


def _k5(missing=()):
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) not in missing]
    return SignedGraph.from_edges(5, edges)


def test_is_kplex_on_cliques():
    assert is_kplex(range(5), _k5(), 1)
    g = _k5(missing=[(0, 1)])
    assert not is_kplex(range(5), g, 1)
    assert is_kplex(range(5), g, 2)
    assert is_kplex(set(), g, 1)


def test_is_kplex_positive_filter_ignores_negative_edges():
    g = SignedGraph.from_edges(3, [(0, 1)], [(1, 2), (0, 2)])
    assert is_kplex({0, 1, 2}, g, 1)
    assert not is_kplex({0, 1, 2}, g, 1, EdgeFilter.POSITIVE)


def test_bipartition_of_balanced_triangle():
    g = SignedGraph.from_edges(3, [(0, 1)], [(0, 2), (1, 2)])
    assert antagonistic_bipartition({0, 1, 2}, g) == (frozenset({0, 1}), frozenset({2}))


def test_bipartition_rejects_unbalanced_cycle():
    g = SignedGraph.from_edges(3, [], [(0, 1), (1, 2), (0, 2)])
    assert antagonistic_bipartition({0, 1, 2}, g) is None
    assert not is_antagonistic_kplex({0, 1, 2}, g, 1)


def test_bipartition_puts_smallest_vertex_of_each_component_left():
    g = SignedGraph.from_edges(4, [], [(0, 1), (2, 3)])
    assert antagonistic_bipartition({0, 1, 2, 3}, g) == (frozenset({0, 2}), frozenset({1, 3}))


def test_fixture_results(fixtures):
    for fixture in fixtures.values():
        assert tuple(enumerate_bruteforce(fixture.graph, fixture.params)) == fixture.expected


def test_oracle_refuses_large_graphs():
    with pytest.raises(OracleRefusalError):
        enumerate_bruteforce(SignedGraph.from_edges(21), Params.of(1, 1))
    with pytest.raises(OracleRefusalError):
        enumerate_bruteforce(SignedGraph.from_edges(6), Params.of(1, 1), max_vertices=5)
    with pytest.raises(OracleRefusalError):
        enumerate_bruteforce(SignedGraph.from_edges(21), Params.of(1, 1), max_vertices=30)


def test_oracle_on_empty_graph():
    assert enumerate_bruteforce(SignedGraph.from_edges(0), Params.of(1, 1)) == []


@pytest.mark.parametrize("block", range(10))
def test_oracle_agrees_with_subset_scan(block):
    for index in range(block * 20, block * 20 + 20):
        g, params = random_instance(index)
        assert enumerate_bruteforce(g, params) == subset_scan(g, params), index


def test_oracle_agrees_with_subset_scan_on_planted():
    for index in range(20):
        g, params = planted_instance(index)
        assert enumerate_bruteforce(g, params) == subset_scan(g, params), index


def test_single_vertex_maximality_is_enough():
    for index in range(40):
        g, params = planted_instance(index)
        for result in enumerate_bruteforce(g, params):
            outside = set(range(g.n)) - result.members
            for extra in combinations(sorted(outside), 2):
                assert not is_antagonistic_kplex(result.members | set(extra), g, params.k)


def test_validate_accepts_fixture_result(example_plex):
    report = validate_plex(plex(LEFT4, RIGHT4), example_plex.graph, example_plex.params)
    assert report
    assert report.message == "valid"


@pytest.mark.parametrize(
    "left, right",
    [
        (LEFT4 + (8,), RIGHT4),
        (LEFT4, RIGHT4 + (8,)),
    ],
)
def test_validate_reports_blocking_vertex_as_positive_across(example_plex, left, right):
    report = validate_plex(plex(left, right), example_plex.graph, example_plex.params)
    assert report.violation is Violation.POSITIVE_ACROSS
    assert not report
    assert report.message.startswith("positive edge across sides")


def test_validate_reports_missing_member_as_not_maximal(example_plex):
    report = validate_plex(plex((0, 1, 2), RIGHT4), example_plex.graph, example_plex.params)
    assert report.violation is Violation.NOT_MAXIMAL
    assert "vertex 3" in report.detail


def test_validate_reports_small_side(fixtures):
    camps = fixtures["balanced_camps"]
    report = validate_plex(plex((0, 1, 2), (3, 4, 5)), camps.graph, Params.of(2, 4))
    assert report.violation is Violation.SIDE_TOO_SMALL


def test_validate_reports_overlap_and_sign_errors(example_plex):
    g = example_plex.graph
    overlapping = AntagonisticPlex(left=(0, 1), right=(1, 4))
    assert validate_plex(overlapping, g, Params.of(2, 3)).violation is Violation.OVERLAP
    assert check_sides({0, 4}, set(), g, 2) is Violation.NEGATIVE_INSIDE
    assert check_sides(set(LEFT4), {6, 7}, g, 1) is Violation.NOT_KPLEX
    assert check_sides(set(LEFT4), set(RIGHT4), g, 2) is None


@pytest.mark.parametrize("index", range(0, 200, 9))
def test_every_oracle_result_validates(index):
    g, params = random_instance(index)
    for result in enumerate_bruteforce(g, params):
        assert validate_plex(result, g, params), result
