from fractions import Fraction

import pytest

from soltes.errors import AllZeroError, InvalidGraphError, NegativeWeightError, NotConnectedError
from soltes.errors import ParamOutOfRangeError
from soltes.extended import INFINITE
from soltes.weighted import (
    WeightedGraph,
    cycle_alternating_01,
    delete_vertex_w,
    detour_sum_w,
    dijkstra,
    distance_distribution_w,
    integerize,
    prism_closed_forms,
    prism_integer_scale,
    prism_rung_weight,
    prism_soltes,
    soltes_report_w,
    transmission_w,
    weighted_cycle,
    wiener_w,
)


def triangle():
    return WeightedGraph(3, [(0, 1, '1/2'), (1, 2, Fraction(1, 3)), (2, 0, 1)])


def test_weights_are_exact():
    G = triangle()
    assert G.edges == ((0, 1, Fraction(1, 2)), (0, 2, Fraction(1)), (1, 2, Fraction(1, 3)))
    assert dijkstra(G, 0) == [0, Fraction(1, 2), Fraction(5, 6)]
    assert wiener_w(G) == Fraction(5, 3)
    assert transmission_w(G, 2) == Fraction(7, 6)


def test_distance_distribution():
    dist = distance_distribution_w(triangle())
    assert dist[Fraction(1, 2)] == 1
    assert dist[Fraction(5, 6)] == 1
    assert dist.diameter == Fraction(5, 6)
    assert dist.wiener() == Fraction(5, 3)


@pytest.mark.parametrize('edges, error', [
    ([(0, 0, 1)], InvalidGraphError),
    ([(0, 3, 1)], InvalidGraphError),
    ([(0, 1, 1), (1, 0, 2)], InvalidGraphError),
    ([(0, 1, -1)], NegativeWeightError),
])
def test_invalid_graphs(edges, error):
    with pytest.raises(error):
        WeightedGraph(3, edges)


def test_disconnected_graph():
    G = WeightedGraph(3, [(0, 1, 1)])
    assert wiener_w(G) is INFINITE
    assert dijkstra(G, 0)[2] is INFINITE
    with pytest.raises(NotConnectedError):
        detour_sum_w(G, 0)


def test_delete_vertex_renumbers():
    G = delete_vertex_w(triangle(), 0)
    assert G == WeightedGraph(2, [(0, 1, Fraction(1, 3))])


def test_huge_weights_stay_exact():
    G = WeightedGraph(3, [(0, 1, 2 ** 62), (1, 2, 1)])
    assert wiener_w(G) == 2 ** 63 + 2


def test_unit_cycles():
    assert soltes_report_w(weighted_cycle(11)).verdict
    assert soltes_report_w(weighted_cycle(11)).wiener == 165
    assert not soltes_report_w(weighted_cycle(10)).verdict


def test_alternating_cycle():
    report = soltes_report_w(cycle_alternating_01())
    assert report.verdict
    assert report.wiener == 60
    assert {v.transmission for v in report.vertices} == {12}


def test_prism_rung_weights():
    assert prism_rung_weight(20) == 3
    assert prism_rung_weight(21) == Fraction(193, 66)
    assert prism_rung_weight(40) == Fraction(744, 313)
    with pytest.raises(ParamOutOfRangeError):
        prism_rung_weight(19)


def test_prism_matches_closed_forms():
    report = soltes_report_w(prism_soltes(20))
    forms = prism_closed_forms(20)
    assert report.verdict
    assert report.wiener == forms.wiener == 36800
    assert {v.transmission for v in report.vertices} == {forms.transmission} == {920}
    assert {v.detour_sum for v in report.vertices} == {forms.detour_sum} == {920}


def test_integerize():
    assert prism_integer_scale(20) == 1
    assert prism_integer_scale(21) == 66

    scaled = integerize(prism_soltes(21))
    assert set(scaled.weights) == {66, 193}
    assert soltes_report_w(scaled).verdict

    assert integerize(WeightedGraph(2, [(0, 1, Fraction(4, 7))])).weights == [1]
    with pytest.raises(AllZeroError):
        integerize(WeightedGraph(2, [(0, 1, 0)]))
