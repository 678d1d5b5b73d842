from math import comb

import pytest

from soltes.constructions import (
    GENERAL_R,
    HALF_OPEN_MIDDLE,
    INCLUSIVE,
    INCLUSIVE_TRIM_MIDDLE,
    KNITS,
    PRISM,
    ConstructionParams,
    construct,
    cycle_graph,
    general_r,
    general_r_order,
    irregular54,
    is_rotation_of,
    knits,
    knits_nonadjacency_count,
    knits_params,
    resolve_convention,
    uniformity_coverage,
)
from soltes.errors import BadConventionError, ParamOutOfRangeError
from soltes.hypergraph import Hypergraph, degree, soltes_report
from soltes.weighted import WeightedGraph, prism_soltes


@pytest.mark.parametrize('n, expected', [
    (92, (15, 13)),
    (100, (15, 5)),
    (105, (15, 0)),
    (140, (18, 13)),
])
def test_knits_params(n, expected):
    assert knits_params(n) == expected


def test_knits_needs_enough_vertices():
    with pytest.raises(ParamOutOfRangeError):
        knits(91)


def test_smallest_knits_hypergraph():
    H = knits(92)
    assert (H.n, H.m, H.k) == (92, 92, 48)
    report = soltes_report(H)
    assert report.verdict
    assert report.wiener == comb(92, 2)
    assert knits_nonadjacency_count(H, 0) == 91


def test_knits_uniformity():
    assert knits(105).k == 74
    assert knits(140).k == 90


def test_irregular_example():
    H = irregular54()
    assert (H.n, H.m, H.k) == (54, 27, 9)
    assert {degree(H, v) for v in range(1, 54, 2)} == {4}
    assert {degree(H, v) for v in range(0, 54, 2)} == {5}

    report = soltes_report(H)
    assert report.verdict
    assert report.wiener == 2349
    assert {v.wiener_after for v in report.vertices} == {2349}


def test_general_r_order():
    assert general_r_order(15, 0, 2) == (102, 71)
    assert general_r_order(15, 5, 2) == (87, 51)
    assert general_r_order(15, 0, 1) == (105, 74)


def test_general_r_with_one_block_is_the_base_construction():
    assert is_rotation_of(general_r(15, 0, 1), knits(105)) is not None
    assert is_rotation_of(general_r(15, 0, 1, HALF_OPEN_MIDDLE), knits(105)) is None


def test_general_r_conventions():
    with pytest.raises(BadConventionError):
        general_r(15, 0, 2, INCLUSIVE)
    with pytest.raises(BadConventionError):
        general_r(15, 0, 2, 'SOMETHING_ELSE')
    with pytest.raises(ParamOutOfRangeError):
        general_r(15, 12, 2)
    with pytest.raises(ParamOutOfRangeError):
        general_r(15, 0, 0)

    H = general_r(15, 0, 2, HALF_OPEN_MIDDLE)
    assert (H.n, H.k) == (102, 71)


def test_resolve_convention():
    resolution = resolve_convention(15, 0, 2)
    assert resolution.convention == INCLUSIVE_TRIM_MIDDLE
    assert [x.convention for x in resolution.trials] == [
        INCLUSIVE, HALF_OPEN_MIDDLE, INCLUSIVE_TRIM_MIDDLE,
    ]
    assert [x.passed for x in resolution.trials] == [False, False, True]


def test_general_r_hypergraph_is_soltes():
    H = general_r(15, 5, 2)
    assert (H.n, H.k, H.m) == (87, 51, 87)
    assert soltes_report(H).verdict


def test_is_rotation_of():
    H = Hypergraph(5, 2, [(0, 1), (1, 2)])
    assert is_rotation_of(H, Hypergraph(5, 2, [(2, 3), (3, 4)])) == 2
    assert is_rotation_of(H, Hypergraph(5, 2, [(0, 1), (0, 4)])) == 4
    assert is_rotation_of(H, Hypergraph(5, 2, [(0, 1), (2, 3)])) is None


def test_uniformity_coverage():
    coverage = uniformity_coverage(80, r_max=1)
    assert coverage[74] == (15, 0, 1)
    for k, (s, t, r) in coverage.items():
        assert k <= 80
        assert general_r_order(s, t, r)[1] == k


def test_cycle_graph():
    assert cycle_graph(11).m == 11
    with pytest.raises(ParamOutOfRangeError):
        cycle_graph(2)


def test_construction_params():
    params = ConstructionParams.create('knits', n=105)
    assert (params.variant, params.s, params.t, params.r, params.k) == (KNITS, 15, 0, 1, 74)
    assert ConstructionParams.from_json(params.to_json()) == params

    params = ConstructionParams.create('general-r', s=15, t=5, r=2)
    assert params.variant == GENERAL_R
    assert (params.n, params.k, params.convention) == (87, 51, INCLUSIVE_TRIM_MIDDLE)

    params = ConstructionParams.create('prism', k=20)
    assert (params.variant, params.n, params.is_weighted) == (PRISM, 80, True)

    with pytest.raises(ParamOutOfRangeError):
        ConstructionParams.create('knits')
    with pytest.raises(ParamOutOfRangeError):
        ConstructionParams.create('petersen')


def test_construct():
    assert construct(ConstructionParams.create('cycle', n=11)) == cycle_graph(11)
    assert construct(ConstructionParams.create('prism', k=20)) == prism_soltes(20)
    assert isinstance(construct(ConstructionParams.create('alternating-cycle')), WeightedGraph)
