from fractions import Fraction

import pytest

from soltes import formats
from soltes.errors import FormatError
from soltes.hypergraph import Hypergraph, distance_distribution, soltes_report
from soltes.weighted import WeightedGraph, prism_soltes, soltes_report_w


def test_parse_hypergraph():
    text = '''
        # a loose path
        5 2
        0 1 2
        2 3 4   # second edge
    '''
    assert formats.parse_hypergraph(text) == Hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])


def test_blank_lines_between_edges():
    H = formats.parse_hypergraph('4 2\n\n0 1 2\n\n\n1 2 3')
    assert H.m == 2


def test_empty_hypergraph_needs_its_uniformity():
    assert formats.parse_hypergraph('4 0 3\n') == Hypergraph(4, 3, [])
    with pytest.raises(FormatError):
        formats.parse_hypergraph('4 0\n')


@pytest.mark.parametrize('text', [
    '3 2\n0 1 2\n',
    '3 1\n2 1 0\n',
    '4 2\n0 1 2\n0 3\n',
    '3 1\n0 x 2\n',
    '3 1\n0 1 5\n',
    '',
])
def test_malformed_hypergraphs(text):
    with pytest.raises(FormatError) as info:
        formats.parse_hypergraph(text)
    assert info.value.code == 'PARSE_ERROR'


def test_error_points_at_the_edge():
    with pytest.raises(FormatError) as info:
        formats.parse_hypergraph('3 1\n2 1 0\n')
    assert info.value.line == 2


def test_parse_weighted():
    G = formats.parse_weighted('# weighted graph\n3 3\n0 1 1/2\n1 2 1/3\n0 2 1\n')
    assert G == WeightedGraph(3, [(0, 1, Fraction(1, 2)), (1, 2, Fraction(1, 3)), (0, 2, 1)])

    with pytest.raises(FormatError):
        formats.parse_weighted('2 1\n0 1 1/0\n')
    with pytest.raises(FormatError):
        formats.parse_weighted('2 1\n0 0 1\n')


def test_format_weighted():
    G = WeightedGraph(3, [(0, 1, Fraction(1, 2)), (1, 2, 2)])
    text = formats.format(G)
    assert text == '# weighted graph\n3 2\n0 1 1/2\n1 2 2\n'
    assert formats.parse(text, formats.detect_kind('<stdin>', text)) == G


def test_format_hypergraph():
    assert formats.format(Hypergraph(4, 3, [(1, 2, 3)])) == '4 1\n1 2 3\n'
    assert formats.format(Hypergraph(4, 3, [])) == '4 0 3\n'


def test_detect_kind():
    assert formats.detect_kind('prism.wg', '') == formats.WG
    assert formats.detect_kind('cycle.hg', '# weighted graph') == formats.HG
    assert formats.detect_kind('<stdin>', '\n# Weighted graph\n2 0\n') == formats.WG
    assert formats.detect_kind('<stdin>', '3 1\n0 1 2\n') == formats.HG


def test_report_json():
    cycle = Hypergraph(11, 2, [(i, (i + 1) % 11) for i in range(11)])
    obj = formats.report_to_json(soltes_report(cycle))
    assert obj['wiener'] == 165
    assert obj['verdict'] is True
    assert obj['vertices'][0] == {
        'label': 0, 'sigma': 30, 'detour_sum': 30, 'wiener_after': 165, 'delta': 0,
    }

    obj = formats.report_to_json(soltes_report_w(prism_soltes(21)))
    assert obj['vertices'][0]['wiener_after'] == obj['wiener']
    assert '/' in obj['wiener']


def test_distribution_json():
    H = Hypergraph(4, 2, [(0, 1)])
    assert formats.distribution_to_json(distance_distribution(H)) == {
        'counts': {'1': 1},
        'disconnected_pairs': 5,
        'diameter': 'inf',
        'wiener': 'inf',
    }
