"""
Text formats for hypergraphs (.hg) and weighted graphs (.wg), and the JSON
encoding of reports.

A .hg document starts with a line `n m` (or `n 0 k` for an empty
hypergraph) followed by m lines of ascending vertex indices. A .wg document
starts with `n m` followed by m lines `u v weight`, where weight is an
integer or a fraction `p/q`. In both, blank lines and `#` comments are
ignored.
"""

from fractions import Fraction

from sourcer import Grammar

from .errors import FormatError, SoltesError
from .extended import INFINITE
from .hypergraph import Hypergraph
from .weighted import WeightedGraph


HG = 'hg'
WG = 'wg'

WEIGHTED_MARKER = '# weighted graph'


_hypergraph_grammar = Grammar(r'''
    ignore Space = /[ \t]+/
    ignore Comment = /#[^\r\n]*/

    Newline = /[\r\n]/
    LineBreak = Some(Newline)
    Int = /\d+/ |> `int`

    class Header {
        order: Int
        size: Int
        uniformity: Opt(Int)
    }

    class Edge {
        vertices: Some(Int)
    }

    class Document {
        header: Opt(LineBreak) >> Header
        edges: (LineBreak >> Edge)*
        pass Opt(LineBreak)
    }

    start = Document
''')


_weighted_grammar = Grammar(r'''
    `from fractions import Fraction`

    ignore Space = /[ \t]+/
    ignore Comment = /#[^\r\n]*/

    Newline = /[\r\n]/
    LineBreak = Some(Newline)
    Int = /\d+/ |> `int`
    Weight = /\d+(\/\d+)?/ |> `Fraction`

    class Header {
        order: Int
        size: Int
    }

    class Edge {
        u: Int
        v: Int
        weight: Weight
    }

    class Document {
        header: Opt(LineBreak) >> Header
        edges: (LineBreak >> Edge)*
        pass Opt(LineBreak)
    }

    start = Document
''')


def _parse(grammar, text):
    # Ignored text is only skipped before a token, so the document needs a
    # final newline to swallow a trailing comment.
    try:
        return grammar.parse(text + '\n')
    except grammar.ParseError as exc:
        raise FormatError('Syntax error', exc.position.line, exc.position.column) from None
    except grammar.PartialParseError as exc:
        where = exc.last_position
        raise FormatError('Unexpected input', where.line, where.column) from None
    except ZeroDivisionError:
        raise FormatError('A weight has a zero denominator') from None


def _line_of(node):
    return node._metadata.position_info.start.line


def _check_size(header, edges):
    if header.size != len(edges):
        raise FormatError(
            f'The header announces {header.size} edges, but the document lists {len(edges)}'
        )


def parse_hypergraph(text):
    document = _parse(_hypergraph_grammar, text)
    header, edges = document.header, document.edges
    _check_size(header, edges)

    if edges:
        k = len(edges[0].vertices)
    elif header.uniformity is not None:
        k = header.uniformity
    else:
        raise FormatError('An empty hypergraph needs its uniformity in the header: `n 0 k`')

    for edge in edges:
        vertices = edge.vertices
        if any(a >= b for a, b in zip(vertices, vertices[1:])):
            raise FormatError(f'Edge {vertices} is not strictly ascending', _line_of(edge), 1)
        if len(vertices) != k:
            raise FormatError(
                f'Edge {vertices} has {len(vertices)} vertices, expected {k}', _line_of(edge), 1
            )

    try:
        return Hypergraph(header.order, k, [edge.vertices for edge in edges])
    except SoltesError as exc:
        raise FormatError(str(exc)) from None


def parse_weighted(text):
    document = _parse(_weighted_grammar, text)
    header, edges = document.header, document.edges
    _check_size(header, edges)
    try:
        return WeightedGraph(header.order, [(e.u, e.v, e.weight) for e in edges])
    except SoltesError as exc:
        raise FormatError(str(exc)) from None


def format_hypergraph(H):
    header = f'{H.n} {H.m}' if H.m else f'{H.n} 0 {H.k}'
    lines = [header] + [' '.join(map(str, edge)) for edge in H.edges]
    return '\n'.join(lines) + '\n'


def format_weighted(G):
    lines = [WEIGHTED_MARKER, f'{G.n} {len(G.edges)}']
    lines.extend(f'{u} {v} {w}' for u, v, w in G.edges)
    return '\n'.join(lines) + '\n'


def detect_kind(name, text):
    """Guesses whether a document is .hg or .wg from its name, then from
    the marker line the .wg writer emits."""
    if name.endswith('.wg'):
        return WG
    if name.endswith('.hg'):
        return HG
    first = next((line.strip() for line in text.splitlines() if line.strip()), '')
    return WG if first.lower().startswith(WEIGHTED_MARKER) else HG


def parse(text, kind):
    if kind == WG:
        return parse_weighted(text)
    return parse_hypergraph(text)


def format(obj):
    if isinstance(obj, WeightedGraph):
        return format_weighted(obj)
    return format_hypergraph(obj)


def encode_value(value):
    """Encodes a number for JSON: INFINITE as "inf", non-integral fractions as "p/q"."""
    if value is INFINITE:
        return 'inf'
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f'{value.numerator}/{value.denominator}'
    return value


def report_to_json(report):
    return {
        'wiener': encode_value(report.wiener),
        'vertices': [
            {
                'label': v.label,
                'sigma': encode_value(v.transmission),
                'detour_sum': encode_value(v.detour_sum),
                'wiener_after': encode_value(v.wiener_after),
                'delta': encode_value(v.delta),
            }
            for v in report.vertices
        ],
        'verdict': report.verdict,
    }


def distribution_to_json(distribution):
    finite = sorted(d for d in distribution.counts if d is not INFINITE)
    return {
        'counts': {str(d): distribution[d] for d in finite},
        'disconnected_pairs': distribution[INFINITE],
        'diameter': encode_value(distribution.diameter),
        'wiener': encode_value(distribution.wiener()),
    }


def hypergraph_to_json(H):
    return {'n': H.n, 'k': H.k, 'edges': [list(e) for e in H.edges]}
