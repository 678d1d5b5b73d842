"""
Edge-weighted graphs with exact rational weights.

All arithmetic is exact. Weights are `fractions.Fraction`; the all-pairs
distances are computed on integers after scaling every weight by the least
common denominator.
"""

from collections import namedtuple
from fractions import Fraction
from math import gcd, lcm

import networkx as nx
import numpy as np

from .errors import (
    AllZeroError,
    InvalidGraphError,
    NegativeWeightError,
    NotConnectedError,
    ParamOutOfRangeError,
)
from .extended import INFINITE
from .hypergraph import DistanceDistribution
from .report import SoltesReport


class WeightedGraph:
    """A simple undirected graph on 0 .. n-1 with non-negative rational weights.

    `edges` holds (u, v, weight) triples with u < v, sorted by (u, v).
    """

    def __init__(self, n, edges):
        if n < 0:
            raise InvalidGraphError(f'Expected a non-negative order. Received: {n}')

        normalized = {}
        for u, v, weight in edges:
            if u == v:
                raise InvalidGraphError(f'Loop at vertex {u}.')
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f'Edge ({u}, {v}) leaves the range 0..{n - 1}.')
            weight = Fraction(weight)
            if weight < 0:
                raise NegativeWeightError(f'Edge ({u}, {v}) has negative weight {weight}.')
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise InvalidGraphError(f'Edge {key} appears more than once.')
            normalized[key] = weight

        self.n = n
        self.edges = tuple((u, v, w) for (u, v), w in sorted(normalized.items()))
        self._graph = None

    @property
    def graph(self):
        """The same graph as a networkx.Graph with a `weight` attribute on each edge."""
        if self._graph is None:
            result = nx.Graph()
            result.add_nodes_from(range(self.n))
            result.add_weighted_edges_from(self.edges)
            self._graph = result
        return self._graph

    @property
    def weights(self):
        return [w for _, _, w in self.edges]

    def __eq__(self, other):
        return isinstance(other, WeightedGraph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        edges = [(u, v, str(w)) for u, v, w in self.edges]
        return f'WeightedGraph(n={self.n}, edges={edges!r})'


def _check_vertex(G, v):
    if not 0 <= v < G.n:
        raise ParamOutOfRangeError(f'Vertex {v} is not in the range 0..{G.n - 1}.')


def dijkstra(G, s):
    """Distances from s to every vertex, as Fractions, with INFINITE for unreachable ones."""
    _check_vertex(G, s)
    lengths = nx.single_source_dijkstra_path_length(G.graph, s, weight='weight')
    return [Fraction(lengths[v]) if v in lengths else INFINITE for v in range(G.n)]


# Scaled distances stay below this bound, so the sum of two fits in int64.
_UNREACHABLE = 2 ** 61


class WeightedDistances:
    """All-pairs distances stored as integers multiplied by `scale`."""

    def __init__(self, values, reachable, scale):
        self.values = values
        self.reachable = reachable
        self.scale = scale

    @property
    def n(self):
        return len(self.values)

    @property
    def is_connected(self):
        return bool(self.reachable.all())

    def __getitem__(self, pair):
        u, v = pair
        if not self.reachable[u, v]:
            return INFINITE
        return Fraction(int(self.values[u, v]), self.scale)

    def total(self):
        if not self.is_connected:
            return INFINITE
        return Fraction(int(self.values.sum()), 2 * self.scale)

    def row_sum(self, v):
        if not self.reachable[v].all():
            return INFINITE
        return Fraction(int(self.values[v].sum()), self.scale)

    def without(self, v):
        keep = [u for u in range(self.n) if u != v]
        return WeightedDistances(
            self.values[np.ix_(keep, keep)], self.reachable[np.ix_(keep, keep)], self.scale
        )


def common_scale(G):
    return lcm(*(w.denominator for w in G.weights))


def distance_matrix_w(G, scale=None):
    """All-pairs distances. `scale` must be a multiple of every weight's denominator."""
    if scale is None:
        scale = common_scale(G)
    scaled = [(u, v, int(w * scale)) for u, v, w in G.edges]

    if sum(w for _, _, w in scaled) >= _UNREACHABLE:
        return _dijkstra_rows(G, scale)

    values = np.full((G.n, G.n), _UNREACHABLE, dtype=np.int64)
    np.fill_diagonal(values, 0)
    for u, v, w in scaled:
        values[u, v] = values[v, u] = w
    for k in range(G.n):
        np.minimum(values, values[:, k, None] + values[None, k, :], out=values)
    reachable = values < _UNREACHABLE
    return WeightedDistances(np.where(reachable, values, 0), reachable, scale)


def _dijkstra_rows(G, scale):
    values = np.zeros((G.n, G.n), dtype=object)
    reachable = np.zeros((G.n, G.n), dtype=bool)
    for s in range(G.n):
        for v, d in enumerate(dijkstra(G, s)):
            if d is not INFINITE:
                values[s, v] = int(d * scale)
                reachable[s, v] = True
    return WeightedDistances(values, reachable, scale)


def is_connected_w(G):
    return distance_matrix_w(G).is_connected


def wiener_w(G):
    return distance_matrix_w(G).total()


def transmission_w(G, v):
    _check_vertex(G, v)
    return distance_matrix_w(G).row_sum(v)


def delete_vertex_w(G, v):
    _check_vertex(G, v)

    def shift(u):
        return u - 1 if u > v else u

    return WeightedGraph(
        G.n - 1, [(shift(a), shift(b), w) for a, b, w in G.edges if v not in (a, b)]
    )


def _detour_w(before, after, v):
    if not after.is_connected:
        return INFINITE
    kept = before.without(v)
    return Fraction(int(np.triu(after.values - kept.values, 1).sum()), before.scale)


def detour_sum_w(G, v):
    before = distance_matrix_w(G)
    if not before.is_connected:
        raise NotConnectedError('The detour sum is only defined for connected graphs.')
    after = distance_matrix_w(delete_vertex_w(G, v), before.scale)
    return _detour_w(before, after, v)


def soltes_report_w(G):
    before = distance_matrix_w(G)
    rows = []
    for v in range(G.n):
        after = distance_matrix_w(delete_vertex_w(G, v), before.scale)
        detour = _detour_w(before, after, v) if before.is_connected else INFINITE
        rows.append((v, before.row_sum(v), detour, after.total()))
    return SoltesReport.build(before.total(), rows)


def integerize(G):
    """Scales every weight by the same positive rational so that the weights
    become coprime integers. Šoltés status is preserved."""
    if not any(G.weights):
        raise AllZeroError('Cannot integerize a graph whose weights are all zero.')
    scale = common_scale(G)
    scaled = [int(w * scale) for w in G.weights]
    divisor = gcd(*scaled)
    return WeightedGraph(
        G.n, [(u, v, w // divisor) for (u, v, _), w in zip(G.edges, scaled)]
    )


def weighted_cycle(n, weight=1):
    if n < 3:
        raise ParamOutOfRangeError(f'Expected a cycle length n >= 3. Received: {n}')
    return WeightedGraph(n, [(i, (i + 1) % n, weight) for i in range(n)])


def cycle_alternating_01():
    """The 10-cycle whose edges alternate between weight 0 and weight 1."""
    return WeightedGraph(10, [(i, (i + 1) % 10, i % 2) for i in range(10)])


def _check_prism(k):
    if k < 20:
        raise ParamOutOfRangeError(f'The prism construction needs k >= 20. Received: {k}')


def prism_rung_weight(k):
    _check_prism(k)
    return Fraction(2 * k * k - 6 * k + 16, k * k - 9 * k + 12)


def prism_soltes(k):
    """Two concentric unit-weight cycles of length 2k, joined by rungs i -- 2k + i
    of weight `prism_rung_weight(k)`."""
    x = prism_rung_weight(k)
    n = 2 * k
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n, 1))
        edges.append((n + i, n + (i + 1) % n, 1))
        edges.append((i, n + i, x))
    return WeightedGraph(2 * n, edges)


PrismClosedForms = namedtuple('PrismClosedForms', 'wiener, transmission, detour_sum')


def prism_closed_forms(k):
    x = prism_rung_weight(k)
    n = 2 * k
    return PrismClosedForms(
        wiener=Fraction(n ** 3, 2) + n * n * x,
        transmission=Fraction(n * n, 2) + n * x,
        detour_sum=6 * k - 16 + x * (k - 3) * (k - 4),
    )


def prism_integer_scale(k):
    """The factor that turns the prism's weights into coprime integers."""
    _check_prism(k)
    numerator = 2 * k * k - 6 * k + 16
    denominator = k * k - 9 * k + 12
    return denominator // gcd(numerator, denominator)


def distance_distribution_w(G):
    """Counts of unordered pairs at each (rational) distance."""
    matrix = distance_matrix_w(G)
    counts = {INFINITE: 0}
    for u in range(G.n):
        for v in range(u + 1, G.n):
            d = matrix[u, v]
            counts[d] = counts.get(d, 0) + 1
    return DistanceDistribution(counts)
