"""
Uniform hypergraphs, their 2-section distances, and Wiener-index quantities.

A hypergraph is connected to a graph through its 2-section: two vertices
are adjacent when some edge contains both, and distances are shortest-path
distances in that graph.
"""

import itertools
from math import comb

import networkx as nx
import numpy as np

from .errors import (
    InvalidHypergraphError,
    InvariantViolation,
    NotConnectedError,
    ParamOutOfRangeError,
)
from .extended import INFINITE
from .report import SoltesReport


class Hypergraph:
    """A k-uniform hypergraph on the vertices 0 .. n-1.

    Edges are kept twice: as sorted tuples (in lexicographic order) in
    `edges`, and as integer bit masks in `masks`, in the same order.
    """

    def __init__(self, n, k, edges):
        if n < 0:
            raise InvalidHypergraphError(f'Expected a non-negative order. Received: {n}')
        if k < 2:
            raise InvalidHypergraphError(f'Expected uniformity k >= 2. Received: {k}')

        normalized = []
        for edge in edges:
            members = tuple(sorted(edge))
            if len(set(members)) != len(members):
                raise InvalidHypergraphError(f'Edge {members} repeats a vertex.')
            if len(members) != k:
                raise InvalidHypergraphError(
                    f'Edge {members} has {len(members)} vertices, but the'
                    f' hypergraph is {k}-uniform.'
                )
            if members[0] < 0 or members[-1] >= n:
                raise InvalidHypergraphError(
                    f'Edge {members} has a vertex outside the range 0..{n - 1}.'
                )
            normalized.append(members)

        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise InvalidHypergraphError(f'Edge {a} appears more than once.')

        self.n = n
        self.k = k
        self.edges = tuple(normalized)
        self.masks = tuple(_to_mask(e) for e in normalized)

    @classmethod
    def from_masks(cls, n, k, masks):
        return cls(n, k, [_from_mask(x) for x in masks])

    @property
    def m(self):
        return len(self.edges)

    def relabel(self, permutation):
        """Returns the hypergraph in which vertex v is renamed permutation[v]."""
        if sorted(permutation) != list(range(self.n)):
            raise InvalidHypergraphError(f'{permutation!r} is not a permutation of 0..{self.n - 1}.')
        return Hypergraph(self.n, self.k, [[permutation[v] for v in e] for e in self.edges])

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and (self.n, self.k, self.edges) == (other.n, other.k, other.edges)
        )

    def __hash__(self):
        return hash((self.n, self.k, self.edges))

    def __repr__(self):
        return f'Hypergraph(n={self.n}, k={self.k}, edges={list(self.edges)!r})'


def _to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _from_mask(mask):
    result = []
    while mask:
        low = mask & -mask
        result.append(low.bit_length() - 1)
        mask ^= low
    return result


def _check_vertex(H, v):
    if not 0 <= v < H.n:
        raise ParamOutOfRangeError(f'Vertex {v} is not in the range 0..{H.n - 1}.')


def degree(H, v):
    _check_vertex(H, v)
    bit = 1 << v
    return sum(1 for x in H.masks if x & bit)


def pair_degree(H, u, v):
    """Counts the edges that contain both u and v."""
    _check_vertex(H, u)
    _check_vertex(H, v)
    if u == v:
        raise ParamOutOfRangeError(f'The pair degree needs two distinct vertices. Received: {u}, {v}')
    both = (1 << u) | (1 << v)
    return sum(1 for x in H.masks if x & both == both)


def incidence_matrix(H):
    result = np.zeros((H.n, H.m), dtype=np.float64)
    for j, edge in enumerate(H.edges):
        result[list(edge), j] = 1.0
    return result


def two_section_adjacency(H):
    """Returns the 2-section as a symmetric boolean n-by-n matrix."""
    incidence = incidence_matrix(H)
    result = (incidence @ incidence.T) > 0
    np.fill_diagonal(result, False)
    return result


def two_section_graph(H):
    result = nx.Graph()
    result.add_nodes_from(range(H.n))
    for edge in H.edges:
        result.add_edges_from(itertools.combinations(edge, 2))
    return result


class DistanceMatrix:
    """All-pairs distances. Indexing with a pair returns an int, or INFINITE
    when the pair is in different components."""

    def __init__(self, values, reachable):
        self.values = values
        self.reachable = reachable

    @property
    def n(self):
        return len(self.values)

    @property
    def is_connected(self):
        return bool(self.reachable.all())

    def __getitem__(self, pair):
        u, v = pair
        return int(self.values[u, v]) if self.reachable[u, v] else INFINITE

    def total(self):
        """The sum of distances over unordered pairs."""
        if not self.is_connected:
            return INFINITE
        return int(self.values.sum()) // 2

    def row_sum(self, v):
        if not self.reachable[v].all():
            return INFINITE
        return int(self.values[v].sum())

    def without(self, v):
        """Drops row and column v, renumbering the later vertices down by one."""
        keep = [u for u in range(self.n) if u != v]
        return DistanceMatrix(
            self.values[np.ix_(keep, keep)], self.reachable[np.ix_(keep, keep)]
        )


def _bfs_levels(adjacency):
    n = len(adjacency)
    values = np.zeros((n, n), dtype=np.int64)
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    step = adjacency.astype(np.float64)
    level = 0
    while frontier.any():
        level += 1
        # Entries count walks of 0/1 matrices, so the float products are exact.
        frontier = ((frontier.astype(np.float64) @ step) > 0) & ~reached
        values[frontier] = level
        reached |= frontier
    return values, reached


def distance_matrix(H):
    return DistanceMatrix(*_bfs_levels(two_section_adjacency(H)))


def is_connected(H):
    return distance_matrix(H).is_connected


def wiener(H):
    return distance_matrix(H).total()


def transmission(H, v):
    _check_vertex(H, v)
    return distance_matrix(H).row_sum(v)


def diameter(H):
    matrix = distance_matrix(H)
    if not matrix.is_connected:
        return INFINITE
    return int(matrix.values.max()) if H.n else 0


def delete_vertex(H, v):
    """Removes v and every edge containing it. Vertices above v move down by one."""
    _check_vertex(H, v)
    bit = 1 << v
    low = bit - 1
    masks = [(x & low) | ((x >> (v + 1)) << v) for x in H.masks if not x & bit]
    return Hypergraph.from_masks(H.n - 1, H.k, masks)


def _detour(before, after, v):
    if not after.is_connected:
        return INFINITE
    kept = before.without(v)
    return int(np.triu(after.values - kept.values, 1).sum())


def detour_sum(H, v):
    """Sums, over pairs not containing v, how much deleting v lengthens their distance."""
    before = distance_matrix(H)
    if not before.is_connected:
        raise NotConnectedError('The detour sum is only defined for connected hypergraphs.')
    after = distance_matrix(delete_vertex(H, v))
    return _detour(before, after, v)


def soltes_report(H):
    before = distance_matrix(H)
    rows = []
    for v in range(H.n):
        after = distance_matrix(delete_vertex(H, v))
        detour = _detour(before, after, v) if before.is_connected else INFINITE
        rows.append((v, before.row_sum(v), detour, after.total()))
    return SoltesReport.build(before.total(), rows)


class DistanceDistribution:
    """Counts of unordered pairs at each distance. `counts[INFINITE]` holds
    the pairs in different components."""

    def __init__(self, counts):
        self.counts = counts

    def __getitem__(self, distance):
        return self.counts.get(distance, 0)

    @property
    def diameter(self):
        if self[INFINITE]:
            return INFINITE
        return max((d for d, c in self.counts.items() if d is not INFINITE and c), default=0)

    def wiener(self):
        if self[INFINITE]:
            return INFINITE
        return sum(d * c for d, c in self.counts.items() if d is not INFINITE)

    def __repr__(self):
        return f'DistanceDistribution({self.counts!r})'


def distance_distribution(H):
    matrix = distance_matrix(H)
    upper = np.triu_indices(H.n, 1)
    values = matrix.values[upper]
    reachable = matrix.reachable[upper]
    counts = {INFINITE: int((~reachable).sum())}
    finite, frequency = np.unique(values[reachable], return_counts=True)
    counts.update((int(d), int(c)) for d, c in zip(finite, frequency))

    if sum(counts.values()) != comb(H.n, 2):
        raise InvariantViolation('Distance counts do not cover every pair.')
    return DistanceDistribution(counts)


def deletion_edge_floor(n, k, m):
    """The fewest edges left after deleting a vertex of minimum degree.

    A vertex of minimum degree lies in at most floor(k * m / n) edges.
    """
    if n < 1 or k < 2 or m < 0:
        raise ParamOutOfRangeError(f'Expected n >= 1, k >= 2, m >= 0. Received: {(n, k, m)}')
    return -(-(n - k) * m // n)
