"""
Isomorph-free generation of uniform hypergraphs by canonical augmentation.

Hypergraphs grow one edge at a time from the empty one. A child G + e is
kept only when e is equivalent, under the automorphisms of G + e, to the
edge a canonical rule would delete from G + e. Every isomorphism class is
then reached from exactly one parent class; the remaining duplicates, which
come from equivalent edges added to the same parent, are dropped by
comparing canonical codes among siblings.

In connected mode only hypergraphs whose edges form a connected
intersection pattern are generated, and the deletable edges are those whose
removal keeps that pattern connected.
"""

import itertools

from .canonical import canonize


def _popcount(x):
    return bin(x).count('1')


def _stays_connected(masks, removed):
    rest = [x for x in masks if x != removed]
    if not rest:
        return True
    reached = rest[0]
    pending = rest[1:]
    while pending:
        touching = [x for x in pending if x & reached]
        if not touching:
            return False
        for x in touching:
            reached |= x
        pending = [x for x in pending if x not in touching]
    return True


def _edge_invariant(masks, edge, degrees):
    return (
        tuple(sorted(degrees[v] for v in range(len(degrees)) if edge >> v & 1)),
        tuple(sorted(_popcount(edge & x) for x in masks if x != edge)),
    )


class Node:
    """A hypergraph in the generation tree, as sorted edge masks plus the
    union of its edges."""

    __slots__ = ('masks', 'support')

    def __init__(self, masks, support):
        self.masks = masks
        self.support = support

    @property
    def m(self):
        return len(self.masks)


class Augmenter:
    def __init__(self, n, k, connected=True, m_max=None, prune=True):
        self.n = n
        self.k = k
        self.connected = connected
        self.m_max = m_max
        self.prune = prune
        self.full = (1 << n) - 1
        self.candidates = [
            sum(1 << v for v in c) for c in itertools.combinations(range(n), k)
        ]
        self.pruned = 0
        self.rejected = 0

    def root(self):
        return Node((), 0)

    def children(self, node):
        seen = set()
        present = set(node.masks)
        for edge in self.candidates:
            if edge in present:
                continue
            if self.connected and node.masks and not edge & node.support:
                continue

            masks = tuple(sorted(node.masks + (edge,)))
            support = node.support | edge
            if self._cannot_cover(support, len(masks)):
                self.pruned += 1
                continue

            code = self._accept(masks, edge)
            if code is None:
                self.rejected += 1
                continue
            if code in seen:
                continue
            seen.add(code)
            yield Node(masks, support)

    def _cannot_cover(self, support, m):
        # Each further edge adds at most k - 1 new vertices to the support.
        if not (self.connected and self.prune and self.m_max is not None):
            return False
        return _popcount(support) + (self.m_max - m) * (self.k - 1) < self.n

    def _accept(self, masks, edge):
        """Returns the child's canonical code when `edge` is its canonical
        deletion, and None otherwise."""
        if self.connected:
            eligible = [x for x in masks if _stays_connected(masks, x)]
        else:
            eligible = list(masks)
        if edge not in eligible:
            return None

        degrees = [sum(1 for x in masks if x >> v & 1) for v in range(self.n)]
        scores = {x: _edge_invariant(masks, x, degrees) for x in eligible}
        best = max(scores.values())
        if scores[edge] != best:
            return None

        form = canonize(self.n, self.k, masks)
        ties = [x for x in eligible if scores[x] == best]
        if len(ties) == 1:
            return form.code

        rank = dict(zip(masks, form.edge_ranks))
        chosen = max(ties, key=rank.__getitem__)
        if chosen != edge:
            index = masks.index
            if canonize(self.n, self.k, masks, index(edge)).code != canonize(
                self.n, self.k, masks, index(chosen)
            ).code:
                return None
        return form.code
