"""
Sharded exhaustive search over isomorphism classes of uniform hypergraphs.

Every shard walks the same deterministic generation tree. Nodes at depth
`split_depth` are numbered in walk order, and shard p explores below node j
only when j % partitions == p. Shallower nodes are reported by shard 0.
"""

import logging
import time
from math import comb
from multiprocessing import Pool

from ..config import default_workers
from ..errors import InvariantViolation
from ..extended import INFINITE
from ..hypergraph import Hypergraph, delete_vertex, is_connected, soltes_report, wiener
from .augment import Augmenter
from .canonical import canonical_code
from .spec import COMPLETE, EXHAUSTED_BUDGET, INCOMPLETE, SearchResult


log = logging.getLogger(__name__)


class _Shard:
    def __init__(self, spec, index, visitor):
        self.spec = spec
        self.index = index
        self.visitor = visitor
        self.augmenter = Augmenter(
            spec.n,
            spec.k,
            connected=spec.require_connected,
            m_max=spec.m_max,
            prune=spec.prune,
        )
        self.full = (1 << spec.n) - 1
        self.nodes = 0
        self.counter = 0
        self.visited = 0
        self.witnesses = []
        self.exhausted = False
        self.started = None

    def run(self):
        self.started = time.monotonic()
        self._walk(self.augmenter.root(), 0)
        return {
            'visited': self.visited,
            'witnesses': self.witnesses,
            'exhausted': self.exhausted,
            'nodes': self.nodes,
            'pruned': self.augmenter.pruned,
            'rejected': self.augmenter.rejected,
        }

    def _out_of_budget(self):
        spec = self.spec
        if spec.max_nodes is not None and self.nodes >= spec.max_nodes:
            return True
        if spec.max_seconds is not None and time.monotonic() - self.started >= spec.max_seconds:
            return True
        return False

    def _walk(self, node, depth):
        if self.exhausted or self._out_of_budget():
            self.exhausted = True
            return
        self.nodes += 1

        if depth == self.spec.split_depth:
            position = self.counter
            self.counter += 1
            if position % self.spec.partitions != self.index:
                return

        if depth >= self.spec.split_depth or self.index == 0:
            self._visit(node)

        if node.m < self.spec.m_max:
            for child in self.augmenter.children(node):
                self._walk(child, depth + 1)

    def _visit(self, node):
        spec = self.spec
        if not spec.m_min <= node.m <= spec.m_max:
            return
        if spec.require_connected and node.support != self.full:
            return

        H = Hypergraph.from_masks(spec.n, spec.k, node.masks)
        if spec.require_all_deletions_connected:
            if not all(is_connected(delete_vertex(H, v)) for v in range(H.n)):
                return
        if spec.wiener_bounds is not None:
            lo, hi = spec.wiener_bounds
            W = wiener(H)
            if W is INFINITE or not lo <= W <= hi:
                return

        self.visited += 1
        if self.visitor is not None and self.visitor(H):
            self.witnesses.append((canonical_code(H), H))


def _run_shard(task):
    spec, index, visitor = task
    return _Shard(spec, index, visitor).run()


def enumerate_hypergraphs(spec, visitor=None, workers=None):
    """Visits one hypergraph per isomorphism class allowed by `spec`.

    `visitor(H)` is called once per class; the classes for which it returns
    a true value are collected as witnesses, sorted by canonical code. With
    more than one worker the visitor must be picklable.
    """
    started = time.monotonic()
    workers = workers or default_workers()
    tasks = [(spec, index, visitor) for index in range(spec.partitions)]
    log.info('Searching %r in %d shard(s) on %d worker(s)', spec, len(tasks), workers)

    if workers > 1 and len(tasks) > 1:
        with Pool(min(workers, len(tasks))) as pool:
            outcomes = pool.map(_run_shard, tasks)
    else:
        outcomes = [_run_shard(task) for task in tasks]

    witnesses = sorted(
        (pair for outcome in outcomes for pair in outcome['witnesses']),
        key=lambda pair: pair[0],
    )
    exhausted = any(outcome['exhausted'] for outcome in outcomes)
    stats = {
        name: sum(outcome[name] for outcome in outcomes)
        for name in ('nodes', 'pruned', 'rejected')
    }
    stats['seconds'] = round(time.monotonic() - started, 3)

    result = SearchResult(
        spec=spec,
        classes_visited=sum(outcome['visited'] for outcome in outcomes),
        witnesses=[H for _, H in witnesses],
        status=INCOMPLETE if exhausted else COMPLETE,
        reason=EXHAUSTED_BUDGET if exhausted else None,
        stats=stats,
    )
    log.info('Search finished: %r', result)
    return result


class SoltesFilter:
    """Visitor that accepts exactly the Šoltés hypergraphs.

    With `prune` set, cheap necessary conditions are tested before the full
    report: connectedness, the optional bound on W, and equality of W(H - v)
    and W(H) vertex by vertex.
    """

    def __init__(self, deletion_wiener_max=None, prune=True):
        self.deletion_wiener_max = deletion_wiener_max
        self.prune = prune

    def __call__(self, H):
        if self.prune and not self._may_be_soltes(H):
            return False
        return soltes_report(H).verdict

    def _may_be_soltes(self, H):
        whole = wiener(H)
        if whole is INFINITE:
            return False
        if whole < comb(H.n, 2):
            raise InvariantViolation(f'W = {whole} is below C(n, 2) for a connected {H!r}.')
        if self.deletion_wiener_max is not None and whole > self.deletion_wiener_max:
            return False
        return all(wiener(delete_vertex(H, v)) == whole for v in range(H.n))


def search_soltes(spec, workers=None):
    """Finds every Šoltés hypergraph in the range of `spec`, up to isomorphism."""
    visitor = SoltesFilter(spec.deletion_wiener_max, prune=spec.prune)
    return enumerate_hypergraphs(spec, visitor, workers)
