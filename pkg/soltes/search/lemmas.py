"""
Checks of the structural bounds on small 4-uniform hypergraphs.

Connected 4-uniform hypergraphs of order 8 are checked exhaustively up to a
size limit and by random sampling above it. Any violation means either a
bug here or a false bound, and is reported as such.
"""

import itertools
import logging
import random

from tqdm import tqdm

from ..extended import INFINITE
from ..hypergraph import Hypergraph, degree, distance_distribution, distance_matrix, is_connected
from .engine import enumerate_hypergraphs
from .spec import SearchSpec


log = logging.getLogger(__name__)

_QUADRUPLES_8 = list(itertools.combinations(range(8), 4))
_QUADRUPLES_9 = list(itertools.combinations(range(9), 4))


def order_eight_violations(H):
    """Lists the bounds that the connected 4-uniform order-8 hypergraph H breaks."""
    dist = distance_distribution(H)
    diam = dist.diameter
    W = dist.wiener()
    n1, n3 = dist[1], dist[3]
    m = H.m
    found = []

    if m < 3 or diam is INFINITE or diam > 3:
        found.append(f'size {m} / diameter {diam}: expected size >= 3 and diameter <= 3')
    if n1 < 15 or (n1 == 15 and m != 3):
        found.append(f'n1 = {n1} at size {m}: expected n1 >= 15, with equality only at size 3')
    if diam == 2 and (W > 41 or (W == 41 and m != 3)):
        found.append(f'diameter 2, W = {W}, size {m}: expected W <= 41, equality only at size 3')
    if diam == 3 and (W > 44 or (W == 44) != (m == 3)):
        found.append(f'diameter 3, W = {W}, size {m}: expected W <= 44, equality iff size 3')
    if m >= 4:
        cases = (
            diam <= 2 and W <= 40,
            diam == 3 and n3 == 1 and W <= 41,
            diam == 3 and n3 == 2 and 40 <= W <= 42,
        )
        if not any(cases):
            found.append(f'size {m}, diameter {diam}, n3 = {n3}, W = {W}: no case of the trichotomy holds')

    return [f'{H!r}: {x}' for x in found]


def degree_two_violations(H):
    """In a 4-uniform hypergraph of order 9, a vertex of degree 2 has transmission >= 10."""
    matrix = distance_matrix(H)
    return [
        f'{H!r}: vertex {v} has degree 2 and transmission {matrix.row_sum(v)}'
        for v in range(H.n)
        if degree(H, v) == 2 and matrix.row_sum(v) < 10
    ]


class LemmaReport:
    def __init__(self):
        self.exhaustive = 0
        self.sampled = 0
        self.degree_two_samples = 0
        self.violations = []

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {
            'exhaustive': self.exhaustive,
            'sampled': self.sampled,
            'degree_two_samples': self.degree_two_samples,
            'violations': self.violations,
            'ok': self.ok,
        }

    def __repr__(self):
        return (
            f'LemmaReport(exhaustive={self.exhaustive}, sampled={self.sampled},'
            f' violations={len(self.violations)})'
        )


def _keep(H):
    return True


def random_connected(rng, n, k, m, edges=None):
    """Draws m distinct k-subsets of 0..n-1 until the result is connected."""
    edges = edges or list(itertools.combinations(range(n), k))
    while True:
        H = Hypergraph(n, k, rng.sample(edges, m))
        if is_connected(H):
            return H


def lemma_suite(sample_size=100000, seed=0, exhaustive_max_size=5, sample_max_size=20, progress=None):
    """Checks every connected 4-uniform order-8 hypergraph with at most
    `exhaustive_max_size` edges, then `sample_size` random connected ones with
    more edges, then `sample_size // 10` random order-9 hypergraphs for the
    degree-two transmission bound."""
    report = LemmaReport()
    rng = random.Random(seed)
    hidden = None if progress is None else not progress

    spec = SearchSpec(8, 4, m_min=1, m_max=exhaustive_max_size, require_connected=True)
    classes = enumerate_hypergraphs(spec, _keep, workers=1).witnesses
    for H in classes:
        report.violations.extend(order_eight_violations(H))
    report.exhaustive = len(classes)
    log.info('Checked %d classes of size <= %d', len(classes), exhaustive_max_size)

    low = exhaustive_max_size + 1
    for _ in tqdm(range(sample_size), desc='order 8 samples', disable=hidden):
        H = random_connected(rng, 8, 4, rng.randint(low, sample_max_size), _QUADRUPLES_8)
        report.violations.extend(order_eight_violations(H))
        report.sampled += 1

    for _ in tqdm(range(sample_size // 10), desc='order 9 samples', disable=hidden):
        H = random_connected(rng, 9, 4, rng.randint(4, 18), _QUADRUPLES_9)
        report.violations.extend(degree_two_violations(H))
        report.degree_two_samples += 1

    if report.violations:
        log.error('%d lemma violations, first: %s', len(report.violations), report.violations[0])
    return report
