from math import comb

from ..errors import ParamOutOfRangeError


COMPLETE = 'COMPLETE'
INCOMPLETE = 'INCOMPLETE'
EXHAUSTED_BUDGET = 'EXHAUSTED_BUDGET'

# Largest Wiener index of a 3-uniform hypergraph of the given order, attained
# by the tight path. These come from outside this package and are only used
# when a spec asks for them.
MAX_WIENER_THREE_UNIFORM = {7: 38, 8: 57}


def trusted_deletion_bound(n, k):
    """An upper bound on W(H) for a Šoltés hypergraph H of order n, or None.

    Since W(H) = W(H - v) and H - v has order n - 1, any bound on the Wiener
    index at order n - 1 applies.
    """
    if k == 3:
        return MAX_WIENER_THREE_UNIFORM.get(n - 1)
    return None


class SearchSpec:
    """Parameters of one exhaustive search.

    Visits one hypergraph per isomorphism class of k-uniform hypergraphs of
    order n with between m_min and m_max edges, subject to the structural
    filters. `partitions` is the number of shards the work is split into;
    the result does not depend on it.
    """

    fields = (
        'n', 'k', 'm_min', 'm_max', 'require_connected',
        'require_all_deletions_connected', 'wiener_bounds', 'partitions',
        'deletion_wiener_max', 'prune', 'max_nodes', 'max_seconds', 'split_depth',
    )

    def __init__(
        self,
        n,
        k,
        m_min=0,
        m_max=None,
        require_connected=True,
        require_all_deletions_connected=False,
        wiener_bounds=None,
        partitions=1,
        deletion_wiener_max=None,
        prune=True,
        max_nodes=None,
        max_seconds=None,
        split_depth=2,
    ):
        if not 2 <= k <= n:
            raise ParamOutOfRangeError(f'Expected 2 <= k <= n. Received: n={n}, k={k}')
        if m_max is None:
            m_max = comb(n, k)
        if not 0 <= m_min <= m_max <= comb(n, k):
            raise ParamOutOfRangeError(
                f'Expected 0 <= m_min <= m_max <= C(n, k) = {comb(n, k)}.'
                f' Received: m_min={m_min}, m_max={m_max}'
            )
        if partitions < 1:
            raise ParamOutOfRangeError(f'Expected at least one partition. Received: {partitions}')
        if wiener_bounds is not None:
            lo, hi = wiener_bounds
            if lo > hi:
                raise ParamOutOfRangeError(f'Empty Wiener bounds [{lo}, {hi}].')
            wiener_bounds = (lo, hi)

        self.n = n
        self.k = k
        self.m_min = m_min
        self.m_max = m_max
        self.require_connected = require_connected
        self.require_all_deletions_connected = require_all_deletions_connected
        self.wiener_bounds = wiener_bounds
        self.partitions = partitions
        self.deletion_wiener_max = deletion_wiener_max
        self.prune = prune
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds
        self.split_depth = split_depth

    def replace(self, **changes):
        values = self.to_json()
        values.update(changes)
        return SearchSpec(**values)

    def to_json(self):
        result = {name: getattr(self, name) for name in self.fields}
        if self.wiener_bounds is not None:
            result['wiener_bounds'] = list(self.wiener_bounds)
        return result

    @classmethod
    def from_json(cls, obj):
        unknown = set(obj) - set(cls.fields)
        if unknown:
            raise ParamOutOfRangeError(f'Unknown search spec fields: {sorted(unknown)}')
        return cls(**obj)

    def __eq__(self, other):
        return isinstance(other, SearchSpec) and self.to_json() == other.to_json()

    def __repr__(self):
        return f'SearchSpec(n={self.n}, k={self.k}, m_min={self.m_min}, m_max={self.m_max})'


class SearchResult:
    def __init__(self, spec, classes_visited, witnesses, status, reason, stats):
        self.spec = spec
        self.classes_visited = classes_visited
        self.witnesses = witnesses
        self.status = status
        self.reason = reason
        self.stats = stats

    @property
    def is_complete(self):
        return self.status == COMPLETE

    def records(self):
        """One JSON-ready record per witness, then a summary record."""
        for H in self.witnesses:
            yield {'type': 'witness', 'n': H.n, 'k': H.k, 'edges': [list(e) for e in H.edges]}
        yield {
            'type': 'summary',
            'spec': self.spec.to_json(),
            'classes_visited': self.classes_visited,
            'witnesses': len(self.witnesses),
            'status': self.status,
            'reason': self.reason,
            'stats': self.stats,
        }

    def __repr__(self):
        return (
            f'SearchResult(classes_visited={self.classes_visited},'
            f' witnesses={len(self.witnesses)}, status={self.status!r})'
        )
