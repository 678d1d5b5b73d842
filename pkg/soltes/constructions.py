"""
Generators for the known Šoltés hypergraphs and graphs.

Every generator validates its own output and raises rather than return an
object of the wrong order, size or uniformity.
"""

from math import comb

from .errors import BadConventionError, InvariantViolation, ParamOutOfRangeError
from .hypergraph import Hypergraph, delete_vertex, soltes_report, two_section_adjacency
from .weighted import cycle_alternating_01, prism_soltes


KNITS = 'KNITS'
GENERAL_R = 'GENERAL_R'
IRREGULAR54 = 'IRREGULAR54'
CYCLE = 'CYCLE'
PRISM = 'PRISM'
ALTERNATING_CYCLE = 'ALTERNATING_CYCLE'

VARIANTS = (KNITS, GENERAL_R, IRREGULAR54, CYCLE, PRISM, ALTERNATING_CYCLE)

# Readings of the interval endpoints of the generalized construction. With
# k' = k - 2r the edge e_i is A + B + C where A = [i-s-r .. i-s-1] and
#   INCLUSIVE:             B = [i .. i+k'],   C = [i+k'+s+1 .. i+k'+r+s]
#   HALF_OPEN_MIDDLE:      B = [i .. i+k'-1], C = [i+k'+s+1 .. i+k'+r+s]
#   INCLUSIVE_TRIM_MIDDLE: B = [i .. i+k'-1], C = [i+k'+s .. i+k'+r+s-1]
INCLUSIVE = 'INCLUSIVE'
HALF_OPEN_MIDDLE = 'HALF_OPEN_MIDDLE'
INCLUSIVE_TRIM_MIDDLE = 'INCLUSIVE_TRIM_MIDDLE'

CONVENTIONS = (INCLUSIVE, HALF_OPEN_MIDDLE, INCLUSIVE_TRIM_MIDDLE)

KNITS_MIN_ORDER = 92


def knits_params(n):
    """Returns (s, t) with n = C(s, 2) - t, taking the smallest such s."""
    if n < KNITS_MIN_ORDER:
        raise ParamOutOfRangeError(
            f'The circulant construction needs n >= {KNITS_MIN_ORDER}. Received: {n}'
        )
    s = 2
    while comb(s, 2) < n:
        s += 1
    t = comb(s, 2) - n
    assert 0 <= t <= s - 2
    return s, t


def _interval(start, stop, n):
    """The vertices start, start+1, ..., stop (inclusive), modulo n."""
    return {x % n for x in range(start, stop + 1)}


def _circulant(n, k, make_edge):
    edges = [make_edge(i) for i in range(n)]
    for edge in edges:
        if len(edge) != k:
            raise BadConventionError(f'Edge {sorted(edge)} has {len(edge)} vertices, expected {k}.')
    return Hypergraph(n, k, edges)


def _knits_from(s, t):
    n = comb(s, 2) - t
    k = n - t - 2 * s - 1

    def edge(i):
        return {i % n, (i + 2 * s + k - 1) % n} | _interval(i + s + 1, i + s + k - 2, n)

    return _circulant(n, k, edge)


def knits(n):
    """The vertex-transitive k-uniform Šoltés hypergraph of order n >= 92.

    With n = C(s, 2) - t and k = n - t - 2s - 1, the edges are
    e_i = {i, i+2s+k-1} + [i+s+1 .. i+s+k-2] for i in 0..n-1, modulo n.
    """
    s, t = knits_params(n)
    result = _knits_from(s, t)
    if result.m != n:
        raise InvariantViolation(f'Expected {n} distinct edges, found {result.m}.')
    if 2 * (result.k - 2) < n:
        raise InvariantViolation(f'Expected k - 2 >= n/2, found k = {result.k} for n = {n}.')
    return result


def knits_nonadjacency_count(H, v):
    """Counts the pairs of H - v that share no edge."""
    reduced = delete_vertex(H, v)
    adjacent = int(two_section_adjacency(reduced).sum()) // 2
    return comb(reduced.n, 2) - adjacent


def general_r_order(s, t, r):
    """Returns (n, k) of the generalized construction."""
    return (
        comb(s, 2) - (2 * r - 1) * t - r * r + 1,
        comb(s, 2) - 2 * r * t - 2 * s - r * r,
    )


def general_r(s, t, r, convention=INCLUSIVE_TRIM_MIDDLE):
    """The generalized circulant construction.

    Each edge is a block of r vertices, a middle block of k - 2r vertices
    starting at i, and another block of r vertices, separated by gaps that
    `convention` fixes. See CONVENTIONS. For r = 1 it must agree with `knits`.
    """
    if r < 1:
        raise ParamOutOfRangeError(f'Expected r >= 1. Received: {r}')
    if not 0 <= t < s - comb(r + 1, 2):
        raise ParamOutOfRangeError(
            f'Expected 0 <= t < s - C(r+1, 2) = {s - comb(r + 1, 2)}. Received: t = {t}'
        )
    if convention not in CONVENTIONS:
        raise BadConventionError(f'Unknown convention {convention!r}. Expected one of {CONVENTIONS}.')

    n, k = general_r_order(s, t, r)
    middle = k - 2 * r
    if middle < 1:
        raise ParamOutOfRangeError(f'The middle block is empty for s={s}, t={t}, r={r}.')

    def edge(i):
        first = _interval(i - s - r, i - s - 1, n)
        if convention == INCLUSIVE:
            second = _interval(i, i + middle, n)
            third = _interval(i + middle + s + 1, i + middle + r + s, n)
        elif convention == HALF_OPEN_MIDDLE:
            second = _interval(i, i + middle - 1, n)
            third = _interval(i + middle + s + 1, i + middle + r + s, n)
        else:
            second = _interval(i, i + middle - 1, n)
            third = _interval(i + middle + s, i + middle + r + s - 1, n)
        return first | second | third

    return _circulant(n, k, edge)


def is_rotation_of(H1, H2):
    """Returns j such that i -> i + j (mod n) maps H1's edges onto H2's, or None."""
    if (H1.n, H1.k, H1.m) != (H2.n, H2.k, H2.m):
        return None
    n = H1.n
    full = (1 << n) - 1
    target = set(H2.masks)
    for j in range(n):
        if all((((x << j) | (x >> (n - j))) & full) in target for x in H1.masks):
            return j
    return None


class ConventionTrial:
    def __init__(self, convention, passed, reason):
        self.convention = convention
        self.passed = passed
        self.reason = reason

    def __repr__(self):
        return f'ConventionTrial({self.convention!r}, passed={self.passed}, reason={self.reason!r})'


class ConventionResolution:
    def __init__(self, s, t, r, trials):
        self.s = s
        self.t = t
        self.r = r
        self.trials = trials

    @property
    def convention(self):
        """The first convention that passed every check, or None."""
        return next((x.convention for x in self.trials if x.passed), None)


def _try_convention(s, t, r, convention):
    try:
        H = general_r(s, t, r, convention)
        smallest = general_r(s, t, 1, convention)
    except BadConventionError as exc:
        return ConventionTrial(convention, False, f'not uniform: {exc}')

    if is_rotation_of(smallest, _knits_from(s, t)) is None:
        return ConventionTrial(convention, False, 'r = 1 differs from the base construction')

    if not soltes_report(H).verdict:
        return ConventionTrial(convention, False, 'not a Šoltés hypergraph')

    return ConventionTrial(convention, True, 'ok')


def resolve_convention(s, t, r):
    """Tries every convention in order and records why each one failed."""
    trials = []
    for convention in CONVENTIONS:
        trial = _try_convention(s, t, r, convention)
        trials.append(trial)
        if trial.passed:
            break
    return ConventionResolution(s, t, r, trials)


def uniformity_coverage(k_max, r_max=3):
    """Maps each uniformity k <= k_max reachable by the generalized
    construction to the first (s, t, r) that reaches it."""
    found = {}
    for r in range(1, r_max + 1):
        s = comb(r + 1, 2) + 1
        while True:
            ks = [(general_r_order(s, t, r)[1], t) for t in range(s - comb(r + 1, 2))]
            ks = [(k, t) for k, t in ks if k - 2 * r >= 1]
            for k, t in ks:
                if k <= k_max:
                    found.setdefault(k, (s, t, r))
            smallest = min((k for k, _ in ks), default=0)
            if s > 2 * r + 3 and smallest > k_max:
                break
            s += 1
    return dict(sorted(found.items()))


_IRREGULAR_OFFSETS = (0, 1, 2, 3, 4, 5, 7, 16, 18)


def irregular54():
    """The 9-uniform Šoltés hypergraph of order 54 with two vertex orbits.

    One edge {a + d mod 54 : d in 0, 1, 2, 3, 4, 5, 7, 16, 18} for each even a.
    """
    edges = [{(a + d) % 54 for d in _IRREGULAR_OFFSETS} for a in range(0, 54, 2)]
    result = Hypergraph(54, 9, edges)
    if result.m != 27:
        raise InvariantViolation(f'Expected 27 edges, found {result.m}.')
    for edge in result.edges:
        if sum(1 for v in edge if v % 2 == 0) != 5:
            raise InvariantViolation(f'Edge {edge} should have 5 even vertices.')
    return result


def cycle_graph(n):
    if n < 3:
        raise ParamOutOfRangeError(f'Expected a cycle length n >= 3. Received: {n}')
    return Hypergraph(n, 2, [(i, (i + 1) % n) for i in range(n)])


class ConstructionParams:
    """Describes one generated object. Use `ConstructionParams.create` to
    derive n and k from the free parameters."""

    fields = ('variant', 's', 't', 'r', 'n', 'k', 'convention')

    def __init__(self, variant, s=None, t=None, r=None, n=None, k=None, convention=None):
        self.variant = variant
        self.s = s
        self.t = t
        self.r = r
        self.n = n
        self.k = k
        self.convention = convention

    @classmethod
    def create(cls, variant, n=None, s=None, t=None, r=None, k=None, convention=None):
        variant = variant.upper().replace('-', '_')

        if variant == KNITS:
            if n is None:
                raise ParamOutOfRangeError('The KNITS variant needs n.')
            s, t = knits_params(n)
            return cls(variant, s=s, t=t, r=1, n=n, k=n - t - 2 * s - 1)

        if variant == GENERAL_R:
            if None in (s, t, r):
                raise ParamOutOfRangeError('The GENERAL_R variant needs s, t and r.')
            n, k = general_r_order(s, t, r)
            return cls(variant, s=s, t=t, r=r, n=n, k=k,
                       convention=convention or INCLUSIVE_TRIM_MIDDLE)

        if variant == IRREGULAR54:
            return cls(variant, n=54, k=9)

        if variant == CYCLE:
            if n is None:
                raise ParamOutOfRangeError('The CYCLE variant needs n.')
            return cls(variant, n=n, k=2)

        if variant == PRISM:
            if k is None:
                raise ParamOutOfRangeError('The PRISM variant needs k.')
            return cls(variant, n=4 * k, k=k)

        if variant == ALTERNATING_CYCLE:
            return cls(variant, n=10, k=2)

        raise ParamOutOfRangeError(f'Unknown variant {variant!r}. Expected one of {VARIANTS}.')

    @property
    def is_weighted(self):
        return self.variant in (PRISM, ALTERNATING_CYCLE)

    def to_json(self):
        return {name: getattr(self, name) for name in self.fields}

    @classmethod
    def from_json(cls, obj):
        return cls(**{name: obj.get(name) for name in cls.fields})

    def __eq__(self, other):
        return isinstance(other, ConstructionParams) and self.to_json() == other.to_json()

    def __repr__(self):
        args = ', '.join(f'{k}={v!r}' for k, v in self.to_json().items() if v is not None)
        return f'ConstructionParams({args})'


def construct(params):
    """Builds the object a ConstructionParams describes."""
    if params.variant == KNITS:
        return knits(params.n)
    if params.variant == GENERAL_R:
        return general_r(params.s, params.t, params.r, params.convention or INCLUSIVE_TRIM_MIDDLE)
    if params.variant == IRREGULAR54:
        return irregular54()
    if params.variant == CYCLE:
        return cycle_graph(params.n)
    if params.variant == PRISM:
        return prism_soltes(params.k)
    if params.variant == ALTERNATING_CYCLE:
        return cycle_alternating_01()
    raise ParamOutOfRangeError(f'Unknown variant {params.variant!r}.')
