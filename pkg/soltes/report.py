"""
Per-vertex Šoltés reports, shared by hypergraphs and weighted graphs.
"""

from .errors import InvariantViolation
from .extended import INFINITE, difference, is_finite


class VertexReport:
    def __init__(self, label, transmission, detour_sum, wiener_after, delta):
        self.label = label
        self.transmission = transmission
        self.detour_sum = detour_sum
        self.wiener_after = wiener_after
        self.delta = delta

    def __repr__(self):
        return (
            f'VertexReport(label={self.label!r}, transmission={self.transmission!r},'
            f' detour_sum={self.detour_sum!r}, wiener_after={self.wiener_after!r},'
            f' delta={self.delta!r})'
        )


class SoltesReport:
    """The Wiener index of a graph and, for every vertex v, the values that
    decide whether deleting v changes it.

    Construction checks the deletion identity
    ``W(G - v) = W(G) - transmission(v) + detour_sum(v)`` for every vertex
    where all four terms are finite, and the handshake identity
    ``sum of transmissions = 2 W(G)``. A failure of either raises
    `InvariantViolation`.
    """

    def __init__(self, wiener, vertices):
        self.wiener = wiener
        self.vertices = list(vertices)
        self._check_identities()

    @classmethod
    def build(cls, wiener, rows):
        """Builds a report from (label, transmission, detour_sum, wiener_after)
        tuples, computing each delta."""
        vertices = [
            VertexReport(label, sigma, detour, after, difference(after, wiener))
            for label, sigma, detour, after in rows
        ]
        return cls(wiener, vertices)

    @property
    def verdict(self):
        return all(v.delta is not INFINITE and v.delta == 0 for v in self.vertices)

    def _check_identities(self):
        for v in self.vertices:
            terms = [self.wiener, v.transmission, v.detour_sum, v.wiener_after]
            if not all(is_finite(x) for x in terms):
                continue
            expected = self.wiener - v.transmission + v.detour_sum
            if v.wiener_after != expected:
                raise InvariantViolation(
                    f'Deletion identity fails at vertex {v.label}:'
                    f' W(G - v) = {v.wiener_after}, but W(G) - transmission'
                    f' + detour_sum = {expected}.'
                )

        if is_finite(self.wiener):
            total = sum(v.transmission for v in self.vertices)
            if total != 2 * self.wiener:
                raise InvariantViolation(
                    f'Transmissions sum to {total}, expected 2 * W = {2 * self.wiener}.'
                )

    def __repr__(self):
        return f'SoltesReport(wiener={self.wiener!r}, verdict={self.verdict!r})'
