"""
Distances extended with an absorbing infinite value.

Unreachable pairs have distance `INFINITE`. It compares greater than every
number, absorbs addition, and prints as ``inf``. It is a singleton, so use
``x is INFINITE`` (or `is_finite`) to test for it.
"""


class _Infinite:
    __slots__ = ()

    def __repr__(self):
        return 'INFINITE'

    def __str__(self):
        return 'inf'

    def __reduce__(self):
        return 'INFINITE'

    def __hash__(self):
        return hash('INFINITE')

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError('INFINITE - INFINITE is undefined')
        return self

    def __rsub__(self, other):
        raise ArithmeticError(f'{other!r} - INFINITE is undefined')


INFINITE = _Infinite()


def is_finite(value):
    return value is not INFINITE


def difference(after, before):
    """Returns `after - before`, or INFINITE when either side is INFINITE."""
    if after is INFINITE or before is INFINITE:
        return INFINITE
    return after - before
