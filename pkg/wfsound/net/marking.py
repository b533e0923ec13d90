"""
Helpers on dense markings.

A marking is a tuple with one entry per place, in the net's declaration
order. Natural markings hold ints >= 0, integer markings may hold negative
ints and Karp-Miller markings may hold OMEGA.
"""

from wfsound.settings import SETTINGS
from wfsound.common.utils.exception import WfsoundError, ERR


# The unbounded token count of a Karp-Miller node. It absorbs arithmetic.
OMEGA = float("inf")


def norm(m):
    """
    The largest absolute entry of a marking, 0 for the empty vector.
    """
    return max((abs(v) for v in m), default=0)


def covers(m, v):
    """
    True iff m >= v componentwise.
    """
    return all(a >= b for a, b in zip(m, v))


def strictly_above(m, v):
    """
    True iff m >= v componentwise and m != v.
    """
    return m != v and covers(m, v)


def add(m, delta, limit=None):
    """
    Componentwise sum with overflow detection.

    Args:
        m: (tuple) a marking.
        delta: (tuple) an effect vector of the same length.
        limit: (int) entries must stay strictly below this absolute value,
            defaults to SETTINGS.MARKING_LIMIT.
    """
    if limit is None:
        limit = SETTINGS.MARKING_LIMIT

    result = tuple(a + b for a, b in zip(m, delta))
    for value in result:
        if value != OMEGA and abs(value) >= limit:
            raise WfsoundError(ERR.overflow, "Token count %s exceeds the marking limit." % value,
                               data={"value": value})
    return result


def scale(v, factor):
    """
    Multiply every entry by a natural factor.
    """
    return tuple(a * factor for a in v)


def is_natural(m):
    """
    True iff no entry is negative.
    """
    return all(v >= 0 for v in m)
