"""
Steinitz reorderings at small scale.

A family of vectors summing to zero can be ordered so that every prefix
sum has norm at most d * b (d the dimension, b the largest input norm).
The orders are found by exhaustive search with prefix pruning; candidates
are tried by increasing prefix norm and equal vectors are tried once per
position.
"""

from fractions import Fraction

from wfsound.settings import SETTINGS
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.marking import norm


MAX_BASE_VECTORS = 10
MAX_EXTENDED_VECTORS = 8
MAX_DIMENSION = 3
MAX_EXTENDED_NORM = 12


class SteinitzResult(object):
    """
    permutation: order of x_0..x_n, starting with 0.
    coefficients: c_0 <= ... <= c_n, Fractions.
    achieved_bound: max_i ||x_pi(0) + ... + x_pi(i) - c_i * z||.
    bound: b * (d + 2).
    """
    def __init__(self, permutation, coefficients, achieved_bound, bound):
        self.permutation = permutation
        self.coefficients = coefficients
        self.achieved_bound = achieved_bound
        self.bound = bound

    def __repr__(self):
        return "SteinitzResult(%s, %s, %s <= %s)" % (self.permutation, self.coefficients,
                                                       self.achieved_bound, self.bound)


def _dimension(vectors, d):
    dims = {len(v) for v in vectors}
    if len(dims) > 1:
        raise WfsoundError(ERR.invalid_argument, "Vectors of different dimensions.")
    found = dims.pop() if dims else (d or 0)
    if d is not None and d != found:
        raise WfsoundError(ERR.invalid_argument, "Vectors have dimension %s, not %s." % (found, d))
    return found


def _reorder(vectors, limit, node_budget):
    """
    An order of the vectors with every prefix sum of norm <= limit, or None.
    """
    size = len(vectors)
    if not size:
        return []
    dim = len(vectors[0])
    used = [False] * size
    order = []
    nodes = [0]

    def search(prefix):
        if len(order) == size:
            return True
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise WfsoundError(ERR.scale_too_large, "Steinitz search exceeds %s nodes." % node_budget)

        candidates = []
        tried = set()
        for index in range(size):
            if used[index] or vectors[index] in tried:
                continue
            tried.add(vectors[index])
            following = tuple(prefix[k] + vectors[index][k] for k in range(dim))
            value = norm(following)
            if value <= limit:
                candidates.append((value, index, following))
        candidates.sort(key=lambda item: (item[0], item[1]))

        for _, index, following in candidates:
            used[index] = True
            order.append(index)
            if search(following):
                return True
            order.pop()
            used[index] = False
        return False

    if search((0,) * dim):
        return list(order)
    return None


def steinitz_reorder_small(vectors, d=None, node_budget=None):
    """
    Reorder zero-sum vectors so that every prefix sum has norm at most
    d * max ||x_i||.

    Args:
        vectors: (list) integer vectors x_1..x_n as tuples.
        d: (int) their dimension, taken from the vectors if omitted.
        node_budget: (int) defaults to SETTINGS.STEINITZ_NODE_BUDGET.

    Returns:
        list: the permutation as 0-based indices into vectors.
    """
    vectors = [tuple(v) for v in vectors]
    d = _dimension(vectors, d)
    if len(vectors) > MAX_BASE_VECTORS or d > MAX_DIMENSION:
        raise WfsoundError(ERR.scale_too_large, "At most %s vectors of dimension %s." %
                           (MAX_BASE_VECTORS, MAX_DIMENSION))
    if any(sum(column) != 0 for column in zip(*vectors)):
        raise WfsoundError(ERR.invalid_argument, "The vectors must sum to zero.")
    if node_budget is None:
        node_budget = SETTINGS.STEINITZ_NODE_BUDGET

    b = max((norm(v) for v in vectors), default=0)
    order = _reorder(vectors, d * b, node_budget)
    if order is None:
        raise WfsoundError(ERR.internal, "No reordering within d * b.")
    return order


def _prefix_deviation(vectors, permutation, coefficients, z):
    worst = Fraction(0)
    prefix = [0] * len(z)
    for i, index in enumerate(permutation):
        prefix = [a + c for a, c in zip(prefix, vectors[index])]
        deviation = norm([Fraction(a) - coefficients[i] * c for a, c in zip(prefix, z)])
        worst = max(worst, deviation)
    return worst


def steinitz_extended_reorder_small(vectors, d=None, node_budget=None):
    """
    Reorder x_0..x_n, keeping x_0 first, so that the i-th prefix sum stays
    within b * (d + 2) of c_i * z, where z is the total and
    0 <= c_0 <= ... <= c_n.

    The vectors are completed by c = ||z|| copies of -z/c, the completed
    family is reordered by the base search, c_i is read off the position
    s_i of x_i in that order as (s_i - i) / c, and finally x_0 is swapped
    to the front.

    Args:
        vectors: (list) integer vectors x_0..x_n as tuples.
        d: (int) their dimension, taken from the vectors if omitted.
        node_budget: (int) defaults to SETTINGS.STEINITZ_NODE_BUDGET.

    Returns:
        SteinitzResult
    """
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise WfsoundError(ERR.invalid_argument, "At least x_0 is needed.")
    d = _dimension(vectors, d)
    if len(vectors) > MAX_EXTENDED_VECTORS + 1 or d > MAX_DIMENSION:
        raise WfsoundError(ERR.scale_too_large, "At most %s vectors of dimension %s." %
                           (MAX_EXTENDED_VECTORS + 1, MAX_DIMENSION))
    if node_budget is None:
        node_budget = SETTINGS.STEINITZ_NODE_BUDGET

    z = tuple(sum(column) for column in zip(*vectors))
    c = norm(z)
    if c > MAX_EXTENDED_NORM:
        raise WfsoundError(ERR.scale_too_large, "||z|| = %s exceeds %s." % (c, MAX_EXTENDED_NORM))
    b = max(norm(v) for v in vectors)
    size = len(vectors)

    if c == 0:
        order = _reorder(vectors, d * b, node_budget)
        coefficients = [Fraction(0)] * size
    else:
        step = tuple(Fraction(-a, c) for a in z)
        completed = [tuple(Fraction(a) for a in v) for v in vectors] + [step] * c
        full_order = _reorder(completed, d * b, node_budget)
        if full_order is None:
            order = None
        else:
            positions = [s for s, index in enumerate(full_order) if index < size]
            order = [full_order[s] for s in positions]
            coefficients = [Fraction(s - i, c) for i, s in enumerate(positions)]
    if order is None:
        raise WfsoundError(ERR.internal, "No reordering within d * b.")

    first = order.index(0)
    order[0], order[first] = order[first], order[0]

    achieved = _prefix_deviation(vectors, order, coefficients, z)
    bound = b * (d + 2)
    if achieved > bound:
        raise WfsoundError(ERR.internal, "Prefix deviation %s exceeds %s." % (achieved, bound))
    return SteinitzResult(order, coefficients, achieved, bound)
