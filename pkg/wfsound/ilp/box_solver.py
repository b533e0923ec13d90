"""
Depth-first search for integer solutions inside a box.

Variables are fixed in declaration order, smallest value first, so
solutions come out in lexicographic order. After every assignment the
bounds of the free variables are tightened row by row until nothing
changes.
"""

from wfsound.settings import SETTINGS
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.ilp.integer_program import Solution


def _ceil_div(a, b):
    return -((-a) // b)


def _propagate(rows, lo, hi):
    """
    Tighten lo/hi in place. Returns False when some row cannot be met.
    """
    changed = True
    while changed:
        changed = False
        for row, b in rows:
            best = 0
            for j, a in row:
                best += a * (hi[j] if a > 0 else lo[j])
            if best < b:
                return False

            for j, a in row:
                others = best - a * (hi[j] if a > 0 else lo[j])
                if a > 0:
                    bound = _ceil_div(b - others, a)
                    if bound > lo[j]:
                        lo[j] = bound
                        changed = True
                else:
                    bound = (others - b) // (-a)
                    if bound < hi[j]:
                        hi[j] = bound
                        changed = True
                if lo[j] > hi[j]:
                    return False
    return True


def iter_box_solutions(program, box, node_budget=None):
    """
    Yield every solution with 0 <= x_j <= box_j, in lexicographic order.

    Args:
        program: (IntegerProgram) the system.
        box: (int or list) upper bound per variable, or one bound for all.
        node_budget: (int) search nodes allowed, defaults to SETTINGS.BOX_NODE_BUDGET.
    """
    if node_budget is None:
        node_budget = SETTINGS.BOX_NODE_BUDGET
    if type(box) == int:
        box = [box] * program.n
    if len(box) != program.n or any(v < 0 for v in box):
        raise WfsoundError(ERR.invalid_argument, "The box needs one bound >= 0 per variable.")

    rows = [(tuple((j, a) for j, a in enumerate(row) if a), b)
            for row, b in zip(program.rows, program.constants)]
    nodes = [0]

    def search(depth, lo, hi):
        nodes[0] += 1
        if nodes[0] > node_budget:
            raise WfsoundError(ERR.box_too_large, "Box search exceeds %s nodes." % node_budget,
                               data={"nodes": node_budget})
        if not _propagate(rows, lo, hi):
            return
        if depth == program.n:
            yield Solution(program, lo)
            return
        for value in range(lo[depth], hi[depth] + 1):
            next_lo = list(lo)
            next_hi = list(hi)
            next_lo[depth] = next_hi[depth] = value
            yield from search(depth + 1, next_lo, next_hi)

    yield from search(0, [0] * program.n, list(box))


def solve_box_bounded(program, box, node_budget=None):
    """
    The lexicographically least solution inside the box, or None when the
    box holds no solution.
    """
    for solution in iter_box_solutions(program, box, node_budget):
        return solution
    return None
