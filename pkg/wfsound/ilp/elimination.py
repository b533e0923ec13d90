"""
Exact rational feasibility by Fourier-Motzkin elimination.

Rows stay integral during elimination: combining a row with a positive and
a row with a negative coefficient uses integer multipliers, and every new
row is divided by the gcd of all its entries.
"""

from fractions import Fraction
from math import gcd

from wfsound.settings import SETTINGS
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.utils.logger import logger


def _normalize(row, b):
    divisor = 0
    for a in row:
        divisor = gcd(divisor, a)
    divisor = gcd(divisor, b)
    if divisor > 1:
        return tuple(a // divisor for a in row), b // divisor
    return tuple(row), b


def _pick_variable(rows, remaining):
    """
    The remaining variable whose elimination creates the fewest rows.
    """
    best = None
    best_cost = None
    for j in remaining:
        positive = sum(1 for row, _ in rows if row[j] > 0)
        negative = sum(1 for row, _ in rows if row[j] < 0)
        cost = positive * negative - positive - negative
        if best_cost is None or cost < best_cost:
            best, best_cost = j, cost
    return best


def rational_solution(program, row_cap=None):
    """
    A rational point of A.x >= b, or None if the system has none.

    Args:
        program: (IntegerProgram) the system.
        row_cap: (int) most rows allowed in an intermediate system, defaults
            to SETTINGS.ELIMINATION_ROW_CAP.

    Returns:
        tuple: Fractions, one per variable, or None.
    """
    if row_cap is None:
        row_cap = SETTINGS.ELIMINATION_ROW_CAP

    n = program.n
    rows = set()
    for row, b in zip(program.rows, program.constants):
        if any(row):
            rows.add(_normalize(row, b))
        elif b > 0:
            return None

    steps = []
    remaining = list(range(n))
    while remaining:
        j = _pick_variable(rows, remaining)
        remaining.remove(j)

        positive = [(row, b) for row, b in rows if row[j] > 0]
        negative = [(row, b) for row, b in rows if row[j] < 0]
        steps.append((j, positive, negative))

        new_rows = {(row, b) for row, b in rows if row[j] == 0}
        for p_row, p_b in positive:
            for q_row, q_b in negative:
                p_factor = -q_row[j]
                q_factor = p_row[j]
                row = [p_factor * a + q_factor * c for a, c in zip(p_row, q_row)]
                b = p_factor * p_b + q_factor * q_b
                if any(row):
                    new_rows.add(_normalize(row, b))
                elif b > 0:
                    logger.log_debug("Elimination found 0 >= %s." % b)
                    return None
        if len(new_rows) > row_cap:
            raise WfsoundError(ERR.exceeded, "Variable elimination exceeds %s rows." % row_cap,
                               data={"rows": len(new_rows)})
        rows = new_rows

    # back substitution, the last eliminated variable first
    values = [Fraction(0)] * n
    for j, positive, negative in reversed(steps):
        lower = None
        for row, b in positive:
            rest = sum(a * values[k] for k, a in enumerate(row) if k != j and a)
            bound = Fraction(b - rest, row[j])
            if lower is None or bound > lower:
                lower = bound
        upper = None
        for row, b in negative:
            rest = sum(a * values[k] for k, a in enumerate(row) if k != j and a)
            bound = Fraction(b - rest, row[j])
            if upper is None or bound < upper:
                upper = bound

        if lower is not None:
            values[j] = lower
        elif upper is not None:
            values[j] = min(upper, Fraction(0))
        else:
            values[j] = Fraction(0)

    return tuple(values)


def integral_cone_point(program, row_cap=None):
    """
    An integer point of a system whose constants are all >= 0, or None.

    Scaling a rational point by a factor >= 1 keeps such a system satisfied,
    so clearing denominators gives an integer point.
    """
    if any(b < 0 for b in program.constants):
        raise WfsoundError(ERR.invalid_argument, "Only systems with constants >= 0 can be scaled.")

    point = rational_solution(program, row_cap)
    if point is None:
        return None

    factor = 1
    for value in point:
        factor = factor * value.denominator // gcd(factor, value.denominator)
    result = tuple(int(value * factor) for value in point)
    if not program.is_solution(result):
        raise WfsoundError(ERR.internal, "Scaled point is not a solution.", data={"point": result})
    return result
