"""
Explicit bounds used by the soundness procedures.

All values are Python ints, so they are exact however large they get.
Bounds whose formula hides an asymptotic constant are evaluated with a
configurable `constant` and reported with exact=False.
"""

from wfsound.settings import SETTINGS
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.ilp.builders import build_ilp_n, build_ilp_s
from wfsound.ilp.integer_program import slack_extension


class BoundReport(object):
    """
    value: the bound.
    formula: how the value was obtained.
    constant: the constant substituted into O(.) exponents, None if unused.
    exact: True when the formula has no hidden constant.
    """
    def __init__(self, value, formula, constant=None, exact=True):
        self.value = value
        self.formula = formula
        self.constant = constant
        self.exact = exact

    def to_dict(self):
        return {
            "value": str(self.value),
            "formula": self.formula,
            "constant": self.constant,
            "exact": self.exact,
        }

    def __repr__(self):
        digits = len(str(self.value))
        if digits > 30:
            return "BoundReport(<%s digits>, %r)" % (digits, self.formula)
        return "BoundReport(%s, %r)" % (self.value, self.formula)


def _check_k(k):
    if k < 0:
        raise WfsoundError(ERR.invalid_argument, "k must be >= 0.", data={"k": k})


def _check_constant(constant):
    if constant is None:
        constant = SETTINGS.BOUND_CONSTANT
    if type(constant) != int or constant < 1:
        raise WfsoundError(ERR.invalid_argument, "The constant must be a positive integer.",
                           data={"constant": constant})
    return constant


def _placecover(wf):
    return (wf.net.transition_norm() + 2) ** len(wf.net.transitions)


def bound_placecover(wf):
    """
    (||T|| + 2)^|T|: enough tokens in i to mark every nonredundant place.
    """
    return BoundReport(_placecover(wf), "(||T|| + 2)^|T|")


def bound_budget_ell(wf, k):
    """
    (||T|| + 2)^|T| * max(||T||, k) * |P| * (|P| + 2).
    """
    _check_k(k)
    places = len(wf.net.places)
    value = _placecover(wf) * max(wf.net.transition_norm(), k) * places * (places + 2)
    return BoundReport(value, "(||T|| + 2)^|T| * max(||T||, k) * |P| * (|P| + 2)")


def bound_z_norm_cap(wf, k):
    """
    max(||T||, k)^2 * (|P| + 2) * |P|: no marking above this norm is
    reachable from i^k in a net that is bounded under integer semantics.
    """
    _check_k(k)
    places = len(wf.net.places)
    value = max(wf.net.transition_norm(), k) ** 2 * (places + 2) * places
    return BoundReport(value, "max(||T||, k)^2 * (|P| + 2) * |P|")


def small_solution_bound(program, constant=None):
    """
    ||G||^(constant * n' * ceil(log2(n' + 2))) where n' = m + n is the
    number of columns of the slack extension of G.

    Returns:
        int
    """
    constant = _check_constant(constant)
    columns = slack_extension(program).n
    exponent = constant * columns * (columns + 1).bit_length()
    return program.norm() ** exponent


def bound_generalised_K(wf, constant=None):
    """
    c + (||T|| + 2)^|T| * max(||T||, c) * |P| * (|P| + 2), with c the
    small solution bound of ILP_N.
    """
    constant = _check_constant(constant)
    c = small_solution_bound(build_ilp_n(wf), constant)
    places = len(wf.net.places)
    value = c + _placecover(wf) * max(wf.net.transition_norm(), c) * places * (places + 2)
    return BoundReport(value, "c + (||T|| + 2)^|T| * max(||T||, c) * |P| * (|P| + 2), c from ILP_N",
                       constant, exact=False)


def bound_structural_K(wf, constant=None):
    """
    c + (||T|| + 2)^|T|, with c the small solution bound of ILP^s.
    """
    constant = _check_constant(constant)
    c = small_solution_bound(build_ilp_s(wf), constant)
    value = c + _placecover(wf)
    return BoundReport(value, "c + (||T|| + 2)^|T|, c from ILP^s", constant, exact=False)
