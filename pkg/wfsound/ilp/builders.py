"""
The integer programs attached to a workflow net.

Variables are kappa (the number of tokens in i) and one tau_t per
transition t (how often t fires).
"""

from wfsound.ilp.integer_program import IntegerProgram, GE, EQ
from wfsound.ilp.elimination import integral_cone_point


KAPPA = "kappa"


def variable_names(net):
    return [KAPPA] + ["tau_%s" % t for t in net.transitions]


def build_ilp_n(wf):
    """
    The system whose solutions describe the nonnegative markings that are
    reachable from some i^k under integer semantics:

        (1) kappa + sum_t tau_t * effect(t)[i] >= 0
        (2) kappa >= 1
        (3) sum_t tau_t * effect(t)[p] >= 0 for every p != i
        (4) tau_t >= 0

    That is |P| + |T| + 1 rows over |T| + 1 variables.
    """
    net = wf.net
    size = len(net.transitions)
    rows = []
    constants = []
    labels = []

    rows.append([1] + [net.effect[t][wf.i_index] for t in range(size)])
    constants.append(0)
    labels.append("place %s" % wf.initial)

    rows.append([1] + [0] * size)
    constants.append(1)
    labels.append("kappa >= 1")

    for p, place in enumerate(net.places):
        if p == wf.i_index:
            continue
        rows.append([0] + [net.effect[t][p] for t in range(size)])
        constants.append(0)
        labels.append("place %s" % place)

    for t, name in enumerate(net.transitions):
        row = [0] * (size + 1)
        row[t + 1] = 1
        rows.append(row)
        constants.append(0)
        labels.append("tau_%s >= 0" % name)

    return IntegerProgram(variable_names(net), rows, constants, labels=labels)


def build_ilp_s(wf):
    """
    The structural system i^kappa + sum_t tau_t * effect(t) = f^kappa with
    kappa >= 1: 2|P| rows for the equalities, |T| nonnegativity rows and
    one row for kappa, over |T| + 1 variables.
    """
    net = wf.net
    size = len(net.transitions)
    rows = []
    constants = []
    relations = []
    labels = []

    for p, place in enumerate(net.places):
        kappa = (1 if p == wf.i_index else 0) - (1 if p == wf.f_index else 0)
        row = [kappa] + [net.effect[t][p] for t in range(size)]
        rows.append(row)
        rows.append([-a for a in row])
        constants += [0, 0]
        relations += [EQ, EQ]
        labels += ["place %s" % place, ""]

    for t, name in enumerate(net.transitions):
        row = [0] * (size + 1)
        row[t + 1] = 1
        rows.append(row)
        constants.append(0)
        relations.append(GE)
        labels.append("tau_%s >= 0" % name)

    rows.append([1] + [0] * size)
    constants.append(1)
    relations.append(GE)
    labels.append("kappa >= 1")

    return IntegerProgram(variable_names(net), rows, constants, relations, labels)


def marking_of(wf, solution):
    """
    The marking i^kappa + sum_t tau_t * effect(t) described by a solution
    of ILP_N.

    Args:
        wf: (WorkflowNet) the net.
        solution: (Solution or sequence) values of (kappa, tau_1, ...).
    """
    values = solution.values if hasattr(solution, "values") else tuple(solution)
    net = wf.net
    marking = list(wf.initial_marking(values[0]))
    for t, count in enumerate(values[1:]):
        if count:
            for p, d in enumerate(net.effect[t]):
                marking[p] += count * d
    return tuple(marking)


def build_cone(wf):
    """
    The homogeneous cone tau >= 0, sum_t tau_t * effect(t) >= 0 on every
    place, and the sum of all these entries >= 1.
    """
    net = wf.net
    size = len(net.transitions)
    rows = []
    constants = []
    labels = []

    for t, name in enumerate(net.transitions):
        row = [0] * size
        row[t] = 1
        rows.append(row)
        constants.append(0)
        labels.append("tau_%s >= 0" % name)

    for p, place in enumerate(net.places):
        rows.append([net.effect[t][p] for t in range(size)])
        constants.append(0)
        labels.append("place %s" % place)

    rows.append([sum(net.effect[t]) for t in range(size)])
    constants.append(1)
    labels.append("total gain >= 1")

    return IntegerProgram(["tau_%s" % t for t in net.transitions], rows, constants, labels=labels)


def homogeneous_witness(wf):
    """
    A firing count vector tau with a nonnegative, nonzero total effect, or
    None when no such vector exists.

    Returns:
        tuple: tau, one count per transition, or None.
    """
    if not wf.net.transitions:
        return None
    return integral_cone_point(build_cone(wf))
