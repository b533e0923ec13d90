"""
Generalised soundness: k-soundness for every k >= 1.

After removing redundant places, a net with a nonnegative nonzero integer
effect is unsound for some k. Otherwise reachable markings from i^k have
norm at most bound_z_norm_cap(k), and it is enough to check every k up to
bound_generalised_K.
"""

from wfsound.settings import SETTINGS
from wfsound.common.utils.defines import Holds, Reason
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.explore.reach_graph import ExploreCaps
from wfsound.ilp.builders import homogeneous_witness
from wfsound.bounds.formulas import bound_generalised_K, bound_z_norm_cap
from wfsound.sound.redundancy import remove_redundant
from wfsound.sound.oracle import explore_from_initial
from wfsound.sound.verdict import Verdict, Certificate
from wfsound.utils.logger import logger


def check_k_max(k_max):
    if k_max is None:
        k_max = SETTINGS.K_MAX
    if type(k_max) != int or k_max < 1:
        raise WfsoundError(ERR.invalid_argument, "K_max must be >= 1.", data={"K_max": k_max})
    return k_max


def disconnected_verdict(prop, wf, parameters):
    certificate = Certificate(Reason.DISCONNECTED, k=1, run=[], marking={wf.initial: 1})
    return Verdict(prop, Holds.FALSE, certificate, parameters=parameters)


def z_unbounded_certificate(wf, tau):
    """
    A firing count vector with a nonnegative nonzero effect.
    """
    counts = {name: count for name, count in zip(wf.transitions, tau) if count}
    effect = [0] * len(wf.places)
    for t, count in enumerate(tau):
        for p, d in enumerate(wf.net.effect[t]):
            effect[p] += count * d
    return Certificate(Reason.Z_UNBOUNDED, tau=counts,
                       effect={wf.places[p]: v for p, v in enumerate(effect) if v})


def check_generalised(wf, k_max=None, constant=None, caps=None):
    """
    Decide generalised soundness up to k_max.

    Args:
        wf: (WorkflowNet) the net.
        k_max: (int) largest k explored, defaults to SETTINGS.K_MAX.
        constant: (int) constant of the small solution bound.
        caps: (ExploreCaps) max_vertices for each exploration.

    Returns:
        Verdict: TRUE with complete=False when k_max is below the theoretical bound.
    """
    k_max = check_k_max(k_max)
    if caps is None:
        caps = ExploreCaps()
    parameters = {"K_max": k_max, "caps": caps.to_dict()}

    reduced, report = remove_redundant(wf)
    if report.disconnected:
        return disconnected_verdict("generalised-sound", wf, parameters)

    tau = homogeneous_witness(reduced)
    if tau is not None:
        logger.log_debug("Nonnegative integer effect found: %s." % (tau,))
        return Verdict("generalised-sound", Holds.FALSE, z_unbounded_certificate(reduced, tau),
                       parameters=parameters)

    bound = bound_generalised_K(reduced, constant)
    parameters["constant"] = bound.constant
    limit = min(k_max, bound.value)
    explored = 0
    for k in range(1, limit + 1):
        cap = bound_z_norm_cap(reduced, k).value
        step = explore_from_initial(reduced, k, caps.with_norm(cap), "generalised-sound")
        explored += step.stats["verticesExplored"]
        if step.holds != Holds.TRUE:
            step.parameters = dict(parameters, k=k)
            step.stats["verticesExplored"] = explored
            step.graph = None
            return step

    verdict = Verdict("generalised-sound", Holds.TRUE, complete=limit == bound.value, parameters=parameters)
    verdict.add_vertices(explored)
    verdict.details["checkedUpTo"] = limit
    if not verdict.complete:
        logger.log_info("Generalised soundness checked up to k = %s only." % limit)
    return verdict
