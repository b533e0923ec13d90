"""
Structural soundness: k-soundness for some k >= 1.
"""

from wfsound.common.utils.defines import Holds, Reason
from wfsound.explore.reach_graph import ExploreCaps
from wfsound.ilp.builders import build_ilp_s, variable_names
from wfsound.ilp.elimination import integral_cone_point
from wfsound.bounds.formulas import bound_structural_K
from wfsound.sound.redundancy import remove_redundant, maximal_trap, covering_run_length
from wfsound.sound.classical import check_k_sound
from wfsound.sound.generalised import check_k_max, disconnected_verdict
from wfsound.sound.verdict import Verdict, Certificate
from wfsound.utils.logger import logger


# covering runs longer than this are reported without the run itself
MAX_CERTIFICATE_RUN = 100000


def trap_threshold(wf):
    """
    The smallest k from which the maximal trap avoiding f can be marked,
    with a run marking it.

    Every k-sound net with k >= this threshold would have to empty a
    marked trap, which is impossible, so only smaller k need a check.

    Returns:
        (int, list, str, set): k, the run (None if too long), the trap
            place it marks and the trap; None when the trap is empty.
    """
    trap = maximal_trap(wf)
    if not trap:
        return None
    if wf.initial in trap:
        return 1, [], wf.initial, trap

    best = None
    for place in wf.places:
        if place not in trap:
            continue
        found = covering_run_length(wf, place, build_run=False)
        if found is not None and (best is None or found[0] < best[0]):
            best = (found[0], found[2], place)
    if best is None:
        return None

    k, length, place = best
    run = None
    if length <= MAX_CERTIFICATE_RUN:
        _, run, _ = covering_run_length(wf, place)
    return k, run, place, trap


def check_structural(wf, k_max=None, constant=None, caps=None):
    """
    Decide structural soundness by scanning k = 1, 2, ... with check_k_sound.

    The scan is cut short by an infeasible structural system, by a trap
    that every run from i^k with large k marks, and by bound_structural_K.

    Returns:
        Verdict: TRUE carries details["smallestK"]. details["firstUnknownK"] is
            the first k left open by a cap.
    """
    k_max = check_k_max(k_max)
    if caps is None:
        caps = ExploreCaps()
    parameters = {"K_max": k_max, "caps": caps.to_dict()}

    reduced, report = remove_redundant(wf)
    if report.disconnected:
        return disconnected_verdict("structural-sound", wf, parameters)

    witness = integral_cone_point(build_ilp_s(reduced))
    if witness is None:
        certificate = Certificate(Reason.NO_INTEGER_WITNESS)
        return Verdict("structural-sound", Holds.FALSE, certificate, parameters=parameters)
    details = {"integerWitness": dict(zip(variable_names(reduced.net), witness))}

    bound = bound_structural_K(reduced, constant)
    parameters["constant"] = bound.constant
    limit = min(k_max, bound.value)
    trap = trap_threshold(reduced)
    if trap is not None:
        limit = min(limit, trap[0] - 1)

    explored = 0
    unknown = False
    for k in range(1, limit + 1):
        step = check_k_sound(reduced, k, caps)
        explored += step.stats["verticesExplored"]
        if step.holds == Holds.TRUE:
            details["smallestK"] = k
            verdict = Verdict("structural-sound", Holds.TRUE, complete=not unknown, parameters=parameters,
                              details=details)
            verdict.add_vertices(explored)
            return verdict
        if step.holds == Holds.UNKNOWN and not unknown:
            unknown = True
            details["firstUnknownK"] = k

    if unknown:
        verdict = Verdict("structural-sound", Holds.UNKNOWN, Certificate(Reason.CAP_HIT),
                          parameters=parameters, details=details)
    elif trap is not None and trap[0] - 1 <= min(k_max, bound.value):
        k, run, place, places = trap
        marking = None
        if run is not None:
            marking = reduced.net.marking_dict(reduced.net.apply_run(reduced.initial_marking(k), run)[0])
        certificate = Certificate(Reason.TRAP, k=k, run=run, marking=marking,
                                  trap=sorted(places), marked=place)
        verdict = Verdict("structural-sound", Holds.FALSE, certificate, parameters=parameters, details=details)
    elif limit == bound.value:
        verdict = Verdict("structural-sound", Holds.FALSE, Certificate(Reason.NO_SOUND_NUMBER, k=limit),
                          parameters=parameters, details=details)
    else:
        logger.log_info("No sound k up to %s; structural soundness left open." % limit)
        verdict = Verdict("structural-sound", Holds.UNKNOWN, Certificate(Reason.CAP_HIT, k=limit),
                          parameters=parameters, details=details)
    verdict.add_vertices(explored)
    return verdict
