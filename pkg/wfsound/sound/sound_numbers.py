"""
The set of sound numbers.

The k for which a net is k-sound are closed under subtraction with positive
results, so they are {i * p : 1 <= i < k_limit} for the smallest sound p and
some k_limit that may be infinite.
"""

from wfsound.common.utils.defines import Holds, Reason
from wfsound.explore.reach_graph import ExploreCaps
from wfsound.sound.classical import scale_net, check_k_sound
from wfsound.sound.generalised import check_generalised, check_k_max
from wfsound.sound.structural import check_structural
from wfsound.sound.verdict import SoundNums
from wfsound.utils.logger import logger


def _first_unsound_multiple(scaled, k_max, caps):
    """
    Scan c = 1..k_max with the 1-soundness route, for nets where the
    generalised pipeline stops early.

    Returns:
        (int, int): the first unsound c and the first c a cap left open,
            each None when there is none.
    """
    open_from = None
    for c in range(1, k_max + 1):
        step = check_k_sound(scaled, c, caps)
        if step.holds == Holds.FALSE:
            return c, open_from
        if step.holds == Holds.UNKNOWN and open_from is None:
            open_from = c
    return None, open_from


def _structural_exact_up_to(structural):
    """
    The largest n with every k <= n decided by the structural scan, None
    when the scan has no gap.
    """
    if structural.complete:
        return None
    if "firstUnknownK" in structural.details:
        return structural.details["firstUnknownK"] - 1
    return structural.certificate.k


def _numbers(p, k_limit, exact_up_to, structural_exact, checked_up_to=None):
    if structural_exact is not None:
        exact_up_to = structural_exact if exact_up_to is None else min(exact_up_to, structural_exact)
    return SoundNums(p, k_limit, complete=exact_up_to is None, checked_up_to=checked_up_to,
                     exact_up_to=exact_up_to)


def compute_sound_numbers(wf, k_max=None, constant=None, caps=None):
    """
    Compute p and k_limit.

    Non-multiples of the smallest sound number are unsound, so when the
    multiples c * p are decided for c < m the set is exact below m * p.

    Args:
        wf: (WorkflowNet) the net.
        k_max: (int) largest k tried for p, and largest multiple tried for k_limit.
        constant: (int) constant of the small solution bounds.
        caps: (ExploreCaps) exploration limits.

    Returns:
        SoundNums
    """
    k_max = check_k_max(k_max)
    if caps is None:
        caps = ExploreCaps()

    structural = check_structural(wf, k_max, constant, caps)
    structural_exact = _structural_exact_up_to(structural)
    if structural.holds == Holds.FALSE:
        return SoundNums(0, 0)
    if structural.holds == Holds.UNKNOWN:
        return _numbers(0, 0, None, structural_exact, checked_up_to=k_max)

    p = structural.details["smallestK"]
    scaled = scale_net(wf, p)
    verdict = check_generalised(scaled, k_max, constant, caps)

    if verdict.holds == Holds.TRUE:
        if verdict.complete:
            return _numbers(p, None, None, structural_exact)
        checked = verdict.details["checkedUpTo"]
        return _numbers(p, None, (checked + 1) * p - 1, structural_exact, checked_up_to=checked)

    if verdict.holds == Holds.FALSE and verdict.certificate.reason != Reason.Z_UNBOUNDED:
        return _numbers(p, verdict.certificate.k, None, structural_exact)

    if verdict.holds == Holds.FALSE and verdict.certificate.reason == Reason.Z_UNBOUNDED:
        logger.log_debug("Scaled net has a nonnegative effect; scanning multiples explicitly.")
        c, open_from = _first_unsound_multiple(scaled, k_max, caps)
        exact = None if open_from is None else open_from * p - 1
        if c is not None:
            return _numbers(p, c, exact, structural_exact)
        if exact is None:
            exact = (k_max + 1) * p - 1
        return _numbers(p, None, exact, structural_exact, checked_up_to=k_max)

    c = verdict.parameters["k"]
    logger.log_info("Multiple %s of %s left open by a cap." % (c, p))
    return _numbers(p, None, c * p - 1, structural_exact, checked_up_to=c - 1)
