"""
Redundant places and covering runs.

A place is nonredundant when some marking reachable from some i^k puts a
token on it. Saturation from {i} finds exactly those places: a transition
whose pre support is already markable can be fired often enough to mark its
whole post support.
"""

from wfsound.net.workflow_net import WorkflowNet
from wfsound.utils.logger import logger


class RemovalReport(object):
    """
    removed_places / removed_transitions: names, in declaration order.
    disconnected: True when the final place is redundant.
    """
    def __init__(self, removed_places, removed_transitions, disconnected):
        self.removed_places = removed_places
        self.removed_transitions = removed_transitions
        self.disconnected = disconnected

    def to_dict(self):
        return {
            "removedPlaces": list(self.removed_places),
            "removedTransitions": list(self.removed_transitions),
            "disconnected": self.disconnected,
        }


def saturation_order(wf):
    """
    The transitions that enlarge the set of markable places, in the order
    saturation applies them, and the final set.

    Returns:
        (list, set): transition indices and place indices.
    """
    net = wf.net
    markable = {wf.i_index}
    order = []
    progress = True
    while progress:
        progress = False
        for t in range(len(net.transitions)):
            if all(p in markable for p, _ in net.pre[t]):
                new = {p for p, _ in net.post[t]} - markable
                if new:
                    markable |= new
                    order.append(t)
                    progress = True
                    break
    return order, markable


def nonredundant_saturation(wf):
    """
    The nonredundant places of a workflow net.

    Returns:
        set: place names.
    """
    _, markable = saturation_order(wf)
    return {wf.net.places[p] for p in markable}


def remove_redundant(wf):
    """
    Delete every redundant place and every transition consuming from one.
    The initial and final places are always kept.

    Returns:
        (WorkflowNet, RemovalReport)
    """
    net = wf.net
    _, markable = saturation_order(wf)
    keep_places = [p for i, p in enumerate(net.places) if i in markable or i in (wf.i_index, wf.f_index)]
    keep_transitions = [name for t, name in enumerate(net.transitions)
                        if all(p in markable for p, _ in net.pre[t])]

    removed_places = [p for p in net.places if p not in keep_places]
    removed_transitions = [t for t in net.transitions if t not in keep_transitions]
    disconnected = wf.f_index not in markable

    if removed_places or removed_transitions:
        logger.log_debug("Removed redundant places %s and transitions %s." % (removed_places, removed_transitions))
        reduced = WorkflowNet(net.restrict(keep_places, keep_transitions), wf.initial, wf.final)
    else:
        reduced = wf
    return reduced, RemovalReport(removed_places, removed_transitions, disconnected)


def covering_run_length(wf, place, build_run=True):
    """
    A number k and a run from i^k marking the place.

    The run follows the saturation order t_1, ..., t_j where t_j is the
    first transition producing into the place: pi_1 = t_1 with
    k_1 = ||T||, and pi_j = pi_(j-1) repeated ||T|| + 1 times followed by t_j,
    with k_j = (k_(j-1) + 1) * (||T|| + 1). Every repetition leaves a token
    on each place marked so far, so t_j finds at least ||T|| tokens on its
    inputs.

    Args:
        wf: (WorkflowNet) the net.
        place: (str) a nonredundant place.
        build_run: (bool) when False only k and the run length are computed.

    Returns:
        (int, list, int): k, the run (None unless built) and its length;
            None if the place is redundant.
    """
    net = wf.net
    p = net.place_index(place)
    if p == wf.i_index:
        return 1, [], 0

    order, markable = saturation_order(wf)
    if p not in markable:
        return None

    norm = net.transition_norm()
    k = None
    run = [] if build_run else None
    length = 0
    for t in order:
        if k is None:
            k = norm
            length = 1
            if build_run:
                run = [net.transitions[t]]
        else:
            k = (k + 1) * (norm + 1)
            length = length * (norm + 1) + 1
            if build_run:
                run = run * (norm + 1) + [net.transitions[t]]
        if any(q == p for q, _ in net.post[t]):
            break
    return k, run, length


def covering_run(wf, place):
    """
    (k, run) with i^k -run-> m and m[place] >= 1, or None for a redundant place.
    """
    result = covering_run_length(wf, place)
    if result is None:
        return None
    k, run, _ = result
    return k, run


def maximal_trap(wf):
    """
    The largest set Q of places, f excluded, such that every transition
    consuming from Q also produces into Q. A marked trap stays marked.

    Returns:
        set: place names, possibly empty.
    """
    net = wf.net
    trap = {p for p in range(len(net.places)) if p != wf.f_index}
    changed = True
    while changed:
        changed = False
        for t in range(len(net.transitions)):
            if any(q in trap for q, _ in net.post[t]):
                continue
            consumed = {p for p, _ in net.pre[t]} & trap
            if consumed:
                trap -= consumed
                changed = True
    return {net.places[p] for p in trap}
