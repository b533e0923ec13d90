"""
A reversible counting net with places s, c, f and b.

From {s:1, c:1} it reaches {f:1, c:1, b:capacity} and back, and nothing
else fires. The net has one transition and its inverse, so its size grows
with log(capacity) only through the arc weight; it stands in for the
doubly exponential counters the reduction would use at scale.
"""

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.petri_net import PetriNet
from wfsound.explore.reach_graph import build_reach_graph


class CountingGadget(object):
    """
    net: (PetriNet) the reversible net.
    s, c, f, b: names of the distinguished places.
    capacity: the number of tokens put into b.
    """
    def __init__(self, net, s, c, f, b, capacity):
        self.net = net
        self.s = s
        self.c = c
        self.f = f
        self.b = b
        self.capacity = capacity

    def start_marking(self):
        return self.net.marking({self.s: 1, self.c: 1})

    def end_marking(self):
        return self.net.marking({self.f: 1, self.c: 1, self.b: self.capacity})


def naive_counting_gadget(capacity):
    """
    Returns:
        CountingGadget: with transitions "count": {s, c} -> {f, c, capacity*b}
            and "uncount", its inverse.
    """
    if type(capacity) != int or capacity < 1:
        raise WfsoundError(ERR.invalid_argument, "The capacity must be >= 1.", data={"capacity": capacity})

    forward_pre = {"s": 1, "c": 1}
    forward_post = {"f": 1, "c": 1, "b": capacity}
    net = PetriNet(["s", "c", "f", "b"], ["count", "uncount"],
                   [forward_pre, forward_post], [forward_post, forward_pre])
    return CountingGadget(net, "s", "c", "f", "b", capacity)


def _below(bound):
    """
    Every marking componentwise below bound, bound excluded.
    """
    markings = [()]
    for limit in bound:
        markings = [m + (v,) for m in markings for v in range(limit + 1)]
    return [m for m in markings if m != tuple(bound)]


def check_counting_properties(gadget, caps=None):
    """
    Evaluate the five properties the reduction relies on, with
    m_n = {s:1, c:1} and m_n' = {f:1, c:1, b:capacity}:

        mutualReach:   m_n and m_n' reach each other;
        finalUnique:   every marking reachable from m_n marking f is m_n';
        startUnique:   every marking reaching m_n' and marking s is m_n;
        deadBelow:     no transition fires in a marking below m_n' with f empty;
        allMarkable:   every place is marked in some marking reachable from m_n.

    Reachability is mutual in a reversible net, so "reaching m_n'" is
    checked as "reachable from m_n'".

    Returns:
        dict: {property: bool}
    """
    net = gadget.net
    start = gadget.start_marking()
    end = gadget.end_marking()
    s = net.place_index(gadget.s)
    f = net.place_index(gadget.f)

    forward = build_reach_graph(net, start, caps)
    backward = build_reach_graph(net, end, caps)
    if not forward.complete or not backward.complete:
        raise WfsoundError(ERR.exceeded, "The gadget's state space exceeds the caps.")

    dead = True
    for m in _below(end):
        if m[f] == 0 and any(True for _ in net.successors(m)):
            dead = False
            break

    return {
        "mutualReach": end in forward.index and start in backward.index,
        "finalUnique": all(m == end for m in forward.vertices if m[f] > 0),
        "startUnique": all(m == start for m in backward.vertices if m[s] > 0),
        "deadBelow": dead,
        "allMarkable": all(any(m[p] > 0 for m in forward.vertices) for p in range(len(net.places))),
    }
