"""
Common parts of the hardness constructions.
"""

import json

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.explore.reach_graph import ExploreCaps, build_reach_graph


class ReductionInstance(object):
    """
    The output of a reduction.

    output: (WorkflowNet) the constructed net.
    place_map: {original place: new place}.
    transition_map: {original transition: new transition}.
    parameters: (dict) everything the construction was called with.
    roles: {role: place or transition name} for the places and
        transitions the construction adds.
    """
    def __init__(self, output, place_map, transition_map, parameters, roles=None):
        self.output = output
        self.place_map = place_map
        self.transition_map = transition_map
        self.parameters = parameters
        self.roles = roles or {}

    def embed_run(self, run):
        return [self.transition_map[t] for t in run]

    def header(self):
        """
        The parameters as one line of JSON.
        """
        return json.dumps(self.parameters, sort_keys=True)


class NameAllocator(object):
    """
    Hands out identifiers unused by a net and by each other.
    """
    def __init__(self, net):
        self.used = set(net.places) | set(net.transitions)

    def take(self, base):
        name = base
        count = 1
        while name in self.used:
            name = "%s_%s" % (base, count)
            count += 1
        self.used.add(name)
        return name


def check_marking(net, marking):
    """
    A {place: count} dict naming places of the net with counts >= 0.
    """
    marking = dict(marking)
    for place, count in marking.items():
        if not net.has_place(place):
            raise WfsoundError(ERR.unknown_place, "Unknown place %s." % place, data={"place": place})
        if type(count) != int or count < 0:
            raise WfsoundError(ERR.invalid_weight, "Invalid token count %r." % (count,), data={"place": place})
    return {p: c for p, c in marking.items() if c}


def explicit_reachable(net, source, target, caps=None):
    """
    Reachability by breadth first search.

    Args:
        net: (PetriNet) the net.
        source, target: ({place: count}) markings.
        caps: (ExploreCaps) limits of the search.

    Returns:
        True, False, or None when the search was cut by a cap before
        finding the target.
    """
    if caps is None:
        caps = ExploreCaps()
    start = net.marking(check_marking(net, source))
    goal = net.marking(check_marking(net, target))
    graph = build_reach_graph(net, start, caps)
    if goal in graph.index:
        return True
    if graph.complete:
        return False
    return None
