"""
Workflow nets: a Petri net with an initial place i and a final place f.
"""

from collections import deque

from wfsound.common.utils.exception import WfsoundError, ERR


class WorkflowNet(object):
    """
    A Petri net with designated initial and final places.

    Use validate_workflow() to build a checked instance. Nets built with
    validated=False (e.g. after redundant places were removed) may break
    the path condition.
    """
    def __init__(self, net, initial, final, validated=False):
        self.net = net
        self.initial = initial
        self.final = final
        self.validated = validated
        self.i_index = net.place_index(initial)
        self.f_index = net.place_index(final)

    @property
    def places(self):
        return self.net.places

    @property
    def transitions(self):
        return self.net.transitions

    def initial_marking(self, k=1):
        """
        The marking i^k.
        """
        values = [0] * len(self.net.places)
        values[self.i_index] = k
        return tuple(values)

    def final_marking(self, k=1):
        """
        The marking f^k.
        """
        values = [0] * len(self.net.places)
        values[self.f_index] = k
        return tuple(values)

    def __eq__(self, other):
        return isinstance(other, WorkflowNet) and \
            (self.net, self.initial, self.final) == (other.net, other.initial, other.final)

    def __hash__(self):
        return hash((self.net, self.initial, self.final))

    def __repr__(self):
        return "WorkflowNet(%r, initial=%s, final=%s)" % (self.net, self.initial, self.final)


def _graph_reach(start, edges):
    seen = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for succ in edges.get(node, ()):
            if succ not in seen:
                seen.add(succ)
                queue.append(succ)
    return seen


def underlying_graph(net):
    """
    The flow relation as adjacency lists over node names, forwards and
    backwards.
    """
    forward = {}
    backward = {}
    for t, name in enumerate(net.transitions):
        for p, _ in net.pre[t]:
            forward.setdefault(net.places[p], []).append(name)
            backward.setdefault(name, []).append(net.places[p])
        for p, _ in net.post[t]:
            forward.setdefault(name, []).append(net.places[p])
            backward.setdefault(net.places[p], []).append(name)
    return forward, backward


def validate_workflow(net, initial, final):
    """
    Check the workflow conditions and wrap the net.

    Args:
        net: (PetriNet) the net.
        initial: (str) the initial place i.
        final: (str) the final place f.

    Returns:
        WorkflowNet
    """
    if initial == final:
        raise WfsoundError(ERR.invalid_argument, "Initial and final place must differ.",
                           data={"place": initial})
    i = net.place_index(initial)
    f = net.place_index(final)

    for t, name in enumerate(net.transitions):
        if any(p == i for p, _ in net.post[t]):
            raise WfsoundError(ERR.produces_into_initial, "Transition %s produces into %s." % (name, initial),
                               data={"transition": name})
        if any(p == f for p, _ in net.pre[t]):
            raise WfsoundError(ERR.consumes_from_final, "Transition %s consumes from %s." % (name, final),
                               data={"transition": name})

    forward, backward = underlying_graph(net)
    from_initial = _graph_reach(initial, forward)
    to_final = _graph_reach(final, backward)
    for node in net.places + net.transitions:
        if node not in from_initial or node not in to_final:
            raise WfsoundError(ERR.not_on_path, "%s is not on a path from %s to %s." % (node, initial, final),
                               data={"node": node})

    return WorkflowNet(net, initial, final, validated=True)
