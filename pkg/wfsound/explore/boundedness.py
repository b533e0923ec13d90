"""
Boundedness of a net from a marking.

The search is the Karp-Miller construction stopped at its first
acceleration: markings are explored breadth first, and a new marking that
strictly dominates a marking on its path from the root proves the net
unbounded with a concrete pumping witness. If no acceleration ever happens
the explored graph is finite and complete.
"""

from collections import deque

from wfsound.settings import SETTINGS
from wfsound.common.utils.defines import CapKind
from wfsound.net.marking import strictly_above
from wfsound.explore.reach_graph import ReachGraph, path_to
from wfsound.utils.logger import logger


class BoundednessVerdict(object):
    """
    Result of decide_boundedness.

    kind: BOUNDED, UNBOUNDED or EXCEEDED.
    bound: componentwise maximum over all reachable markings (BOUNDED).
    prefix, pump: runs with m0 -prefix-> low -pump-> high and low < high (UNBOUNDED).
    graph: the complete reachability graph (BOUNDED).
    """
    BOUNDED = "Bounded"
    UNBOUNDED = "Unbounded"
    EXCEEDED = "Exceeded"

    def __init__(self, kind, bound=None, prefix=None, pump=None, low=None, high=None, graph=None):
        self.kind = kind
        self.bound = bound
        self.prefix = prefix
        self.pump = pump
        self.low = low
        self.high = high
        self.graph = graph

    @property
    def bounded(self):
        return self.kind == self.BOUNDED

    def __repr__(self):
        if self.kind == self.BOUNDED:
            return "BoundednessVerdict(Bounded, bound=%s)" % (self.bound,)
        if self.kind == self.UNBOUNDED:
            return "BoundednessVerdict(Unbounded, prefix=%s, pump=%s)" % (self.prefix, self.pump)
        return "BoundednessVerdict(Exceeded)"


def _dominated_ancestor(graph, vertex, marking):
    """
    The first ancestor of a new child of vertex that the child's marking
    strictly dominates, or None.
    """
    current = vertex
    while current is not None:
        if strictly_above(marking, graph.vertices[current]):
            return current
        parent = graph.parent[current]
        current = parent[0] if parent else None
    return None


def decide_boundedness(net, m0, node_cap=None):
    """
    Decide whether the markings reachable from m0 are bounded.

    Args:
        net: (PetriNet) the net.
        m0: (tuple) the initial marking.
        node_cap: (int) markings stored before giving up, defaults to SETTINGS.KM_NODE_CAP.

    Returns:
        BoundednessVerdict
    """
    if node_cap is None:
        node_cap = SETTINGS.KM_NODE_CAP

    graph = ReachGraph(net, tuple(m0))
    queue = deque([0])
    while queue:
        source = queue.popleft()
        for t, marking in net.successors(graph.vertices[source]):
            target = graph.index.get(marking)
            if target is None:
                ancestor = _dominated_ancestor(graph, source, marking)
                if ancestor is not None:
                    run = path_to(graph, source) + [net.transitions[t]]
                    prefix = path_to(graph, ancestor)
                    pump = run[len(prefix):]
                    logger.log_debug("Unbounded: %s pumps %s." % (pump, net.marking_dict(graph.vertices[ancestor])))
                    return BoundednessVerdict(BoundednessVerdict.UNBOUNDED, prefix=prefix, pump=pump,
                                              low=graph.vertices[ancestor], high=marking)
                if len(graph.vertices) >= node_cap:
                    graph.caps_hit = CapKind.TREE_NODES
                    logger.log_warn("Boundedness check stopped after %s markings." % len(graph.vertices))
                    return BoundednessVerdict(BoundednessVerdict.EXCEEDED, graph=graph)
                target = graph.add_vertex(marking, source, t)
                queue.append(target)
            graph.add_edge(source, t, target)

    bound = tuple(max(values) for values in zip(*graph.vertices)) if net.places else ()
    return BoundednessVerdict(BoundednessVerdict.BOUNDED, bound=bound, graph=graph)
