"""
Karp-Miller coverability trees and quasi-liveness.
"""

from collections import deque

from wfsound.settings import SETTINGS
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.marking import OMEGA, covers
from wfsound.explore.boundedness import decide_boundedness, BoundednessVerdict
from wfsound.explore.reach_graph import build_reach_graph, ExploreCaps
from wfsound.utils.logger import logger


class KarpMillerTree(object):
    """
    A coverability tree. Node markings may contain OMEGA.

    Every marking covered by a node is coverable from the root and every
    coverable marking is covered by some node.
    """
    def __init__(self, net, m0):
        self.net = net
        self.markings = [tuple(m0)]
        self.parent = [None]

    def ancestors(self, node):
        while node is not None:
            yield node
            parent = self.parent[node]
            node = parent[0] if parent else None

    def add_node(self, marking, parent, transition):
        self.markings.append(marking)
        self.parent.append((parent, transition))
        return len(self.markings) - 1

    def covers(self, vector):
        """
        True iff some node covers the vector.
        """
        return any(covers(m, vector) for m in self.markings)

    def has_omega(self):
        return any(OMEGA in m for m in self.markings)


def karp_miller_tree(net, m0, node_cap=None):
    """
    Build the Karp-Miller tree of a net from m0.

    Args:
        net: (PetriNet) the net.
        m0: (tuple) the root marking.
        node_cap: (int) defaults to SETTINGS.KM_NODE_CAP.

    Returns:
        KarpMillerTree
    """
    if node_cap is None:
        node_cap = SETTINGS.KM_NODE_CAP

    tree = KarpMillerTree(net, m0)
    queue = deque([0])
    while queue:
        node = queue.popleft()
        for t, marking in net.successors(tree.markings[node]):
            # accelerate against every strictly dominated ancestor
            values = list(marking)
            for ancestor in tree.ancestors(node):
                previous = tree.markings[ancestor]
                if covers(values, previous):
                    for p, v in enumerate(previous):
                        if v < values[p]:
                            values[p] = OMEGA
            marking = tuple(values)

            if len(tree.markings) >= node_cap:
                raise WfsoundError(ERR.exceeded, "Karp-Miller tree exceeds %s nodes." % node_cap,
                                   data={"cap": node_cap})
            child = tree.add_node(marking, node, t)

            # a node repeating an ancestor is a leaf
            if all(tree.markings[a] != marking for a in tree.ancestors(node)):
                queue.append(child)

    logger.log_debug("Karp-Miller tree with %s nodes." % len(tree.markings))
    return tree


def quasi_liveness(net, m0, method="auto", caps=None):
    """
    For each transition, whether some marking reachable from m0 enables it.

    Args:
        net: (PetriNet) the net.
        m0: (tuple) the initial marking.
        method: (str) "auto" uses the explicit graph when the net is bounded
            and the Karp-Miller tree otherwise; "graph" and "karp_miller"
            force one of them.
        caps: (ExploreCaps) limits of the explicit graph; max_vertices also
            caps the nodes of the Karp-Miller tree, below SETTINGS.KM_NODE_CAP.

    Returns:
        dict: {transition name: bool} in declaration order.
    """
    if caps is None:
        caps = ExploreCaps()

    pres = [net.pre_vector(t) for t in range(len(net.transitions))]

    if method == "auto":
        verdict = decide_boundedness(net, m0, caps.max_vertices)
        if verdict.kind == BoundednessVerdict.EXCEEDED:
            raise WfsoundError(ERR.exceeded, "Quasi-liveness exploration exceeded its cap.")
        method = "graph" if verdict.bounded else "karp_miller"
        graph = verdict.graph
    elif method == "graph":
        graph = build_reach_graph(net, m0, caps)
        if not graph.complete:
            raise WfsoundError(ERR.exceeded, "Quasi-liveness exploration exceeded its cap.",
                               data={"cap": graph.caps_hit})
    elif method != "karp_miller":
        raise WfsoundError(ERR.invalid_argument, "Unknown method %s." % method)

    if method == "graph":
        markings = graph.vertices
    else:
        markings = karp_miller_tree(net, m0, min(caps.max_vertices, SETTINGS.KM_NODE_CAP)).markings

    return {name: any(covers(m, pres[t]) for m in markings) for t, name in enumerate(net.transitions)}
