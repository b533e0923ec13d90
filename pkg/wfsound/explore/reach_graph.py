"""
Explicit reachability graphs.

Markings are explored breadth first with children in transition declaration
order, so vertex indices are deterministic and parent pointers give shortest
runs.
"""

from collections import deque

from wfsound.settings import SETTINGS
from wfsound.common.utils.defines import CapKind
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.marking import norm
from wfsound.utils.logger import logger


class ExploreCaps(object):
    """
    Limits of an explicit exploration.
    """
    def __init__(self, max_vertices=None, max_norm=None):
        """
        Args:
            max_vertices: (int) number of stored markings, defaults to SETTINGS.MAX_VERTICES.
            max_norm: (int) largest token count allowed in any place, optional.
        """
        if max_vertices is None:
            max_vertices = SETTINGS.MAX_VERTICES
        if max_vertices < 1:
            raise WfsoundError(ERR.invalid_argument, "max_vertices must be at least 1.")
        self.max_vertices = max_vertices
        self.max_norm = max_norm

    def with_norm(self, max_norm):
        return ExploreCaps(self.max_vertices, max_norm)

    def to_dict(self):
        return {"maxVertices": self.max_vertices, "maxNorm": self.max_norm}


class ReachGraph(object):
    """
    A finite explicit state graph.

    vertices: markings, the root is vertex 0.
    edges: (source, transition index, target) triples in discovery order.
    caps_hit: None, or the CapKind that stopped the exploration.
    over_cap: (marking, run) of the first marking above max_norm, if any.
    """
    def __init__(self, net, root):
        self.net = net
        self.vertices = [root]
        self.index = {root: 0}
        self.edges = []
        self.out_edges = [[]]
        self.parent = [None]
        self.caps_hit = None
        self.over_cap = None

    @property
    def root(self):
        return 0

    @property
    def complete(self):
        return self.caps_hit is None

    def add_vertex(self, marking, parent, transition):
        index = len(self.vertices)
        self.vertices.append(marking)
        self.index[marking] = index
        self.out_edges.append([])
        self.parent.append((parent, transition))
        return index

    def add_edge(self, source, transition, target):
        self.edges.append((source, transition, target))
        self.out_edges[source].append((transition, target))

    def marking_dict(self, vertex):
        return self.net.marking_dict(self.vertices[vertex])


def build_reach_graph(net, m0, caps=None):
    """
    Explore every marking reachable from m0.

    Args:
        net: (PetriNet) the net.
        m0: (tuple) the initial marking.
        caps: (ExploreCaps) exploration limits.

    Returns:
        ReachGraph: complete unless caps_hit is set.
    """
    if caps is None:
        caps = ExploreCaps()

    graph = ReachGraph(net, tuple(m0))
    queue = deque([0])
    while queue:
        source = queue.popleft()
        for t, marking in net.successors(graph.vertices[source]):
            target = graph.index.get(marking)
            if target is None:
                if caps.max_norm is not None and norm(marking) > caps.max_norm:
                    graph.caps_hit = CapKind.NORM
                    graph.over_cap = (marking, path_to(graph, source) + [net.transitions[t]])
                    logger.log_warn("Exploration stopped: marking %s exceeds the norm cap %s." %
                                    (net.marking_dict(marking), caps.max_norm))
                    return graph
                if len(graph.vertices) >= caps.max_vertices:
                    graph.caps_hit = CapKind.VERTICES
                    logger.log_warn("Exploration stopped after %s markings." % len(graph.vertices))
                    return graph
                target = graph.add_vertex(marking, source, t)
                queue.append(target)
            graph.add_edge(source, t, target)

    logger.log_debug("Explored %s markings and %s edges." % (len(graph.vertices), len(graph.edges)))
    return graph


def path_to(graph, vertex):
    """
    The shortest run from the root to a vertex, as transition names.
    """
    run = []
    while graph.parent[vertex] is not None:
        vertex, t = graph.parent[vertex]
        run.append(graph.net.transitions[t])
    run.reverse()
    return run


def _target_test(targets):
    if callable(targets):
        return targets
    if isinstance(targets, tuple) and (not targets or not isinstance(targets[0], tuple)):
        return lambda m: m == targets
    target_set = set(targets)
    return lambda m: m in target_set


def backward_reachable(graph, targets):
    """
    The vertices from which some target vertex is reachable.

    Args:
        graph: (ReachGraph) a complete graph.
        targets: a marking, a collection of markings or a predicate on markings.

    Returns:
        set: vertex indices.
    """
    if not graph.complete:
        raise WfsoundError(ERR.incomplete_graph, "The reachability graph was truncated by a cap.",
                           data={"cap": graph.caps_hit})

    is_target = _target_test(targets)
    predecessors = [[] for _ in graph.vertices]
    for source, _, target in graph.edges:
        predecessors[target].append(source)

    result = {v for v, m in enumerate(graph.vertices) if is_target(m)}
    queue = deque(result)
    while queue:
        vertex = queue.popleft()
        for source in predecessors[vertex]:
            if source not in result:
                result.add(source)
                queue.append(source)
    return result


def export_edge_list(graph):
    """
    The graph as text: one "source transition target" line per edge,
    preceded by comment lines describing the vertices.
    """
    lines = []
    for index, marking in enumerate(graph.vertices):
        lines.append("# %s %s" % (index, graph.net.marking_dict(marking)))
    if graph.caps_hit:
        lines.append("# incomplete: %s" % graph.caps_hit.value)
    for source, t, target in graph.edges:
        lines.append("%s %s %s" % (source, graph.net.transitions[t], target))
    return "\n".join(lines) + "\n"
