"""
Cyclicity: every marking reachable from m0 can reach m0 back.
"""

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.explore.reach_graph import build_reach_graph, path_to
from wfsound.explore.scc import strongly_connected_components


class CyclicityResult(object):
    """
    cyclic: (bool)
    counterexample: a reachable marking that cannot reach the root, or None.
    run: the shortest run from the root to the counterexample.
    """
    def __init__(self, cyclic, counterexample=None, run=None):
        self.cyclic = cyclic
        self.counterexample = counterexample
        self.run = run

    def __bool__(self):
        return self.cyclic


def decide_cyclicity(net, m0, caps=None, graph=None):
    """
    Decide cyclicity of a net that is bounded from m0.

    Args:
        net: (PetriNet) the net.
        m0: (tuple) the root marking.
        caps: (ExploreCaps) limits used when the graph has to be built.
        graph: (ReachGraph) an already explored graph from m0, optional.

    Returns:
        CyclicityResult
    """
    if graph is None:
        graph = build_reach_graph(net, m0, caps)
    if not graph.complete:
        raise WfsoundError(ERR.not_bounded, "Cyclicity needs the complete reachability graph.",
                           data={"cap": graph.caps_hit})

    components = strongly_connected_components(graph)
    root_component = next(c for c in components if graph.root in c)
    if len(root_component) == len(graph.vertices):
        return CyclicityResult(True)

    vertex = min(v for v in range(len(graph.vertices)) if v not in root_component)
    return CyclicityResult(False, graph.vertices[vertex], path_to(graph, vertex))
