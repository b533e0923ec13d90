"""
k-soundness by brute force: every marking reachable from i^k can reach f^k.
"""

from wfsound.common.utils.defines import Holds, Reason, CapKind
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.explore.reach_graph import ExploreCaps, build_reach_graph, backward_reachable, path_to
from wfsound.sound.verdict import Verdict, Certificate


def explore_from_initial(wf, k, caps, prop="k-sound"):
    """
    Explore from i^k and check that f^k stays reachable.

    A hit of caps.max_norm gives FALSE with reason ZUnbounded and the
    over-cap marking as certificate; the caller must only set max_norm
    to a value no reachable marking of a sound net exceeds.

    Returns:
        Verdict: with parameters {"k": k, "caps": ...}.
    """
    parameters = {"k": k, "caps": caps.to_dict()}
    graph = build_reach_graph(wf.net, wf.initial_marking(k), caps)

    if graph.caps_hit == CapKind.NORM:
        marking, run = graph.over_cap
        certificate = Certificate(Reason.Z_UNBOUNDED, k=k, run=run, marking=wf.net.marking_dict(marking),
                                  normCap=caps.max_norm)
        verdict = Verdict(prop, Holds.FALSE, certificate, parameters=parameters)
    elif not graph.complete:
        verdict = Verdict(prop, Holds.UNKNOWN, Certificate(Reason.CAP_HIT, k=k), parameters=parameters)
    else:
        finishing = backward_reachable(graph, wf.final_marking(k))
        if len(finishing) == len(graph.vertices):
            verdict = Verdict(prop, Holds.TRUE, parameters=parameters)
        else:
            vertex = min(v for v in range(len(graph.vertices)) if v not in finishing)
            certificate = Certificate(Reason.CANNOT_FINISH, k=k, run=path_to(graph, vertex),
                                      marking=graph.marking_dict(vertex))
            verdict = Verdict(prop, Holds.FALSE, certificate, parameters=parameters)
    verdict.add_vertices(len(graph.vertices))
    verdict.graph = graph
    return verdict


def oracle_k_sound(wf, k, caps=None):
    """
    Decide k-soundness from the explicit reachability graph of i^k.

    Args:
        wf: (WorkflowNet) the net.
        k: (int) k >= 0; every net is 0-sound.
        caps: (ExploreCaps) only max_vertices is used.

    Returns:
        Verdict: UNKNOWN when the graph was truncated.
    """
    if type(k) != int or k < 0:
        raise WfsoundError(ERR.invalid_argument, "k must be >= 0.", data={"k": k})
    if caps is None:
        caps = ExploreCaps()
    caps = ExploreCaps(caps.max_vertices)

    if k == 0:
        return Verdict("k-sound", Holds.TRUE, parameters={"k": 0, "caps": caps.to_dict()})
    return explore_from_initial(wf, k, caps)
