"""
1-soundness, classical soundness and k-soundness.

A workflow net is 1-sound iff some transition consumes exactly {i:1} and
its short-circuit net is bounded and cyclic from {i:1}. k-soundness reduces
to 1-soundness of the net scaled by k.
"""

from wfsound.common.utils.defines import Holds, Reason, SHORT_CIRCUIT_TRANSITION, \
    SCALED_INITIAL_PLACE, SCALED_FINAL_PLACE, SCALED_INITIAL_TRANSITION, SCALED_FINAL_TRANSITION
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.marking import covers
from wfsound.net.workflow_net import WorkflowNet
from wfsound.explore.reach_graph import ExploreCaps
from wfsound.explore.boundedness import decide_boundedness, BoundednessVerdict
from wfsound.explore.cyclicity import decide_cyclicity
from wfsound.explore.karp_miller import quasi_liveness
from wfsound.sound.verdict import Verdict, Certificate
from wfsound.utils.logger import logger


def short_circuit(wf):
    """
    The net with one more transition moving a token from f back to i.

    Returns:
        (PetriNet, str): the net and the name of the new transition.
    """
    name = wf.net.fresh_name(SHORT_CIRCUIT_TRANSITION)
    net = wf.net.extend(transitions=[(name, {wf.final: 1}, {wf.initial: 1})])
    return net, name


def scale_net(wf, k):
    """
    Add a new initial place i' and final place o' with t_i: i' -> k*i and
    t_o: k*f -> o'. The result is c-sound iff wf is (c * k)-sound.

    Returns:
        WorkflowNet
    """
    if type(k) != int or k < 1:
        raise WfsoundError(ERR.invalid_argument, "The scale factor must be >= 1.", data={"k": k})

    net = wf.net
    initial = net.fresh_name(SCALED_INITIAL_PLACE)
    final = net.fresh_name(SCALED_FINAL_PLACE)
    enter = net.fresh_name(SCALED_INITIAL_TRANSITION)
    leave = net.fresh_name(SCALED_FINAL_TRANSITION)
    scaled = net.extend(places=[initial, final],
                        transitions=[(enter, {initial: 1}, {wf.initial: k}),
                                     (leave, {wf.final: k}, {final: 1})])
    return WorkflowNet(scaled, initial, final, validated=wf.validated)


def _initial_transitions(wf):
    return [t for t, pre in enumerate(wf.net.pre) if pre == ((wf.i_index, 1),)]


def _sc_certificate(reason, net, sc_name, run, marking):
    role = "short-circuit" if sc_name in run else "input"
    return Certificate(reason, k=1, run=run, marking=net.marking_dict(marking), net=role)


def check_1_sound(wf, caps=None):
    """
    Decide 1-soundness.

    Args:
        wf: (WorkflowNet) the net.
        caps: (ExploreCaps) limits on the explored markings.

    Returns:
        Verdict
    """
    if caps is None:
        caps = ExploreCaps()
    parameters = {"k": 1, "caps": caps.to_dict()}

    if not _initial_transitions(wf):
        certificate = Certificate(Reason.NO_INITIAL_TRANSITION, k=1, run=[], marking={wf.initial: 1})
        return Verdict("1-sound", Holds.FALSE, certificate, parameters=parameters)

    sc, sc_name = short_circuit(wf)
    m0 = wf.initial_marking(1)
    bounded = decide_boundedness(sc, m0, caps.max_vertices)
    if bounded.kind == BoundednessVerdict.EXCEEDED:
        verdict = Verdict("1-sound", Holds.UNKNOWN, Certificate(Reason.CAP_HIT, k=1), parameters=parameters)
        verdict.add_vertices(len(bounded.graph.vertices))
        return verdict

    if not bounded.bounded:
        certificate = Certificate(Reason.UNBOUNDED, k=1, run=bounded.prefix + bounded.pump,
                                  marking=sc.marking_dict(bounded.high), net="short-circuit",
                                  prefix=bounded.prefix, pump=bounded.pump,
                                  low=sc.marking_dict(bounded.low), high=sc.marking_dict(bounded.high))
        logger.log_debug("Short-circuit net unbounded: %s." % certificate)
        return Verdict("1-sound", Holds.FALSE, certificate, parameters=parameters)

    cyclic = decide_cyclicity(sc, m0, graph=bounded.graph)
    if not cyclic:
        certificate = _sc_certificate(Reason.NOT_CYCLIC, sc, sc_name, cyclic.run, cyclic.counterexample)
        verdict = Verdict("1-sound", Holds.FALSE, certificate, parameters=parameters)
    else:
        verdict = Verdict("1-sound", Holds.TRUE, parameters=parameters)
    verdict.add_vertices(len(bounded.graph.vertices))
    verdict.graph = bounded.graph
    return verdict


def check_classical(wf, caps=None):
    """
    Decide classical soundness: the short-circuit net is quasi-live,
    bounded and cyclic from {i:1}.

    The verdict's details hold "quasiLive": {transition: bool} when the
    net is bounded.
    """
    if caps is None:
        caps = ExploreCaps()
    parameters = {"caps": caps.to_dict()}

    sc, sc_name = short_circuit(wf)
    m0 = wf.initial_marking(1)
    bounded = decide_boundedness(sc, m0, caps.max_vertices)
    if bounded.kind == BoundednessVerdict.EXCEEDED:
        return Verdict("classical", Holds.UNKNOWN, Certificate(Reason.CAP_HIT, k=1), parameters=parameters)
    if not bounded.bounded:
        certificate = Certificate(Reason.UNBOUNDED, k=1, run=bounded.prefix + bounded.pump,
                                  marking=sc.marking_dict(bounded.high), net="short-circuit",
                                  prefix=bounded.prefix, pump=bounded.pump,
                                  low=sc.marking_dict(bounded.low), high=sc.marking_dict(bounded.high))
        return Verdict("classical", Holds.FALSE, certificate, parameters=parameters)

    graph = bounded.graph
    pres = [sc.pre_vector(t) for t in range(len(sc.transitions))]
    live = {}
    for t, name in enumerate(sc.transitions):
        live[name] = any(covers(m, pres[t]) for m in graph.vertices)
    report = {name: live[name] for name in wf.transitions}

    cyclic = decide_cyclicity(sc, m0, graph=graph)
    if not cyclic:
        certificate = _sc_certificate(Reason.NOT_CYCLIC, sc, sc_name, cyclic.run, cyclic.counterexample)
        verdict = Verdict("classical", Holds.FALSE, certificate, parameters=parameters)
    else:
        dead = [name for name, enabled in report.items() if not enabled]
        if dead:
            certificate = Certificate(Reason.NOT_QUASI_LIVE, k=1, dead=dead)
            verdict = Verdict("classical", Holds.FALSE, certificate, parameters=parameters)
        else:
            verdict = Verdict("classical", Holds.TRUE, parameters=parameters)
    verdict.details["quasiLive"] = report
    verdict.add_vertices(len(graph.vertices))
    return verdict


def quasi_live_report(wf, method="auto", caps=None):
    """
    Quasi-liveness of every transition of the short-circuit net from {i:1}.
    """
    sc, _ = short_circuit(wf)
    return quasi_liveness(sc, wf.initial_marking(1), method, caps)


def _unscale(certificate, wf, scaled, k):
    """
    Express a certificate about scale_net(wf, k) in terms of wf and i^k.
    """
    if certificate is None or certificate.run is None:
        if certificate is not None:
            certificate.k = k
        return certificate

    enter, leave = scaled.transitions[-2], scaled.transitions[-1]
    known = set(wf.transitions) | {enter, leave}
    if certificate.net != "input" or any(t not in known for t in certificate.run):
        certificate.net = "scaled short-circuit"
        certificate.k = k
        certificate.extra["scale"] = k
        return certificate

    marking = {}
    for place in wf.places:
        marking[place] = certificate.marking.get(place, 0)
    marking[wf.initial] += k * certificate.marking.get(scaled.initial, 0)
    marking[wf.final] += k * certificate.marking.get(scaled.final, 0)
    run = [t for t in certificate.run if t not in (enter, leave)]
    return Certificate(certificate.reason, k=k, run=run,
                       marking={p: v for p, v in marking.items() if v}, **certificate.extra)


def check_k_sound(wf, k, caps=None):
    """
    Decide k-soundness through 1-soundness of scale_net(wf, k).

    Certificates are translated back to runs of wf from i^k whenever the
    run does not use the short-circuit transition.
    """
    if type(k) != int or k < 1:
        raise WfsoundError(ERR.invalid_argument, "k must be >= 1.", data={"k": k})

    scaled = scale_net(wf, k)
    verdict = check_1_sound(scaled, caps)
    verdict.property = "k-sound"
    verdict.parameters["k"] = k
    verdict.graph = None
    if verdict.certificate is not None:
        verdict.certificate = _unscale(verdict.certificate, wf, scaled, k)
    return verdict
