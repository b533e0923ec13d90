"""
Reachability in conservative nets reduced to generalised soundness.

The output is generalised sound iff m reaches m' in the input net.
"""

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.petri_net import PetriNet
from wfsound.net.workflow_net import WorkflowNet, validate_workflow
from wfsound.gadgets.classify import is_conservative
from wfsound.gadgets.reduction import ReductionInstance, NameAllocator, check_marking
from wfsound.utils.logger import logger


def pspace_reduction(net, source, target):
    """
    Add places i, o and r, and the transitions
        t_i: i -> c*r,   t_m: c*r -> m,   t_m': m' -> o,   t_p: p -> r for every p,
    where c is the number of tokens of m.

    Args:
        net: (PetriNet) a conservative net.
        source: ({place: count}) the marking m.
        target: ({place: count}) the marking m'.

    Returns:
        ReductionInstance
    """
    if not is_conservative(net):
        raise WfsoundError(ERR.not_conservative, "The net is not conservative.")
    source = check_marking(net, source)
    target = check_marking(net, target)
    tokens = sum(source.values())
    if tokens != sum(target.values()):
        raise WfsoundError(ERR.sum_mismatch, "m and m' hold %s and %s tokens." % (tokens, sum(target.values())),
                           data={"source": tokens, "target": sum(target.values())})

    names = NameAllocator(net)
    initial = names.take("i")
    final = names.take("o")
    reset = names.take("r")

    pre, post = net.bags()
    transitions = list(net.transitions)
    t_init = names.take("t_i")
    t_source = names.take("t_m")
    t_target = names.take("t_m'")
    transitions += [t_init, t_source, t_target]
    pre += [{initial: 1}, {reset: tokens}, dict(target)]
    post += [{reset: tokens}, dict(source), {final: 1}]
    for place in net.places:
        transitions.append(names.take("t_%s" % place))
        pre.append({place: 1})
        post.append({reset: 1})

    output = PetriNet([initial, reset] + list(net.places) + [final], transitions, pre, post)
    validated = True
    try:
        wf = validate_workflow(output, initial, final)
    except WfsoundError as e:
        logger.log_warn("Reduction output is not a workflow net: %s" % e.describe())
        wf = WorkflowNet(output, initial, final)
        validated = False

    parameters = {"construction": "pspace", "c": tokens, "m": source, "m'": target, "validated": validated}
    return ReductionInstance(wf, {p: p for p in net.places}, {t: t for t in net.transitions}, parameters)
