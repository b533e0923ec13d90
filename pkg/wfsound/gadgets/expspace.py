"""
Reachability in reversible nets reduced to classical soundness.

Every original place p gets a budget place p_bar, and most of the time
p + p_bar equals the counter capacity c_n. Two counting gadgets, sharing
their place b, fill and empty the budgets; the copy marked "_h" empties
them at the end of a run.

The output is 1-sound iff m reaches m' in the input net, provided c_n
bounds the token counts of some witness run.
"""

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.petri_net import PetriNet
from wfsound.net.workflow_net import WorkflowNet, validate_workflow
from wfsound.explore.reach_graph import ExploreCaps, build_reach_graph
from wfsound.gadgets.classify import is_reversible
from wfsound.gadgets.counting import naive_counting_gadget
from wfsound.gadgets.reduction import ReductionInstance, NameAllocator, check_marking
from wfsound.utils.logger import logger


EXTRA_PLACES = ("p_start", "p_inProgress", "p_cover", "p_simple", "p_canFire")


def expspace_reduction(net, source, target, capacity):
    """
    Build the workflow net.

    Args:
        net: (PetriNet) a reversible net.
        source: ({place: count}) the marking m.
        target: ({place: count}) the marking m'.
        capacity: (int) c_n, the budget per place.

    Returns:
        ReductionInstance: roles name the added places and transitions.
    """
    reversible, _ = is_reversible(net)
    if not reversible:
        raise WfsoundError(ERR.not_reversible, "The net is not reversible.")
    source = check_marking(net, source)
    target = check_marking(net, target)
    gadget = naive_counting_gadget(capacity)

    names = NameAllocator(net)
    roles = {"i": names.take("i"), "o": names.take("o")}
    budget = {p: names.take("%s_bar" % p) for p in net.places}
    for role in EXTRA_PLACES:
        roles[role] = names.take(role)
    first = {p: names.take(p) for p in ("s", "c", "f")}
    second = {p: names.take("%s_h" % p) for p in ("s", "c", "f")}
    roles["b"] = first["b"] = second["b"] = names.take("b")
    for p in ("s", "c", "f"):
        roles[p] = first[p]
        roles[p + "_h"] = second[p]

    size = max([w for bags in (net.pre, net.post) for bag in bags for _, w in bag], default=0) + 1
    can_fire = roles["p_canFire"]

    transitions = []
    pre = []
    post = []

    def add(role, t_pre, t_post):
        name = names.take(role)
        transitions.append(name)
        pre.append(t_pre)
        post.append(t_post)
        return name

    # originals, mirrored on the budget places
    transition_map = {}
    for t, name in enumerate(net.transitions):
        t_pre = net.pre_dict(t)
        t_post = net.post_dict(t)
        mirrored_pre = dict(t_pre)
        mirrored_post = dict(t_post)
        for p, w in t_post.items():
            mirrored_pre[budget[p]] = w
        for p, w in t_pre.items():
            mirrored_post[budget[p]] = w
        mirrored_pre[can_fire] = 1
        mirrored_post[can_fire] = 1
        transition_map[name] = add(name, mirrored_pre, mirrored_post)

    # two gadget copies where every budget place behaves as b
    for suffix, copy in (("", first), ("_h", second)):
        for t, name in enumerate(gadget.net.transitions):
            g_pre = gadget.net.pre_dict(t)
            g_post = gadget.net.post_dict(t)
            copy_pre = {copy[p]: w for p, w in g_pre.items()}
            copy_post = {copy[p]: w for p, w in g_post.items()}
            for p in net.places:
                if g_pre.get("b"):
                    copy_pre[budget[p]] = g_pre["b"]
                if g_post.get("b"):
                    copy_post[budget[p]] = g_post["b"]
            roles[name + suffix] = add(name + suffix, copy_pre, copy_post)

    in_progress = roles["p_inProgress"]
    cover = roles["p_cover"]
    target_pre = dict(target)
    target_pre.update({in_progress: 1, can_fire: 1})
    target_post = {budget[p]: w for p, w in target.items()}
    target_post[cover] = 1
    source_pre = {budget[p]: w for p, w in source.items()}
    source_pre[roles["p_start"]] = 1
    source_post = dict(source)
    source_post.update({in_progress: 1, can_fire: 1})
    simple_bags = {}
    for p in net.places:
        simple_bags[p] = size
        simple_bags[budget[p]] = size

    roles["t_hard"] = add("t_hard", {roles["i"]: 1}, {first["s"]: 1, first["c"]: 1})
    roles["t_start"] = add("t_start", {first["f"]: 1, first["c"]: 1}, {roles["p_start"]: 1})
    roles["t_m"] = add("t_m", source_pre, source_post)
    roles["t_m'"] = add("t_m'", target_pre, target_post)
    roles["t_m'_inv"] = add("t_m'_inv", target_post, target_pre)
    roles["t_reach"] = add("t_reach", {cover: 1}, {second["f"]: 1, second["c"]: 1})
    roles["t_reach_inv"] = add("t_reach_inv", {second["f"]: 1, second["c"]: 1}, {cover: 1})
    roles["t_end"] = add("t_end", {second["s"]: 1, second["c"]: 1}, {roles["o"]: 1})
    roles["t_simple"] = add("t_simple", {roles["i"]: 1},
                            dict(simple_bags, **{roles["p_simple"]: 1, can_fire: 1}))
    roles["t_simple2"] = add("t_simple2", dict(simple_bags, **{roles["p_simple"]: 1, can_fire: 1}),
                             {roles["o"]: 1})

    places = [roles["i"]] + list(net.places) + [budget[p] for p in net.places] + \
        [roles[p] for p in EXTRA_PLACES] + [first["s"], first["c"], first["f"],
                                            second["s"], second["c"], second["f"], roles["b"], roles["o"]]
    output = PetriNet(places, transitions, pre, post)
    validated = True
    try:
        wf = validate_workflow(output, roles["i"], roles["o"])
    except WfsoundError as e:
        logger.log_warn("Reduction output is not a workflow net: %s" % e.describe())
        wf = WorkflowNet(output, roles["i"], roles["o"])
        validated = False

    parameters = {"construction": "expspace", "c_n": capacity, "norm": size, "m": source, "m'": target,
                  "validated": validated}
    instance = ReductionInstance(wf, {p: p for p in net.places}, transition_map, parameters, roles)
    instance.budget_map = budget
    return instance


def suggest_counter_capacity(net, source, target, caps=None):
    """
    One more than the largest token count in any place along the explicit
    search from m, and at least one more than the counts of m and m'.

    Returns:
        int
    """
    source = check_marking(net, source)
    target = check_marking(net, target)
    if caps is None:
        caps = ExploreCaps()
    graph = build_reach_graph(net, net.marking(source), caps)
    if not graph.complete:
        logger.log_warn("Counter capacity suggested from a truncated search.")
    largest = max([max(m, default=0) for m in graph.vertices] + list(target.values()) + [0])
    return largest + 1
