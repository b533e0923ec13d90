"""
Classes of Petri nets used by the hardness constructions.
"""


def _net(net):
    return getattr(net, "net", net)


def is_conservative(net):
    """
    True iff every transition consumes as many tokens as it produces.
    """
    net = _net(net)
    return all(sum(w for _, w in pre) == sum(w for _, w in post) for pre, post in zip(net.pre, net.post))


def reverse_pairing(net):
    """
    For every transition, the first transition undoing it, if any.

    Returns:
        dict: {transition name: inverse name or None}
    """
    net = _net(net)
    by_bags = {}
    for t, name in enumerate(net.transitions):
        by_bags.setdefault((net.pre[t], net.post[t]), name)
    return {name: by_bags.get((net.post[t], net.pre[t])) for t, name in enumerate(net.transitions)}


def is_reversible(net):
    """
    True iff every transition t has some t' with pre(t') = post(t) and
    post(t') = pre(t).

    Returns:
        (bool, dict): the answer and the pairing found by reverse_pairing.
    """
    pairing = reverse_pairing(net)
    return all(inverse is not None for inverse in pairing.values()), pairing
