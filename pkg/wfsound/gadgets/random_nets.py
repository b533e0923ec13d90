"""
Seeded random nets for property tests.

All generators draw from numpy's default_rng(seed), so the same seed and
parameters always give the same net.
"""

import numpy as np

from wfsound.settings import SETTINGS
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.petri_net import PetriNet
from wfsound.net.workflow_net import validate_workflow
from wfsound.utils.logger import logger


def _check_positive(**params):
    for key, value in params.items():
        if type(value) != int or value < 1:
            raise WfsoundError(ERR.invalid_argument, "%s must be a positive integer." % key, data={key: value})


def _bag(rng, candidates, max_weight, max_size=2):
    """
    A nonempty bag over 1 to max_size distinct candidates.
    """
    size = int(rng.integers(1, min(max_size, len(candidates)) + 1))
    chosen = rng.choice(len(candidates), size=size, replace=False)
    return {candidates[int(j)]: int(rng.integers(1, max_weight + 1)) for j in sorted(chosen)}


def random_workflow(seed, places=4, transitions=4, max_weight=2, retries=None):
    """
    A random workflow net with places i, p1, ..., o.

    Transitions consume from places other than o and produce into places
    other than i; nets failing the path condition are redrawn.

    Args:
        seed: (int) random seed.
        places: (int) number of places, i and o included, at least 2.
        transitions: (int) number of transitions.
        max_weight: (int) largest arc weight.
        retries: (int) draws before giving up, defaults to SETTINGS.RANDOM_RETRIES.

    Returns:
        WorkflowNet
    """
    _check_positive(places=places, transitions=transitions, max_weight=max_weight)
    if places < 2:
        raise WfsoundError(ERR.invalid_argument, "A workflow net needs at least 2 places.", data={"places": places})
    if retries is None:
        retries = SETTINGS.RANDOM_RETRIES

    names = ["i"] + ["p%s" % j for j in range(1, places - 1)] + ["o"]
    consumers = names[:-1]
    producers = names[1:]
    transition_names = ["t%s" % j for j in range(1, transitions + 1)]

    rng = np.random.default_rng(seed)
    for attempt in range(retries):
        pre = [_bag(rng, consumers, max_weight) for _ in transition_names]
        post = [_bag(rng, producers, max_weight) for _ in transition_names]
        net = PetriNet(names, transition_names, pre, post)
        try:
            return validate_workflow(net, "i", "o")
        except WfsoundError as e:
            logger.log_debug("Random net %s/%s rejected: %s" % (seed, attempt, e))

    raise WfsoundError(ERR.generation_failed, "No workflow net after %s draws." % retries,
                       data={"seed": seed, "retries": retries})


def _random_marking(rng, names, tokens):
    counts = rng.multinomial(tokens, [1.0 / len(names)] * len(names))
    return {name: int(count) for name, count in zip(names, counts) if count}


def random_conservative_net(seed, places=3, transitions=3, max_sum=2):
    """
    A conservative net with markings m and m' of equal size.

    Every transition moves between 1 and max_sum tokens.

    Returns:
        (PetriNet, dict, dict): the net, m and m'.
    """
    _check_positive(places=places, transitions=transitions, max_sum=max_sum)
    rng = np.random.default_rng(seed)
    names = ["p%s" % j for j in range(1, places + 1)]

    pre = []
    post = []
    for _ in range(transitions):
        tokens = int(rng.integers(1, max_sum + 1))
        pre.append(_random_marking(rng, names, tokens))
        post.append(_random_marking(rng, names, tokens))
    net = PetriNet(names, ["t%s" % j for j in range(1, transitions + 1)], pre, post)

    tokens = int(rng.integers(1, max_sum + 1))
    return net, _random_marking(rng, names, tokens), _random_marking(rng, names, tokens)


def random_reversible_net(seed, places=2, pairs=1, max_weight=1):
    """
    A reversible net: each drawn transition t comes with t_inv.

    Returns:
        (PetriNet, dict, dict): the net, m and m', each marking with 1 to
            places tokens.
    """
    _check_positive(places=places, pairs=pairs, max_weight=max_weight)
    rng = np.random.default_rng(seed)
    names = ["p%s" % j for j in range(1, places + 1)]

    transitions = []
    pre = []
    post = []
    for j in range(1, pairs + 1):
        t_pre = _bag(rng, names, max_weight)
        t_post = _bag(rng, names, max_weight)
        transitions += ["t%s" % j, "t%s_inv" % j]
        pre += [t_pre, t_post]
        post += [t_post, t_pre]
    net = PetriNet(names, transitions, pre, post)

    source = _random_marking(rng, names, int(rng.integers(1, places + 1)))
    target = _random_marking(rng, names, int(rng.integers(1, places + 1)))
    return net, source, target
