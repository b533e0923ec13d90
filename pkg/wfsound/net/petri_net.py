"""
Petri nets and their two firing semantics.

Places and transitions are interned to dense indices in declaration order.
Every iteration below follows that order, so all downstream results are
deterministic.
"""

from wfsound.settings import SETTINGS
from wfsound.common.utils.defines import Semantics
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.marking import OMEGA


class NetMetrics(object):
    """
    Size measures of a net.

    abs_value: |P| + |T|
    norm: the largest arc weight plus one
    size: abs_value * (1 + ceil(log2(norm)))
    """
    def __init__(self, abs_value, norm):
        self.abs_value = abs_value
        self.norm = norm
        self.size = abs_value * (1 + (norm - 1).bit_length())

    def __repr__(self):
        return "NetMetrics(abs_value=%s, norm=%s, size=%s)" % (self.abs_value, self.norm, self.size)


def run_support(run):
    """
    The set of transitions occurring in a run.
    """
    return frozenset(run)


class PetriNet(object):
    """
    A Petri net. Instances are immutable.

    pre and post are stored sparsely as tuples of (place index, weight) pairs
    sorted by place index; absent places have weight 0.
    """
    def __init__(self, places=(), transitions=(), pre=(), post=()):
        """
        Args:
            places: (list) place names.
            transitions: (list) transition names.
            pre: (list) one {place name: weight} dict per transition.
            post: (list) one {place name: weight} dict per transition.
        """
        self.places = tuple(places)
        self.transitions = tuple(transitions)

        self._place_index = {}
        for index, name in enumerate(self.places):
            if name in self._place_index:
                raise WfsoundError(ERR.duplicate_identifier, "Duplicate place %s." % name, data={"name": name})
            self._place_index[name] = index

        self._transition_index = {}
        for index, name in enumerate(self.transitions):
            if name in self._transition_index or name in self._place_index:
                raise WfsoundError(ERR.duplicate_identifier, "Duplicate identifier %s." % name,
                                   data={"name": name})
            self._transition_index[name] = index

        pre = list(pre)
        post = list(post)
        if len(pre) != len(self.transitions) or len(post) != len(self.transitions):
            raise WfsoundError(ERR.invalid_argument, "One pre and one post bag are needed per transition.")

        self.pre = tuple(self._intern_bag(name, bag) for name, bag in zip(self.transitions, pre))
        self.post = tuple(self._intern_bag(name, bag) for name, bag in zip(self.transitions, post))

        # dense effect vectors and the sparse data used when firing
        size = len(self.places)
        effects = []
        deltas = []
        for t in range(len(self.transitions)):
            effect = [0] * size
            for p, w in self.pre[t]:
                effect[p] -= w
            for p, w in self.post[t]:
                effect[p] += w
            effects.append(tuple(effect))
            deltas.append(tuple((p, d) for p, d in enumerate(effect) if d != 0))
        self.effect = tuple(effects)
        self._delta = tuple(deltas)

    def _intern_bag(self, transition, bag):
        items = {}
        for place, weight in dict(bag).items():
            if place not in self._place_index:
                raise WfsoundError(ERR.unknown_place, "Transition %s uses unknown place %s." % (transition, place),
                                   data={"transition": transition, "place": place})
            if type(weight) != int or weight < 0:
                raise WfsoundError(ERR.invalid_weight, "Invalid weight %r on transition %s." % (weight, transition),
                                   data={"transition": transition, "place": place})
            if weight:
                items[self._place_index[place]] = weight
        return tuple(sorted(items.items()))

    ######################################################################
    # Identifiers
    ######################################################################

    def place_index(self, place):
        """
        The index of a place given by name or index.
        """
        if type(place) == int:
            if 0 <= place < len(self.places):
                return place
        elif place in self._place_index:
            return self._place_index[place]
        raise WfsoundError(ERR.unknown_place, "Unknown place %s." % (place,), data={"place": place})

    def transition_index(self, transition):
        """
        The index of a transition given by name or index.
        """
        if type(transition) == int:
            if 0 <= transition < len(self.transitions):
                return transition
        elif transition in self._transition_index:
            return self._transition_index[transition]
        raise WfsoundError(ERR.invalid_argument, "Unknown transition %s." % (transition,),
                           data={"transition": transition})

    def has_place(self, name):
        return name in self._place_index

    def has_identifier(self, name):
        return name in self._place_index or name in self._transition_index

    def pre_dict(self, transition):
        """
        The tokens consumed by a transition, as {place name: weight}.
        """
        t = self.transition_index(transition)
        return {self.places[p]: w for p, w in self.pre[t]}

    def post_dict(self, transition):
        """
        The tokens produced by a transition, as {place name: weight}.
        """
        t = self.transition_index(transition)
        return {self.places[p]: w for p, w in self.post[t]}

    def pre_vector(self, transition):
        t = self.transition_index(transition)
        vector = [0] * len(self.places)
        for p, w in self.pre[t]:
            vector[p] = w
        return tuple(vector)

    def post_vector(self, transition):
        t = self.transition_index(transition)
        vector = [0] * len(self.places)
        for p, w in self.post[t]:
            vector[p] = w
        return tuple(vector)

    ######################################################################
    # Markings
    ######################################################################

    def marking(self, tokens=None, **kwargs):
        """
        Build a dense marking from a {place name: count} mapping.
        """
        values = [0] * len(self.places)
        items = dict(tokens or {})
        items.update(kwargs)
        for place, count in items.items():
            values[self.place_index(place)] += count
        return tuple(values)

    def marking_dict(self, m):
        """
        The nonzero entries of a marking as {place name: count}, in
        declaration order.
        """
        return {self.places[p]: v for p, v in enumerate(m) if v != 0}

    def zero(self):
        return (0,) * len(self.places)

    ######################################################################
    # Firing
    ######################################################################

    def is_enabled(self, m, transition):
        t = self.transition_index(transition)
        return all(m[p] >= w for p, w in self.pre[t])

    def _apply(self, m, t):
        values = list(m)
        limit = SETTINGS.MARKING_LIMIT
        for p, d in self._delta[t]:
            value = values[p] + d
            if value != OMEGA and abs(value) >= limit:
                raise WfsoundError(ERR.overflow, "Firing %s overflows place %s." % (self.transitions[t], self.places[p]),
                                   data={"transition": self.transitions[t], "place": self.places[p]})
            values[p] = value
        return tuple(values)

    def fire(self, m, transition):
        """
        Fire a transition under natural semantics.

        Args:
            m: (tuple) a marking.
            transition: (str or int) the transition.

        Returns:
            tuple: m + effect(t)
        """
        t = self.transition_index(transition)
        for p, w in self.pre[t]:
            if m[p] < w:
                raise WfsoundError(ERR.not_enabled,
                                   "Transition %s is not enabled: place %s is short." % (self.transitions[t], self.places[p]),
                                   data={"transition": self.transitions[t], "place": self.places[p]})
        return self._apply(m, t)

    def z_fire(self, m, transition):
        """
        Fire a transition under integer semantics. Always succeeds unless
        a count overflows.
        """
        return self._apply(m, self.transition_index(transition))

    def successors(self, m):
        """
        Yield (transition index, marking) for every transition enabled in m,
        in declaration order.
        """
        for t, pre in enumerate(self.pre):
            for p, w in pre:
                if m[p] < w:
                    break
            else:
                yield t, self._apply(m, t)

    def apply_run(self, m, run, semantics=Semantics.N):
        """
        Fire a sequence of transitions.

        Args:
            m: (tuple) the starting marking.
            run: (list) transition names.
            semantics: (Semantics) N stops at the first disabled step, Z never does.

        Returns:
            (tuple, list): the final marking and every marking along the run,
                starting with m.
        """
        trace = [tuple(m)]
        current = tuple(m)
        for index, transition in enumerate(run):
            t = self.transition_index(transition)
            if semantics == Semantics.N and not all(current[p] >= w for p, w in self.pre[t]):
                raise WfsoundError(ERR.not_enabled,
                                   "Step %s: transition %s is not enabled." % (index, self.transitions[t]),
                                   data={"index": index, "transition": self.transitions[t]})
            current = self._apply(current, t)
            trace.append(current)
        return current, trace

    ######################################################################
    # Measures
    ######################################################################

    def transition_norm(self):
        """
        The largest weight on any arc, 0 for a net without arcs.
        """
        weights = [w for bag in self.pre + self.post for _, w in bag]
        return max(weights, default=0)

    def metrics(self):
        return NetMetrics(len(self.places) + len(self.transitions), self.transition_norm() + 1)

    ######################################################################
    # Derived nets
    ######################################################################

    def bags(self):
        """
        The pre and post bags as lists of {place name: weight} dicts.
        """
        pre = [self.pre_dict(t) for t in range(len(self.transitions))]
        post = [self.post_dict(t) for t in range(len(self.transitions))]
        return pre, post

    def extend(self, places=(), transitions=()):
        """
        A new net with extra places and extra transitions appended.

        Args:
            places: (list) new place names.
            transitions: (list) (name, pre dict, post dict) triples.
        """
        pre, post = self.bags()
        names = list(self.transitions)
        for name, t_pre, t_post in transitions:
            names.append(name)
            pre.append(t_pre)
            post.append(t_post)
        return PetriNet(list(self.places) + list(places), names, pre, post)

    def restrict(self, places, transitions):
        """
        The subnet on the given places and transitions. Arcs to dropped
        places are dropped too.
        """
        keep = set(places)
        keep_transitions = set(transitions)
        places = [p for p in self.places if p in keep]
        names = [t for t in self.transitions if t in keep_transitions]
        pre = [{p: w for p, w in self.pre_dict(t).items() if p in keep} for t in names]
        post = [{p: w for p, w in self.post_dict(t).items() if p in keep} for t in names]
        return PetriNet(places, names, pre, post)

    def fresh_name(self, base):
        """
        An identifier not used by the net, derived from base.
        """
        name = base
        count = 1
        while self.has_identifier(name):
            name = "%s_%s" % (base, count)
            count += 1
        return name

    ######################################################################
    # Comparison
    ######################################################################

    def _key(self):
        return self.places, self.transitions, self.pre, self.post

    def __eq__(self, other):
        return isinstance(other, PetriNet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "PetriNet(|P|=%s, |T|=%s)" % (len(self.places), len(self.transitions))
