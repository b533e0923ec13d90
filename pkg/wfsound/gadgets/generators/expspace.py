"""
Reversible reachability instances reduced to classical soundness.
"""

from wfsound.net.petri_net import PetriNet
from wfsound.explore.reach_graph import ExploreCaps
from wfsound.gadgets.expspace import expspace_reduction, suggest_counter_capacity
from wfsound.gadgets.random_nets import random_reversible_net
from wfsound.gadgets.generators.base_generator import BaseGenerator


# markings explored when suggesting a counter capacity
SUGGESTION_VERTICES = 10000


class ExpspaceGenerator(BaseGenerator):
    key = "expspace"
    name = "Classical soundness reduction"

    def add_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=None,
                            help="draw a random reversible net; without it p1 <-> p2 is used")
        parser.add_argument("--places", type=int, default=2)
        parser.add_argument("--pairs", type=int, default=1)
        parser.add_argument("--capacity", type=int, default=None,
                            help="counter capacity c_n, suggested from an explicit search if omitted")

    def build(self, args):
        if args.seed is None:
            net = PetriNet(["p1", "p2"], ["t", "t_inv"], [{"p1": 1}, {"p2": 1}], [{"p2": 1}, {"p1": 1}])
            source, target = {"p1": 1}, {"p2": 1}
        else:
            net, source, target = random_reversible_net(args.seed, args.places, args.pairs)
        capacity = args.capacity
        if capacity is None:
            capacity = suggest_counter_capacity(net, source, target, ExploreCaps(SUGGESTION_VERTICES))
        instance = expspace_reduction(net, source, target, capacity)
        header = dict(instance.parameters, generator=self.key, seed=args.seed)
        return instance.output, header
