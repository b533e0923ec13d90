"""
Conservative reachability instances reduced to generalised soundness.
"""

from wfsound.net.petri_net import PetriNet
from wfsound.gadgets.pspace import pspace_reduction
from wfsound.gadgets.random_nets import random_conservative_net
from wfsound.gadgets.generators.base_generator import BaseGenerator


class PspaceGenerator(BaseGenerator):
    key = "pspace"
    name = "Generalised soundness reduction"

    def add_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=None,
                            help="draw a random conservative net; without it the three-place example is used")
        parser.add_argument("--places", type=int, default=3)
        parser.add_argument("--transitions", type=int, default=3)
        parser.add_argument("--max-sum", type=int, default=2)

    def build(self, args):
        if args.seed is None:
            net = PetriNet(["p1", "p2", "p3"])
            source, target = {"p1": 1, "p2": 1}, {"p2": 1, "p3": 1}
        else:
            net, source, target = random_conservative_net(args.seed, args.places, args.transitions, args.max_sum)
        instance = pspace_reduction(net, source, target)
        header = dict(instance.parameters, generator=self.key, seed=args.seed)
        return instance.output, header
