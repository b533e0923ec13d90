"""
Random workflow nets.
"""

from wfsound.gadgets.random_nets import random_workflow
from wfsound.gadgets.generators.base_generator import BaseGenerator


class RandomGenerator(BaseGenerator):
    key = "random"
    name = "Random workflow net"

    def add_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--places", type=int, default=4)
        parser.add_argument("--transitions", type=int, default=4)
        parser.add_argument("--max-weight", type=int, default=2)

    def build(self, args):
        wf = random_workflow(args.seed, args.places, args.transitions, args.max_weight)
        header = {"generator": self.key, "seed": args.seed, "places": args.places,
                  "transitions": args.transitions, "maxWeight": args.max_weight}
        return wf, header
