"""
The three small example nets.
"""

from wfsound.gadgets.examples import fig1_examples
from wfsound.gadgets.generators.base_generator import BaseGenerator


class Fig1Generator(BaseGenerator):
    key = "fig1"
    name = "Example nets"

    def add_arguments(self, parser):
        parser.add_argument("--which", choices=("left", "middle", "right"), default="right",
                            help="which example net to write")

    def build(self, args):
        return fig1_examples()[args.which], {"generator": self.key, "which": args.which}
