"""
1-soundness instances reduced to structural soundness.
"""

from wfsound.net.readers import read_net_file
from wfsound.gadgets.examples import fig1_examples
from wfsound.gadgets.structural_hardness import structural_hardness_transform
from wfsound.gadgets.generators.base_generator import BaseGenerator


class StructuralGenerator(BaseGenerator):
    key = "structural"
    name = "Structural soundness reduction"

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--input", metavar="FILE", help="workflow net to transform")
        source.add_argument("--example", choices=("left", "middle", "right"), default="right",
                            help="example net to transform")

    def build(self, args):
        if args.input:
            wf = read_net_file(args.input).to_workflow()
        else:
            wf = fig1_examples()[args.example]
        header = {"generator": self.key, "input": args.input or args.example}
        return structural_hardness_transform(wf), header
