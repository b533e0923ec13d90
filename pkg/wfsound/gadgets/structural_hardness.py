"""
1-soundness reduced to structural soundness.
"""

from wfsound.net.workflow_net import WorkflowNet
from wfsound.gadgets.reduction import NameAllocator


def structural_hardness_transform(wf):
    """
    Add one transition consuming two tokens from i and producing one in f.

    The output is k-unsound for every k >= 2, and 1-sound iff the input
    is, so it is structurally sound iff the input is 1-sound.

    Returns:
        WorkflowNet
    """
    name = NameAllocator(wf.net).take("t_double")
    net = wf.net.extend(transitions=[(name, {wf.initial: 2}, {wf.final: 1})])
    return WorkflowNet(net, wf.initial, wf.final, validated=wf.validated)
