"""
Three small workflow nets, each marked with {i: 1}.

left:   i -s1-> p1, s2 consumes two tokens of p1 and gives one back with o.
middle: t1 moves i to q1, t2/t3 move a token between q1 and q2, t4 needs
        both q1 and q2 and puts two tokens into o.
right:  u1, u2, u3 split i into two of r1, r2, r3; u4, u5, u6 join a pair
        into o.
"""

from wfsound.net.petri_net import PetriNet
from wfsound.net.workflow_net import validate_workflow


def left_net():
    net = PetriNet(["i", "p1", "o"], ["s1", "s2"],
                   [{"i": 1}, {"p1": 2}],
                   [{"p1": 1}, {"o": 1, "p1": 1}])
    return validate_workflow(net, "i", "o")


def middle_net():
    net = PetriNet(["i", "q1", "q2", "o"], ["t1", "t2", "t3", "t4"],
                   [{"i": 1}, {"q1": 1}, {"q2": 1}, {"q1": 1, "q2": 1}],
                   [{"q1": 1}, {"q2": 1}, {"q1": 1}, {"o": 2}])
    return validate_workflow(net, "i", "o")


def right_net():
    net = PetriNet(["i", "r1", "r2", "r3", "o"], ["u1", "u2", "u3", "u4", "u5", "u6"],
                   [{"i": 1}, {"i": 1}, {"i": 1},
                    {"r1": 1, "r3": 1}, {"r1": 1, "r2": 1}, {"r2": 1, "r3": 1}],
                   [{"r1": 1, "r2": 1}, {"r2": 1, "r3": 1}, {"r1": 1, "r3": 1},
                    {"o": 1}, {"o": 1}, {"o": 1}])
    return validate_workflow(net, "i", "o")


def fig1_examples():
    """
    Returns:
        dict: {"left": WorkflowNet, "middle": WorkflowNet, "right": WorkflowNet}
    """
    return {
        "left": left_net(),
        "middle": middle_net(),
        "right": right_net(),
    }
