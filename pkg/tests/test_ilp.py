"""Tests for the integer programs and their solvers."""

import pytest

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.ilp.integer_program import IntegerProgram, Solution, slack_extension, GE, EQ
from wfsound.ilp.builders import build_ilp_n, build_ilp_s, build_cone, homogeneous_witness, marking_of, \
    variable_names
from wfsound.ilp.box_solver import iter_box_solutions, solve_box_bounded
from wfsound.ilp.elimination import rational_solution, integral_cone_point
from wfsound.gadgets.random_nets import random_workflow


def at_least_one():
    # x + y >= 1 over x, y >= 0
    return IntegerProgram(["x", "y"], [[1, 1], [1, 0], [0, 1]], [1, 0, 0])


class TestIntegerProgram:
    def test_shape(self):
        program = at_least_one()
        assert (program.m, program.n) == (3, 2)
        assert program.is_solution((0, 1))
        assert not program.is_solution((0, 0))

    def test_needs_nonnegativity_rows(self):
        with pytest.raises(WfsoundError) as e:
            IntegerProgram(["x"], [[1]], [-1])
        assert e.value.code == ERR.invalid_argument

    def test_inconsistent_rows(self):
        with pytest.raises(WfsoundError):
            IntegerProgram(["x"], [[1, 0]], [0])

    def test_slack_extension(self):
        program = at_least_one()
        extended = slack_extension(program)
        assert (extended.m, extended.n) == (3 * program.m, program.m + program.n)

    def test_export_matrix(self):
        program = IntegerProgram(["x"], [[1], [-1], [1]], [2, -2, 0], [EQ, EQ, GE], ["x = 2", "", "x >= 0"])
        lines = program.export_matrix().splitlines()
        assert lines == ["# variables: x", "1 = 2  # x = 2", "1 >= 0  # x >= 0"]

    def test_solution_is_checked(self):
        with pytest.raises(WfsoundError) as e:
            Solution(at_least_one(), (0, 0))
        assert e.value.code == ERR.internal


class TestBuilders:
    def test_ilp_n_shape(self, right):
        program = build_ilp_n(right)
        assert program.n == len(right.transitions) + 1
        assert program.m == len(right.places) + len(right.transitions) + 1
        assert program.names == tuple(variable_names(right.net))

    def test_ilp_s_shape(self, right):
        program = build_ilp_s(right)
        assert program.m == 2 * len(right.places) + len(right.transitions) + 1

    def test_ilp_s_witness(self, right):
        program = build_ilp_s(right)
        assert program.is_solution((1, 1, 0, 0, 0, 1, 0))
        assert not program.is_solution((1, 1, 0, 0, 1, 0, 0))

    def test_marking_of(self, right):
        assert marking_of(right, (2, 1, 1, 0, 1, 0, 0)) == right.net.marking({"r2": 2, "o": 1})

    def test_cone_shape(self, middle):
        program = build_cone(middle)
        assert program.n == len(middle.transitions)
        assert program.m == len(middle.transitions) + len(middle.places) + 1

    def test_no_homogeneous_witness(self, right, middle):
        assert homogeneous_witness(right) is None
        assert homogeneous_witness(middle) is None

    def test_homogeneous_witness(self, pumping):
        tau = homogeneous_witness(pumping)
        assert tau is not None
        assert tau[0] == 0 and tau[1] > 0


class TestElimination:
    def test_infeasible(self):
        program = IntegerProgram(["x"], [[1], [-1]], [1, 0])
        assert rational_solution(program) is None

    def test_feasible(self):
        program = IntegerProgram(["x", "y"], [[2, -1], [1, 0], [0, 1], [0, 2]], [0, 0, 0, 1])
        point = rational_solution(program)
        assert point is not None
        assert program.is_solution(point)

    def test_integral_point(self, right):
        point = integral_cone_point(build_ilp_s(right))
        assert point is not None
        assert point[0] >= 1
        assert build_ilp_s(right).is_solution(point)

    def test_structural_system_infeasible(self):
        # every run doubles the tokens, so i^k never turns into f^k
        from wfsound.net.petri_net import PetriNet
        from wfsound.net.workflow_net import validate_workflow
        wf = validate_workflow(PetriNet(["i", "o"], ["t"], [{"i": 1}], [{"o": 2}]), "i", "o")
        assert integral_cone_point(build_ilp_s(wf)) is None

    def test_negative_constants_rejected(self):
        program = IntegerProgram(["x"], [[-1], [1]], [-3, 0])
        with pytest.raises(WfsoundError) as e:
            integral_cone_point(program)
        assert e.value.code == ERR.invalid_argument

    def test_row_cap(self, right):
        with pytest.raises(WfsoundError) as e:
            rational_solution(build_ilp_n(right), row_cap=1)
        assert e.value.code == ERR.exceeded


class TestBoxSolver:
    def test_lexicographic_order(self):
        solutions = [s.values for s in iter_box_solutions(at_least_one(), 1)]
        assert solutions == [(0, 1), (1, 0), (1, 1)]

    def test_first_solution(self):
        assert solve_box_bounded(at_least_one(), [2, 0]).to_dict() == {"x": 1, "y": 0}

    def test_empty_box(self):
        program = IntegerProgram(["x"], [[1]], [2])
        assert solve_box_bounded(program, 1) is None

    def test_node_budget(self):
        with pytest.raises(WfsoundError) as e:
            solve_box_bounded(at_least_one(), 5, node_budget=1)
        assert e.value.code == ERR.box_too_large

    def test_bad_box(self):
        with pytest.raises(WfsoundError):
            solve_box_bounded(at_least_one(), [1])


def z_reachable(wf, k, length):
    """
    Nonnegative markings reached from i^k by integer-semantics runs of at
    most the given length.
    """
    layer = {wf.initial_marking(k)}
    seen = set(layer)
    for _ in range(length):
        layer = {wf.net.z_fire(m, t) for m in layer for t in wf.transitions} - seen
        seen |= layer
    return {m for m in seen if all(v >= 0 for v in m)}


class TestIlpNCharacterization:
    """
    With kappa = k and at most CAP firings, the solutions of ILP_N describe
    exactly the nonnegative markings reachable from i^k in integer semantics.
    """
    CAP = 6

    def test_random_nets(self):
        for seed in range(100):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            program = build_ilp_n(wf)
            size = len(wf.transitions)
            for k in (1, 2, 3):
                fixed = program.with_rows([[1] + [0] * size, [-1] + [0] * size, [0] + [-1] * size],
                                          [k, -k, -self.CAP])
                box = [k] + [self.CAP] * size
                from_solutions = {marking_of(wf, s) for s in iter_box_solutions(fixed, box)}
                assert from_solutions == z_reachable(wf, k, self.CAP), (seed, k)
