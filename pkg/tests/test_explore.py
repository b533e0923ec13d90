"""Tests for explicit exploration, boundedness, cyclicity and coverability."""

import pytest

from wfsound.common.utils.defines import CapKind
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.marking import OMEGA
from wfsound.net.petri_net import PetriNet
from wfsound.explore.reach_graph import ExploreCaps, build_reach_graph, backward_reachable, path_to, \
    export_edge_list
from wfsound.explore.boundedness import BoundednessVerdict, decide_boundedness
from wfsound.explore.cyclicity import decide_cyclicity
from wfsound.explore.karp_miller import karp_miller_tree, quasi_liveness
from wfsound.explore.scc import strongly_connected_components
from wfsound.sound.classical import short_circuit
from wfsound.gadgets.random_nets import random_workflow


@pytest.fixture
def growing():
    # t keeps a and adds b
    return PetriNet(["a", "b"], ["t"], [{"a": 1}], [{"a": 1, "b": 1}])


@pytest.fixture
def right_short_circuit(right):
    net, _ = short_circuit(right)
    return net, right.initial_marking()


class TestShortCircuitGraph:
    def test_counts(self, right_short_circuit):
        net, m0 = right_short_circuit
        graph = build_reach_graph(net, m0)
        assert graph.complete
        assert len(graph.vertices) == 5
        assert len(graph.edges) == 7

    def test_bounded_by_one(self, right_short_circuit):
        net, m0 = right_short_circuit
        verdict = decide_boundedness(net, m0)
        assert verdict.bounded
        assert verdict.bound == (1, 1, 1, 1, 1)

    def test_cyclic(self, right_short_circuit):
        net, m0 = right_short_circuit
        assert decide_cyclicity(net, m0)

    def test_single_component(self, right_short_circuit):
        net, m0 = right_short_circuit
        components = strongly_connected_components(build_reach_graph(net, m0))
        assert len(components) == 1

    def test_quasi_live(self, right_short_circuit):
        net, m0 = right_short_circuit
        assert all(quasi_liveness(net, m0).values())
        assert quasi_liveness(net, m0, method="karp_miller") == quasi_liveness(net, m0, method="graph")

    def test_export(self, right_short_circuit):
        net, m0 = right_short_circuit
        lines = export_edge_list(build_reach_graph(net, m0)).splitlines()
        assert lines[0] == "# 0 {'i': 1}"
        assert len([line for line in lines if line.startswith("#")]) == 5
        assert "0 u1 1" in lines


class TestReachGraph:
    def test_path_to_is_shortest(self, right):
        graph = build_reach_graph(right.net, right.initial_marking(2))
        vertex = graph.index[right.net.marking({"r2": 2, "o": 1})]
        assert path_to(graph, vertex) == ["u1", "u2", "u4"]

    def test_vertex_cap(self, right):
        graph = build_reach_graph(right.net, right.initial_marking(3), ExploreCaps(4))
        assert graph.caps_hit == CapKind.VERTICES
        assert len(graph.vertices) == 4
        with pytest.raises(WfsoundError) as e:
            backward_reachable(graph, right.final_marking(3))
        assert e.value.code == ERR.incomplete_graph

    def test_norm_cap(self, growing):
        graph = build_reach_graph(growing, (1, 0), ExploreCaps(max_norm=3))
        assert graph.caps_hit == CapKind.NORM
        marking, run = graph.over_cap
        assert marking == (1, 4)
        assert run == ["t"] * 4

    def test_backward_reachable(self, right):
        graph = build_reach_graph(right.net, right.initial_marking(2))
        finishing = backward_reachable(graph, right.final_marking(2))
        stuck = graph.index[right.net.marking({"r2": 2, "o": 1})]
        assert 0 in finishing
        assert stuck not in finishing

    def test_backward_reachable_predicate(self, right):
        graph = build_reach_graph(right.net, right.initial_marking())
        assert backward_reachable(graph, lambda m: m[0] == 1) == {0}

    def test_invalid_cap(self):
        with pytest.raises(WfsoundError) as e:
            ExploreCaps(0)
        assert e.value.code == ERR.invalid_argument


class TestBoundedness:
    def test_pumping_witness(self, growing):
        verdict = decide_boundedness(growing, (1, 0))
        assert verdict.kind == BoundednessVerdict.UNBOUNDED
        assert verdict.prefix == []
        assert verdict.pump == ["t"]
        assert verdict.low == (1, 0)
        assert verdict.high == (1, 1)

    def test_exceeded(self, right):
        verdict = decide_boundedness(right.net, right.initial_marking(3), node_cap=3)
        assert verdict.kind == BoundednessVerdict.EXCEEDED

    def test_not_cyclic(self, middle):
        net, _ = short_circuit(middle)
        result = decide_cyclicity(net, middle.initial_marking())
        assert not result
        assert result.run == ["t1"]
        assert net.marking_dict(result.counterexample) == {"q1": 1}

    def test_cyclicity_needs_a_complete_graph(self, right):
        net, _ = short_circuit(right)
        with pytest.raises(WfsoundError) as e:
            decide_cyclicity(net, right.initial_marking(), ExploreCaps(2))
        assert e.value.code == ERR.not_bounded


class TestKarpMiller:
    def test_acceleration(self, growing):
        tree = karp_miller_tree(growing, (1, 0))
        assert tree.has_omega()
        assert (1, OMEGA) in tree.markings
        assert tree.covers((1, 100))

    def test_bounded_tree(self, right):
        tree = karp_miller_tree(right.net, right.initial_marking())
        assert not tree.has_omega()
        assert tree.covers(right.final_marking())

    def test_node_cap(self, growing):
        with pytest.raises(WfsoundError) as e:
            karp_miller_tree(growing, (1, 0), node_cap=1)
        assert e.value.code == ERR.exceeded

    def test_dead_transition(self, middle):
        live = quasi_liveness(middle.net, middle.initial_marking())
        assert live == {"t1": True, "t2": True, "t3": True, "t4": False}

    def test_unbounded_uses_the_tree(self, growing):
        assert quasi_liveness(growing, (1, 0)) == {"t": True}

    def test_tree_respects_the_cap(self, growing):
        with pytest.raises(WfsoundError) as e:
            quasi_liveness(growing, (1, 0), method="karp_miller", caps=ExploreCaps(1))
        assert e.value.code == ERR.exceeded

    def test_unknown_method(self, right):
        with pytest.raises(WfsoundError) as e:
            quasi_liveness(right.net, right.initial_marking(), method="guess")
        assert e.value.code == ERR.invalid_argument

    def test_tree_agrees_with_the_graph(self):
        compared = 0
        for seed in range(100):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            m0 = wf.initial_marking(2)
            graph = build_reach_graph(wf.net, m0, ExploreCaps(30))
            if not graph.complete:
                continue
            from_tree = quasi_liveness(wf.net, m0, method="karp_miller")
            assert from_tree == quasi_liveness(wf.net, m0, method="graph"), seed
            compared += 1
        assert compared > 10
