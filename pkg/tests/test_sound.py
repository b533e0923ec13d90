"""Tests for the soundness procedures."""

import pytest

from wfsound.common.utils.defines import Holds, Reason, Semantics
from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.explore.reach_graph import ExploreCaps
from wfsound.bounds.formulas import bound_placecover
from wfsound.sound.classical import scale_net, check_1_sound, check_classical, check_k_sound, quasi_live_report
from wfsound.sound.oracle import oracle_k_sound
from wfsound.sound.generalised import check_generalised
from wfsound.sound.structural import check_structural, trap_threshold
from wfsound.sound.redundancy import remove_redundant, nonredundant_saturation, covering_run, maximal_trap
from wfsound.sound.sound_numbers import compute_sound_numbers
from wfsound.sound.verdict import Verdict, Certificate
from wfsound.gadgets.random_nets import random_workflow


class TestVerdict:
    def test_unknown_is_never_complete(self):
        verdict = Verdict("k-sound", Holds.UNKNOWN, complete=True)
        assert not verdict.complete

    def test_certificate_document(self):
        certificate = Certificate(Reason.TRAP, k=1, run=[], marking={"i": 1}, trap=["i"], marked="i")
        assert certificate.to_dict() == {"reason": "Trap", "k": 1, "run": [], "marking": {"i": 1},
                                         "net": "input", "marked": "i", "trap": ["i"]}


class TestScaleNet:
    def test_shape(self, middle):
        scaled = scale_net(middle, 2)
        assert scaled.places == ("i", "q1", "q2", "o", "i_scaled", "o_scaled")
        assert (scaled.initial, scaled.final) == ("i_scaled", "o_scaled")
        assert scaled.net.post_dict("t_i") == {"i": 2}
        assert scaled.net.pre_dict("t_o") == {"o": 2}

    def test_scaled_net_is_one_sound(self, middle):
        assert check_1_sound(scale_net(middle, 2)).holds == Holds.TRUE
        assert check_1_sound(scale_net(middle, 1)).holds == Holds.FALSE

    def test_invalid_factor(self, middle):
        with pytest.raises(WfsoundError) as e:
            scale_net(middle, 0)
        assert e.value.code == ERR.invalid_argument


class TestOneSound:
    def test_right(self, right):
        verdict = check_1_sound(right)
        assert verdict.holds == Holds.TRUE
        assert verdict.complete
        assert verdict.stats["verticesExplored"] == 5

    def test_middle(self, middle):
        verdict = check_1_sound(middle)
        assert verdict.holds == Holds.FALSE
        assert verdict.certificate.reason == Reason.NOT_CYCLIC
        assert verdict.certificate.run == ["t1"]

    def test_left(self, left):
        certificate = check_1_sound(left).certificate
        assert certificate.reason == Reason.NOT_CYCLIC
        assert certificate.run == ["s1"]
        assert certificate.marking == {"p1": 1}
        assert certificate.net == "input"

    def test_unbounded_short_circuit(self, leaky):
        certificate = check_1_sound(leaky).certificate
        assert certificate.reason == Reason.UNBOUNDED
        assert certificate.net == "short-circuit"
        assert certificate.run == certificate.extra["prefix"] + certificate.extra["pump"]

    def test_no_initial_transition(self):
        from wfsound.net.petri_net import PetriNet
        from wfsound.net.workflow_net import validate_workflow
        wf = validate_workflow(PetriNet(["i", "o"], ["t"], [{"i": 2}], [{"o": 1}]), "i", "o")
        assert check_1_sound(wf).certificate.reason == Reason.NO_INITIAL_TRANSITION

    def test_cap(self, right):
        verdict = check_1_sound(right, ExploreCaps(2))
        assert verdict.holds == Holds.UNKNOWN
        assert verdict.certificate.reason == Reason.CAP_HIT


class TestClassical:
    def test_right(self, right):
        verdict = check_classical(right)
        assert verdict.holds == Holds.TRUE
        assert all(verdict.details["quasiLive"].values())

    def test_middle(self, middle):
        verdict = check_classical(middle)
        assert verdict.holds == Holds.FALSE
        assert verdict.details["quasiLive"]["t4"] is False

    def test_quasi_live_report(self, middle):
        report = quasi_live_report(middle)
        assert report["t1"] and not report["t4"]


class TestKSound:
    def test_middle_two_sound(self, middle):
        verdict = check_k_sound(middle, 2)
        assert verdict.holds == Holds.TRUE
        assert verdict.property == "k-sound"
        assert verdict.parameters["k"] == 2

    def test_right_two_unsound(self, right):
        certificate = check_k_sound(right, 2).certificate
        assert certificate.reason == Reason.NOT_CYCLIC
        assert certificate.k == 2
        assert certificate.run == ["u1", "u2", "u4"]
        assert certificate.marking == {"r2": 2, "o": 1}
        assert certificate.net == "input"

    def test_certificate_replays(self, right):
        certificate = check_k_sound(right, 2).certificate
        final, _ = right.net.apply_run(right.initial_marking(2), certificate.run)
        assert right.net.marking_dict(final) == certificate.marking

    def test_invalid_k(self, right):
        with pytest.raises(WfsoundError):
            check_k_sound(right, 0)


class TestOracle:
    def test_zero(self, left):
        assert oracle_k_sound(left, 0).holds == Holds.TRUE

    def test_right(self, right):
        assert oracle_k_sound(right, 1).holds == Holds.TRUE
        verdict = oracle_k_sound(right, 2)
        assert verdict.holds == Holds.FALSE
        assert verdict.certificate.reason == Reason.CANNOT_FINISH

    def test_truncated(self, right):
        assert oracle_k_sound(right, 3, ExploreCaps(3)).holds == Holds.UNKNOWN

    def test_negative_k(self, right):
        with pytest.raises(WfsoundError) as e:
            oracle_k_sound(right, -1)
        assert e.value.code == ERR.invalid_argument


class TestRedundancy:
    def test_nothing_to_remove(self, right):
        reduced, report = remove_redundant(right)
        assert reduced is right
        assert report.to_dict() == {"removedPlaces": [], "removedTransitions": [], "disconnected": False}

    def test_disconnected(self, disconnected):
        reduced, report = remove_redundant(disconnected)
        assert report.removed_places == ["b"]
        assert report.removed_transitions == ["t2", "t4"]
        assert report.disconnected
        assert reduced.places == ("i", "a", "o")
        assert nonredundant_saturation(disconnected) == {"i", "a"}

    def test_covering_runs(self, right):
        assert covering_run(right, "i") == (1, [])
        assert covering_run(right, "r1") == (1, ["u1"])
        assert covering_run(right, "r3") == (4, ["u1", "u1", "u2"])

    def test_covering_run_marks_the_place(self, middle):
        k, run = covering_run(middle, "q2")
        final, _ = middle.net.apply_run(middle.initial_marking(k), run)
        assert final[middle.net.place_index("q2")] >= 1

    def test_redundant_place_has_no_covering_run(self, disconnected):
        assert covering_run(disconnected, "b") is None

    def test_maximal_trap(self, left, middle, right):
        assert maximal_trap(left) == {"i", "p1"}
        assert maximal_trap(middle) == set()
        assert maximal_trap(right) == set()
        assert trap_threshold(left)[0] == 1
        assert trap_threshold(right) is None


def replay_z_witness(wf, certificate):
    """
    Fire the counts of a ZUnbounded certificate from i^1 in integer
    semantics and return the change on every place.
    """
    run = [name for name, count in certificate.extra["tau"].items() for _ in range(count)]
    start = wf.initial_marking(1)
    final, _ = wf.net.apply_run(start, run, semantics=Semantics.Z)
    return {place: after - before for place, before, after in zip(wf.places, start, final)}


class TestGeneralised:
    def test_right(self, right):
        verdict = check_generalised(right, k_max=3)
        assert verdict.holds == Holds.FALSE
        certificate = verdict.certificate
        assert certificate.reason == Reason.CANNOT_FINISH
        assert certificate.k == 2
        assert certificate.run == ["u1", "u2", "u4"]
        assert certificate.marking == {"r2": 2, "o": 1}

    def test_middle(self, middle):
        certificate = check_generalised(middle, k_max=3).certificate
        assert certificate.reason == Reason.CANNOT_FINISH
        assert certificate.k == 1

    def test_sequence_up_to_k_max(self, sequence):
        verdict = check_generalised(sequence, k_max=5)
        assert verdict.holds == Holds.TRUE
        assert not verdict.complete
        assert verdict.details["checkedUpTo"] == 5

    def test_pumping(self, pumping):
        verdict = check_generalised(pumping, k_max=3)
        assert verdict.holds == Holds.FALSE
        assert verdict.certificate.reason == Reason.Z_UNBOUNDED
        assert set(verdict.certificate.extra["effect"]) == {"o"}

    def test_pumping_witness_replays(self, pumping):
        certificate = check_generalised(pumping, k_max=3).certificate
        change = replay_z_witness(pumping, certificate)
        assert all(v >= 0 for v in change.values())
        assert {place: v for place, v in change.items() if v} == certificate.extra["effect"]

    def test_disconnected(self, disconnected):
        verdict = check_generalised(disconnected, k_max=3)
        assert verdict.certificate.reason == Reason.DISCONNECTED

    def test_invalid_k_max(self, right):
        with pytest.raises(WfsoundError) as e:
            check_generalised(right, k_max=0)
        assert e.value.code == ERR.invalid_argument


class TestStructural:
    def test_middle(self, middle):
        verdict = check_structural(middle, k_max=3)
        assert verdict.holds == Holds.TRUE
        assert verdict.complete
        assert verdict.details["smallestK"] == 2

    def test_right(self, right):
        assert check_structural(right, k_max=3).details["smallestK"] == 1

    def test_left_trap(self, left):
        verdict = check_structural(left, k_max=3)
        assert verdict.holds == Holds.FALSE
        certificate = verdict.certificate
        assert certificate.reason == Reason.TRAP
        assert (certificate.k, certificate.run, certificate.marking) == (1, [], {"i": 1})
        assert certificate.extra == {"trap": ["i", "p1"], "marked": "i"}

    def test_disconnected(self, disconnected):
        assert check_structural(disconnected, k_max=3).certificate.reason == Reason.DISCONNECTED


class TestSoundNumbers:
    def test_middle(self, middle):
        numbers = compute_sound_numbers(middle, k_max=3)
        assert numbers.p == 2
        assert numbers.infinite
        assert numbers.sound_set(6) == {2, 4, 6}
        assert numbers.is_exact(7) and not numbers.is_exact(8)
        assert numbers.to_dict() == {"p": 2, "kLimit": None, "infinite": True, "complete": False,
                                     "infiniteUpToCap": 3, "exactUpTo": 7}

    def test_cap_limits_exactness(self, middle):
        numbers = compute_sound_numbers(middle, k_max=3, caps=ExploreCaps(2))
        assert numbers.p == 0
        assert not numbers.complete
        assert not numbers.is_exact(2)

    def test_right(self, right):
        numbers = compute_sound_numbers(right, k_max=3)
        assert (numbers.p, numbers.k_limit) == (1, 2)
        assert numbers.complete
        assert numbers.sound_set(10) == {1}

    def test_left(self, left):
        numbers = compute_sound_numbers(left, k_max=3)
        assert (numbers.p, numbers.k_limit) == (0, 0)
        assert numbers.sound_set(10) == set()


CAPS = ExploreCaps(1000)


def oracle_holds(wf, ks):
    """
    {k: bool} from the explicit oracle, or None when a graph was truncated.
    """
    found = {}
    for k in ks:
        verdict = oracle_k_sound(wf, k, CAPS)
        if verdict.holds == Holds.UNKNOWN:
            return None
        found[k] = verdict.holds == Holds.TRUE
    return found


class TestAgainstTheOracle:
    def test_k_sound_matches(self):
        compared = 0
        for seed in range(500):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            for k in (1, 2, 3):
                fast = check_k_sound(wf, k, CAPS)
                slow = oracle_k_sound(wf, k, CAPS)
                if Holds.UNKNOWN in (fast.holds, slow.holds):
                    continue
                assert fast.holds == slow.holds, (seed, k)
                compared += 1
        assert compared > 100

    def test_scaling_multiplies_k(self):
        compared = 0
        for seed in range(200):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            for k in (1, 2):
                scaled = scale_net(wf, k)
                for c in (1, 2):
                    direct = oracle_k_sound(wf, c * k, CAPS).holds
                    through_scaling = oracle_k_sound(scaled, c, CAPS).holds
                    if Holds.UNKNOWN in (direct, through_scaling):
                        continue
                    assert direct == through_scaling, (seed, k, c)
                    compared += 1
        assert compared > 100

    def test_removing_redundancy_keeps_soundness(self):
        for seed in range(100):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            reduced, _ = remove_redundant(wf)
            for k in (1, 2):
                before = oracle_k_sound(wf, k, CAPS).holds
                after = oracle_k_sound(reduced, k, CAPS).holds
                if Holds.UNKNOWN in (before, after):
                    continue
                assert before == after, (seed, k)

    def test_generalised_matches(self):
        for seed in range(300):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            verdict = check_generalised(wf, k_max=3, caps=CAPS)
            if verdict.holds == Holds.UNKNOWN:
                continue
            found = oracle_holds(wf, (1, 2, 3))
            if found is None:
                continue
            if verdict.holds == Holds.TRUE:
                assert all(found.values()), seed
            elif verdict.certificate.reason == Reason.CANNOT_FINISH:
                k = verdict.certificate.k
                assert not found[k], seed
                assert all(found[j] for j in range(1, k)), seed
            elif verdict.certificate.reason == Reason.DISCONNECTED:
                assert not any(found.values()), seed

    def test_sound_numbers_match(self):
        compared = 0
        for seed in range(200):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            numbers = compute_sound_numbers(wf, k_max=6, caps=CAPS)
            if not numbers.is_exact(6):
                continue
            found = oracle_holds(wf, range(1, 7))
            if found is None:
                continue
            assert numbers.sound_set(6) == {k for k, holds in found.items() if holds}, seed
            if numbers.infinite:
                assert found == {k: k % numbers.p == 0 for k in range(1, 7)}, seed
            compared += 1
        assert compared >= 10

    def test_covering_runs_replay(self):
        for seed in range(100):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            bound = bound_placecover(wf).value
            for place in nonredundant_saturation(wf):
                k, run = covering_run(wf, place)
                assert k < bound, (seed, place)
                final, _ = wf.net.apply_run(wf.initial_marking(k), run)
                assert final[wf.net.place_index(place)] >= 1, (seed, place)

    def test_z_witnesses_replay(self):
        replayed = 0
        for seed in range(200):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            verdict = check_generalised(wf, k_max=1, caps=CAPS)
            if verdict.certificate is None or verdict.certificate.reason != Reason.Z_UNBOUNDED:
                continue
            change = replay_z_witness(wf, verdict.certificate)
            assert all(v >= 0 for v in change.values()), seed
            assert any(change.values()), seed
            assert {place: v for place, v in change.items() if v} == verdict.certificate.extra["effect"], seed
            replayed += 1
        assert replayed >= 1

    def test_structural_matches(self):
        for seed in range(100):
            wf = random_workflow(seed, places=4, transitions=4, max_weight=2)
            verdict = check_structural(wf, k_max=4, caps=CAPS)
            found = oracle_holds(wf, range(1, 5))
            if verdict.holds == Holds.UNKNOWN or found is None:
                continue
            sound = [k for k, holds in sorted(found.items()) if holds]
            if verdict.holds == Holds.TRUE:
                assert verdict.details["smallestK"] == sound[0], seed
            else:
                assert not sound, seed
