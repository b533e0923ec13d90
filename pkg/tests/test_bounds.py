"""Tests for the explicit bounds and the Steinitz reorderings."""

import numpy as np
import pytest

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.marking import norm
from wfsound.ilp.builders import build_ilp_n, build_ilp_s
from wfsound.bounds.formulas import bound_placecover, bound_budget_ell, bound_z_norm_cap, \
    small_solution_bound, bound_generalised_K, bound_structural_K
from wfsound.bounds.steinitz import steinitz_reorder_small, steinitz_extended_reorder_small


class TestFormulas:
    def test_placecover(self, left, middle, right):
        assert bound_placecover(middle).value == 256
        assert bound_placecover(right).value == 729
        assert bound_placecover(left).value == 16

    def test_placecover_unit_weights(self, sequence):
        assert bound_placecover(sequence).value == 3

    def test_z_norm_cap(self, middle, right):
        assert bound_z_norm_cap(right, 1).value == 35
        assert bound_z_norm_cap(middle, 1).value == 96
        assert bound_z_norm_cap(middle, 3).value == 9 * 6 * 4
        assert bound_z_norm_cap(middle, 2).value == 96
        assert bound_z_norm_cap(middle, 0).value == 4 * 6 * 4

    def test_budget_ell(self, middle):
        assert bound_budget_ell(middle, 1).value == 256 * 2 * 4 * 6
        assert bound_budget_ell(middle, 5).value == 256 * 5 * 4 * 6
        assert bound_budget_ell(middle, 0).value == bound_budget_ell(middle, 2).value

    def test_monotone_in_k(self, right):
        values = [bound_budget_ell(right, k).value for k in range(0, 8)]
        assert values == sorted(values)
        caps = [bound_z_norm_cap(right, k).value for k in range(0, 8)]
        assert caps == sorted(caps)

    def test_small_solution_bound(self, right):
        program = build_ilp_s(right)
        columns = program.m + program.n
        first = small_solution_bound(program, 1)
        assert first == program.norm() ** (columns * (columns + 1).bit_length())
        assert small_solution_bound(program, 2) == first ** 2

    def test_hidden_constants(self, middle):
        generalised = bound_generalised_K(middle, 1)
        structural = bound_structural_K(middle, 1)
        assert not generalised.exact and not structural.exact
        assert generalised.constant == 1
        assert structural.value > bound_placecover(middle).value
        assert generalised.value > small_solution_bound(build_ilp_n(middle), 1)

    def test_report(self, right):
        data = bound_placecover(right).to_dict()
        assert data == {"value": "729", "formula": "(||T|| + 2)^|T|", "constant": None, "exact": True}

    def test_invalid_arguments(self, right):
        with pytest.raises(WfsoundError) as e:
            bound_z_norm_cap(right, -1)
        assert e.value.code == ERR.invalid_argument
        with pytest.raises(WfsoundError):
            bound_structural_K(right, 0)


def zero_sum_family(rng, size, d):
    vectors = [tuple(int(v) for v in rng.integers(-2, 3, size=d)) for _ in range(size - 1)]
    vectors.append(tuple(-sum(column) for column in zip(*vectors)))
    return vectors


class TestSteinitz:
    def test_small_example(self):
        vectors = [(1, 0), (1, 0), (-1, 1), (-1, -1)]
        order = steinitz_reorder_small(vectors)
        assert sorted(order) == [0, 1, 2, 3]
        prefix = (0, 0)
        for index in order:
            prefix = tuple(a + b for a, b in zip(prefix, vectors[index]))
            assert norm(prefix) <= 2

    def test_not_zero_sum(self):
        with pytest.raises(WfsoundError) as e:
            steinitz_reorder_small([(1,), (1,)])
        assert e.value.code == ERR.invalid_argument

    def test_too_many_vectors(self):
        with pytest.raises(WfsoundError) as e:
            steinitz_reorder_small([(0,)] * 11)
        assert e.value.code == ERR.scale_too_large

    def test_mixed_dimensions(self):
        with pytest.raises(WfsoundError):
            steinitz_reorder_small([(1, 0), (-1,)])

    def test_random_base_orders(self):
        rng = np.random.default_rng(7)
        for _ in range(500):
            d = int(rng.integers(1, 4))
            size = int(rng.integers(2, 9))
            vectors = zero_sum_family(rng, size, d)
            order = steinitz_reorder_small(vectors)
            assert sorted(order) == list(range(size))
            b = max(norm(v) for v in vectors)
            prefix = (0,) * d
            for index in order:
                prefix = tuple(a + c for a, c in zip(prefix, vectors[index]))
                assert norm(prefix) <= d * b

    def test_random_extended_orders(self):
        rng = np.random.default_rng(11)
        for _ in range(500):
            d = int(rng.integers(1, 4))
            size = int(rng.integers(1, 9))
            vectors = [tuple(int(v) for v in rng.integers(-1, 2, size=d)) for _ in range(size)]
            result = steinitz_extended_reorder_small(vectors)
            assert result.permutation[0] == 0
            assert sorted(result.permutation) == list(range(size))
            assert all(a <= b for a, b in zip(result.coefficients, result.coefficients[1:]))
            assert result.achieved_bound <= result.bound
            b = max(norm(v) for v in vectors)
            assert result.bound == b * (d + 2)

    def test_extended_norm_limit(self):
        with pytest.raises(WfsoundError) as e:
            steinitz_extended_reorder_small([(5,), (5,), (5,)])
        assert e.value.code == ERR.scale_too_large

    def test_alternating_line(self):
        vectors = [(1,), (-1,), (1,), (-1,)]
        order = steinitz_reorder_small(vectors)
        prefix = 0
        for index in order:
            prefix += vectors[index][0]
            assert prefix in (0, 1)

    def test_unit_directions(self):
        vectors = [(1, 0), (-1, 0), (0, 1), (0, -1)]
        order = steinitz_reorder_small(vectors)
        prefix = (0, 0)
        for index in order:
            prefix = tuple(a + b for a, b in zip(prefix, vectors[index]))
            assert norm(prefix) <= 2

    def test_extended_zero_total(self):
        result = steinitz_extended_reorder_small([(1, 0), (-1, 1), (0, -1)])
        assert all(c == 0 for c in result.coefficients)
        assert result.permutation[0] == 0

    def test_extended_single_vector(self):
        result = steinitz_extended_reorder_small([(3,)])
        assert result.permutation == [0]
        assert 0 <= result.coefficients[0] <= 1
        assert result.achieved_bound <= result.bound

    def test_extended_staircase(self):
        # steps along the diagonal, total (12, 12)
        vectors = [(2, 1), (1, 2)] * 4
        result = steinitz_extended_reorder_small(vectors)
        assert result.bound == 2 * 4
        assert result.achieved_bound <= 8
        assert result.permutation[0] == 0
        assert result.coefficients[0] >= 0
