import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurcurv.majorization import (
    MajorizationPair,
    is_doubly_stochastic,
    majorizes,
    mixing_path,
    sample_comparable_pair,
    sample_doubly_stochastic,
    validate_density,
)


def brute_force_more_mixed(x, y, tol=1e-12):
    """Independent prefix-sum oracle, plain sorting and running sums."""
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    px = py = 0
    for k in range(len(xs) - 1):
        px += xs[k]
        py += ys[k]
        if px > py + tol:
            return False
    return True


def random_density(rng, n):
    return rng.dirichlet(np.ones(n))


class TestMajorizes:
    def test_uniform_dominates(self):
        assert majorizes([1 / 3, 1 / 3, 1 / 3], [0.5, 0.3, 0.2])

    def test_reflexive(self):
        assert majorizes([0.6, 0.4], [0.6, 0.4])

    def test_qutrit_reference_pair(self):
        assert majorizes([1 / 6, 1 / 6, 2 / 3], [2 / 9, 1 / 9, 2 / 3])
        assert not majorizes([2 / 9, 1 / 9, 2 / 3], [1 / 6, 1 / 6, 2 / 3])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="incomparable dimensions"):
            majorizes([0.5, 0.5], [0.2, 0.3, 0.5])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            validate_density([0.0, 1.0])
        with pytest.raises(ValueError):
            validate_density([0.5, 0.6])

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_uniform_dominates_random(self, n):
        rng = np.random.default_rng(n)
        u = np.full(n, 1.0 / n)
        for _ in range(50):
            assert majorizes(u, random_density(rng, n))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_agrees_with_brute_force_on_rationals(self, n):
        # every positive n-part composition of 6, exact arithmetic
        parts = [
            c
            for c in itertools.product(range(1, 7), repeat=n)
            if sum(c) == 6
        ]
        vectors = [[Fraction(a, 6) for a in c] for c in parts]
        for vx, vy in itertools.product(vectors, repeat=2):
            fx = [float(a) for a in vx]
            fy = [float(a) for a in vy]
            exact = all(
                sum(sorted(vx, reverse=True)[: k + 1])
                <= sum(sorted(vy, reverse=True)[: k + 1])
                for k in range(n - 1)
            )
            assert majorizes(fx, fy) == exact

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(2, 5))
    def test_matches_oracle_on_random_pairs(self, seed, n):
        rng = np.random.default_rng(seed)
        x, y = random_density(rng, n), random_density(rng, n)
        assert majorizes(x, y) == brute_force_more_mixed(x, y)


class TestDoublyStochastic:
    def test_single_summand_is_permutation(self):
        T = sample_doubly_stochastic(3, 1, seed=11)
        assert is_doubly_stochastic(T)
        assert np.allclose(np.sort(T, axis=None)[-3:], 1.0)
        assert np.count_nonzero(T) == 3

    def test_row_and_column_sums_over_samples(self):
        rng = np.random.default_rng(0)
        means = []
        for _ in range(1000):
            T = sample_doubly_stochastic(2, 40, rng=rng)
            assert is_doubly_stochastic(T)
            means.append(T[0, 0])
        # rows concentrate toward (1/2, 1/2) in expectation
        assert abs(np.mean(means) - 0.5) < 0.05

    def test_unital_trace_and_positivity_preserving(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            n = int(rng.integers(2, 6))
            T = sample_doubly_stochastic(n, n * n, rng=rng)
            e = np.ones(n)
            assert np.allclose(T @ e, e, atol=1e-12)
            v = rng.uniform(0.0, 2.0, size=n)
            w = T @ v
            assert np.all(w >= -1e-15)
            assert abs(w.sum() - v.sum()) < 1e-12

    def test_deterministic_for_seed(self):
        assert np.array_equal(
            sample_doubly_stochastic(4, 16, seed=7),
            sample_doubly_stochastic(4, 16, seed=7),
        )

    def test_preconditions(self):
        with pytest.raises(ValueError):
            sample_doubly_stochastic(1, 3)
        with pytest.raises(ValueError):
            sample_doubly_stochastic(3, 0)


class TestComparablePairs:
    def test_pairs_pass_prefix_oracle(self):
        for seed in range(10 ** 4):
            pair = sample_comparable_pair(3, seed=seed)
            assert brute_force_more_mixed(pair.more_mixed, pair.less_mixed)

    def test_witness_maps_less_to_more(self):
        for seed in range(200):
            pair = sample_comparable_pair(4, seed=seed)
            assert np.allclose(
                pair.witness @ pair.less_mixed, pair.more_mixed, atol=1e-10
            )

    def test_identity_witness_gives_equal_pair(self):
        y = np.array([0.5, 0.3, 0.2])
        pair = MajorizationPair(more_mixed=np.eye(3) @ y, less_mixed=y, witness=np.eye(3))
        assert majorizes(pair.more_mixed, pair.less_mixed)
        assert pair.is_permutation_pair()

    def test_clamped_away_from_boundary(self):
        for seed in range(300):
            pair = sample_comparable_pair(3, seed=seed)
            assert pair.less_mixed.min() >= 1e-3 - 1e-15

    def test_transitivity_on_chains(self):
        rng = np.random.default_rng(9)
        for _ in range(1000):
            n = int(rng.integers(2, 5))
            z = random_density(rng, n) * 0.9 + 0.1 / n
            S = sample_doubly_stochastic(n, n * n, rng=rng)
            T = sample_doubly_stochastic(n, n * n, rng=rng)
            y = S @ z
            x = T @ y
            assert majorizes(x, y) and majorizes(y, z) and majorizes(x, z)


class TestMixingPath:
    def test_endpoints(self):
        rho = np.array([0.5, 0.2, 0.3])
        assert np.allclose(mixing_path(rho, 0.0), rho)
        assert np.allclose(mixing_path(rho, 1.0), np.full(3, 1 / 3))

    def test_midpoint_value_and_dominance(self):
        out = mixing_path([0.7, 0.2, 0.1], 0.5)
        assert np.allclose(out, [0.51666666666666672, 0.26666666666666666, 0.21666666666666667])
        assert majorizes(out, [0.7, 0.2, 0.1])

    def test_monotone_in_t(self):
        rng = np.random.default_rng(21)
        for _ in range(200):
            rho = random_density(rng, 4) * 0.9 + 0.025
            t1, t2 = np.sort(rng.uniform(0.0, 1.0, 2))
            assert majorizes(mixing_path(rho, t2), mixing_path(rho, t1))

    def test_domain(self):
        with pytest.raises(ValueError):
            mixing_path([0.5, 0.5], 1.5)
