import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import line, line_at_angle
from sumspaces import (
    EMatrix,
    SubspaceFamily,
    WrongArity,
    build_e_matrix,
    e_matrix_with_bounds,
    evaluate_criterion,
    leading_minors,
    spectral_radius,
    three_subspace_angle_test,
)


def hollow_symmetric(rng, n, scale=1.0):
    """Random symmetric hollow nonnegative matrix with entries in [0, scale]."""
    upper = rng.uniform(0.0, scale, size=(n, n))
    e = np.triu(upper, k=1)
    return EMatrix(n, e + e.T)


def power_iteration_radius(a, steps=10_000, seed=0):
    """Independent oracle: dominant eigenvalue by plain power iteration."""
    rng = np.random.default_rng(seed)
    x = rng.normal(size=a.shape[0])
    x /= np.linalg.norm(x)
    for _ in range(steps):
        y = a @ x
        ny = np.linalg.norm(y)
        if ny == 0.0:
            return 0.0
        x = y / ny
    return float(x @ a @ x)


class TestEMatrixValidation:
    def test_rejects_nonsymmetric(self):
        with pytest.raises(ValueError):
            EMatrix(2, [[0.0, 0.5], [0.3, 0.0]])

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ValueError):
            EMatrix(2, [[0.1, 0.5], [0.5, 0.0]])

    def test_rejects_negative_entries(self):
        with pytest.raises(ValueError):
            EMatrix(2, [[0.0, -0.5], [-0.5, 0.0]])

    def test_repairs_roundoff_noise(self):
        e = EMatrix(2, [[1e-14, 0.5 + 5e-14], [0.5, -1e-14]])
        assert e.entries[0, 0] == 0.0
        assert e.entries[1, 1] == 0.0
        assert e.entries[0, 1] == e.entries[1, 0]

    def test_rejects_wrong_n(self):
        with pytest.raises(ValueError):
            EMatrix(3, [[0.0, 0.5], [0.5, 0.0]])


class TestBuildEMatrix:
    def test_single_subspace(self):
        f = SubspaceFamily(2, (line(1.0, 0.0),))
        np.testing.assert_array_equal(build_e_matrix(f).entries, [[0.0]])

    def test_sixty_degree_pair(self):
        f = SubspaceFamily(2, (line(1.0, 0.0), line_at_angle(np.pi / 3)))
        np.testing.assert_allclose(
            build_e_matrix(f).entries, [[0.0, 0.5], [0.5, 0.0]], atol=1e-12
        )

    def test_coordinate_lines_are_mutually_orthogonal(self):
        f = SubspaceFamily(
            3, (line(1, 0, 0), line(0, 1, 0), line(0, 0, 1))
        )
        np.testing.assert_array_equal(build_e_matrix(f).entries, np.zeros((3, 3)))


class TestUserSuppliedBounds:
    def test_looser_bounds_accepted(self):
        f = SubspaceFamily(2, (line(1.0, 0.0), line_at_angle(np.pi / 3)))
        e = e_matrix_with_bounds(f, [[0.0, 0.7], [0.7, 0.0]])
        assert e.entries[0, 1] == 0.7

    def test_bounds_below_measured_rejected(self):
        f = SubspaceFamily(2, (line(1.0, 0.0), line_at_angle(np.pi / 3)))
        with pytest.raises(ValueError):
            e_matrix_with_bounds(f, [[0.0, 0.3], [0.3, 0.0]])


class TestSpectralRadius:
    def test_two_by_two(self):
        assert spectral_radius(EMatrix(2, [[0.0, 0.5], [0.5, 0.0]])) == pytest.approx(
            0.5, abs=1e-14
        )

    def test_constant_off_diagonal(self):
        n, eps = 4, 0.3
        e = EMatrix(n, eps * (np.ones((n, n)) - np.eye(n)))
        assert spectral_radius(e) == pytest.approx((n - 1) * eps, abs=1e-12)

    def test_against_power_iteration_oracle(self):
        rng = np.random.default_rng(20)
        e = hollow_symmetric(rng, 5)
        assert spectral_radius(e) == pytest.approx(
            power_iteration_radius(e.entries), abs=1e-8
        )


class TestLeadingMinors:
    def test_two_by_two(self):
        minors = leading_minors(EMatrix(2, [[0.0, 0.5], [0.5, 0.0]]))
        np.testing.assert_allclose(minors, [1.0, 0.75], atol=1e-14)

    def test_three_by_three_boundary(self):
        e = EMatrix(3, 0.5 * (np.ones((3, 3)) - np.eye(3)))
        minors = leading_minors(e)
        np.testing.assert_allclose(minors[:2], [1.0, 0.75], atol=1e-14)
        assert abs(minors[2]) <= 1e-12  # 1 - (3/4 + 1/4) = 0

    def test_zero_matrix(self):
        e = EMatrix(4, np.zeros((4, 4)))
        np.testing.assert_array_equal(leading_minors(e), np.ones(4))


class TestAngleSumTest:
    def test_boundary_all_half_excluded(self):
        e = EMatrix(3, 0.5 * (np.ones((3, 3)) - np.eye(3)))
        assert three_subspace_angle_test(e) is False

    def test_orthogonal_family(self):
        assert three_subspace_angle_test(EMatrix(3, np.zeros((3, 3)))) is True

    def test_single_coincident_pair_boundary(self):
        e = EMatrix(3, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])
        assert three_subspace_angle_test(e) is False

    def test_wrong_arity(self):
        with pytest.raises(WrongArity):
            three_subspace_angle_test(EMatrix(2, [[0.0, 0.5], [0.5, 0.0]]))


class TestEvaluateCriterion:
    def test_sixty_degree_pair(self):
        f = SubspaceFamily(2, (line(1.0, 0.0), line_at_angle(np.pi / 3)))
        rep = evaluate_criterion(build_e_matrix(f))
        assert rep.satisfied
        assert not rep.boundary
        assert rep.spectral_radius == pytest.approx(0.5, abs=1e-12)
        assert rep.margin == pytest.approx(0.5, abs=1e-12)

    def test_three_by_three_well_above_one(self):
        e = EMatrix(3, 0.6 * (np.ones((3, 3)) - np.eye(3)))
        rep = evaluate_criterion(e)
        assert not rep.satisfied
        assert rep.spectral_radius == pytest.approx(1.2, abs=1e-12)
        assert rep.angle_sum is not None

    def test_boundary_flagged_and_conservative(self):
        e = EMatrix(2, [[0.0, 1.0], [1.0, 0.0]])
        rep = evaluate_criterion(e)
        assert rep.boundary
        assert not rep.satisfied

    def test_randomized_equivalence_sweep(self):
        rng = np.random.default_rng(99)
        for _ in range(300):
            e = hollow_symmetric(rng, 3)
            rep = evaluate_criterion(e)  # raises InconsistencyError on a bug
            if rep.boundary:
                continue
            by_r = rep.spectral_radius < 1.0
            assert all(m > 0 for m in rep.leading_minors) == by_r
            assert (rep.angle_sum > np.pi) == by_r


class TestSpectralRadiusProperties:
    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6))
    def test_nonnegative_matrix_bounds(self, seed, n):
        e = hollow_symmetric(np.random.default_rng(seed), n)
        r = spectral_radius(e)
        off_max = e.entries.max()
        row_max = e.entries.sum(axis=1).max()
        assert r >= off_max - 1e-12
        assert r <= row_max + 1e-12

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), c=st.floats(0.0, 4.0))
    def test_scaling(self, seed, c):
        e = hollow_symmetric(np.random.default_rng(seed), 4)
        r = spectral_radius(e)
        scaled = spectral_radius(EMatrix(4, c * e.entries))
        assert scaled == pytest.approx(c * r, rel=1e-12, abs=1e-12)

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_entrywise_monotonicity(self, seed):
        rng = np.random.default_rng(seed)
        e = hollow_symmetric(rng, 4)
        bigger = hollow_symmetric(rng, 4, scale=0.5)
        combined = EMatrix(4, e.entries + bigger.entries)
        assert spectral_radius(combined) >= spectral_radius(e) - 1e-12
