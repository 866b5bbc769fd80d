import numpy as np
import pytest

from mrpsmc.linalg3 import (
    SingularMatrixError,
    cross,
    is_symmetric_positive_definite,
    mat3,
    skew,
    solve3,
    vec3,
)

J_REF = np.array([[1.49, 0.054, 0.0442],
                  [0.054, 1.51, 0.0],
                  [0.0442, 0.0, 1.56]])


class TestValidation:
    def test_vec3_accepts_lists(self):
        v = vec3([1, 2, 3])
        assert v.dtype == float and v.shape == (3,)

    def test_vec3_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="3 components"):
            vec3([1.0, 2.0])

    def test_vec3_rejects_non_finite(self):
        with pytest.raises(ValueError, match="non-finite"):
            vec3([1.0, np.nan, 3.0])
        with pytest.raises(ValueError, match="non-finite"):
            vec3([np.inf, 0.0, 0.0])

    def test_mat3_accepts_flat_row_major(self):
        m = mat3([1, 2, 3, 4, 5, 6, 7, 8, 9])
        assert m[1, 0] == 4.0

    def test_mat3_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="3x3"):
            mat3(np.eye(2))

    def test_mat3_rejects_non_finite(self):
        bad = np.eye(3)
        bad[2, 2] = np.inf
        with pytest.raises(ValueError, match="non-finite"):
            mat3(bad)


class TestSkew:
    def test_zero_vector(self):
        assert np.array_equal(skew(np.zeros(3)), np.zeros((3, 3)))

    def test_pattern(self):
        expected = np.array([[0.0, -3.0, 2.0],
                             [3.0, 0.0, -1.0],
                             [-2.0, 1.0, 0.0]])
        assert np.array_equal(skew(np.array([1.0, 2.0, 3.0])), expected)

    def test_basis_cross_product(self):
        e1, e2 = np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])
        assert np.array_equal(skew(e1) @ e2, np.array([0.0, 0.0, 1.0]))

    def test_matches_cross_and_antisymmetric(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            v, w = rng.uniform(-10, 10, 3), rng.uniform(-10, 10, 3)
            s = skew(v)
            np.testing.assert_allclose(s @ w, cross(v, w), rtol=1e-14, atol=1e-14)
            assert np.array_equal(s + s.T, np.zeros((3, 3)))

    def test_self_annihilation(self):
        # v^T skew(v) vanishes identically
        rng = np.random.default_rng(8)
        for _ in range(200):
            v = rng.uniform(-10, 10, 3)
            np.testing.assert_allclose(v @ skew(v), np.zeros(3), atol=1e-13)


class TestCross:
    def test_right_handed_basis(self):
        a = np.array([1.0, 0.0, 0.0])
        b = np.array([0.0, 1.0, 0.0])
        assert np.array_equal(cross(a, b), np.array([0.0, 0.0, 1.0]))

    def test_self_cross_vanishes(self):
        v = np.array([0.3, -1.7, 2.9])
        assert np.array_equal(cross(v, v), np.zeros(3))

    def test_inertia_coupling_value(self):
        # independent componentwise arithmetic: J @ (0,-0.1,0) = (-0.0054,
        # -0.151, 0), and (0,-0.1,0) x (-0.0054,-0.151,0) = (0, 0, -0.00054)
        omega = np.array([0.0, -0.1, 0.0])
        np.testing.assert_allclose(cross(omega, J_REF @ omega),
                                   [0.0, 0.0, -0.00054], rtol=1e-14, atol=0)

    def test_bilinear_anticommutative(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            a, b, c = (rng.uniform(-5, 5, 3) for _ in range(3))
            s, t = rng.uniform(-3, 3, 2)
            np.testing.assert_allclose(cross(s * a + t * b, c),
                                       s * cross(a, c) + t * cross(b, c),
                                       rtol=1e-12, atol=1e-12)
            np.testing.assert_allclose(cross(a, b), -cross(b, a),
                                       rtol=1e-14, atol=1e-14)


class TestSolve3:
    def test_identity(self):
        b = np.array([3.0, -1.5, 0.25])
        assert np.array_equal(solve3(np.eye(3), b), b)

    def test_inertia_round_trip(self):
        ones = np.ones(3)
        np.testing.assert_allclose(solve3(J_REF, J_REF @ ones), ones,
                                   rtol=1e-12, atol=1e-12)

    def test_diagonal(self):
        A = np.diag([2.0, 4.0, 8.0])
        np.testing.assert_allclose(solve3(A, np.array([2.0, 4.0, 8.0])),
                                   np.ones(3), rtol=1e-15)

    def test_singular_raises(self):
        with pytest.raises(SingularMatrixError):
            solve3(np.zeros((3, 3)), np.ones(3))
        rank2 = np.array([[1.0, 2.0, 3.0],
                          [2.0, 4.0, 6.0],
                          [1.0, 1.0, 1.0]])
        with pytest.raises(SingularMatrixError):
            solve3(rank2, np.ones(3))

    def test_residual_bound(self):
        rng = np.random.default_rng(10)
        checked = 0
        while checked < 200:
            A = rng.uniform(-5, 5, (3, 3))
            if abs(np.linalg.det(A)) <= 1e-3:
                continue
            b = rng.uniform(-100, 100, 3)
            x = solve3(A, b)
            res = np.linalg.norm(A @ x - b)
            assert res <= 1e-12 * max(1.0, np.linalg.norm(b))
            checked += 1


class TestSpdPredicate:
    def test_reference_inertia(self):
        assert is_symmetric_positive_definite(J_REF, 1e-9)

    def test_scalar_l_matrix(self):
        assert is_symmetric_positive_definite(0.04 * np.eye(3), 1e-9)

    def test_negative_eigenvalue(self):
        assert not is_symmetric_positive_definite(np.diag([1.0, -1.0, 1.0]), 1e-9)

    def test_asymmetric_rejected(self):
        M = np.eye(3)
        M[0, 1] = 1e-3
        assert not is_symmetric_positive_definite(M, 1e-9)

    def test_asymmetry_within_tolerance_allowed(self):
        M = np.eye(3)
        M[0, 1] = 1e-12
        assert is_symmetric_positive_definite(M, 1e-9)

    def test_positive_semidefinite_rejected(self):
        assert not is_symmetric_positive_definite(np.diag([1.0, 1.0, 0.0]), 1e-9)
