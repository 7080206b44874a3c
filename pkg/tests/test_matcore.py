import math

import numpy as np
import pytest

from cartanbundle import (
    DegenerateSpanError,
    DimensionMismatchError,
    IllConditionedSpectrumError,
    NotOrthogonalSymmetryError,
)
from cartanbundle.matcore import (
    basis_vector,
    canonical_rotation_form,
    complete_to_special_orthogonal,
    eigenspace_of_symmetric_involution,
    orthonormalize,
    projector,
    skew_canonical_form,
    skew_wedge,
)
from cartanbundle.sampling import sample_rotation, sample_skew

from oracles import series_exp_oracle, svd_projector_oracle


class TestSkewWedge:
    def test_two_by_two(self):
        assert skew_wedge(1, 2, 2).tolist() == [[0, 1], [-1, 0]]

    def test_three_by_three(self):
        W = skew_wedge(1, 2, 3)
        expected = np.zeros((3, 3))
        expected[0, 1], expected[1, 0] = 1, -1
        assert np.array_equal(W, expected)

    def test_rotation_convention(self):
        # exp(-theta e_1 ^ e_2) sends e_1 to cos(theta) e_1 + sin(theta) e_2
        R = series_exp_oracle(-(math.pi / 2) * skew_wedge(1, 2, 2))
        assert np.allclose(R @ [1, 0], [0, 1], atol=1e-12)

    def test_antisymmetry_exact(self):
        for n in range(2, 7):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    W = skew_wedge(i, j, n)
                    assert np.array_equal(W, -W.T)

    @pytest.mark.parametrize("i,j,n", [(0, 1, 3), (2, 2, 3), (1, 4, 3), (3, 1, 3)])
    def test_bad_indices(self, i, j, n):
        with pytest.raises(DimensionMismatchError):
            skew_wedge(i, j, n)


class TestOrthonormalize:
    def test_already_orthonormal(self):
        V = np.eye(3)[:, :2]
        assert np.allclose(orthonormalize(V), V)

    def test_scaling_removed(self):
        V = np.array([[2.0], [0.0]])
        assert np.allclose(orthonormalize(V), [[1.0], [0.0]])

    def test_span_preserved(self):
        V = np.array([[1.0, 0.0], [1.0, 1.0]])
        F = orthonormalize(V)
        assert np.allclose(F.T @ F, np.eye(2), atol=1e-12)
        assert np.allclose(projector(F), svd_projector_oracle(V), atol=1e-12)

    def test_random_spans(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 7))
            p = int(rng.integers(1, n))
            V = rng.standard_normal((n, p))
            F = orthonormalize(V)
            assert np.allclose(F.T @ F, np.eye(p), atol=1e-12)
            assert np.allclose(projector(F), svd_projector_oracle(V), atol=1e-10)

    def test_deterministic(self, rng):
        V = rng.standard_normal((5, 3))
        assert np.array_equal(orthonormalize(V), orthonormalize(V.copy()))

    def test_rank_deficient(self):
        V = np.array([[1.0, 2.0], [1.0, 2.0]])
        with pytest.raises(DegenerateSpanError):
            orthonormalize(V)


class TestProjector:
    def test_axis(self):
        assert np.array_equal(projector(np.array([[1.0], [0.0]])), np.diag([1.0, 0.0]))

    def test_full_space(self):
        assert np.allclose(projector(np.eye(2)), np.eye(2))

    def test_diagonal_line(self):
        F = np.array([[1.0], [1.0]]) / math.sqrt(2)
        assert np.allclose(projector(F), [[0.5, 0.5], [0.5, 0.5]])


class TestCompletion:
    def test_coordinate_frame(self):
        F = np.eye(4)[:, :2]
        A = complete_to_special_orthogonal(F)
        assert np.allclose(A[:, :2], F)
        assert np.allclose(A.T @ A, np.eye(4), atol=1e-12)
        assert np.isclose(np.linalg.det(A), 1.0)

    def test_e2_line(self):
        A = complete_to_special_orthogonal(np.array([[0.0], [1.0]]))
        assert np.isclose(np.linalg.det(A), 1.0)
        assert np.allclose(np.abs(A[:, 0]), [0, 1])

    def test_random_frames(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 8))
            p = int(rng.integers(1, n + 1))
            F = orthonormalize(rng.standard_normal((n, p)))
            A = complete_to_special_orthogonal(F)
            assert abs(np.linalg.det(A) - 1.0) < 1e-10
            assert np.allclose(projector(A[:, :p]), projector(F), atol=1e-9)

    def test_pure_function_of_frame(self, rng):
        F = orthonormalize(rng.standard_normal((5, 2)))
        assert np.array_equal(
            complete_to_special_orthogonal(F), complete_to_special_orthogonal(F.copy())
        )


def rot2(theta):
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


class TestCanonicalRotationForm:
    def test_identity(self):
        form = canonical_rotation_form(np.eye(3))
        assert form.angles == ()
        assert form.fixed_dim == 3

    def test_already_canonical(self):
        R = np.eye(3)
        R[:2, :2] = rot2(math.pi / 2)
        form = canonical_rotation_form(R)
        assert form.fixed_dim == 1
        assert np.allclose(form.angles, [math.pi / 2])
        assert np.allclose(form.rotation_matrix(), R, atol=1e-12)

    def test_minus_identity(self):
        form = canonical_rotation_form(-np.eye(2))
        assert np.allclose(form.angles, [math.pi])
        assert np.allclose(form.rotation_matrix(), -np.eye(2), atol=1e-12)

    def test_random_reconstruction(self, rng):
        for _ in range(200):
            n = int(rng.integers(2, 9))
            R = sample_rotation(rng, n)
            form = canonical_rotation_form(R)
            assert np.linalg.norm(form.rotation_matrix() - R) <= 1e-10
            assert abs(np.linalg.det(form.Q) - 1.0) < 1e-10
            assert np.allclose(form.Q.T @ form.Q, np.eye(n), atol=1e-12)
            angles = np.asarray(form.angles)
            assert np.all(angles[:-1] >= angles[1:] - 1e-15)
            assert np.all(np.abs(angles) <= math.pi)
            assert np.all(angles != 0)
            assert 2 * len(angles) + form.fixed_dim == n

    def test_non_orthogonal_rejected(self):
        with pytest.raises(IllConditionedSpectrumError):
            canonical_rotation_form(np.array([[1.0, 1.0], [0.0, 1.0]]))


class TestSkewCanonicalForm:
    def test_reconstruction(self, rng):
        for _ in range(100):
            n = int(rng.integers(2, 9))
            W = sample_skew(rng, n, scale=float(rng.uniform(0.1, 5)))
            form = skew_canonical_form(W)
            assert np.linalg.norm(form.skew_matrix() - W) <= 1e-10 * n * max(
                1.0, np.linalg.norm(W)
            )
            assert series_exp_oracle(W).shape == form.rotation_matrix().shape


class TestEigenspaceOfSymmetricInvolution:
    def test_diagonal_signature(self):
        J = np.diag([-1.0, -1.0, 1.0, 1.0])
        F = eigenspace_of_symmetric_involution(J, -1)
        assert F.shape == (4, 2)
        assert np.allclose(projector(F), np.diag([1.0, 1.0, 0.0, 0.0]))

    def test_empty_eigenspace(self):
        F = eigenspace_of_symmetric_involution(np.eye(3), -1)
        assert F.shape == (3, 0)

    def test_conjugated_signature(self, rng):
        J = np.diag([-1.0, -1.0, 1.0, 1.0])
        for _ in range(50):
            A = sample_rotation(rng, 4)
            S = A @ J @ A.T
            F = eigenspace_of_symmetric_involution(S, -1)
            assert F.shape == (4, 2)
            assert np.linalg.norm(S @ F + F) <= 1e-10

    def test_rejects_non_symmetry(self, rng):
        with pytest.raises(NotOrthogonalSymmetryError):
            eigenspace_of_symmetric_involution(rot2(0.3), -1)


def test_basis_vector():
    assert basis_vector(2, 3).tolist() == [0, 1, 0]
    with pytest.raises(DimensionMismatchError):
        basis_vector(4, 3)
