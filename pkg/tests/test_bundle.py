import math

import numpy as np
import pytest

from cartanbundle import (
    CartanMotion,
    CutLocusError,
    DpElement,
    DpGenerator,
    Motion,
    NotInCartanModelError,
    Signature,
    bundle_act,
    bundle_point,
    double_projection,
    dp_exp_full,
    dp_log_full,
    find_transporter,
    in_Q,
    is_fixed_point,
    rho,
    rho_inv,
    se_inv,
    se_mul,
    sigma,
    tau,
    twisted_act,
    coordinate_plane,
)
from cartanbundle.sampling import (
    sample_bundle_point,
    sample_cartan_motion,
    sample_dp_element,
    sample_fixed_point,
    sample_motion,
    sample_rotation,
)

from oracles import svd_projector_oracle


def rot2(theta):
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


SIG22 = Signature(2, 2)


class TestSigma:
    def test_translation(self):
        sig = Signature(1, 2)
        g = sigma(Motion(np.eye(3), np.array([1.0, 2.0, 3.0])), sig)
        assert np.allclose(g.R, np.eye(3))
        assert np.allclose(g.X, [-1.0, 2.0, 3.0])

    def test_involutive_exact(self, rng):
        g = sample_motion(rng, 4)
        gg = sigma(sigma(g, SIG22), SIG22)
        assert np.array_equal(gg.R, g.R) and np.array_equal(gg.X, g.X)

    def test_automorphism(self, rng):
        for _ in range(30):
            g, h = sample_motion(rng, 4), sample_motion(rng, 4)
            lhs = sigma(se_mul(g, h), SIG22)
            rhs = se_mul(sigma(g, SIG22), sigma(h, SIG22))
            assert np.linalg.norm(lhs.homogeneous() - rhs.homogeneous()) <= 1e-12 * 4


class TestFixedPoints:
    def test_block_motion_is_fixed(self, rng):
        for _ in range(30):
            g = sample_fixed_point(rng, SIG22)
            assert is_fixed_point(g, SIG22)
            assert np.linalg.norm(sigma(g, SIG22).homogeneous() - g.homogeneous()) <= 1e-12

    def test_translation_in_plane_not_fixed(self):
        sig = Signature(1, 1)
        assert not is_fixed_point(Motion(np.eye(2), np.array([1.0, 0.0])), sig)

    def test_generic_rotation_not_fixed(self):
        sig = Signature(1, 1)
        assert not is_fixed_point(Motion(rot2(0.9), np.zeros(2)), sig)

    def test_tau_constant_on_cosets(self, rng):
        g = sample_motion(rng, 4)
        h = sample_fixed_point(rng, SIG22)
        t1 = tau(g, SIG22)
        t2 = tau(se_mul(g, h), SIG22)
        assert np.linalg.norm(t1.motion.homogeneous() - t2.motion.homogeneous()) <= 1e-10


class TestQ:
    def test_identity(self):
        assert in_Q(Motion(np.eye(4), np.zeros(4)), SIG22)

    def test_translation_in_reference_plane(self):
        assert in_Q(Motion(np.eye(4), np.array([1.0, 0, 0, 0])), SIG22)

    def test_translation_in_complement_not_in_q(self):
        assert not in_Q(Motion(np.eye(4), np.array([0, 0, 0, 1.0])), SIG22)

    def test_invariance(self, rng):
        for _ in range(50):
            s = sample_cartan_motion(rng, 4, 2)
            a = sample_motion(rng, 4)
            assert in_Q(twisted_act(a, s.motion, SIG22), SIG22)


class TestTwistedAction:
    def test_identity_acts_trivially(self, rng):
        g = sample_motion(rng, 4)
        acted = twisted_act(Motion(np.eye(4), np.zeros(4)), g, SIG22)
        assert np.allclose(acted.homogeneous(), g.homogeneous())

    def test_orbit_of_identity(self, rng):
        a = sample_motion(rng, 4)
        acted = twisted_act(a, Motion(np.eye(4), np.zeros(4)), SIG22)
        J = SIG22.matrix
        core = a.R @ J @ a.R.T
        assert np.allclose(acted.R, core @ J, atol=1e-12)
        assert np.allclose(acted.X, a.X - core @ a.X, atol=1e-12)

    def test_action_law(self, rng):
        for _ in range(30):
            a1, a2 = sample_motion(rng, 4), sample_motion(rng, 4)
            g = sample_cartan_motion(rng, 4, 2).motion
            lhs = twisted_act(se_mul(a1, a2), g, SIG22)
            rhs = twisted_act(a1, twisted_act(a2, g, SIG22), SIG22)
            assert np.linalg.norm(lhs.homogeneous() - rhs.homogeneous()) <= 1e-10


class TestTau:
    def test_translation(self, rng):
        X = rng.standard_normal(4)
        t = tau(Motion(np.eye(4), X), SIG22)
        expected = X.copy()
        expected[:2] *= 2
        expected[2:] = 0
        assert np.allclose(t.motion.R, np.eye(4))
        assert np.allclose(t.motion.X, expected, atol=1e-12)

    def test_pure_rotation(self, rng):
        A = sample_rotation(rng, 4)
        t = tau(Motion(A, np.zeros(4)), SIG22)
        J = SIG22.matrix
        assert np.allclose(t.motion.R, A @ J @ A.T @ J, atol=1e-12)
        assert np.allclose(t.motion.X, 0, atol=1e-12)

    def test_image_in_q(self, rng):
        for _ in range(50):
            g = sample_motion(rng, 4)
            t = tau(g, SIG22)
            assert in_Q(t.motion, SIG22)
            d = sigma(t.motion, SIG22).homogeneous() - se_inv(t.motion).homogeneous()
            assert np.linalg.norm(d) <= 1e-10


class TestDoubleProjection:
    def test_identity_rotation(self, rng):
        X = rng.standard_normal(4)
        D = double_projection(np.eye(4), X, SIG22)
        expected = np.concatenate([2 * X[:2], np.zeros(2)])
        assert np.allclose(D, expected)

    def test_orthogonal_vector(self, rng):
        A = sample_rotation(rng, 4)
        X = A[:, 3]  # orthogonal to the moved plane
        assert np.allclose(double_projection(A, X, SIG22), 0, atol=1e-12)

    def test_matches_projector_oracle(self, rng):
        for _ in range(50):
            A = sample_rotation(rng, 4)
            X = rng.standard_normal(4)
            D = double_projection(A, X, SIG22)
            P = svd_projector_oracle(A[:, :2])
            assert np.linalg.norm(D - 2 * P @ X) <= 1e-10


class TestRho:
    def test_identity(self):
        s = CartanMotion.certify(Motion(np.eye(4), np.zeros(4)), SIG22)
        b = rho(s)
        assert np.allclose(b.plane.projector, np.diag([1.0, 1, 0, 0]))
        assert np.allclose(b.fiber, 0)

    def test_half_angle_fiber(self):
        theta = 1.1
        sig = Signature(1, 1)
        V = np.array([math.cos(theta / 2), math.sin(theta / 2)])
        Y = 0.7 * V
        s = CartanMotion.certify(Motion(rot2(theta), Y), sig)
        b = rho(s)
        assert np.linalg.norm(b.plane.projector - np.outer(V, V)) <= 1e-10
        assert np.allclose(b.fiber, Y)

    def test_rho_inv_identity(self):
        b = bundle_point(coordinate_plane(4, 2), np.zeros(4))
        s = rho_inv(b)
        assert np.allclose(s.motion.homogeneous(), np.eye(5), atol=1e-12)

    def test_rho_inv_reference_fiber(self, rng):
        Y = np.concatenate([rng.standard_normal(2), np.zeros(2)])
        b = bundle_point(coordinate_plane(4, 2), Y)
        s = rho_inv(b)
        assert np.allclose(s.motion.R, np.eye(4), atol=1e-12)
        assert np.allclose(s.motion.X, Y)
        # sigma(g) = (I, J Y) = (I, -Y) = g^{-1}
        assert in_Q(s.motion, SIG22)

    def test_roundtrips(self, rng):
        for _ in range(50):
            s = sample_cartan_motion(rng, 4, 2)
            s2 = rho_inv(rho(s))
            assert np.linalg.norm(s2.motion.homogeneous() - s.motion.homogeneous()) <= 1e-9
            b = sample_bundle_point(rng, 5, 2)
            b2 = rho(rho_inv(b))
            assert np.linalg.norm(b2.plane.projector - b.plane.projector) <= 1e-9
            assert np.linalg.norm(b2.fiber - b.fiber) <= 1e-9

    def test_fiber_must_lie_in_plane(self):
        with pytest.raises(NotInCartanModelError):
            bundle_point(coordinate_plane(4, 2), np.array([0, 0, 0, 1.0]))


class TestBundleAction:
    def test_identity(self, rng):
        b = sample_bundle_point(rng, 4, 2)
        b2 = bundle_act(Motion(np.eye(4), np.zeros(4)), b, SIG22)
        assert np.allclose(b2.plane.projector, b.plane.projector)
        assert np.allclose(b2.fiber, b.fiber)

    def test_translation_on_reference(self, rng):
        X = rng.standard_normal(4)
        b = bundle_point(coordinate_plane(4, 2), np.zeros(4))
        b2 = bundle_act(Motion(np.eye(4), X), b, SIG22)
        expected = np.concatenate([2 * X[:2], np.zeros(2)])
        assert np.allclose(b2.fiber, expected)

    def test_equivariance(self, rng):
        for _ in range(50):
            s = sample_cartan_motion(rng, 4, 2)
            a = sample_motion(rng, 4)
            acted = CartanMotion.certify(twisted_act(a, s.motion, SIG22), SIG22)
            lhs = rho(acted)
            rhs = bundle_act(a, rho(s), SIG22)
            assert np.linalg.norm(lhs.plane.projector - rhs.plane.projector) <= 1e-9
            assert np.linalg.norm(lhs.fiber - rhs.fiber) <= 1e-9

    def test_action_law(self, rng):
        for _ in range(30):
            a1, a2 = sample_motion(rng, 4), sample_motion(rng, 4)
            b = sample_bundle_point(rng, 4, 2)
            lhs = bundle_act(se_mul(a1, a2), b, SIG22)
            rhs = bundle_act(a1, bundle_act(a2, b, SIG22), SIG22)
            assert np.linalg.norm(lhs.plane.projector - rhs.plane.projector) <= 1e-10
            assert np.linalg.norm(lhs.fiber - rhs.fiber) <= 1e-10


class TestTransporter:
    def test_fixed_point_case(self):
        b = bundle_point(coordinate_plane(4, 2), np.zeros(4))
        a = find_transporter(b, b)
        assert np.allclose(a.homogeneous(), np.eye(5), atol=1e-12)

    def test_fiber_shift(self, rng):
        Y = np.concatenate([rng.standard_normal(2), np.zeros(2)])
        src = bundle_point(coordinate_plane(4, 2), np.zeros(4))
        dst = bundle_point(coordinate_plane(4, 2), Y)
        a = find_transporter(src, dst)
        assert np.allclose(a.X, Y / 2)
        moved = bundle_act(a, src, SIG22)
        assert np.linalg.norm(moved.fiber - Y) <= 1e-12

    def test_random_pairs(self, rng):
        for _ in range(50):
            src = sample_bundle_point(rng, 5, 2)
            dst = sample_bundle_point(rng, 5, 2)
            a = find_transporter(src, dst)
            moved = bundle_act(a, src, Signature(2, 3))
            assert np.linalg.norm(moved.plane.projector - dst.plane.projector) <= 1e-9
            assert np.linalg.norm(moved.fiber - dst.fiber) <= 1e-9


class TestDpFull:
    def test_zero_element(self):
        xi = DpElement(gen=DpGenerator(p=2, q=2, B=np.zeros((2, 2))), v=np.zeros(2))
        s = dp_exp_full(xi)
        assert np.allclose(s.motion.homogeneous(), np.eye(5), atol=1e-12)

    def test_line_bundle_value(self):
        xi = DpElement(gen=DpGenerator(p=1, q=1, B=np.array([[math.pi]])), v=np.array([1.0]))
        s = dp_exp_full(xi)
        assert np.allclose(s.motion.R, -np.eye(2), atol=1e-12)
        assert np.allclose(s.motion.X, [0.0, 2 / math.pi], atol=1e-13)

    def test_routes_agree(self, rng):
        from cartanbundle.liegroup import Screw, se_exp

        for _ in range(50):
            xi = sample_dp_element(rng, 2, 2, bound=math.pi - 0.1)
            s = dp_exp_full(xi)
            screw = xi.screw()
            half = se_exp(Screw(0.5 * screw.omega, 0.5 * screw.v))
            via_tau = tau(half, SIG22)
            d = s.motion.homogeneous() - via_tau.motion.homogeneous()
            assert np.linalg.norm(d) <= 1e-10

    def test_log_identity(self):
        s = CartanMotion.certify(Motion(np.eye(4), np.zeros(4)), SIG22)
        xi = dp_log_full(s)
        assert np.allclose(xi.gen.B, 0) and np.allclose(xi.v, 0)

    def test_log_half_angle(self):
        sig = Signature(1, 1)
        theta = math.pi / 2
        f = 2 * math.sin(theta / 2) / theta
        Y = f * np.array([math.cos(theta / 2), math.sin(theta / 2)])
        s = CartanMotion.certify(Motion(rot2(theta), Y), sig)
        xi = dp_log_full(s)
        assert np.allclose(xi.gen.B, [[theta]], atol=1e-12)
        assert np.allclose(xi.v, [1.0], atol=1e-12)

    def test_log_at_cut_locus_raises(self):
        sig = Signature(1, 1)
        s = CartanMotion.certify(Motion(-np.eye(2), np.array([0.0, 2 / math.pi])), sig)
        with pytest.raises(CutLocusError):
            dp_log_full(s)

    def test_roundtrip(self, rng):
        for _ in range(50):
            xi = sample_dp_element(rng, 2, 3, bound=math.pi - 0.1)
            s = dp_exp_full(xi)
            xi2 = dp_log_full(s)
            assert np.linalg.norm(xi2.gen.B - xi.gen.B) <= 1e-8
            assert np.linalg.norm(xi2.v - xi.v) <= 1e-8


class TestCartanMotionValidation:
    def test_rejects_generic_motion(self, rng):
        g = sample_motion(rng, 4)
        if in_Q(g, SIG22):  # overwhelmingly unlikely
            return
        with pytest.raises(NotInCartanModelError):
            CartanMotion.certify(g, SIG22)

    def test_rejects_fiber_outside_plane(self):
        with pytest.raises(NotInCartanModelError):
            CartanMotion.certify(Motion(np.eye(4), np.array([0, 0, 1.0, 0])), SIG22)
