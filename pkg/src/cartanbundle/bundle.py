"""Cartan model of the canonical vector bundle C(n,p) inside SE(n).

The involution sigma(R, X) = (J R J, J X) turns SE(n) into a symmetric
space whose Cartan model S_p = {g : sigma(g) = g^{-1}, identity component}
is diffeomorphic, via rho, to the bundle of pairs (plane, vector in the
plane). The twisted conjugation action on S_p transports to the transitive
SE(n) action (A, X) * (pi, Y) = (A pi, A Y + 2 pr_{A pi} X).
"""

from __future__ import annotations

import numpy as np

from dataclasses import dataclass

from .config import Tolerances, default_tolerances
from .errors import (
    DimensionMismatchError,
    NearSingularIsomorphismError,
    NotInCartanModelError,
    NumericalFaultError,
)
from .grassmann import (
    CartanRotation,
    DpGenerator,
    Plane,
    Signature,
    cartan_embed0,
    dp_log0,
    rho0,
    rotate_plane,
)
from .liegroup import (
    Motion,
    Screw,
    check_motion,
    se_exp,
    se_inv,
    se_mul,
    y_omega,
)
from .matcore import check_special_orthogonal, complete_to_special_orthogonal


@dataclass(frozen=True)
class BundlePoint:
    """A point (plane, fiber vector) of the canonical vector bundle."""

    plane: Plane
    fiber: np.ndarray

    @property
    def n(self) -> int:
        return self.plane.n


def bundle_point(
    plane: Plane, fiber: np.ndarray, tol: Tolerances | None = None
) -> BundlePoint:
    """Validated bundle point: the fiber vector must lie in the plane."""
    tol = tol or default_tolerances()
    fiber = np.asarray(fiber, dtype=float)
    if fiber.shape != (plane.n,) or not np.all(np.isfinite(fiber)):
        raise DimensionMismatchError("fiber must be a finite n-vector")
    residual = np.linalg.norm(plane.projector @ fiber - fiber)
    if residual > tol.fiber * (1.0 + np.linalg.norm(fiber)):
        raise NotInCartanModelError(
            "fiber vector does not lie in the plane", residual=float(residual)
        )
    return BundlePoint(plane=plane, fiber=fiber)


@dataclass(frozen=True)
class CartanMotion:
    """A motion certified to lie in the Cartan model S_p."""

    motion: Motion
    sig: Signature

    @classmethod
    def certify(
        cls, motion: Motion, sig: Signature, tol: Tolerances | None = None
    ) -> "CartanMotion":
        tol = tol or default_tolerances()
        check_motion(motion, tol)
        if motion.n != sig.n:
            raise DimensionMismatchError("motion dimension does not match signature")
        CartanRotation.certify(motion.R, sig, tol)
        diff = se_mul(sigma(motion, sig), motion).homogeneous() - np.eye(sig.n + 1)
        scale = 1.0 + np.linalg.norm(motion.X)
        if np.linalg.norm(diff) > tol.invol * sig.n * scale:
            raise NotInCartanModelError(
                "sigma(g) != g^{-1}", residual=float(np.linalg.norm(diff))
            )
        # Fiber condition J Y = -R^{-1} Y, equivalently Y in rho0(R).
        Y = motion.X
        fib = np.linalg.norm(sig.matrix @ Y + motion.R.T @ Y)
        if fib > tol.invol * sig.n * scale:
            raise NotInCartanModelError(
                "translation is not in the carried plane", residual=float(fib)
            )
        return cls(motion=motion, sig=sig)

    @property
    def n(self) -> int:
        return self.sig.n


@dataclass(frozen=True)
class DpElement:
    """Element (generator, v) of the (-1)-eigenspace d_p of the involution."""

    gen: DpGenerator
    v: np.ndarray

    def __post_init__(self):
        if self.v.shape != (self.gen.p,):
            raise DimensionMismatchError(
                f"coefficient vector must have length {self.gen.p}"
            )

    @property
    def n(self) -> int:
        return self.gen.n

    def screw(self) -> Screw:
        v_full = np.zeros(self.n)
        v_full[: self.gen.p] = self.v
        return Screw(self.gen.embed(), v_full)


def sigma(g: Motion, sig: Signature) -> Motion:
    """The involution sigma(R, X) = (J R J, J X) on SE(n)."""
    if g.n != sig.n:
        raise DimensionMismatchError("motion dimension does not match signature")
    J = sig.matrix
    return Motion(J @ g.R @ J, J @ g.X)


def is_fixed_point(g: Motion, sig: Signature, tol: Tolerances | None = None) -> bool:
    """Whether g is fixed by sigma, cross-checked against the block structure.

    Fixed points are block-diagonal rotations diag(A, B) with no translation
    in the first p slots. The sigma-comparison residual is exactly twice the
    structural residual; the two routes are computed independently and must
    agree.
    """
    tol = tol or default_tolerances()
    p = sig.p
    r_sigma = np.linalg.norm(sigma(g, sig).homogeneous() - g.homogeneous())
    off = np.sqrt(
        np.linalg.norm(g.R[:p, p:]) ** 2
        + np.linalg.norm(g.R[p:, :p]) ** 2
        + np.linalg.norm(g.X[:p]) ** 2
    )
    if abs(r_sigma - 2.0 * off) > 1e-12 * (1.0 + r_sigma):
        raise NumericalFaultError(
            "fixed-point tests disagree", sigma_residual=float(r_sigma)
        )
    return bool(r_sigma <= tol.invol)


def in_Q(g: Motion, sig: Signature, tol: Tolerances | None = None) -> bool:
    """Membership in Q = {g : sigma(g) = g^{-1}}."""
    tol = tol or default_tolerances()
    diff = se_mul(sigma(g, sig), g).homogeneous() - np.eye(sig.n + 1)
    scale = 1.0 + np.linalg.norm(g.X)
    return bool(np.linalg.norm(diff) <= tol.invol * scale)


def twisted_act(a: Motion, g: Motion, sig: Signature) -> Motion:
    """Twisted conjugation a . g . sigma(a^{-1}), closed form.

    The closed form (A R J A^{-1} J, X + A Y - A R J A^{-1} X) is asserted
    against plain group arithmetic.
    """
    if a.n != g.n or a.n != sig.n:
        raise DimensionMismatchError("operand dimensions differ")
    J = sig.matrix
    A, X = a.R, a.X
    R, Y = g.R, g.X
    core = A @ R @ J @ A.T
    closed = Motion(core @ J, X + A @ Y - core @ X)
    generic = se_mul(se_mul(a, g), sigma(se_inv(a), sig))
    scale = 1.0 + np.linalg.norm(X) + np.linalg.norm(Y)
    if np.linalg.norm(closed.homogeneous() - generic.homogeneous()) > 1e-11 * sig.n * scale:
        raise NumericalFaultError("twisted action routes disagree")
    return closed


def tau(g: Motion, sig: Signature, tol: Tolerances | None = None) -> CartanMotion:
    """Orbit map tau(g) = g sigma(g^{-1}), landing in S_p."""
    m = se_mul(g, sigma(se_inv(g), sig))
    return CartanMotion.certify(m, sig, tol)


def double_projection(
    A: np.ndarray, X: np.ndarray, sig: Signature, tol: Tolerances | None = None
) -> np.ndarray:
    """X - A J A^{-1} X, asserted equal to twice the projection onto A.pi0."""
    tol = tol or default_tolerances()
    A = check_special_orthogonal(A, tol)
    X = np.asarray(X, dtype=float)
    if A.shape != (sig.n, sig.n) or X.shape != (sig.n,):
        raise DimensionMismatchError("operand dimensions differ")
    D = X - A @ sig.matrix @ A.T @ X
    F = A[:, : sig.p]
    ref = 2.0 * (F @ (F.T @ X))
    if np.linalg.norm(D - ref) > 1e-10 * (1.0 + np.linalg.norm(X)):
        raise NumericalFaultError("projection identity violated")
    return D


def rho(s: CartanMotion, tol: Tolerances | None = None) -> BundlePoint:
    """The bundle point (rho0(R), Y) carried by a Cartan-model motion."""
    tol = tol or default_tolerances()
    plane = rho0(CartanRotation.certify(s.motion.R, s.sig, tol), tol)
    return bundle_point(plane, s.motion.X, tol)


def rho_inv(b: BundlePoint, tol: Tolerances | None = None) -> CartanMotion:
    """Inverse of rho: embed the plane and reuse the fiber as translation."""
    tol = tol or default_tolerances()
    cr = cartan_embed0(b.plane, tol)
    return CartanMotion.certify(Motion(cr.mat, np.asarray(b.fiber, float)), cr.sig, tol)


def bundle_act(
    a: Motion, b: BundlePoint, sig: Signature, tol: Tolerances | None = None
) -> BundlePoint:
    """The transitive action (A, X) * (pi, Y) = (A pi, A Y + 2 pr_{A pi} X)."""
    tol = tol or default_tolerances()
    if a.n != b.n or a.n != sig.n:
        raise DimensionMismatchError("operand dimensions differ")
    plane = rotate_plane(a.R, b.plane, tol)
    fiber = a.R @ b.fiber + 2.0 * (plane.projector @ a.X)
    return bundle_point(plane, fiber, tol)


def find_transporter(
    src: BundlePoint, dst: BundlePoint, tol: Tolerances | None = None
) -> Motion:
    """One motion carrying src to dst under the bundle action.

    A maps the source frame onto the destination frame; the translation
    X = (dst.fiber - A src.fiber) / 2 lies in the destination plane, so the
    doubled projection reproduces the fiber exactly.
    """
    tol = tol or default_tolerances()
    if (src.n, src.plane.p) != (dst.n, dst.plane.p):
        raise DimensionMismatchError("bundle points must share (n, p)")
    A = complete_to_special_orthogonal(dst.plane.frame, tol) @ \
        complete_to_special_orthogonal(src.plane.frame, tol).T
    X = 0.5 * (dst.fiber - A @ src.fiber)
    return Motion(A, X)


def dp_exp_full(
    xi: DpElement, tol: Tolerances | None = None
) -> CartanMotion:
    """Exponential of a d_p element, cross-checked against the tau route.

    exp(xi) must equal tau(exp(xi/2)); both are computed and compared.
    """
    tol = tol or default_tolerances()
    sig = Signature(xi.gen.p, xi.gen.q)
    screw = xi.screw()
    g = se_exp(screw, tol)
    half = se_exp(Screw(0.5 * screw.omega, 0.5 * screw.v), tol)
    via_tau = tau(half, sig, tol)
    if np.linalg.norm(g.homogeneous() - via_tau.motion.homogeneous()) > 1e-10 * sig.n * (
        1.0 + np.linalg.norm(g.X)
    ):
        raise NumericalFaultError("exp and tau routes disagree")
    return CartanMotion.certify(g, sig, tol)


def dp_log_full(s: CartanMotion, tol: Tolerances | None = None) -> DpElement:
    """Inverse of dp_exp_full on generic Cartan-model motions.

    The rotation part fixes the generator; the fiber is pulled back through
    the restriction of Y_omega to the span of the first p basis vectors,
    solved in the least-squares sense with a residual check.
    """
    tol = tol or default_tolerances()
    p = s.sig.p
    gen = dp_log0(CartanRotation.certify(s.motion.R, s.sig, tol), tol)
    omega = gen.embed()
    M = np.column_stack(
        [y_omega(omega, np.eye(s.n)[:, k], tol) for k in range(p)]
    )
    svals = np.linalg.svd(M, compute_uv=False)
    if svals[-1] <= 0 or svals[0] / svals[-1] > 1e8:
        raise NearSingularIsomorphismError(
            "near-singular isomorphism", condition=float(svals[0] / max(svals[-1], 1e-300))
        )
    v, *_ = np.linalg.lstsq(M, s.motion.X, rcond=None)
    residual = np.linalg.norm(M @ v - s.motion.X)
    if residual > 1e-8 * (1.0 + np.linalg.norm(s.motion.X)):
        raise NearSingularIsomorphismError(
            "restricted system residual too large", residual=float(residual)
        )
    return DpElement(gen=gen, v=v)
