"""The groups SO(n) and SE(n), their algebras, and closed-form exp/log.

Motions are pairs (R, X) multiplying as (R1 R2, X1 + R1 X2); screws are
pairs (omega, v). The exponential is computed through the canonical block
form: exp(omega, v) = (exp(omega), Y_omega(v)) where Y_omega acts blockwise
with the half-angle factor 2 sin(theta/2) / theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import Tolerances, default_tolerances
from .errors import BranchAmbiguityError, DimensionMismatchError, SingularMapError
from .matcore import (
    canonical_rotation_form,
    check_skew,
    check_special_orthogonal,
    skew_canonical_form,
)


@dataclass(frozen=True)
class Motion:
    """Euclidean motion g = (R, X), i.e. x -> R x + X."""

    R: np.ndarray
    X: np.ndarray

    @property
    def n(self) -> int:
        return self.R.shape[0]

    def homogeneous(self) -> np.ndarray:
        """(n+1) x (n+1) block-matrix representation."""
        n = self.n
        H = np.eye(n + 1)
        H[:n, :n] = self.R
        H[:n, n] = self.X
        return H


@dataclass(frozen=True)
class Screw:
    """Lie-algebra element xi = (omega, v) of se(n)."""

    omega: np.ndarray
    v: np.ndarray

    @property
    def n(self) -> int:
        return self.omega.shape[0]

    def matrix(self) -> np.ndarray:
        n = self.n
        M = np.zeros((n + 1, n + 1))
        M[:n, :n] = self.omega
        M[:n, n] = self.v
        return M


def identity_motion(n: int) -> Motion:
    return Motion(np.eye(n), np.zeros(n))


def check_motion(g: Motion, tol: Tolerances | None = None) -> Motion:
    check_special_orthogonal(g.R, tol)
    if g.X.shape != (g.n,) or not np.all(np.isfinite(g.X)):
        raise DimensionMismatchError("translation must be a finite n-vector")
    return g


def check_screw(xi: Screw) -> Screw:
    check_skew(xi.omega)
    if xi.v.shape != (xi.n,) or not np.all(np.isfinite(xi.v)):
        raise DimensionMismatchError("screw vector must be a finite n-vector")
    return xi


def _same_n(a, b):
    if a.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: {a.n} vs {b.n}")


def se_mul(g1: Motion, g2: Motion) -> Motion:
    _same_n(g1, g2)
    return Motion(g1.R @ g2.R, g1.X + g1.R @ g2.X)


def se_inv(g: Motion) -> Motion:
    return Motion(g.R.T.copy(), -(g.R.T @ g.X))


def se_bracket(xi1: Screw, xi2: Screw) -> Screw:
    _same_n(xi1, xi2)
    return Screw(
        xi1.omega @ xi2.omega - xi2.omega @ xi1.omega,
        xi1.omega @ xi2.v - xi2.omega @ xi1.v,
    )


def so_exp(omega: np.ndarray, tol: Tolerances | None = None) -> np.ndarray:
    """Exponential of a skew matrix via its canonical Pi-block form."""
    form = skew_canonical_form(omega, tol)
    return form.rotation_matrix()


def so_log(
    omega_or_R: np.ndarray, tol: Tolerances | None = None, allow_pi: bool = False
) -> np.ndarray:
    """Principal logarithm of a rotation, angles in (-pi, pi).

    An angle within ``tol.branch`` of pi makes the log non-unique; this
    raises unless ``allow_pi`` explicitly requests the +pi resolution.
    """
    tol = tol or default_tolerances()
    form = canonical_rotation_form(omega_or_R, tol)
    if not allow_pi:
        for theta in form.angles:
            if abs(abs(theta) - math.pi) <= tol.branch:
                raise BranchAmbiguityError(
                    "log branch ambiguity: rotation angle at pi", angle=float(theta)
                )
    return form.skew_matrix()


def _half_angle_factor(theta: float) -> float:
    """2 sin(theta/2) / theta, with the analytic limit 1 at theta = 0."""
    if abs(theta) < 1e-4:
        t2 = theta * theta
        return 1.0 - t2 / 24.0 + t2 * t2 / 1920.0
    return 2.0 * math.sin(0.5 * theta) / theta


def y_omega(omega: np.ndarray, v: np.ndarray, tol: Tolerances | None = None) -> np.ndarray:
    """Translation part Y of exp(omega, v), as a linear map of v.

    In the canonical basis of omega, fixed coordinates pass through and each
    rotating pair is scaled by 2 sin(theta/2)/theta and rotated by theta/2.
    """
    form = skew_canonical_form(omega, tol)
    v = np.asarray(v, dtype=float)
    if v.shape != (form.n,):
        raise DimensionMismatchError("vector dimension does not match omega")
    w = form.Q.T @ v
    y = w.copy()
    for i, theta in enumerate(form.angles):
        a, b = w[2 * i], w[2 * i + 1]
        f = _half_angle_factor(theta)
        c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
        y[2 * i] = f * (c * a - s * b)
        y[2 * i + 1] = f * (s * a + c * b)
    return form.Q @ y


def y_omega_solve(
    omega: np.ndarray, Y: np.ndarray, tol: Tolerances | None = None
) -> np.ndarray:
    """Inverse of ``y_omega`` in its first argument: v with Y_omega(v) = Y."""
    tol = tol or default_tolerances()
    form = skew_canonical_form(omega, tol)
    Y = np.asarray(Y, dtype=float)
    if Y.shape != (form.n,):
        raise DimensionMismatchError("vector dimension does not match omega")
    w = form.Q.T @ Y
    v = w.copy()
    for i, theta in enumerate(form.angles):
        f = _half_angle_factor(theta)
        if abs(f) < tol.sing:
            raise SingularMapError("Y_omega singular", angle=float(theta))
        a, b = w[2 * i], w[2 * i + 1]
        c, s = math.cos(0.5 * theta), math.sin(0.5 * theta)
        v[2 * i] = (c * a + s * b) / f
        v[2 * i + 1] = (-s * a + c * b) / f
    return form.Q @ v


def se_exp(xi: Screw, tol: Tolerances | None = None) -> Motion:
    """Group exponential exp(omega, v) = (exp(omega), Y_omega(v))."""
    check_screw(xi)
    return Motion(so_exp(xi.omega, tol), y_omega(xi.omega, xi.v, tol))


def se_log(g: Motion, tol: Tolerances | None = None, allow_pi: bool = False) -> Screw:
    """Principal logarithm on SE(n); branch restrictions as in ``so_log``."""
    check_motion(g, tol)
    omega = so_log(g.R, tol, allow_pi=allow_pi)
    return Screw(omega, y_omega_solve(omega, g.X, tol))
