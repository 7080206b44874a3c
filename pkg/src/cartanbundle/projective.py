"""Closed forms for lines (p = 1): planar rotations, reflections, the
half-angle correspondence, the line-bundle exponential, and Moebius-band
sampling for n = 2."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .grassmann import Signature
from .liegroup import Motion, _half_angle_factor, so_exp
from .matcore import basis_vector


def unit_direction(U: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Validate a unit vector orthogonal to e_1."""
    U = np.asarray(U, dtype=float)
    n = U.shape[0]
    if U.ndim != 1 or n < 2:
        raise DimensionMismatchError("direction must be a vector in dimension >= 2")
    if abs(np.linalg.norm(U) - 1.0) > tol:
        raise DimensionMismatchError("direction must be a unit vector")
    if abs(U[0]) > tol:
        raise DimensionMismatchError("direction must be orthogonal to e_1")
    return U


@dataclass(frozen=True)
class Line:
    """A line through the origin, stored as a sign-canonicalized unit vector."""

    vector: np.ndarray

    def __eq__(self, other):
        return isinstance(other, Line) and np.allclose(self.vector, other.vector)


def line_from_vector(V: np.ndarray) -> Line:
    """Canonical representative: unit norm, first nonzero component positive."""
    V = np.asarray(V, dtype=float)
    norm = np.linalg.norm(V)
    if norm == 0 or not np.all(np.isfinite(V)):
        raise DimensionMismatchError("line representative must be nonzero and finite")
    V = V / norm
    idx = np.flatnonzero(np.abs(V) > 1e-12)
    if idx.size and V[idx[0]] < 0:
        V = -V
    return Line(vector=V)


def _wedge_e1(U: np.ndarray) -> np.ndarray:
    n = U.shape[0]
    E1 = basis_vector(1, n)
    return np.outer(E1, U) - np.outer(U, E1)


def rotation_in_plane(theta: float, U: np.ndarray) -> np.ndarray:
    """Rotation by theta in the plane of e_1 and U: exp(-theta e_1 ^ U).

    Sends e_1 to cos(theta) e_1 + sin(theta) U and fixes the orthogonal
    complement of span(e_1, U).
    """
    U = unit_direction(U)
    return so_exp(-theta * _wedge_e1(U))


def reflection_about_hyperplane_normal(V: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Reflection I - 2 V V^T through the hyperplane orthogonal to unit V."""
    V = np.asarray(V, dtype=float)
    if abs(np.linalg.norm(V) - 1.0) > tol:
        raise DimensionMismatchError("reflection normal must be a unit vector")
    return np.eye(V.shape[0]) - 2.0 * np.outer(V, V)


def two_reflections_check(theta: float, U: np.ndarray) -> bool:
    """Whether R_{theta,U} J equals the reflection about the half-angle normal."""
    U = unit_direction(U)
    n = U.shape[0]
    R = rotation_in_plane(theta, U)
    J = Signature(1, n - 1).matrix
    V = math.cos(0.5 * theta) * basis_vector(1, n) + math.sin(0.5 * theta) * U
    S2 = reflection_about_hyperplane_normal(V / np.linalg.norm(V))
    return bool(np.linalg.norm(R @ J - S2) <= 1e-10 * n)


def half_angle_line(theta: float, U: np.ndarray) -> Line:
    """The line carried by R_{theta,U}: [cos(theta/2) e_1 + sin(theta/2) U]."""
    U = unit_direction(U)
    n = U.shape[0]
    V = math.cos(0.5 * theta) * basis_vector(1, n) + math.sin(0.5 * theta) * U
    return line_from_vector(V)


def line_bundle_exp(theta: float, U: np.ndarray, lam: float) -> Motion:
    """Explicit exponential of the line-bundle generator (-theta e_1 ^ U, lam e_1).

    The translation part is lam (2 sin(theta/2)/theta) times the half-angle
    direction; the theta -> 0 limit is lam e_1.
    """
    U = unit_direction(U)
    n = U.shape[0]
    R = rotation_in_plane(theta, U)
    f = lam * _half_angle_factor(theta)
    Y = f * (math.cos(0.5 * theta) * basis_vector(1, n) + math.sin(0.5 * theta) * U)
    return Motion(R, Y)


def moebius_grid(num_theta: int, num_lambda: int, lambda_max: float) -> list:
    """Sample the Moebius band: the image of the n = 2 line-bundle generators.

    Records cover theta in [0, 2 pi) times lambda in [-lambda_max, lambda_max]
    and carry the motion, the carried line angle theta/2, and the fiber.
    """
    if num_theta < 1 or num_lambda < 1:
        raise DimensionMismatchError("grid sizes must be positive")
    U = np.array([0.0, 1.0])
    records = []
    thetas = [2.0 * math.pi * j / num_theta for j in range(num_theta)]
    lambdas = np.linspace(-lambda_max, lambda_max, num_lambda)
    for theta in thetas:
        for lam in lambdas:
            m = line_bundle_exp(theta, U, float(lam))
            records.append(
                {
                    "theta": theta,
                    "lambda": float(lam),
                    "r00": float(m.R[0, 0]),
                    "r01": float(m.R[0, 1]),
                    "r10": float(m.R[1, 0]),
                    "r11": float(m.R[1, 1]),
                    "x0": float(m.X[0]),
                    "x1": float(m.X[1]),
                    "line_angle": 0.5 * theta,
                    "y0": float(m.X[0]),
                    "y1": float(m.X[1]),
                }
            )
    return records


MOEBIUS_COLUMNS = (
    "theta",
    "lambda",
    "r00",
    "r01",
    "r10",
    "r11",
    "x0",
    "x1",
    "line_angle",
    "y0",
    "y1",
)
