"""The Grassmannian of p-planes in R^n and its Cartan model in SO(n).

Planes are stored canonically as orthogonal projectors with a cached
orthonormal frame. The Cartan model S_p0 consists of rotations R with R J
a symmetric involution whose (-1)-eigenspace has dimension p, where
J = diag(-I_p, I_q); the correspondence rho0 reads the plane off that
eigenspace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import Tolerances, default_tolerances
from .errors import (
    CutLocusError,
    DimensionMismatchError,
    NotInCartanModelError,
)
from .liegroup import so_exp
from .matcore import (
    check_frame,
    check_special_orthogonal,
    complete_to_special_orthogonal,
    eigenspace_of_symmetric_involution,
    orthonormalize,
    projector,
)


@dataclass(frozen=True)
class Signature:
    """Block signature (p, q) with matrix J = diag(-I_p, I_q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise DimensionMismatchError("signature requires p >= 1 and q >= 1")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(np.concatenate([-np.ones(self.p), np.ones(self.q)]))


@dataclass(frozen=True)
class Plane:
    """A p-dimensional subspace of R^n: projector plus a representative frame."""

    n: int
    p: int
    projector: np.ndarray
    frame: np.ndarray


def plane_from_frame(F: np.ndarray, tol: Tolerances | None = None) -> Plane:
    F = check_frame(F, tol)
    n, p = F.shape
    return Plane(n=n, p=p, projector=projector(F), frame=F)


def plane_from_span(vectors: np.ndarray, tol: Tolerances | None = None) -> Plane:
    """Canonical plane spanned by the (independent) columns of ``vectors``."""
    return plane_from_frame(orthonormalize(vectors, tol), tol)


def coordinate_plane(n: int, p: int) -> Plane:
    """The reference plane spanned by the first p basis vectors."""
    return plane_from_frame(np.eye(n, p))


def plane_equal(a: Plane, b: Plane, tol: Tolerances | None = None) -> bool:
    """Frame-independent equality via projector comparison."""
    tol = tol or default_tolerances()
    if (a.n, a.p) != (b.n, b.p):
        raise DimensionMismatchError(
            f"plane dimension mismatch: ({a.n},{a.p}) vs ({b.n},{b.p})"
        )
    return bool(np.linalg.norm(a.projector - b.projector) <= tol.plane)


def rotate_plane(A: np.ndarray, plane: Plane, tol: Tolerances | None = None) -> Plane:
    """Image of a plane under A in SO(n)."""
    if A.shape != (plane.n, plane.n):
        raise DimensionMismatchError("rotation dimension does not match plane")
    return plane_from_frame(A @ plane.frame, tol)


def sigma0(R: np.ndarray, sig: Signature) -> np.ndarray:
    """The involution sigma0(R) = J R J on SO(n)."""
    if R.shape != (sig.n, sig.n):
        raise DimensionMismatchError("rotation dimension does not match signature")
    J = sig.matrix
    return J @ R @ J


def in_Q0(R: np.ndarray, sig: Signature, tol: Tolerances | None = None) -> bool:
    """Membership in Q0 = {R : (R J)^2 = I}."""
    tol = tol or default_tolerances()
    if R.shape != (sig.n, sig.n):
        raise DimensionMismatchError("rotation dimension does not match signature")
    M = R @ sig.matrix
    return bool(np.linalg.norm(M @ M - np.eye(sig.n)) <= tol.invol)


def twisted_act0(A: np.ndarray, R: np.ndarray, sig: Signature) -> np.ndarray:
    """Twisted conjugation A . R . sigma0(A)^{-1}."""
    if A.shape != R.shape:
        raise DimensionMismatchError("operand dimensions differ")
    J = sig.matrix
    return A @ R @ J @ A.T @ J


@dataclass(frozen=True)
class CartanRotation:
    """A rotation certified to lie in the Cartan model S_p0."""

    mat: np.ndarray
    sig: Signature

    @classmethod
    def certify(
        cls, mat: np.ndarray, sig: Signature, tol: Tolerances | None = None
    ) -> "CartanRotation":
        tol = tol or default_tolerances()
        mat = check_special_orthogonal(mat, tol)
        n = sig.n
        if mat.shape != (n, n):
            raise DimensionMismatchError("rotation dimension does not match signature")
        S = mat @ sig.matrix
        if np.linalg.norm(S - S.T) > tol.invol * n:
            raise NotInCartanModelError("R J is not symmetric")
        if np.linalg.norm(S @ S - np.eye(n)) > tol.invol * n:
            raise NotInCartanModelError("R J is not an involution")
        dim = int(np.sum(np.linalg.eigvalsh(S) < 0))
        if dim != sig.p:
            raise NotInCartanModelError(
                "not in the Cartan model: wrong eigenspace dimension",
                eigenspace_dim=dim,
            )
        return cls(mat=mat, sig=sig)

    @property
    def n(self) -> int:
        return self.sig.n


def cartan_embed0(plane: Plane, tol: Tolerances | None = None) -> CartanRotation:
    """Embed a plane into S_p0 as A J A^{-1} J with A completing its frame.

    Frame-independent: the result depends on the plane only through its
    projector (A J A^T = I - 2 P for P the projector onto the plane).
    """
    tol = tol or default_tolerances()
    sig = Signature(plane.p, plane.n - plane.p)
    A = complete_to_special_orthogonal(plane.frame, tol)
    J = sig.matrix
    R = A @ J @ A.T @ J
    return CartanRotation.certify(R, sig, tol)


def rho0(R: CartanRotation, tol: Tolerances | None = None) -> Plane:
    """The plane carried by a Cartan-model rotation: (-1)-eigenspace of R J."""
    tol = tol or default_tolerances()
    S = R.mat @ R.sig.matrix
    F = eigenspace_of_symmetric_involution(S, -1, tol)
    if F.shape[1] != R.sig.p:
        raise NotInCartanModelError(
            "not in the Cartan model: wrong eigenspace dimension",
            eigenspace_dim=int(F.shape[1]),
        )
    return plane_from_frame(F, tol)


@dataclass(frozen=True)
class DpGenerator:
    """Generator in the (-1)-eigenspace d_p0: omega = [[0, -B^T], [B, 0]]."""

    p: int
    q: int
    B: np.ndarray

    def __post_init__(self):
        if self.B.shape != (self.q, self.p):
            raise DimensionMismatchError(
                f"generator block must be {self.q} x {self.p}, got {self.B.shape}"
            )

    @property
    def n(self) -> int:
        return self.p + self.q

    def embed(self) -> np.ndarray:
        n, p = self.n, self.p
        omega = np.zeros((n, n))
        omega[p:, :p] = self.B
        omega[:p, p:] = -self.B.T
        return omega


def dp_exp(gen: DpGenerator, tol: Tolerances | None = None) -> CartanRotation:
    """Exponential of a d_p0 generator, certified to land in S_p0."""
    sig = Signature(gen.p, gen.q)
    return CartanRotation.certify(so_exp(gen.embed(), tol), sig, tol)


def principal_angles(a: Plane, b: Plane) -> np.ndarray:
    """Principal angles between two planes, from singular values of Fa^T Fb."""
    if (a.n, a.p) != (b.n, b.p):
        raise DimensionMismatchError("planes must share (n, p)")
    s = np.linalg.svd(a.frame.T @ b.frame, compute_uv=False)
    return np.arccos(np.clip(s, -1.0, 1.0))


def dp_log0(R: CartanRotation, tol: Tolerances | None = None) -> DpGenerator:
    """Generator with dp_exp(gen) = R, for planes in generic position.

    The plane of exp(omega) is exp(omega/2) applied to the reference plane,
    so canonical angles are twice the principal angles between rho0(R) and
    the reference plane. A principal angle at pi/2 is the cut locus.
    """
    tol = tol or default_tolerances()
    p, q = R.sig.p, R.sig.q
    plane = rho0(R, tol)
    F = plane.frame
    U, s, Vt = np.linalg.svd(F[:p, :])
    phi = np.arccos(np.clip(s, -1.0, 1.0))
    if np.any(phi >= 0.5 * math.pi - tol.branch):
        raise CutLocusError(
            "cut locus: generator not unique", max_principal_angle=float(phi.max())
        )
    aligned = F @ Vt.T
    lower = aligned[p:, :]
    W = np.zeros((q, p))
    for i in range(p):
        sin_phi = math.sin(phi[i])
        if sin_phi > tol.sing:
            W[:, i] = lower[:, i] / sin_phi
    B = W @ np.diag(2.0 * phi) @ U.T
    return DpGenerator(p=p, q=q, B=B)
