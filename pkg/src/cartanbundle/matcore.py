"""Dense linear-algebra kernels for small ambient dimensions.

Wedge generators, orthonormal frames, projectors, deterministic frame
completion to SO(n), canonical block forms of rotations and skew matrices,
and eigenspace extraction for symmetric orthogonal involutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .config import Tolerances, default_tolerances
from .errors import (
    DegenerateSpanError,
    DimensionMismatchError,
    IllConditionedSpectrumError,
    NotOrthogonalSymmetryError,
)

# Fixed seed so frame completion is a pure function of the input frame.
_COMPLETION_SEED = 0x5EB01D2F


def basis_vector(i: int, n: int) -> np.ndarray:
    """Standard basis vector e_i of R^n, 1-indexed."""
    if not 1 <= i <= n:
        raise DimensionMismatchError(f"basis index {i} out of range for dimension {n}")
    e = np.zeros(n)
    e[i - 1] = 1.0
    return e


def skew_wedge(i: int, j: int, n: int) -> np.ndarray:
    """Wedge generator e_i ^ e_j = e_i e_j^T - e_j e_i^T (1-indexed, i < j)."""
    if i == j:
        raise DimensionMismatchError("wedge indices must differ")
    if not (1 <= i < j <= n):
        raise DimensionMismatchError(
            f"wedge indices ({i}, {j}) out of range for dimension {n}"
        )
    w = np.zeros((n, n))
    w[i - 1, j - 1] = 1.0
    w[j - 1, i - 1] = -1.0
    return w


def check_finite_matrix(M: np.ndarray, name: str = "matrix") -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] < 1 or M.shape[1] < 1:
        raise DimensionMismatchError(f"{name} must be a 2-d array, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise DimensionMismatchError(f"{name} has non-finite entries")
    return M


def orthonormalize(vectors: np.ndarray, tol: Tolerances | None = None) -> np.ndarray:
    """Orthonormal frame with the same column span as ``vectors``.

    Uses modified Gram-Schmidt with reorthogonalization and the natural
    column order, so the output is deterministic for identical input.
    """
    tol = tol or default_tolerances()
    V = check_finite_matrix(vectors, "spanning set")
    n, p = V.shape
    if p > n:
        raise DegenerateSpanError(f"{p} vectors cannot be independent in R^{n}")
    svals = np.linalg.svd(V, compute_uv=False)
    if svals[-1] <= tol.rank * max(1.0, svals[0]):
        raise DegenerateSpanError(
            "degenerate spanning set",
            smallest_singular_value=float(svals[-1]),
        )
    F = V.copy()
    for k in range(p):
        for _ in range(2):  # second pass kills roundoff leakage
            for m in range(k):
                F[:, k] -= (F[:, m] @ F[:, k]) * F[:, m]
        F[:, k] /= np.linalg.norm(F[:, k])
    return F


def check_frame(F: np.ndarray, tol: Tolerances | None = None) -> np.ndarray:
    """Validate that F has orthonormal columns."""
    tol = tol or default_tolerances()
    F = check_finite_matrix(F, "frame")
    n, p = F.shape
    if p > n:
        raise DimensionMismatchError(f"frame has {p} columns in dimension {n}")
    if np.linalg.norm(F.T @ F - np.eye(p)) > tol.orth * max(1, n):
        raise DegenerateSpanError("frame columns are not orthonormal")
    return F


def projector(F: np.ndarray) -> np.ndarray:
    """Orthogonal projector F F^T onto the column span of a frame."""
    F = np.asarray(F, dtype=float)
    return F @ F.T


def complete_to_special_orthogonal(
    F: np.ndarray, tol: Tolerances | None = None
) -> np.ndarray:
    """Extend a frame to a full matrix in SO(n) with the same leading span.

    The complement comes from a fixed-seed pseudo-random matrix projected off
    the frame, so the result is a pure function of F. The last column is
    negated when needed to land in SO(n).
    """
    tol = tol or default_tolerances()
    F = check_frame(F, tol)
    n, p = F.shape
    if p == n:
        A = F.copy()
    else:
        seed = _COMPLETION_SEED
        while True:
            rng = np.random.default_rng(seed)
            G = rng.standard_normal((n, n - p))
            G -= F @ (F.T @ G)
            try:
                C = orthonormalize(G, tol)
                break
            except DegenerateSpanError:
                seed += 1  # measure-zero collision with the span; reseed
        A = np.hstack([F, C])
    if np.linalg.det(A) < 0:
        A = A.copy()
        A[:, -1] = -A[:, -1]
    return A


@dataclass(frozen=True)
class CanonicalRotationForm:
    """Block decomposition Q . blockdiag(B(theta_1), ..., B(theta_k), 0 or I) . Q^T.

    For rotations the blocks are planar rotations R(theta); for skew matrices
    they are Pi(theta) = [[0, -theta], [theta, 0]]. ``angles`` is sorted
    descending; the trailing ``fixed_dim`` coordinates are fixed (rotation)
    or annihilated (skew).
    """

    Q: np.ndarray
    angles: tuple
    fixed_dim: int

    @property
    def n(self) -> int:
        return self.Q.shape[0]

    def rotation_blocks(self) -> np.ndarray:
        D = np.eye(self.n)
        for i, theta in enumerate(self.angles):
            c, s = math.cos(theta), math.sin(theta)
            D[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] = [[c, -s], [s, c]]
        return D

    def skew_blocks(self) -> np.ndarray:
        D = np.zeros((self.n, self.n))
        for i, theta in enumerate(self.angles):
            D[2 * i, 2 * i + 1] = -theta
            D[2 * i + 1, 2 * i] = theta
        return D

    def rotation_matrix(self) -> np.ndarray:
        return self.Q @ self.rotation_blocks() @ self.Q.T

    def skew_matrix(self) -> np.ndarray:
        return self.Q @ self.skew_blocks() @ self.Q.T


def check_special_orthogonal(R: np.ndarray, tol: Tolerances | None = None) -> np.ndarray:
    tol = tol or default_tolerances()
    R = check_finite_matrix(R, "rotation")
    n = R.shape[0]
    if R.shape[0] != R.shape[1]:
        raise DimensionMismatchError("rotation must be square")
    if np.linalg.norm(R.T @ R - np.eye(n)) > tol.orth * max(1, n):
        raise IllConditionedSpectrumError("matrix is not orthogonal within tolerance")
    if abs(np.linalg.det(R) - 1.0) > tol.orth * max(1, n):
        raise IllConditionedSpectrumError("matrix has determinant != +1")
    return R


def check_skew(W: np.ndarray, n_scale_tol: float = 1e-12) -> np.ndarray:
    W = check_finite_matrix(W, "skew matrix")
    n = W.shape[0]
    if W.shape[0] != W.shape[1]:
        raise DimensionMismatchError("skew matrix must be square")
    if np.linalg.norm(W + W.T) > n_scale_tol * n * max(1.0, np.linalg.norm(W)):
        raise IllConditionedSpectrumError("matrix is not skew-symmetric")
    return W


def _assemble_form(blocks, fixed, n, pi_blocks_swappable):
    """Shared ordering / determinant / sign fixing for both canonical forms.

    ``blocks`` is a list of [theta, q1, q2]; mutated in place.
    """
    # Make every angle positive by swapping the basis pair (flips theta).
    for blk in blocks:
        if blk[0] < 0:
            blk[0] = -blk[0]
            blk[1], blk[2] = blk[2], blk[1]
    blocks.sort(key=lambda blk: -blk[0])

    def columns():
        cols = [c for blk in blocks for c in blk[1:]] + fixed
        return np.column_stack(cols) if cols else np.zeros((n, 0))

    Q = columns()
    if np.linalg.det(Q) < 0:
        if fixed:
            fixed[-1] = -fixed[-1]
        else:
            # Flip the least significant block. A pi block absorbs the swap
            # without changing its angle; otherwise the angle goes negative.
            blk = blocks[-1]
            for cand in blocks:
                if pi_blocks_swappable and abs(cand[0] - math.pi) <= 1e-12:
                    blk = cand
                    break
            blk[1], blk[2] = blk[2], blk[1]
            if not (pi_blocks_swappable and abs(blk[0] - math.pi) <= 1e-12):
                blk[0] = -blk[0]
            blocks.sort(key=lambda b: -b[0])
        Q = columns()
    # Deterministic sign fix: make the first significant component of each
    # block's first basis vector nonnegative (negating the pair preserves
    # both the angle and the determinant).
    for blk in blocks:
        q1 = blk[1]
        idx = np.flatnonzero(np.abs(q1) > 1e-9)
        lead = q1[idx[0]] if idx.size else 0.0
        if lead < 0:
            blk[1] = -blk[1]
            blk[2] = -blk[2]
    Q = columns()
    return CanonicalRotationForm(
        Q=Q, angles=tuple(blk[0] for blk in blocks), fixed_dim=len(fixed)
    )


def canonical_rotation_form(
    R: np.ndarray, tol: Tolerances | None = None
) -> CanonicalRotationForm:
    """Canonical planar-rotation decomposition of R in SO(n).

    Returns Q in SO(n), angles in (-pi, pi] \\ {0} sorted descending, and the
    dimension of the fixed subspace, with Q blockdiag(R(theta_i), I) Q^T = R.
    """
    tol = tol or default_tolerances()
    R = check_special_orthogonal(R, tol)
    n = R.shape[0]
    T, S = scipy.linalg.schur(R, output="real")
    blocks = []
    fixed = []
    minus = []
    i = 0
    while i < n:
        if i + 1 < n and abs(T[i + 1, i]) > 1e-14:
            theta = math.atan2(T[i + 1, i], T[i, i])
            blocks.append([theta, S[:, i].copy(), S[:, i + 1].copy()])
            i += 2
        else:
            lam = T[i, i]
            if abs(abs(lam) - 1.0) > 10 * tol.eig:
                raise IllConditionedSpectrumError(
                    "ill-conditioned spectrum", eigenvalue=float(lam)
                )
            (fixed if lam > 0 else minus).append(S[:, i].copy())
            i += 1
    if len(minus) % 2:
        raise IllConditionedSpectrumError(
            "ill-conditioned spectrum: odd count of -1 eigenvalues"
        )
    for a, b in zip(minus[0::2], minus[1::2]):
        blocks.append([math.pi, a, b])
    form = _assemble_form(blocks, fixed, n, pi_blocks_swappable=True)
    if np.linalg.norm(form.rotation_matrix() - R) > tol.recon * max(1, n):
        raise IllConditionedSpectrumError(
            "ill-conditioned spectrum: reconstruction failed"
        )
    return form


def skew_canonical_form(
    W: np.ndarray, tol: Tolerances | None = None
) -> CanonicalRotationForm:
    """Canonical Pi-block decomposition of a skew matrix."""
    tol = tol or default_tolerances()
    W = check_skew(W)
    n = W.shape[0]
    T, S = scipy.linalg.schur(W, output="real")
    scale = max(1.0, np.linalg.norm(W))
    blocks = []
    fixed = []
    i = 0
    while i < n:
        if i + 1 < n and abs(T[i + 1, i]) > 1e-14 * scale:
            theta = 0.5 * (T[i + 1, i] - T[i, i + 1])
            blocks.append([theta, S[:, i].copy(), S[:, i + 1].copy()])
            i += 2
        else:
            fixed.append(S[:, i].copy())
            i += 1
    form = _assemble_form(blocks, fixed, n, pi_blocks_swappable=False)
    if np.linalg.norm(form.skew_matrix() - W) > tol.recon * max(1, n) * scale:
        raise IllConditionedSpectrumError(
            "ill-conditioned spectrum: skew reconstruction failed"
        )
    return form


def eigenspace_of_symmetric_involution(
    S: np.ndarray, eigenvalue: int, tol: Tolerances | None = None
) -> np.ndarray:
    """Orthonormal frame spanning the (+1) or (-1) eigenspace of S.

    S must be a symmetric involution (an orthogonal symmetry). The returned
    frame may have zero columns.
    """
    tol = tol or default_tolerances()
    if eigenvalue not in (1, -1):
        raise DimensionMismatchError("eigenvalue must be +1 or -1")
    S = check_finite_matrix(S, "symmetry")
    n = S.shape[0]
    if S.shape[0] != S.shape[1] or np.linalg.norm(S - S.T) > tol.invol * max(1, n):
        raise NotOrthogonalSymmetryError("not an orthogonal symmetry: not symmetric")
    if np.linalg.norm(S @ S - np.eye(n)) > tol.invol * max(1, n):
        raise NotOrthogonalSymmetryError("not an orthogonal symmetry: not involutive")
    w, V = np.linalg.eigh(S)
    mask = np.abs(w - eigenvalue) < 0.5
    return V[:, mask]
