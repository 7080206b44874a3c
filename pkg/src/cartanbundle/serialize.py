"""JSON wire formats for matrices, motions, screws, planes, and bundle points.

Matrices serialize as {"rows": n, "cols": m, "data": [row-major doubles]};
the other types compose that schema.
"""

from __future__ import annotations

import json

import numpy as np

from .bundle import BundlePoint, CartanMotion, bundle_point
from .config import Tolerances, default_tolerances
from .errors import DimensionMismatchError
from .grassmann import Plane, Signature, plane_from_frame
from .liegroup import Motion, Screw


def mat_to_json(M: np.ndarray) -> dict:
    M = np.asarray(M, dtype=float)
    if M.ndim == 1:
        M = M.reshape(-1, 1)
    return {"rows": M.shape[0], "cols": M.shape[1], "data": M.ravel(order="C").tolist()}


def mat_from_json(obj: dict) -> np.ndarray:
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError) as exc:
        raise DimensionMismatchError(f"malformed matrix JSON: {exc}") from exc
    if rows < 1 or cols < 1 or len(data) != rows * cols:
        raise DimensionMismatchError("matrix JSON dimensions do not match data length")
    M = np.asarray(data, dtype=float).reshape(rows, cols)
    if not np.all(np.isfinite(M)):
        raise DimensionMismatchError("matrix JSON has non-finite entries")
    return M


def vec_from_json(obj, n: int | None = None) -> np.ndarray:
    v = np.asarray(obj, dtype=float)
    if v.ndim != 1 or not np.all(np.isfinite(v)):
        raise DimensionMismatchError("vector JSON must be a flat list of finite doubles")
    if n is not None and v.shape != (n,):
        raise DimensionMismatchError(f"vector JSON must have length {n}")
    return v


def motion_to_json(g: Motion) -> dict:
    return {"R": mat_to_json(g.R), "X": g.X.tolist()}


def motion_from_json(obj: dict) -> Motion:
    R = mat_from_json(obj["R"])
    return Motion(R, vec_from_json(obj["X"], R.shape[0]))


def screw_to_json(xi: Screw) -> dict:
    return {"omega": mat_to_json(xi.omega), "v": xi.v.tolist()}


def screw_from_json(obj: dict) -> Screw:
    omega = mat_from_json(obj["omega"])
    return Screw(omega, vec_from_json(obj["v"], omega.shape[0]))


def plane_to_json(plane: Plane) -> dict:
    return {"n": plane.n, "p": plane.p, "frame": mat_to_json(plane.frame)}


def plane_from_json(obj: dict, tol: Tolerances | None = None) -> Plane:
    tol = tol or default_tolerances()
    F = mat_from_json(obj["frame"])
    if F.shape != (int(obj["n"]), int(obj["p"])):
        raise DimensionMismatchError("plane JSON frame shape disagrees with (n, p)")
    return plane_from_frame(F, tol)  # projector recomputed and frame validated


def bundle_point_to_json(b: BundlePoint) -> dict:
    return {"plane": plane_to_json(b.plane), "fiber": b.fiber.tolist()}


def bundle_point_from_json(obj: dict, tol: Tolerances | None = None) -> BundlePoint:
    plane = plane_from_json(obj["plane"], tol)
    return bundle_point(plane, vec_from_json(obj["fiber"], plane.n), tol)


def cartan_motion_to_json(s: CartanMotion) -> dict:
    out = motion_to_json(s.motion)
    out["p"] = s.sig.p
    out["q"] = s.sig.q
    return out


def cartan_motion_from_json(obj: dict, tol: Tolerances | None = None) -> CartanMotion:
    motion = motion_from_json(obj)
    sig = Signature(int(obj["p"]), int(obj["q"]))
    return CartanMotion.certify(motion, sig, tol)


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, no trailing whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
