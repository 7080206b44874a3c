"""The tautological bundle over the Grassmannian, realized inside SE(n).

A bundle point is a plane with a vector lying in it. The involution
sigma(R, X) = (J R J, J X) turns the set {g : sigma(g) = g^{-1}} into a copy
of that bundle, and all of SE(n) acts transitively on it: rotations move the
plane, translations move the fiber vector through a double projection.
"""

import numpy as np

from cartanbundle import (
    Signature,
    bundle_act,
    find_transporter,
    in_Q,
    rho,
    rho_inv,
    tau,
)
from cartanbundle.sampling import make_rng, sample_bundle_point, sample_motion


def main():
    rng = make_rng(2026, 2)
    n, p = 4, 2
    sig = Signature(p, n - p)

    print("== the orbit map tau lands in the model set Q ==")
    g = sample_motion(rng, n)
    s = tau(g, sig)
    print("tau(g) in Q:", in_Q(s.motion, sig))

    print("\n== model elements are (plane, fiber vector) pairs ==")
    b = rho(s)
    print("fiber lies in the plane:",
          np.linalg.norm(b.plane.projector @ b.fiber - b.fiber) < 1e-10)
    s2 = rho_inv(b)
    print("identification round trip error:",
          np.linalg.norm(s2.motion.homogeneous() - s.motion.homogeneous()))

    print("\n== any bundle point can be carried to any other ==")
    src = sample_bundle_point(rng, n, p)
    dst = sample_bundle_point(rng, n, p)
    carrier = find_transporter(src, dst)
    moved = bundle_act(carrier, src, sig)
    print("plane transport error:",
          np.linalg.norm(moved.plane.projector - dst.plane.projector))
    print("fiber transport error:", np.linalg.norm(moved.fiber - dst.fiber))


if __name__ == "__main__":
    main()
