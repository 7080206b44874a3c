"""Planes in R^n as special rotations: the Cartan model of the Grassmannian.

A p-plane maps to the rotation A J A^T J built from any orthonormal frame A
extending the plane; the plane is recovered as the (-1)-eigenspace of R J.
For lines in the plane this is the classical doubling of the angle. The
generator logarithm recovers the p x q block B with principal angles as its
singular values.
"""

import math

import numpy as np

from cartanbundle import (
    cartan_embed0,
    dp_exp,
    dp_log0,
    plane_equal,
    plane_from_span,
    principal_angles,
    rho0,
)
from cartanbundle.sampling import make_rng, sample_dp_generator, sample_plane


def main():
    rng = make_rng(2026, 1)

    print("== a line at angle phi embeds as the rotation by 2 phi ==")
    phi = 0.3
    line = plane_from_span(np.array([[math.cos(phi)], [math.sin(phi)]]))
    cr = cartan_embed0(line)
    print("embedded rotation:\n", np.round(cr.mat, 6))
    print("rotation by 2*phi:  cos =", math.cos(2 * phi), " sin =", math.sin(2 * phi))

    print("\n== embedding and projection are inverse on G(5,2) ==")
    pl = sample_plane(rng, 5, 2)
    print("round trip preserves the plane:", plane_equal(rho0(cartan_embed0(pl)), pl))

    print("\n== generator logarithm and principal angles ==")
    gen = sample_dp_generator(rng, 2, 3, bound=math.pi - 0.3)
    cr = dp_exp(gen)
    back = dp_log0(cr)
    print("generator recovery error:", np.linalg.norm(back.B - gen.B))
    angles = principal_angles(rho0(cr), plane_from_span(np.eye(5)[:, :2]))
    sing = np.sort(np.linalg.svd(gen.B / 2, compute_uv=False))
    print("principal angles to the reference plane:", np.round(np.sort(angles), 6))
    print("singular values of B/2:                 ", np.round(sing, 6))


if __name__ == "__main__":
    main()
