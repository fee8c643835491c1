import numpy as np
from scipy.special import comb


def bernstein_eval(control_points, t):
    """Independent Bezier oracle: direct Bernstein-basis summation."""
    pts = np.asarray(control_points, dtype=float)
    d = len(pts) - 1
    out = np.zeros(3)
    for k in range(d + 1):
        out += comb(d, k) * t**k * (1 - t) ** (d - k) * pts[k]
    return out


def random_interior_points(rng, poly, count):
    """Uniform-ish interior samples as random convex combinations of vertices."""
    w = rng.dirichlet(np.ones(poly.n), size=count)
    return w @ poly.vertices


def random_affine(rng):
    """Random well-conditioned affine map (A, b) on R^3."""
    while True:
        a = rng.normal(size=(3, 3))
        if abs(np.linalg.det(a)) > 0.1:
            return a, rng.normal(size=3)
