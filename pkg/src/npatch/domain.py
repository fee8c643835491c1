"""Regular n-gon parameter domain, Wachspress coordinates, local parameters.

Conventions (fixed project-wide):
  - vertex k sits at angle pi/2 + 2*pi*k/n on the unit circle (CCW);
  - edge i runs from vertex i-1 to vertex i and carries boundary curve i,
    with edge parameter t = 0 at vertex i-1 and t = 1 at vertex i;
  - barycentric coordinate lambda_i belongs to vertex i, the corner
    shared by curves i and i+1.

Under this alignment lambda_{i-1} and lambda_i are exactly the two
coordinates that survive on edge i, which is what makes the distance
parameter d_i vanish there and reach 1 on the far edges.
"""

import numpy as np

from .errors import DomainError

# threshold below which s_i is flagged invalid (the matching blend
# weight is of the same magnitude, so the skipped term is noise-level)
EPS_SD = 1e-10
# boundary band for the inside test; distances in it snap to the edge
EPS_GEOM = 1e-12


class DomainPolygon:
    """Regular n-gon inscribed in the unit circle, with precomputed edges."""

    def __init__(self, n):
        if n < 3:
            raise ValueError("polygon needs n >= 3 sides, got %d" % n)
        self.n = n
        angles = np.pi / 2 + 2 * np.pi * np.arange(n) / n
        self.vertices = np.column_stack([np.cos(angles), np.sin(angles)])
        self.apothem = np.cos(np.pi / n)
        # outward unit normal of edge i (spanning vertex i-1 -> vertex i)
        mids = 0.5 * (np.roll(self.vertices, 1, axis=0) + self.vertices)
        self.edge_normals = mids / np.linalg.norm(mids, axis=1, keepdims=True)

    def edge_point(self, i, t):
        """Domain point on edge i at edge parameter t."""
        return (1.0 - t) * self.vertices[(i - 1) % self.n] + t * self.vertices[i % self.n]

    def edge_distances_many(self, points):
        """Perpendicular distances to all edge lines, shape (k, n).

        Points must lie inside or on the closed polygon; distances within
        EPS_GEOM of an edge snap to 0, making on-edge evaluation exact.
        """
        points = np.asarray(points, dtype=float)
        d = self.apothem - points @ self.edge_normals.T
        if np.any(d < -EPS_GEOM):
            raise DomainError("point outside the domain polygon")
        d[np.abs(d) <= EPS_GEOM] = 0.0
        return d

    def edge_distances(self, p):
        return self.edge_distances_many(np.asarray(p, dtype=float)[None])[0]

    def wachspress_many(self, points):
        """Wachspress coordinates at each point, shape (k, n).

        lambda_i is proportional to the product of distances to every
        edge vertex i does not lie on (vertex i lies on edges i and i+1).
        The product form is evaluated directly even on the boundary:
        there exactly two numerators stay nonzero, which is benign.
        """
        d = self.edge_distances_many(points)
        n = self.n
        num = np.empty_like(d)
        for i in range(n):
            masked = d.copy()
            masked[:, i] = 1.0
            masked[:, (i + 1) % n] = 1.0
            num[:, i] = masked.prod(axis=1)
        return num / num.sum(axis=1, keepdims=True)

    def wachspress(self, p):
        return self.wachspress_many(np.asarray(p, dtype=float)[None])[0]


class LocalParams:
    """Per-side sweep/distance parameters (s_i, d_i) at one or many points.

    Arrays have shape (..., n).  Where lambda_{i-1} + lambda_i falls
    below EPS_SD, s_i is undefined: s holds NaN and valid is False.  The
    caller skips those sides; their blend weight vanishes anyway.
    """

    def __init__(self, s, d, valid):
        self.s = s
        self.d = d
        self.valid = valid


def local_params(lam):
    """Compute (s_i, d_i) from Wachspress coordinates (last axis = side)."""
    lam = np.asarray(lam, dtype=float)
    prev = np.roll(lam, 1, axis=-1)
    den = prev + lam
    d = np.clip(1.0 - den, 0.0, 1.0)
    valid = den > EPS_SD
    with np.errstate(invalid="ignore", divide="ignore"):
        s = np.where(valid, lam / np.where(valid, den, 1.0), np.nan)
    return LocalParams(s, d, valid)


def build_domain(n):
    return DomainPolygon(n)
