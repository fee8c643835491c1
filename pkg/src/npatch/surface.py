"""The full multi-sided patch: blended sum of the n ribbons."""

import numpy as np

from .domain import DomainPolygon, local_params
from .ribbon import make_ribbon


class Patch:
    """Transfinite n-sided surface over the regular n-gon domain.

    S(p) = sum_i R_i(s_i, d_i) * (1 - d_i) / 2, where the sum skips
    sides whose sweep parameter is undefined (their weight vanishes).
    No renormalization is applied.
    """

    def __init__(self, loop):
        self.loop = loop
        self.domain = DomainPolygon(loop.n)
        self.ribbons = [make_ribbon(loop, i) for i in range(loop.n)]

    @property
    def n(self):
        return self.loop.n

    def eval(self, p):
        """Surface point at a single 2D domain point."""
        return self.eval_many(np.asarray(p, dtype=float)[None])[0]

    def eval_many(self, points):
        """Surface points at an array of 2D domain points, shape (k, 2) -> (k, 3)."""
        points = np.asarray(points, dtype=float)
        lam = self.domain.wachspress_many(points)
        lp = local_params(lam)
        out = np.zeros((points.shape[0], 3))
        for i in range(self.n):
            mask = lp.valid[:, i]
            if not mask.any():
                continue
            s = lp.s[mask, i]
            d = lp.d[mask, i]
            weight = 0.5 * (1.0 - d)
            out[mask] += self.ribbons[i].eval_many(s, d) * weight[:, None]
        return out

    def eval_boundary(self, i, t):
        """Surface point on domain edge i at edge parameter t.

        By the interpolation property this equals curve i evaluated at t;
        it is still computed through the full patch.
        """
        return self.eval(self.domain.edge_point(i, t))


def make_patch(loop):
    return Patch(loop)
