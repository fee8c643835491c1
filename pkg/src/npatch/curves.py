"""Bezier space curves: the only curve primitive used by the rest of the package."""

import numpy as np

from .errors import DomainError


class BezierCurve:
    """Polynomial Bezier curve in R^3 of arbitrary degree >= 0.

    Degree 0 is a legitimate constant curve; it is needed for the
    degenerate opposite curve of three-sided loops.  Instances are
    immutable after construction.
    """

    def __init__(self, control_points):
        pts = np.array(control_points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 3:
            raise ValueError("control points must be an (k, 3) array, k >= 1")
        if pts.shape[0] < 1:
            raise ValueError("need at least one control point")
        if not np.all(np.isfinite(pts)):
            raise ValueError("control points must be finite")
        pts.setflags(write=False)
        self.control_points = pts

    @property
    def degree(self):
        return self.control_points.shape[0] - 1

    def eval(self, t):
        """Point at parameter t in [0, 1] (de Casteljau)."""
        return self.eval_many(np.asarray([t]))[0]

    def eval_many(self, t):
        """Vectorized de Casteljau: t of shape (k,) -> points of shape (k, 3)."""
        t = np.asarray(t, dtype=float)
        if np.any(t < 0.0) or np.any(t > 1.0):
            raise DomainError("curve parameter outside [0, 1]")
        b = np.broadcast_to(self.control_points, (t.size,) + self.control_points.shape).copy()
        w = t.reshape(-1, 1, 1)
        for _ in range(self.degree):
            b = (1.0 - w) * b[:, :-1] + w * b[:, 1:]
        return b[:, 0]

    def end_derivative(self, end):
        """First derivative vector at 'start' (t=0) or 'end' (t=1).

        A degree-0 curve has no direction; the zero vector is returned.
        """
        p = self.control_points
        if self.degree == 0:
            return np.zeros(3)
        if end == "start":
            return self.degree * (p[1] - p[0])
        if end == "end":
            return self.degree * (p[-1] - p[-2])
        raise ValueError("end must be 'start' or 'end'")

    def start_point(self):
        return self.control_points[0]

    def end_point(self):
        return self.control_points[-1]

    def __repr__(self):
        return "BezierCurve(degree=%d)" % self.degree
