"""Concentric-ring tessellation of the domain polygon and patch meshing."""

import numpy as np


class TriMesh:
    """Indexed triangle mesh (2D or 3D vertices).

    boundary_tags maps a vertex index to (side, t) for vertices lying
    on the domain boundary; scalar is an optional per-vertex channel.
    """

    def __init__(self, vertices, triangles, boundary_tags=None, scalar=None):
        self.vertices = np.asarray(vertices, dtype=float)
        self.triangles = np.asarray(triangles, dtype=int)
        self.boundary_tags = boundary_tags or {}
        self.scalar = None if scalar is None else np.asarray(scalar, dtype=float)

    def edges(self):
        """Unique undirected edges as a sorted (E, 2) array."""
        t = self.triangles
        e = np.vstack([t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]])
        e.sort(axis=1)
        return np.unique(e, axis=0)


def _march_strip(outer, inner, triangles):
    """Triangulate between two vertex chains by monotone marching.

    Chains run in the same direction; outer is the longer (or equal)
    ring.  Advancing whichever chain's next normalized step is smaller
    keeps the strip triangles well-shaped and the result deterministic.
    """
    i = j = 0
    no = len(outer) - 1
    ni = len(inner) - 1
    while i < no or j < ni:
        if j == ni:
            adv_outer = True
        elif i == no:
            adv_outer = False
        else:
            adv_outer = (i + 1) * ni <= (j + 1) * no
        if adv_outer:
            triangles.append((outer[i], outer[i + 1], inner[j]))
            i += 1
        else:
            triangles.append((outer[i], inner[j + 1], inner[j]))
            j += 1


def tessellate_domain(poly, m):
    """Ring tessellation of the regular n-gon: m subdivisions per side.

    Ring l (l = m..1) is the polygon scaled by l/m about the center
    with l vertices per edge; ring 0 is the center point.  Ring m's
    vertices carry (side, t) boundary tags with uniform t.  Triangle
    count is n*m*m.
    """
    if m < 1:
        raise ValueError("resolution m must be >= 1")
    n = poly.n
    verts = [np.zeros(2)]
    rings = {0: [0]}  # ring level -> list of global vertex indices (CCW)
    tags = {}
    for level in range(1, m + 1):
        scale = level / m
        idx = []
        for i in range(n):
            a = poly.vertices[(i - 1) % n]
            b = poly.vertices[i]
            for k in range(level):
                t = k / level
                idx.append(len(verts))
                verts.append(scale * ((1.0 - t) * a + t * b))
                if level == m:
                    tags[idx[-1]] = (i, t)
        rings[level] = idx

    triangles = []
    for level in range(1, m + 1):
        out_ring = rings[level]
        in_ring = rings[level - 1]
        lo = len(out_ring)
        li = len(in_ring)
        for i in range(n):
            outer = [out_ring[(i * level + k) % lo] for k in range(level + 1)]
            if level == 1:
                inner = [in_ring[0]]
            else:
                inner = [in_ring[(i * (level - 1) + k) % li] for k in range(level)]
            _march_strip(outer, inner, triangles)

    return TriMesh(np.array(verts), np.array(triangles), boundary_tags=tags)


def mesh_patch(patch, m):
    """Map the domain tessellation through the patch.

    Boundary-tagged vertices are evaluated directly on their boundary
    curve so the mesh boundary lies exactly on the input curves.
    """
    dm = tessellate_domain(patch.domain, m)
    pts = patch.eval_many(dm.vertices)
    for v, (side, t) in dm.boundary_tags.items():
        pts[v] = patch.loop.side(side).eval(t)
    return TriMesh(pts, dm.triangles, boundary_tags=dm.boundary_tags)
