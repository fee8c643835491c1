"""File formats: JSON loop documents, OBJ and PLY mesh writers/readers.

These three formats are the package's public file contracts.

Loop document (JSON):
    {
      "version": 1,
      "weld_tolerance": 1e-9,            # optional
      "sides": [
        {"degree": 1, "control_points": [[x, y, z], [x, y, z]]},
        ...                              # >= 3 sides, count = degree + 1
      ]
    }

OBJ output: `v x y z` lines (9 significant digits), `f` lines with
1-based indices, contour polylines appended as `l` elements with their
own vertices.  PLY output: ASCII, per-vertex double property `quality`.
"""

import json

import numpy as np

from .curves import BezierCurve
from .errors import ParseError, SchemaError
from .loop import make_loop
from .mesher import TriMesh


def _fmt(x):
    return "%.9g" % x


def read_loop(text):
    """Parse and validate a loop document; returns a welded BoundaryLoop."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict):
        raise SchemaError("document root must be an object")
    sides = doc.get("sides")
    if not isinstance(sides, list):
        raise SchemaError("sides: missing or not a list")
    if len(sides) < 3:
        raise SchemaError("sides: need >= 3, got %d" % len(sides))
    curves = []
    for k, side in enumerate(sides):
        if not isinstance(side, dict):
            raise SchemaError("sides[%d]: must be an object" % k)
        degree = side.get("degree")
        cps = side.get("control_points")
        if not isinstance(degree, int) or degree < 0:
            raise SchemaError("sides[%d].degree: need a non-negative integer" % k)
        if not isinstance(cps, list):
            raise SchemaError("sides[%d].control_points: missing or not a list" % k)
        if len(cps) != degree + 1:
            raise SchemaError(
                "sides[%d].control_points: degree %d needs %d points, got %d"
                % (k, degree, degree + 1, len(cps))
            )
        for j, p in enumerate(cps):
            if not (isinstance(p, list) and len(p) == 3
                    and all(isinstance(c, (int, float)) for c in p)):
                raise SchemaError(
                    "sides[%d].control_points[%d]: need [x, y, z]" % (k, j)
                )
        try:
            curves.append(BezierCurve(cps))
        except ValueError as exc:
            raise SchemaError("sides[%d]: %s" % (k, exc)) from exc
    tol = doc.get("weld_tolerance")
    if tol is not None and not isinstance(tol, (int, float)):
        raise SchemaError("weld_tolerance: must be a number")
    return make_loop(curves, weld_tolerance=tol)


def write_loop(loop):
    """Serialize a BoundaryLoop back to document text."""
    doc = {
        "version": 1,
        "sides": [
            {"degree": c.degree, "control_points": c.control_points.tolist()}
            for c in loop.sides
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def write_obj(mesh, contour_set=None):
    """Indexed-mesh OBJ text; optional contour polylines as `l` elements."""
    lines = []
    for v in mesh.vertices:
        lines.append("v %s %s %s" % (_fmt(v[0]), _fmt(v[1]), _fmt(v[2])))
    for t in mesh.triangles:
        lines.append("f %d %d %d" % (t[0] + 1, t[1] + 1, t[2] + 1))
    if contour_set is not None:
        base = len(mesh.vertices)
        for poly in contour_set.polylines:
            idx = []
            for p in poly:
                lines.append("v %s %s %s" % (_fmt(p[0]), _fmt(p[1]), _fmt(p[2])))
                base += 1
                idx.append(str(base))
            lines.append("l " + " ".join(idx))
    return "\n".join(lines) + "\n"


def read_obj(text):
    """Minimal OBJ reader for round-trip checks (v and f records only)."""
    verts, tris = [], []
    for ln, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] == "v":
            if len(parts) != 4:
                raise ParseError("bad vertex record", line=ln)
            verts.append([float(x) for x in parts[1:]])
        elif parts[0] == "f":
            if len(parts) != 4:
                raise ParseError("bad face record", line=ln)
            tris.append([int(x.split("/")[0]) - 1 for x in parts[1:]])
    return TriMesh(np.array(verts), np.array(tris, dtype=int).reshape(-1, 3))


def write_ply_scalar(mesh):
    """ASCII PLY with a per-vertex `quality` scalar."""
    if mesh.scalar is None:
        raise SchemaError("mesh has no scalar channel")
    lines = [
        "ply",
        "format ascii 1.0",
        "element vertex %d" % len(mesh.vertices),
        "property double x",
        "property double y",
        "property double z",
        "property double quality",
        "element face %d" % len(mesh.triangles),
        "property list uchar int vertex_indices",
        "end_header",
    ]
    for v, q in zip(mesh.vertices, mesh.scalar):
        lines.append("%s %s %s %s" % (_fmt(v[0]), _fmt(v[1]), _fmt(v[2]), _fmt(q)))
    for t in mesh.triangles:
        lines.append("3 %d %d %d" % (t[0], t[1], t[2]))
    return "\n".join(lines) + "\n"


def read_ply_scalar(text):
    """Reader for the PLY flavor produced by write_ply_scalar."""
    lines = text.splitlines()
    if not lines or lines[0] != "ply":
        raise ParseError("not a PLY file", line=1)
    nv = nf = None
    body = None
    for k, line in enumerate(lines):
        if line.startswith("element vertex"):
            nv = int(line.split()[2])
        elif line.startswith("element face"):
            nf = int(line.split()[2])
        elif line == "end_header":
            body = k + 1
            break
    if body is None or nv is None or nf is None:
        raise ParseError("malformed PLY header")
    verts = np.array(
        [[float(x) for x in lines[body + i].split()] for i in range(nv)]
    )
    tris = np.array(
        [[int(x) for x in lines[body + nv + i].split()[1:]] for i in range(nf)],
        dtype=int,
    ).reshape(-1, 3)
    return TriMesh(verts[:, :3], tris, scalar=verts[:, 3])
