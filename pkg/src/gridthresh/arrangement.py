"""Parameter-space partitions by the lines a1*x1 + a2*x2 = 1.

Two objects are built here with exact rational vertices:

* the plane arrangement of the m*n - 1 lines indexed by grid points other
  than the origin, whose cells are the threshold functions with g(0,0) = 0;
* the triangle (0,0), (1,0), (0,1) cut by the chords indexed by
  {1..m} x {1..n}.

Cells are counted through Euler's relation, and the 3-gon/4-gon split is
solved from the edge-incidence identity.  ``cell_census`` and
``irredundant_constraints`` give independent routes through the threshold
functions themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import PreconditionError
from .exact_geom import Line, RatPoint, line_intersection
from .formulas import GridDims, PlaneStats, TriangleStats
from .gridfn import BinaryGridFunction, is_threshold, threshold_bitsets
from .teaching import teaching_set

PLANE = "plane"
TRIANGLE = "triangle"


@dataclass(frozen=True)
class PlaneArrangement:
    lines: tuple[Line, ...]
    vertices: tuple[RatPoint, ...]
    per_line_vertex_counts: tuple[int, ...]
    slope_classes: int

    def stats(self) -> PlaneStats:
        v = len(self.vertices)
        e = sum(k + 1 for k in self.per_line_vertex_counts)
        c = 1 + e - v
        # c3 + c4 = c and 3 c3 + 4 c4 = 2 e + 2 v_inf
        c4 = 2 * e + 2 * self.slope_classes - 3 * c
        return PlaneStats(c=c, c3=c - c4, c4=c4, e=e, v=v, v_inf=self.slope_classes)


@dataclass(frozen=True)
class Segment:
    line: Line
    start: RatPoint
    end: RatPoint

    def contains(self, p: RatPoint) -> bool:
        if not self.line.contains(p.x, p.y):
            return False
        return (min(self.start.x, self.end.x) <= p.x <= max(self.start.x, self.end.x)
                and min(self.start.y, self.end.y) <= p.y <= max(self.start.y, self.end.y))


@dataclass(frozen=True)
class TriangleArrangement:
    segments: tuple[Segment, ...]
    vertex_points: tuple[RatPoint, ...]
    vertices: int
    edges: int
    cells: int
    boundary_edges: int

    def stats(self) -> TriangleStats:
        # c3 + c4 = c and 2 e = 3 c3 + 4 c4 + (boundary edges)
        c4 = 2 * self.edges - self.boundary_edges - 3 * self.cells
        return TriangleStats(
            c=self.cells,
            c3=self.cells - c4,
            c4=c4,
            e=self.edges,
            v=self.vertices,
            boundary=self.boundary_edges,
        )


@dataclass(frozen=True)
class CellDescriptor:
    function: BinaryGridFunction
    irredundant_count: int
    bounded: bool


def plane_lines(dims) -> list[Line]:
    """Lines x1*a1 + x2*a2 = 1 in the (a1, a2) plane, one per non-origin grid point."""
    d = GridDims.of(dims)
    return [Line(1, x1, x2) for x1, x2 in d.points() if (x1, x2) != (0, 0)]


def build_plane_arrangement(dims) -> PlaneArrangement:
    lines = plane_lines(dims)
    on_line: list[set[RatPoint]] = [set() for _ in lines]
    vertices: set[RatPoint] = set()
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            p = line_intersection(lines[a], lines[b])
            if isinstance(p, RatPoint):
                vertices.add(p)
                on_line[a].add(p)
                on_line[b].add(p)
    slopes = {(ln.a1 // math.gcd(ln.a1, ln.a2), ln.a2 // math.gcd(ln.a1, ln.a2)) for ln in lines}
    return PlaneArrangement(
        lines=tuple(lines),
        vertices=tuple(sorted(vertices)),
        per_line_vertex_counts=tuple(len(s) for s in on_line),
        slope_classes=len(slopes),
    )


def plane_arrangement(dims) -> PlaneStats:
    """Cell, edge and vertex counts of the plane partition, computed geometrically."""
    return build_plane_arrangement(dims).stats()


def triangle_segments(dims) -> list[Segment]:
    """The chords for {1..m} x {1..n} followed by the two legs."""
    d = GridDims.of(dims)
    zero = Fraction(0)
    segs = [
        Segment(Line(1, x1, x2), RatPoint(zero, Fraction(1, x2)), RatPoint(Fraction(1, x1), zero))
        for x2 in range(1, d.n + 1)
        for x1 in range(1, d.m + 1)
    ]
    segs.append(Segment(Line(0, 0, 1), RatPoint(zero, zero), RatPoint(Fraction(1), zero)))
    segs.append(Segment(Line(0, 1, 0), RatPoint(zero, zero), RatPoint(zero, Fraction(1))))
    return segs


def build_triangle_arrangement(dims) -> TriangleArrangement:
    d = GridDims.of(dims)
    segs = triangle_segments(d)
    on_seg: list[set[RatPoint]] = [{s.start, s.end} for s in segs]
    for a in range(len(segs)):
        for b in range(a + 1, len(segs)):
            p = line_intersection(segs[a].line, segs[b].line)
            if isinstance(p, RatPoint) and segs[a].contains(p) and segs[b].contains(p):
                on_seg[a].add(p)
                on_seg[b].add(p)
    vertices = set().union(*on_seg)
    edges = sum(len(s) - 1 for s in on_seg)
    hyp = Line(1, 1, 1)
    boundary = sum(
        len(pts) - 1
        for s, pts in zip(segs, on_seg)
        if s.line in (hyp, Line(0, 0, 1), Line(0, 1, 0))
    )
    return TriangleArrangement(
        segments=tuple(segs),
        vertex_points=tuple(sorted(vertices)),
        vertices=len(vertices),
        edges=edges,
        cells=1 + edges - len(vertices),
        boundary_edges=boundary,
    )


def triangle_arrangement(dims) -> TriangleStats:
    """Cell, edge and vertex counts of the triangle partition, computed geometrically."""
    return build_triangle_arrangement(dims).stats()


def cell_census(dims) -> tuple[int, int]:
    """(c3, c4) by counting teaching-set sizes over threshold functions with g(0,0) = 0."""
    d = GridDims.of(dims)
    universe = frozenset(threshold_bitsets(d))
    c3 = c4 = 0
    for bits in threshold_bitsets(d):
        if bits & 1:
            continue
        size = teaching_set(BinaryGridFunction(d, bits), universe).size
        if size == 3:
            c3 += 1
        elif size == 4:
            c4 += 1
        else:
            raise PreconditionError(f"teaching set of size {size} at {bits:x}")
    return c3, c4


# Linear feasibility over the integers.  A constraint is (coeffs, rhs, strict)
# meaning coeffs . a < rhs when strict, else coeffs . a <= rhs.


def _feasible(cons, nvars: int) -> bool:
    """Fourier-Motzkin feasibility of a mixed strict/non-strict system."""
    if nvars == 0:
        return all((0 < rhs) if strict else (0 <= rhs) for _, rhs, strict in cons)
    if nvars == 1:
        # bounds kept as (num, den, strict) with den > 0; compared by cross-multiplication
        lo = hi = None
        for (c,), rhs, strict in cons:
            if c == 0:
                if not ((0 < rhs) if strict else (0 <= rhs)):
                    return False
            elif c > 0:
                if hi is None or rhs * hi[1] < hi[0] * c or (rhs * hi[1] == hi[0] * c and strict):
                    hi = (rhs, c, strict)
            else:
                num, den = -rhs, -c
                if lo is None or num * lo[1] > lo[0] * den or (num * lo[1] == lo[0] * den and strict):
                    lo = (num, den, strict)
        if lo is None or hi is None:
            return True
        left, right = lo[0] * hi[1], hi[0] * lo[1]
        return left < right or (left == right and not lo[2] and not hi[2])
    upper, lower, rest = [], [], set()
    for coeffs, rhs, strict in cons:
        c = coeffs[-1]
        if c > 0:
            upper.append((coeffs, rhs, strict))
        elif c < 0:
            lower.append((coeffs, rhs, strict))
        else:
            rest.add((coeffs[:-1], rhs, strict))
    for cu, ru, su in upper:
        for cl, rl, sl in lower:
            ku, kl = -cl[-1], cu[-1]
            coeffs = tuple(ku * x + kl * y for x, y in zip(cu[:-1], cl[:-1]))
            rhs = ku * ru + kl * rl
            g = math.gcd(*coeffs, rhs)
            if g > 1:
                coeffs = tuple(x // g for x in coeffs)
                rhs //= g
            rest.add((coeffs, rhs, su or sl))
    return _feasible(rest, nvars - 1)


def _fix_first(cons, value: int):
    return [(coeffs[1:], rhs - coeffs[0] * value, strict) for coeffs, rhs, strict in cons]


def _cone_nonzero(cons, nvars: int) -> bool:
    """Does the homogeneous system (all rhs 0) have a nonzero solution?"""
    for s in (1, -1):
        if _feasible(_fix_first(cons, s), nvars - 1):
            return True
    if nvars == 1:
        return False
    return _cone_nonzero(_fix_first(cons, 0), nvars - 1)


def _cone_nonempty(cons, nvars: int) -> bool:
    # the origin satisfies every non-strict homogeneous constraint
    if not any(strict for _, _, strict in cons):
        return True
    return _cone_nonzero(cons, nvars)


def _cone_system(f: BinaryGridFunction):
    """The cone of separating (a0, a1, a2): a.x <= a0 on zeros, a.x > a0 on ones."""
    out = []
    for (x1, x2) in f.dims.points():
        if f(x1, x2):
            out.append(((1, -x1, -x2), 0, True))
        else:
            out.append(((-1, x1, x2), 0, False))
    return out


def _violated(con):
    coeffs, rhs, strict = con
    return tuple(-c for c in coeffs), -rhs, not strict


def _check_cell_function(f: BinaryGridFunction) -> None:
    if f(0, 0) != 0:
        raise PreconditionError("cells correspond to functions with g(0,0) = 0")
    if not is_threshold(f):
        raise PreconditionError("function is not threshold")


def irredundant_constraints(f: BinaryGridFunction) -> frozenset[tuple[int, int]]:
    """Grid points whose inequality in the separating-cone system cannot be dropped.

    The constraint of point p is irredundant iff the system with p's
    inequality reversed and all others kept still has a solution.  The
    origin's inequality is 0 <= a0; in the a0 = 1 slice it sits at infinity,
    which is why the full cone is tested rather than the slice alone.
    """
    _check_cell_function(f)
    system = _cone_system(f)
    pts = f.dims.points()
    out = set()
    for k, con in enumerate(system):
        trial = system[:k] + [_violated(con)] + system[k + 1:]
        if _cone_nonempty(trial, 3):
            out.add(pts[k])
    return frozenset(out)


def is_bounded_cell(f: BinaryGridFunction) -> bool:
    """Whether the cell of ``f`` in the a0 = 1 plane is bounded."""
    _check_cell_function(f)
    # recession directions d: d.x <= 0 on zeros, d.x >= 0 on ones
    rec = []
    for (x1, x2) in f.dims.points():
        if (x1, x2) == (0, 0):
            continue
        if f(x1, x2):
            rec.append(((-x1, -x2), 0, False))
        else:
            rec.append(((x1, x2), 0, False))
    return not _cone_nonzero(rec, 2)


def cell_descriptor(f: BinaryGridFunction) -> CellDescriptor:
    return CellDescriptor(
        function=f,
        irredundant_count=len(irredundant_constraints(f)),
        bounded=is_bounded_cell(f),
    )


def plane_cells(dims) -> list[CellDescriptor]:
    """One descriptor per cell of the plane partition, in canonical function order."""
    d = GridDims.of(dims)
    return [
        cell_descriptor(BinaryGridFunction(d, b))
        for b in threshold_bitsets(d)
        if not b & 1
    ]


# SVG output


def _fmt(x) -> str:
    s = f"{float(x):.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _clip_line(line: Line, box):
    """Endpoints of ``line`` inside the closed box (xmin, ymin, xmax, ymax), or None."""
    xmin, ymin, xmax, ymax = box
    cand = set()
    if line.a2 != 0:
        for x in (xmin, xmax):
            y = Fraction(line.a0 - line.a1 * x, line.a2)
            if ymin <= y <= ymax:
                cand.add((Fraction(x), y))
    if line.a1 != 0:
        for y in (ymin, ymax):
            x = Fraction(line.a0 - line.a2 * y, line.a1)
            if xmin <= x <= xmax:
                cand.add((x, Fraction(y)))
    if len(cand) < 2:
        return None
    pts = sorted(cand)
    return pts[0], pts[-1]


def arrangement_svg(dims, mode: str = PLANE, viewport=None, size: int = 600) -> str:
    """SVG text of the plane or triangle partition; deterministic for fixed inputs."""
    d = GridDims.of(dims)
    if mode == PLANE:
        arr = build_plane_arrangement(d)
        verts = arr.vertices
        if viewport is None:
            xs = [p.x for p in verts] or [Fraction(0)]
            ys = [p.y for p in verts] or [Fraction(0)]
            pad = max(Fraction(1, 2), (max(xs) - min(xs)) / 4, (max(ys) - min(ys)) / 4)
            viewport = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
        box = tuple(Fraction(v) for v in viewport)
        pieces = [(ln, _clip_line(ln, box)) for ln in arr.lines]
    elif mode == TRIANGLE:
        arr = build_triangle_arrangement(d)
        verts = arr.vertex_points
        box = tuple(Fraction(v) for v in (viewport or (Fraction(-1, 20), Fraction(-1, 20), Fraction(21, 20), Fraction(21, 20))))
        pieces = [(s.line, ((s.start.x, s.start.y), (s.end.x, s.end.y))) for s in arr.segments]
    else:
        raise PreconditionError(f"mode must be 'plane' or 'triangle', got {mode!r}")
    xmin, ymin, xmax, ymax = box
    if xmax <= xmin or ymax <= ymin:
        raise PreconditionError("empty viewport")
    scale = Fraction(size) / max(xmax - xmin, ymax - ymin)

    def tx(x):
        return _fmt((x - xmin) * scale)

    def ty(y):
        return _fmt((ymax - y) * scale)

    width = _fmt((xmax - xmin) * scale)
    height = _fmt((ymax - ymin) * scale)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{mode} partition, m={d.m}, n={d.n}</title>",
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
        '<g stroke="black" stroke-width="1" fill="none">',
    ]
    for ln, seg in pieces:
        if seg is None:
            continue
        (x0, y0), (x1, y1) = seg
        out.append(
            f'<line class="line" data-a="{ln.a0},{ln.a1},{ln.a2}" x1="{tx(x0)}" y1="{ty(y0)}" '
            f'x2="{tx(x1)}" y2="{ty(y1)}"/>'
        )
    out.append("</g>")
    out.append('<g fill="red" stroke="none">')
    for p in verts:
        if xmin <= p.x <= xmax and ymin <= p.y <= ymax:
            out.append(f'<circle class="vertex" cx="{tx(p.x)}" cy="{ty(p.y)}" r="3"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_arrangement_svg(dims, mode: str, path, viewport=None) -> Path:
    """Write :func:`arrangement_svg` to ``path``; raises ``OSError`` if unwritable."""
    path = Path(path)
    path.write_text(arrangement_svg(dims, mode, viewport), encoding="utf-8")
    return path
