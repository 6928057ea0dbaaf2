"""Exact integer/rational primitives shared by the rest of the package.

Everything here works on Python ints and :class:`fractions.Fraction`, so no
value is ever rounded.  ``Rat`` is simply an alias for ``Fraction``: it is
always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Rat = Fraction

PARALLEL = "parallel"
IDENTICAL = "identical"


class IntPoint(NamedTuple):
    x: int
    y: int


class RatPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "RatPoint":
        return cls(Fraction(x), Fraction(y))


def gcd(a: int, b: int) -> int:
    """Non-negative gcd of |a| and |b|, with gcd(0, 0) == 0."""
    return math.gcd(a, b)


def orientation(p, q, r) -> int:
    """Sign of the cross product (q - p) x (r - p): +1 ccw, -1 cw, 0 collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


@dataclass(frozen=True, order=True)
class Line:
    """The line ``a1*x1 + a2*x2 = a0`` with integer coefficients.

    Instances are normalized on construction: the three coefficients are
    divided by their gcd and the sign is fixed so that ``a1 > 0``, or
    ``a1 == 0 and a2 > 0``.  Two lines are therefore equal iff they are the
    same set of points.
    """

    a0: int
    a1: int
    a2: int

    def __post_init__(self):
        a0, a1, a2 = int(self.a0), int(self.a1), int(self.a2)
        if a1 == 0 and a2 == 0:
            raise ValueError("degenerate line: a1 and a2 are both zero")
        g = math.gcd(math.gcd(a0, a1), a2)
        if a1 < 0 or (a1 == 0 and a2 < 0):
            g = -g
        object.__setattr__(self, "a0", a0 // g)
        object.__setattr__(self, "a1", a1 // g)
        object.__setattr__(self, "a2", a2 // g)

    @classmethod
    def through(cls, p, q) -> "Line":
        """The line through two distinct integer points."""
        if p[0] == q[0] and p[1] == q[1]:
            raise ValueError("points coincide")
        a1 = q[1] - p[1]
        a2 = p[0] - q[0]
        return cls(a1 * p[0] + a2 * p[1], a1, a2)

    def value(self, x1, x2):
        return self.a1 * x1 + self.a2 * x2

    def contains(self, x1, x2) -> bool:
        return self.a1 * x1 + self.a2 * x2 == self.a0


def line_intersection(l1: Line, l2: Line) -> Union[RatPoint, str]:
    """Exact intersection point, or ``"parallel"`` / ``"identical"``."""
    for line in (l1, l2):
        if line.a1 == 0 and line.a2 == 0:
            raise ValueError("degenerate line")
    det = l1.a1 * l2.a2 - l1.a2 * l2.a1
    if det == 0:
        # normals are proportional; Line normalization makes equal lines compare equal
        return IDENTICAL if Line(l1.a0, l1.a1, l1.a2) == Line(l2.a0, l2.a1, l2.a2) else PARALLEL
    x = Fraction(l1.a0 * l2.a2 - l1.a2 * l2.a0, det)
    y = Fraction(l1.a1 * l2.a0 - l1.a0 * l2.a1, det)
    return RatPoint(x, y)


def convex_hull(points) -> list[tuple[int, int]]:
    """Andrew's monotone chain.  Returns ccw vertices without collinear ones.

    Degenerate inputs give 1 vertex (a point) or 2 vertices (a segment).
    """
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _on_segment(p, q, r) -> bool:
    # r is known to be collinear with p, q
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test (segments may be single points)."""
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and _on_segment(q1, q2, p1):
        return True
    if d2 == 0 and _on_segment(q1, q2, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, q1):
        return True
    if d4 == 0 and _on_segment(p1, p2, q2):
        return True
    return False


def point_in_convex(hull, p) -> bool:
    """Closed containment of ``p`` in a ccw hull with at least three vertices."""
    k = len(hull)
    for i in range(k):
        if orientation(hull[i], hull[(i + 1) % k], p) < 0:
            return False
    return True


def _edges(hull):
    if len(hull) == 1:
        return [(hull[0], hull[0])]
    if len(hull) == 2:
        return [(hull[0], hull[1])]
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def hulls_disjoint(h1, h2) -> bool:
    """True iff the closed convex hulls ``h1`` and ``h2`` share no point.

    Both arguments are outputs of :func:`convex_hull` and may be points or
    segments.  Two compact convex sets intersect iff their boundaries cross
    or one contains a vertex of the other.
    """
    if not h1 or not h2:
        return True
    for a, b in _edges(h1):
        for c, d in _edges(h2):
            if segments_intersect(a, b, c, d):
                return False
    if len(h2) >= 3 and point_in_convex(h2, h1[0]):
        return False
    if len(h1) >= 3 and point_in_convex(h1, h2[0]):
        return False
    return True
