"""Binary functions on E_m x E_n and the threshold (linearly separable) ones.

A function is stored as an int bitset: bit ``x2 * m + x1`` holds g(x1, x2),
so bit 0 is the origin.  Separability is decided with exact convex-hull
disjointness; enumeration sweeps every critical normal direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .exact_geom import IntPoint, Line, convex_hull, hulls_disjoint
from .formulas import GridDims

LE = "le"
GT = "gt"

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True, order=True)
class BinaryGridFunction:
    dims: GridDims
    bits: int

    def __post_init__(self):
        object.__setattr__(self, "dims", GridDims.of(self.dims))
        if self.bits < 0 or self.bits >> self.dims.size:
            raise PreconditionError("bitset does not fit the grid")

    @classmethod
    def from_values(cls, dims, values) -> "BinaryGridFunction":
        """Build from a mapping {(x1, x2): bit} or a row-major sequence of bits."""
        d = GridDims.of(dims)
        bits = 0
        if hasattr(values, "items"):
            for (x1, x2), v in values.items():
                if v:
                    bits |= 1 << index(d, (x1, x2))
        else:
            values = list(values)
            if len(values) != d.size:
                raise PreconditionError(f"expected {d.size} values, got {len(values)}")
            for k, v in enumerate(values):
                if v:
                    bits |= 1 << k
        return cls(d, bits)

    @classmethod
    def from_hex(cls, dims, text: str) -> "BinaryGridFunction":
        return cls(GridDims.of(dims), int(text, 16))

    def to_hex(self) -> str:
        return format(self.bits, "x")

    def __call__(self, x1: int, x2: int) -> int:
        return (self.bits >> index(self.dims, (x1, x2))) & 1

    def zeros(self) -> list[tuple[int, int]]:
        """M0(g) in row-major order."""
        return [p for k, p in enumerate(self.dims.points()) if not (self.bits >> k) & 1]

    def ones(self) -> list[tuple[int, int]]:
        """M1(g) in row-major order."""
        return [p for k, p in enumerate(self.dims.points()) if (self.bits >> k) & 1]

    def complement(self) -> "BinaryGridFunction":
        return BinaryGridFunction(self.dims, full_mask(self.dims) ^ self.bits)

    def flip(self, p) -> "BinaryGridFunction":
        return BinaryGridFunction(self.dims, self.bits ^ (1 << index(self.dims, p)))

    def is_constant(self) -> bool:
        return self.bits == 0 or self.bits == full_mask(self.dims)

    def rows(self) -> str:
        """Text picture, top row is x2 = n - 1."""
        m, n = self.dims
        return "\n".join(
            "".join(str(self(x1, x2)) for x1 in range(m)) for x2 in reversed(range(n))
        )


def index(dims: GridDims, p) -> int:
    x1, x2 = p
    if not (0 <= x1 < dims.m and 0 <= x2 < dims.n):
        raise PreconditionError(f"point {tuple(p)} outside the {dims.m}x{dims.n} grid")
    return x2 * dims.m + x1


def full_mask(dims: GridDims) -> int:
    return (1 << dims.size) - 1


def from_line(line: Line, dims, side: str = LE) -> BinaryGridFunction:
    """The threshold function with zeros on the ``side`` of ``a1 x1 + a2 x2`` vs ``a0``.

    ``le`` puts the zeros where a1 x1 + a2 x2 <= a0; ``gt`` is its complement.
    """
    if side not in (LE, GT):
        raise PreconditionError(f"side must be 'le' or 'gt', got {side!r}")
    d = GridDims.of(dims)
    bits = 0
    for k, (x1, x2) in enumerate(d.points()):
        if line.a1 * x1 + line.a2 * x2 > line.a0:
            bits |= 1 << k
    g = BinaryGridFunction(d, bits)
    return g if side == LE else g.complement()


def _points_of(dims: GridDims, bits: int, value: int):
    pts = dims.points()
    if value:
        return [pts[k] for k in range(dims.size) if (bits >> k) & 1]
    return [pts[k] for k in range(dims.size) if not (bits >> k) & 1]


def is_threshold_bits(dims: GridDims, bits: int) -> bool:
    if bits == 0 or bits == full_mask(dims):
        return True
    h0 = convex_hull(_points_of(dims, bits, 0))
    h1 = convex_hull(_points_of(dims, bits, 1))
    return hulls_disjoint(h0, h1)


def is_threshold(f: BinaryGridFunction) -> bool:
    """True iff some line separates the zeros of ``f`` from its ones."""
    return is_threshold_bits(f.dims, f.bits)


def primitive_vectors(dims) -> list[tuple[int, int]]:
    """All (i, j) with |i| < m, |j| < n and gcd(i, j) = 1, sorted."""
    d = GridDims.of(dims)
    return [
        (i, j)
        for i in range(-(d.m - 1), d.m)
        for j in range(-(d.n - 1), d.n)
        if math.gcd(i, j) == 1
    ]


@lru_cache(maxsize=64)
def threshold_bitsets(dims: GridDims) -> tuple[int, ...]:
    """Sorted bitsets of every threshold function on ``dims``.

    Every difference vector (i, j) gives a critical normal w = (-j, i).  The
    points are ordered by w.x with ties broken either way along (i, j); these
    two orders are the orders of the generic normals just beside w, and every
    generic normal lies beside some critical one.  Each prefix of such an order
    is the zero set of a threshold function, and every threshold function is a
    prefix of a generic order.
    """
    d = GridDims.of(dims)
    pts = d.points()
    found = {0, full_mask(d)}
    for i, j in primitive_vectors(d):
        w1, w2 = -j, i
        for tie in (1, -1):
            order = sorted(
                range(d.size),
                key=lambda k: (w1 * pts[k][0] + w2 * pts[k][1], tie * (i * pts[k][0] + j * pts[k][1])),
            )
            zeros = 0
            for k in order[:-1]:
                zeros |= 1 << k
                found.add(full_mask(d) ^ zeros)
    return tuple(sorted(found))


def enumerate_threshold(dims) -> list[BinaryGridFunction]:
    """All threshold functions, ordered by bitset value."""
    d = GridDims.of(dims)
    return [BinaryGridFunction(d, b) for b in threshold_bitsets(d)]


def brute_force_threshold_count(dims) -> int:
    """Count threshold functions by testing all 2^(mn) functions."""
    d = GridDims.of(dims)
    if d.size > BRUTE_FORCE_LIMIT:
        raise PreconditionError(f"brute force needs m*n <= {BRUTE_FORCE_LIMIT}, got {d.size}")
    return sum(1 for bits in range(1 << d.size) if is_threshold_bits(d, bits))


def adjacent_pairs_count(dims) -> int:
    """Ordered pairs of distinct grid points with no grid point strictly between them."""
    d = GridDims.of(dims)
    pts = d.points()
    return sum(
        1
        for p in pts
        for q in pts
        if p != q and math.gcd(q[0] - p[0], q[1] - p[1]) == 1
    )


def distinct_lines(dims) -> set[Line]:
    """Every line through at least two grid points, by pairwise scan."""
    d = GridDims.of(dims)
    pts = d.points()
    return {Line.through(p, q) for a, p in enumerate(pts) for q in pts[a + 1:]}


def lines_through_point(dims, p) -> int:
    """Number of distinct lines through ``p`` and at least one other grid point."""
    d = GridDims.of(dims)
    index(d, p)
    return len({Line.through(p, q) for q in d.points() if q != tuple(p)})


def points_on_line(dims, line: Line) -> int:
    d = GridDims.of(dims)
    return sum(1 for x1, x2 in d.points() if line.contains(x1, x2))


__all__ = [
    "BinaryGridFunction",
    "GT",
    "IntPoint",
    "LE",
    "Line",
    "adjacent_pairs_count",
    "brute_force_threshold_count",
    "distinct_lines",
    "enumerate_threshold",
    "from_line",
    "full_mask",
    "index",
    "is_threshold",
    "is_threshold_bits",
    "lines_through_point",
    "points_on_line",
    "primitive_vectors",
    "threshold_bitsets",
]
