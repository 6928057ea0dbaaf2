"""Closed-form counts for threshold functions on the grid E_m x E_n.

All values are exact.  ``f_sum`` is the gcd-weighted lattice sum everything
else is built from; it accepts rational extents because the unstable-function
count evaluates it at (m/2, n/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InconsistencyError, PreconditionError


@dataclass(frozen=True, order=True)
class GridDims:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise PreconditionError(f"grid extents must be integers, got {self.m!r}, {self.n!r}")
        if self.m < 2 or self.n < 2:
            raise PreconditionError(f"need m >= 2 and n >= 2, got m={self.m}, n={self.n}")

    @classmethod
    def of(cls, dims) -> "GridDims":
        if isinstance(dims, GridDims):
            return dims
        m, n = dims
        return cls(int(m), int(n))

    @property
    def size(self) -> int:
        return self.m * self.n

    def points(self):
        """Grid points in row-major order (x2-major, x1-minor)."""
        return [(x1, x2) for x2 in range(self.n) for x1 in range(self.m)]

    def __iter__(self):
        return iter((self.m, self.n))


def _integral(value, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise InconsistencyError(f"{what} is not an integer: {value}")
    return value.numerator


def _extent_bound(x: Fraction) -> int:
    # largest integer i with i < x, for x > 0
    return math.ceil(x) - 1


@lru_cache(maxsize=None)
def _f_sum_cached(q: int, mx: Fraction, nx: Fraction) -> Fraction:
    imax = _extent_bound(mx)
    jmax = _extent_bound(nx)
    # integer arithmetic on scaled extents; divide once at the end
    M, dm = mx.numerator, mx.denominator
    N, dn = nx.numerator, nx.denominator
    total = 0
    # the summand is even in i and in j, so fold onto the quadrant i, j >= 0
    for i in range(imax + 1):
        row = 0
        for j in range(jmax + 1):
            if math.gcd(i, j) == q:
                row += (N - j * dn) * (1 if j == 0 else 2)
        total += (M - i * dm) * (1 if i == 0 else 2) * row
    return Fraction(total, dm * dn)


def f_sum(q: int, mx, nx):
    """Sum of (mx - |i|)(nx - |j|) over integers |i| < mx, |j| < nx with gcd(i, j) = q.

    Returns an ``int`` when the value is integral and a ``Fraction`` otherwise.
    """
    if q < 1:
        raise PreconditionError("q must be a positive integer")
    mx, nx = Fraction(mx), Fraction(nx)
    if mx <= 0 or nx <= 0:
        raise PreconditionError("extents must be positive")
    value = _f_sum_cached(int(q), mx, nx)
    return value.numerator if value.denominator == 1 else value


def f1(dims) -> int:
    d = GridDims.of(dims)
    return f_sum(1, d.m, d.n)


def f2(dims) -> int:
    d = GridDims.of(dims)
    return f_sum(2, d.m, d.n)


def s_count(dims) -> int:
    """Coprime pairs (i, j) with 0 < i < m and 0 < j < n."""
    d = GridDims.of(dims)
    return sum(1 for i in range(1, d.m) for j in range(1, d.n) if math.gcd(i, j) == 1)


def s_count_via_f1(dims) -> int:
    """The same count written as a second difference of f1."""
    d = GridDims.of(dims)
    m, n = d.m, d.n
    val = Fraction(f_sum(1, m, n) - f_sum(1, m - 1, n) - f_sum(1, m, n - 1) + f_sum(1, m - 1, n - 1), 4) - 1
    return _integral(val, "s(m,n) via f1")


def line_count(dims) -> int:
    """Number of lines through at least two grid points."""
    d = GridDims.of(dims)
    return _integral(Fraction(f_sum(1, d.m, d.n) - f_sum(2, d.m, d.n), 2), "l(m,n)")


def t_count(dims) -> int:
    """Number of threshold functions on the grid."""
    return f1(dims) + 2


def t3_t4(dims) -> tuple[int, int]:
    """Numbers of threshold functions with teaching sets of size 3 and 4."""
    a, b = f1(dims), f2(dims)
    return 2 * b + 8, a - 2 * b - 6


def sigma_bar(dims) -> Fraction:
    """Average minimal-teaching-set size over all threshold functions."""
    a, b = f1(dims), f2(dims)
    return Fraction(4 * a - 2 * b, a + 2)


def half_f1(dims):
    """f1 evaluated at half extents (m/2, n/2)."""
    d = GridDims.of(dims)
    return f_sum(1, Fraction(d.m, 2), Fraction(d.n, 2))


def u_counts(dims) -> tuple[tuple[int, int], tuple[int, int]]:
    """Size-3 counts split by g(0,0) and zeros in the teaching set.

    Returned as ``u[nu][kappa - 1]``; i.e. ``u[0][0]`` is u_{0,1} (unstable
    functions), ``u[0][1]`` is u_{0,2}, ``u[1][0]`` is u_{1,1} and ``u[1][1]``
    is u_{1,2}.
    """
    d = GridDims.of(dims)
    h = Fraction(half_f1(d))
    s = s_count(d)
    one_zero = 2 * h + 2 - s
    two_zeros = f2(d) + 2 - 2 * h + s
    a = _integral(one_zero, f"u_01{tuple(d)}")
    b = _integral(two_zeros, f"u_02{tuple(d)}")
    if a < 0 or b < 0:
        raise InconsistencyError(f"negative u count at {tuple(d)}: {a}, {b}")
    return (a, b), (b, a)


@dataclass(frozen=True)
class CountReport:
    """Counts attached to one grid.  ``u[nu][kappa - 1]`` as in :func:`u_counts`."""

    m: int
    n: int
    f1: int
    f2: int
    s: int
    l: int
    t: int
    t3: int
    t4: int
    sigma_bar: Fraction
    u: tuple[tuple[int, int], tuple[int, int]]

    def invariant_violations(self) -> list[str]:
        bad = []
        if self.t3 + self.t4 != self.t:
            bad.append("t3 + t4 != t")
        if self.t and self.sigma_bar != Fraction(3 * self.t3 + 4 * self.t4, self.t):
            bad.append("sigma_bar != (3 t3 + 4 t4) / t")
        if sum(self.u[0]) + sum(self.u[1]) != self.t3:
            bad.append("sum of u != t3")
        if self.u[0][0] != self.u[1][1] or self.u[0][1] != self.u[1][0]:
            bad.append("u[nu][kappa] != u[1-nu][3-kappa]")
        return bad


def count_report(dims) -> CountReport:
    """Every closed-form count for ``dims`` in one record."""
    d = GridDims.of(dims)
    t3, t4 = t3_t4(d)
    return CountReport(
        m=d.m,
        n=d.n,
        f1=f1(d),
        f2=f2(d),
        s=s_count(d),
        l=line_count(d),
        t=t_count(d),
        t3=t3,
        t4=t4,
        sigma_bar=sigma_bar(d),
        u=u_counts(d),
    )


@dataclass(frozen=True)
class PlaneStats:
    c: int
    c3: int
    c4: int
    e: int
    v: int
    v_inf: int

    def invariant_violations(self) -> list[str]:
        bad = []
        if self.c3 + self.c4 != self.c:
            bad.append("c3 + c4 != c")
        if self.v - self.e + self.c != 1:
            bad.append("v - e + c != 1")
        if 3 * self.c3 + 4 * self.c4 != 2 * self.e + 2 * self.v_inf:
            bad.append("3 c3 + 4 c4 != 2 e + 2 v_inf")
        return bad


@dataclass(frozen=True)
class TriangleStats:
    c: int
    c3: int
    c4: int
    e: int
    v: int
    # m + n + 1 boundary edges; kept so the edge identity can be checked standalone
    boundary: int = field(default=0, compare=False)

    def invariant_violations(self) -> list[str]:
        bad = []
        if self.c3 + self.c4 != self.c:
            bad.append("c3 + c4 != c")
        if self.v - self.e + self.c != 1:
            bad.append("v - e + c != 1")
        if 2 * self.e != 3 * self.c3 + 4 * self.c4 + self.boundary:
            bad.append("2 e != 3 c3 + 4 c4 + m + n + 1")
        return bad


def plane_stats_formula(dims) -> PlaneStats:
    d = GridDims.of(dims)
    a, b, s = Fraction(f1(d)), Fraction(f2(d)), s_count(d)
    where = f" at {tuple(d)}"
    return PlaneStats(
        c=_integral(a / 2 + 1, "c" + where),
        c3=_integral(b + 4, "c3" + where),
        c4=_integral(a / 2 - b - 3, "c4" + where),
        e=_integral(a - b / 2 - s - 2, "e" + where),
        v=_integral(a / 2 - b / 2 - s - 2, "v" + where),
        v_inf=s + 2,
    )


def triangle_stats_formula(dims) -> TriangleStats:
    d = GridDims.of(dims)
    m, n = d.m, d.n
    a, b = Fraction(f1(d)), Fraction(f2(d))
    where = f" at {tuple(d)}"
    return TriangleStats(
        c=_integral(a / 4 + Fraction(m + n, 2), "c_tri" + where),
        c3=_integral(b / 2 + m + n + 1, "c3_tri" + where),
        c4=_integral(a / 4 - b / 2 - Fraction(m + n, 2) - 1, "c4_tri" + where),
        e=_integral(a / 2 - b / 4 + m + n, "e_tri" + where),
        v=_integral(a / 4 - b / 4 + Fraction(m + n, 2) + 1, "v_tri" + where),
        boundary=m + n + 1,
    )
