"""Essential points and minimal teaching sets of threshold functions.

A point is essential when flipping the function there gives another threshold
function; the minimal teaching set is the set of essential points.  Grid-wide
aggregation flips against the enumerated set of threshold bitsets, which is
the same test as :func:`is_essential` but a set lookup instead of a hull test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .formulas import CountReport, GridDims, f_sum, s_count
from .gridfn import (
    BinaryGridFunction,
    adjacent_pairs_count,
    distinct_lines,
    index,
    is_threshold,
    is_threshold_bits,
    threshold_bitsets,
)

VERIFY_LIMIT = 400


@dataclass(frozen=True)
class TeachingProfile:
    points: tuple[tuple[tuple[int, int], int], ...]
    size: int
    nu: int
    kappa: int

    def point_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(p for p, _ in self.points)

    def as_dict(self) -> dict:
        return {
            "points": [[p[0], p[1], v] for p, v in self.points],
            "size": self.size,
            "nu": self.nu,
            "kappa": self.kappa,
        }


def _require_threshold(f: BinaryGridFunction) -> None:
    if not is_threshold(f):
        raise PreconditionError("function is not threshold")


def is_essential(f: BinaryGridFunction, p) -> bool:
    """True iff flipping ``f`` at ``p`` gives another threshold function."""
    _require_threshold(f)
    k = index(f.dims, p)
    return is_threshold_bits(f.dims, f.bits ^ (1 << k))


def _profile(dims: GridDims, bits: int, essential_idx) -> TeachingProfile:
    pts = dims.points()
    entries = tuple((pts[k], (bits >> k) & 1) for k in sorted(essential_idx))
    return TeachingProfile(
        points=entries,
        size=len(entries),
        nu=bits & 1,
        kappa=sum(1 for _, v in entries if v == 0),
    )


def teaching_set(f: BinaryGridFunction, universe=None) -> TeachingProfile:
    """Minimal teaching set of ``f`` with its size, g(0,0) and number of zeros.

    ``universe`` may be a set of all threshold bitsets for ``f.dims``; flips
    are then looked up instead of hull-tested.
    """
    d = f.dims
    if universe is None:
        _require_threshold(f)
        ess = [k for k in range(d.size) if is_threshold_bits(d, f.bits ^ (1 << k))]
    else:
        if f.bits not in universe:
            raise PreconditionError("function is not threshold")
        ess = [k for k in range(d.size) if f.bits ^ (1 << k) in universe]
    return _profile(d, f.bits, ess)


def verify_teaching(f: BinaryGridFunction, points) -> bool:
    """Definition-level check: no other threshold function agrees with ``f`` on ``points``."""
    d = f.dims
    if d.size > VERIFY_LIMIT:
        raise PreconditionError(f"verify_teaching needs m*n <= {VERIFY_LIMIT}")
    _require_threshold(f)
    mask = 0
    for p in points:
        mask |= 1 << index(d, p)
    target = f.bits & mask
    return not any(h != f.bits and h & mask == target for h in threshold_bitsets(d))


def all_profiles(dims) -> list[tuple[BinaryGridFunction, TeachingProfile]]:
    """Every threshold function on ``dims`` with its teaching profile, in canonical order."""
    d = GridDims.of(dims)
    bitsets = threshold_bitsets(d)
    universe = frozenset(bitsets)
    return [
        (f, teaching_set(f, universe))
        for f in (BinaryGridFunction(d, b) for b in bitsets)
    ]


def aggregate(dims) -> CountReport:
    """Empirical counts from full enumeration; comparable field-by-field with ``count_report``."""
    d = GridDims.of(dims)
    t = t3 = t4 = total = 0
    u = [[0, 0], [0, 0]]
    for _, prof in all_profiles(d):
        t += 1
        total += prof.size
        if prof.size == 3:
            t3 += 1
            u[prof.nu][prof.kappa - 1] += 1
        elif prof.size == 4:
            t4 += 1
    return CountReport(
        m=d.m,
        n=d.n,
        # f1, s and l come from pairwise scans, not from the closed forms
        f1=adjacent_pairs_count(d),
        f2=f_sum(2, d.m, d.n),
        s=s_count(d),
        l=len(distinct_lines(d)),
        t=t,
        t3=t3,
        t4=t4,
        sigma_bar=Fraction(total, t),
        u=(tuple(u[0]), tuple(u[1])),
    )


def essential_incidences(dims) -> dict[tuple[int, int], int]:
    """For each grid point, the number of threshold functions for which it is essential."""
    d = GridDims.of(dims)
    counts = {p: 0 for p in d.points()}
    for _, prof in all_profiles(d):
        for p, _v in prof.points:
            counts[p] += 1
    return counts
