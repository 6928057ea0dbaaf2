"""Cross-check harness: every closed form against its enumeration/geometry witness.

A check is run per grid size and returns a :class:`CheckResult`; a failure
always carries the grid size and the offending values.  Results are ordered
by (m, n, check name) whatever the degree of parallelism.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import arrangement, formulas, gridfn, teaching
from .formulas import GridDims

SUITES = ("formulas", "teaching", "arrangement", "identities")

BRUTE_FORCE_MAX_CELLS = 16
DEFINITION_MAX_SIDE = 4
BIJECTION_MAX_SIDE = 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    m: int
    n: int
    passed: bool
    counterexample: str | None = None
    elapsed: float = field(default=0.0, compare=False)


@dataclass
class VerifyReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def lines(self, timings: bool = False) -> list[str]:
        out = []
        for c in self.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} m={c.m} n={c.n} {c.name}"
            if timings:
                line += f" ({c.elapsed:.3f}s)"
            if c.counterexample:
                line += f" :: {c.counterexample}"
            out.append(line)
        total = len(self.checks)
        bad = len(self.failures())
        out.append(f"{total - bad}/{total} checks passed")
        return out


class _Mismatch(Exception):
    pass


def _expect(label: str, got, want) -> None:
    if got != want:
        raise _Mismatch(f"{label}: got {got!r}, expected {want!r}")


# formulas suite


def _check_count_invariants(d: GridDims):
    rep = formulas.count_report(d)
    bad = rep.invariant_violations()
    if bad:
        raise _Mismatch(f"{'; '.join(bad)} in {rep}")
    for stats in (formulas.plane_stats_formula(d), formulas.triangle_stats_formula(d)):
        bad = stats.invariant_violations()
        if bad:
            raise _Mismatch(f"{'; '.join(bad)} in {stats}")


def _check_threshold_count(d: GridDims):
    _expect("enumerated threshold functions vs f1 + 2",
            len(gridfn.threshold_bitsets(d)), formulas.t_count(d))
    if d.size <= BRUTE_FORCE_MAX_CELLS:
        _expect("brute-force threshold count vs f1 + 2",
                gridfn.brute_force_threshold_count(d), formulas.t_count(d))


def _check_adjacency(d: GridDims):
    _expect("ordered adjacent pairs vs f1", gridfn.adjacent_pairs_count(d), formulas.f1(d))


def _check_line_count(d: GridDims):
    _expect("distinct lines vs (f1 - f2)/2", len(gridfn.distinct_lines(d)), formulas.line_count(d))


def _check_s_forms(d: GridDims):
    _expect("s direct vs s via f1", formulas.s_count(d), formulas.s_count_via_f1(d))


# teaching suite


def _check_aggregate(d: GridDims):
    emp = teaching.aggregate(d)
    t3, t4 = formulas.t3_t4(d)
    _expect("t", emp.t, formulas.t_count(d))
    _expect("(t3, t4)", (emp.t3, emp.t4), (t3, t4))
    _expect("sigma_bar", emp.sigma_bar, formulas.sigma_bar(d))
    _expect("u", emp.u, formulas.u_counts(d))


def _check_profile_structure(d: GridDims):
    for f, prof in teaching.all_profiles(d):
        if prof.size not in (3, 4):
            raise _Mismatch(f"|T| = {prof.size} for bits {f.to_hex()}")
        if prof.size == 4 and not f.is_constant() and prof.kappa != 2:
            raise _Mismatch(f"size-4 set with {prof.kappa} zeros for bits {f.to_hex()}")


def _check_definition(d: GridDims):
    if d.m > DEFINITION_MAX_SIDE or d.n > DEFINITION_MAX_SIDE:
        return
    for f, prof in teaching.all_profiles(d):
        pts = [p for p, _ in prof.points]
        if not teaching.verify_teaching(f, pts):
            raise _Mismatch(f"T(g) not teaching for bits {f.to_hex()}")
        for k in range(len(pts)):
            if teaching.verify_teaching(f, pts[:k] + pts[k + 1:]):
                raise _Mismatch(f"T(g) minus {pts[k]} still teaching for bits {f.to_hex()}")


def _check_essential_incidence(d: GridDims):
    inc = teaching.essential_incidences(d)
    through = {p: gridfn.lines_through_point(d, p) for p in d.points()}
    for p in d.points():
        _expect(f"h(m,n,{p[0]},{p[1]}) vs 4 l(m,n,i,j)", inc[p], 4 * through[p])
    _expect("sum of |T(g)| vs sigma_bar * t",
            Fraction(sum(inc.values())), formulas.sigma_bar(d) * formulas.t_count(d))


# arrangement suite


def _check_plane(d: GridDims):
    arr = arrangement.build_plane_arrangement(d)
    _expect("number of lines", len(arr.lines), d.size - 1)
    _expect("distinct lines", len(set(arr.lines)), d.size - 1)
    _expect("slope classes vs s + 2", arr.slope_classes, formulas.s_count(d) + 2)
    geo = arr.stats()
    _expect("Euler v - e + c", geo.v - geo.e + geo.c, 1)
    _expect("plane geometry vs closed form", geo, formulas.plane_stats_formula(d))


def _check_triangle(d: GridDims):
    geo = arrangement.triangle_arrangement(d)
    _expect("Euler v - e + c", geo.v - geo.e + geo.c, 1)
    _expect("boundary edges vs m + n + 1", geo.boundary, d.m + d.n + 1)
    _expect("triangle geometry vs closed form", geo, formulas.triangle_stats_formula(d))


def _check_census(d: GridDims):
    census = arrangement.cell_census(d)
    closed = formulas.plane_stats_formula(d)
    geo = arrangement.plane_arrangement(d)
    _expect("cell census vs closed form (c3, c4)", census, (closed.c3, closed.c4))
    _expect("cell census vs geometry (c3, c4)", census, (geo.c3, geo.c4))


def _check_bijection(d: GridDims):
    if d.m > BIJECTION_MAX_SIDE or d.n > BIJECTION_MAX_SIDE:
        return
    universe = frozenset(gridfn.threshold_bitsets(d))
    for bits in gridfn.threshold_bitsets(d):
        if bits & 1:
            continue
        f = gridfn.BinaryGridFunction(d, bits)
        want = teaching.teaching_set(f, universe).point_set()
        got = arrangement.irredundant_constraints(f)
        if got != want:
            raise _Mismatch(f"bits {f.to_hex()}: irredundant {sorted(got)} vs teaching {sorted(want)}")


# identities suite


def _check_f_symmetry(d: GridDims):
    for q in (1, 2, 3):
        _expect(f"f_{q}(m,n) vs f_{q}(n,m)", formulas.f_sum(q, d.m, d.n), formulas.f_sum(q, d.n, d.m))


def _check_incidences(d: GridDims):
    lines = gridfn.distinct_lines(d)
    z = {ln: gridfn.points_on_line(d, ln) for ln in lines}
    _expect("sum over lines of (z - 1) vs f1/2", Fraction(sum(k - 1 for k in z.values())),
            Fraction(formulas.f1(d), 2))
    _expect("sum over points of l(m,n,i,j) vs sum over lines of z",
            sum(gridfn.lines_through_point(d, p) for p in d.points()), sum(z.values()))


def _check_complement_closure(d: GridDims):
    bitsets = set(gridfn.threshold_bitsets(d))
    full = gridfn.full_mask(d)
    for b in sorted(bitsets):
        if full ^ b not in bitsets:
            raise _Mismatch(f"complement of {b:x} missing")


CHECKS = {
    "formulas": [
        ("count-invariants", _check_count_invariants),
        ("threshold-count", _check_threshold_count),
        ("adjacency-f1", _check_adjacency),
        ("line-count", _check_line_count),
        ("s-two-forms", _check_s_forms),
    ],
    "teaching": [
        ("aggregate-vs-closed-form", _check_aggregate),
        ("profile-structure", _check_profile_structure),
        ("definition-minimality", _check_definition),
        ("essential-incidence", _check_essential_incidence),
    ],
    "arrangement": [
        ("plane-geometry", _check_plane),
        ("triangle-geometry", _check_triangle),
        ("cell-census", _check_census),
        ("irredundant-bijection", _check_bijection),
    ],
    "identities": [
        ("f-symmetry", _check_f_symmetry),
        ("point-line-incidences", _check_incidences),
        ("complement-closure", _check_complement_closure),
    ],
}


def parse_checks(spec: str) -> list[str]:
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if not names or "all" in names:
        return list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown check suite(s): {', '.join(unknown)}")
    return [s for s in SUITES if s in names]


def run_check(name: str, m: int, n: int) -> CheckResult:
    fn = dict(item for suite in CHECKS.values() for item in suite)[name]
    start = time.perf_counter()
    try:
        fn(GridDims(m, n))
    except _Mismatch as exc:
        return CheckResult(name, m, n, False, f"m={m} n={n}: {exc}", time.perf_counter() - start)
    except Exception as exc:  # a crash inside a check is a failed check, not a harness crash
        return CheckResult(name, m, n, False, f"m={m} n={n}: {type(exc).__name__}: {exc}",
                           time.perf_counter() - start)
    return CheckResult(name, m, n, True, None, time.perf_counter() - start)


def _run_task(task):
    return run_check(*task)


def run_verify(max_m: int, max_n: int, suites=SUITES, jobs: int = 1) -> VerifyReport:
    """Run the selected suites for every 2 <= m <= max_m, 2 <= n <= max_n."""
    if max_m < 2 or max_n < 2:
        raise ValueError("max-m and max-n must be at least 2")
    names = sorted(name for s in suites for name, _ in CHECKS[s])
    tasks = [(name, m, n) for m in range(2, max_m + 1) for n in range(2, max_n + 1) for name in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=4))
    else:
        results = [run_check(*t) for t in tasks]
    return VerifyReport(results)
