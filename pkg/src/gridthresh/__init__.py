"""Exact combinatorics of threshold functions on the grid {0..m-1} x {0..n-1}."""

from .errors import InconsistencyError, PreconditionError
from .exact_geom import IntPoint, Line, Rat, RatPoint, gcd, line_intersection, orientation
from .formulas import (
    CountReport,
    GridDims,
    PlaneStats,
    TriangleStats,
    count_report,
    f_sum,
    line_count,
    plane_stats_formula,
    s_count,
    sigma_bar,
    t3_t4,
    t_count,
    triangle_stats_formula,
    u_counts,
)
from .gridfn import (
    BinaryGridFunction,
    adjacent_pairs_count,
    brute_force_threshold_count,
    enumerate_threshold,
    from_line,
    is_threshold,
    lines_through_point,
    points_on_line,
)
from .teaching import TeachingProfile, aggregate, is_essential, teaching_set, verify_teaching
from .arrangement import (
    cell_census,
    emit_arrangement_svg,
    irredundant_constraints,
    plane_arrangement,
    triangle_arrangement,
)

__version__ = "0.1.0"
