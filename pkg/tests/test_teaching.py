from fractions import Fraction

import pytest

from gridthresh import formulas as F
from gridthresh.errors import PreconditionError
from gridthresh.exact_geom import Line
from gridthresh.gridfn import BinaryGridFunction, enumerate_threshold, from_line, lines_through_point
from gridthresh.teaching import (
    aggregate,
    all_profiles,
    essential_incidences,
    is_essential,
    teaching_set,
    verify_teaching,
)
from oracles import grid


@pytest.fixture(scope="module")
def worked_g():
    return from_line(Line(55, 7, 5), (10, 10))


@pytest.fixture(scope="module")
def worked_h():
    return from_line(Line(22, 3, 2), (10, 10))


def test_is_essential_examples(worked_g):
    assert is_essential(worked_g, (5, 4))
    assert not is_essential(worked_g, (0, 0))
    zero = BinaryGridFunction((2, 2), 0)
    assert all(is_essential(zero, p) for p in grid(2, 2))


def test_non_threshold_rejected():
    xor = BinaryGridFunction.from_values((2, 2), {(0, 0): 1, (1, 1): 1})
    with pytest.raises(PreconditionError):
        is_essential(xor, (0, 0))
    with pytest.raises(PreconditionError):
        teaching_set(xor)


def test_teaching_set_worked_10x10(worked_g, worked_h):
    g = teaching_set(worked_g)
    assert g.points == (((8, 0), 1), ((5, 4), 0), ((3, 7), 1))
    assert (g.size, g.nu, g.kappa) == (3, 0, 1)
    h = teaching_set(worked_h)
    assert dict(h.points) == {(6, 2): 0, (2, 8): 0, (7, 1): 1, (3, 7): 1}
    assert (h.size, h.kappa) == (4, 2)


def test_teaching_set_complement(worked_g, worked_h):
    for f in (worked_g, worked_h):
        a, b = teaching_set(f), teaching_set(f.complement())
        assert [(p, 1 - v) for p, v in a.points] == list(b.points)


def test_universe_lookup_matches_hull_flips():
    d = F.GridDims(4, 3)
    universe = frozenset(f.bits for f in enumerate_threshold(d))
    for f in enumerate_threshold(d):
        assert teaching_set(f) == teaching_set(f, universe)


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 5) for n in range(2, 5)])
def test_teaching_definition_and_minimality(dims):
    d = F.GridDims(*dims)
    for f, prof in all_profiles(d):
        pts = [p for p, _ in prof.points]
        assert verify_teaching(f, pts)
        for k in range(len(pts)):
            assert not verify_teaching(f, pts[:k] + pts[k + 1:])
        assert verify_teaching(f, d.points())


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 9) for n in range(2, 9)])
def test_profile_structure(dims):
    for f, prof in all_profiles(dims):
        assert prof.size in (3, 4)
        assert prof.size == len(prof.points)
        assert prof.kappa == sum(1 for _, v in prof.points if v == 0)
        assert [p for p, _ in prof.points] == sorted((p for p, _ in prof.points), key=lambda p: (p[1], p[0]))
        if prof.size == 4 and not f.is_constant():
            assert prof.kappa == 2


def test_aggregate_examples():
    r = aggregate((2, 2))
    assert (r.t, r.t3, r.t4, r.sigma_bar) == (14, 8, 6, Fraction(24, 7))
    assert r.u[0] == (1, 3)
    r = aggregate((3, 3))
    assert (r.t, r.t3, r.t4) == (58, 40, 18)


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 9) for n in range(2, 9)])
def test_aggregate_equals_closed_forms(dims):
    emp, closed = aggregate(dims), F.count_report(dims)
    assert emp == closed
    assert emp.invariant_violations() == []


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 7) for n in range(2, 7)])
def test_essential_incidence_is_four_lines(dims):
    inc = essential_incidences(dims)
    for p in grid(*dims):
        assert inc[p] == 4 * lines_through_point(dims, p)
    assert sum(inc.values()) == F.sigma_bar(dims) * F.t_count(dims)


def test_verify_teaching_guard():
    big = BinaryGridFunction((21, 20), 0)
    with pytest.raises(PreconditionError):
        verify_teaching(big, [(0, 0)])
