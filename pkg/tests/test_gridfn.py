import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridthresh import formulas as F
from gridthresh.errors import PreconditionError
from gridthresh.exact_geom import Line
from gridthresh.gridfn import (
    GT,
    LE,
    BinaryGridFunction,
    adjacent_pairs_count,
    brute_force_threshold_count,
    distinct_lines,
    enumerate_threshold,
    from_line,
    is_threshold,
    lines_through_point,
    points_on_line,
    threshold_bitsets,
)
from oracles import adjacent_pairs_scan, grid, lines_as_point_sets, separable_by_search

SMALL = [(m, n) for m in range(2, 5) for n in range(2, 5)]


@pytest.fixture(scope="module")
def worked_g():
    return from_line(Line(55, 7, 5), (10, 10), LE)


@pytest.fixture(scope="module")
def worked_h():
    return from_line(Line(22, 3, 2), (10, 10), LE)


def test_bit_layout():
    f = BinaryGridFunction.from_values((3, 2), {(0, 0): 1, (2, 1): 1})
    assert f.bits == 1 | (1 << 5)
    assert f.to_hex() == "21"
    assert BinaryGridFunction.from_hex((3, 2), "21") == f
    assert f(0, 0) == 1 and f(2, 1) == 1 and f(1, 0) == 0


def test_bitset_must_fit():
    with pytest.raises(PreconditionError):
        BinaryGridFunction((2, 2), 1 << 4)


def test_from_line_worked_10x10(worked_g, worked_h):
    assert (worked_g(5, 4), worked_g(8, 0), worked_g(3, 7)) == (0, 1, 1)
    assert (worked_h(6, 2), worked_h(2, 8), worked_h(7, 1), worked_h(3, 7)) == (0, 0, 1, 1)
    assert is_threshold(worked_g) and is_threshold(worked_h)


def test_from_line_sides_are_complementary(worked_g):
    gt = from_line(Line(55, 7, 5), (10, 10), GT)
    assert gt == worked_g.complement()
    assert all(worked_g(*p) + gt(*p) == 1 for p in grid(10, 10))


def test_from_line_unreachable_is_constant_one():
    f = from_line(Line(-1, 1, 0), (4, 3), LE)
    assert f.bits == (1 << 12) - 1


def test_from_line_bad_side():
    with pytest.raises(PreconditionError):
        from_line(Line(1, 1, 1), (2, 2), "lt")


def test_is_threshold_examples():
    assert is_threshold(BinaryGridFunction((2, 2), 0))
    xor = BinaryGridFunction.from_values((2, 2), {(0, 0): 1, (1, 1): 1})
    assert not is_threshold(xor)
    assert not is_threshold(xor.complement())


@pytest.mark.parametrize("dims", [d for d in SMALL if d[0] * d[1] <= 12])
def test_enumeration_equals_exhaustive_scan(dims):
    m, n = dims
    by_search = {b for b in range(1 << (m * n)) if separable_by_search(m, n, b)}
    assert set(threshold_bitsets(F.GridDims(m, n))) == by_search


def test_enumeration_equals_hull_scan_4x4():
    d = F.GridDims(4, 4)
    scanned = {b for b in range(1 << 16) if is_threshold(BinaryGridFunction(d, b))}
    assert set(threshold_bitsets(d)) == scanned


@pytest.mark.parametrize("dims,want", [((2, 2), 14), ((2, 3), 28), ((3, 3), 58)])
def test_brute_force_count(dims, want):
    assert brute_force_threshold_count(dims) == want == F.t_count(dims)


def test_brute_force_guard():
    with pytest.raises(PreconditionError):
        brute_force_threshold_count((5, 5))


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 13) for n in range(2, 13)])
def test_enumeration_cardinality(dims):
    fs = enumerate_threshold(dims)
    assert len(fs) == F.t_count(dims)
    assert fs == sorted(fs, key=lambda f: f.bits)
    assert len({f.bits for f in fs}) == len(fs)


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 7) for n in range(2, 7)])
def test_enumeration_contents(dims):
    fs = enumerate_threshold(dims)
    bits = {f.bits for f in fs}
    full = (1 << (dims[0] * dims[1])) - 1
    assert 0 in bits and full in bits
    assert all(full ^ b in bits for b in bits)
    assert all(is_threshold(f) for f in fs)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 9), st.integers(2, 9),
    st.integers(-30, 30), st.integers(-30, 30), st.integers(-200, 200),
)
def test_every_line_function_is_enumerated(m, n, a1, a2, a0):
    if a1 == 0 and a2 == 0:
        return
    f = from_line(Line(a0, a1, a2), (m, n))
    assert f.bits in set(threshold_bitsets(F.GridDims(m, n)))


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 3), st.integers(2, 4), st.data())
def test_is_threshold_matches_search(m, n, data):
    bits = data.draw(st.integers(0, (1 << (m * n)) - 1))
    f = BinaryGridFunction((m, n), bits)
    assert is_threshold(f) == separable_by_search(m, n, bits)
    assert is_threshold(f) == is_threshold(f.complement())


@pytest.mark.parametrize("dims,want", [((2, 2), 12), ((3, 3), 56)])
def test_adjacent_pairs_examples(dims, want):
    assert adjacent_pairs_count(dims) == want == adjacent_pairs_scan(*dims)


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 11) for n in range(2, 11)])
def test_adjacent_pairs_equal_f1(dims):
    assert adjacent_pairs_count(dims) == F.f_sum(1, *dims)


@pytest.mark.parametrize("dims", [(2, 4), (3, 5), (4, 4), (5, 3)])
def test_adjacent_pairs_scan_oracle(dims):
    assert adjacent_pairs_scan(*dims) == F.f_sum(1, *dims)


def test_lines_through_point_examples():
    assert lines_through_point((4, 4), (1, 1)) == 8
    assert lines_through_point((2, 2), (0, 0)) == 3


def test_lines_through_point_outside():
    with pytest.raises(PreconditionError):
        lines_through_point((3, 3), (3, 0))


def test_points_on_line_examples():
    assert points_on_line((3, 3), Line(0, 0, 1)) == 3
    assert points_on_line((3, 3), Line(2, 1, 1)) == 3
    # only (5, 4) is on the grid; (0, 11) and (10, -3) fall outside
    on = [p for p in grid(10, 10) if 7 * p[0] + 5 * p[1] == 55]
    assert on == [(5, 4)]
    assert points_on_line((10, 10), Line(55, 7, 5)) == len(on) == 1


@pytest.mark.parametrize("dims", [(m, n) for m in range(2, 11) for n in range(2, 11)])
def test_line_incidences(dims):
    lines = distinct_lines(dims)
    assert len(lines) == F.line_count(dims) == len(lines_as_point_sets(*dims))
    z = [points_on_line(dims, ln) for ln in lines]
    assert all(k >= 2 for k in z)
    assert 2 * sum(k - 1 for k in z) == F.f_sum(1, *dims)
    through = sum(lines_through_point(dims, p) for p in grid(*dims))
    assert through == sum(z)
