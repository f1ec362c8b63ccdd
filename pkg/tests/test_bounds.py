import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from puiseux_cert.bounds import (
    BEZOUT_DEGREE,
    BEZOUT_NOETHER,
    BoundReport,
    bezout_degree_bound,
    bezout_noether_bound,
    degree_bounds,
    mixed_volume,
    mixedvol_degree_bound,
    noether_bounds,
    normalized_volume,
    simplex_vertices,
    sparse_degree_bound,
    sparse_noether_bound,
)
from puiseux_cert.hull import DimensionCapError, hull_volume, minkowski_sum
from puiseux_cert.parse import poly_parse


def dense(d, n):
    return {e for e in itertools.product(range(d + 1), repeat=n) if sum(e) <= d}


def box(sides):
    return set(itertools.product(*[(0, s) for s in sides]))


def permanent(rows):
    n = len(rows)
    return sum(math.prod(rows[i][p[i]] for i in range(n)) for p in itertools.permutations(range(n)))


@pytest.mark.parametrize("d, n, m, value", [(3, 2, 2, 9), (1, 5, 7, 1), (2, 3, 1, 2)])
def test_bezout_noether(d, n, m, value):
    rep = bezout_noether_bound(d, n, m)
    assert rep.value == value and rep.kind == BEZOUT_NOETHER
    assert rep.inputs == {"d": d, "n": n, "m": m}


@pytest.mark.parametrize("d, n, m, value", [(2, 2, 2, 4), (1, 3, 3, 1), (3, 1, 5, 3)])
def test_bezout_degree(d, n, m, value):
    rep = bezout_degree_bound(d, n, m)
    assert rep.value == value and rep.kind == BEZOUT_DEGREE


@pytest.mark.parametrize("args", [(0, 2, 2), (2, 0, 2), (2, 2, -1)])
def test_bezout_rejects_nonpositive(args):
    with pytest.raises(ValueError):
        bezout_noether_bound(*args)


def test_bound_report_value_positive():
    with pytest.raises(ValueError):
        BoundReport(BEZOUT_DEGREE, 0, {})


def test_normalized_volume_examples():
    assert normalized_volume([(0, 0), (1, 0), (0, 1)]) == 1
    assert normalized_volume([(0, 0), (2, 0), (0, 2)]) == 4
    assert normalized_volume([(0, 0), (1, 0)]) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simplex_normalization(n):
    assert normalized_volume(simplex_vertices(n)) == 1


def test_dimension_cap():
    with pytest.raises(DimensionCapError):
        normalized_volume(simplex_vertices(5))


@given(st.integers(0, 10**6), st.integers(2, 4))
def test_hull_volume_matches_scipy(seed, n):
    rng = random.Random(seed)
    pts = {tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(n + 6)}
    exact = hull_volume(pts)
    try:
        approx = ConvexHull(list(pts)).volume
    except Exception:  # qhull refuses flat inputs
        assert exact == 0
        return
    assert abs(float(exact) - approx) < 1e-9 * max(1.0, approx)


def test_sparse_noether_examples():
    assert sparse_noether_bound([dense(1, 2)], 2).value == 16
    assert sparse_noether_bound([{(0, 0), (1, 0)}], 2).value == 16
    assert sparse_noether_bound([{(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)}], 3).value == 1944


def test_sparse_degree_examples():
    assert sparse_degree_bound([dense(3, 2)], 2).value == 9
    assert sparse_degree_bound([{(1, 0, 0)}], 3).value == 1
    assert sparse_degree_bound([{(0, 0), (3, 0), (0, 1)}], 2).value == 3


def test_mixed_volume_anchors():
    tri = simplex_vertices(2)
    assert mixed_volume([tri, tri], 2) == 1
    assert mixed_volume([tri, {(0, 0), (2, 0), (0, 2)}], 2) == 2


@pytest.mark.parametrize("d1, d2", list(itertools.product(range(1, 5), repeat=2)))
def test_mixed_volume_dense_is_bezout(d1, d2):
    assert mixed_volume([dense(d1, 2), dense(d2, 2)], 2) == d1 * d2


@given(st.lists(st.lists(st.integers(1, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_mixed_volume_of_boxes_is_permanent(sides):
    assert mixed_volume([box(s) for s in sides], 3) == permanent(sides)


def test_mixed_volume_wrong_count():
    with pytest.raises(ValueError):
        mixed_volume([simplex_vertices(2)], 2)


@given(st.integers(0, 10**6))
def test_mixed_volume_symmetric_monotone_integral(seed):
    rng = random.Random(seed)
    P = {(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(4)} | {(0, 0)}
    Q = {(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(4)} | {(0, 0)}
    bigger = P | {(rng.randint(0, 4), rng.randint(0, 4))}
    mv = mixed_volume([P, Q], 2)
    assert isinstance(mv, int)
    assert mv == mixed_volume([Q, P], 2)
    assert mixed_volume([bigger, Q], 2) >= mv


@given(st.integers(0, 10**6))
def test_translation_invariance(seed):
    rng = random.Random(seed)
    P = {(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)) for _ in range(5)}
    Q = {(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)) for _ in range(5)}
    R = simplex_vertices(3)
    v = tuple(rng.randint(0, 5) for _ in range(3))  # supports stay in the nonnegative orthant
    shift = lambda S: {tuple(a + b for a, b in zip(p, v)) for p in S}
    assert normalized_volume(shift(P)) == normalized_volume(P)
    assert mixed_volume([shift(P), Q, shift(R)], 3) == mixed_volume([P, Q, R], 3)


def test_minkowski_sum():
    assert minkowski_sum({(0, 0), (1, 0)}, {(0, 0), (0, 1)}) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_mixedvol_degree_examples():
    assert mixedvol_degree_bound([{(1, 0)}, {(0, 1)}], 2).value == 1
    assert mixedvol_degree_bound([dense(2, 3), dense(3, 3), dense(1, 3)], 3).value == 6
    names = ["x1", "x2", "x3"]
    system = [poly_parse(s, names) for s in ("(x1 - x2)*(x1 - 2*x2)", "x3", "x3")]
    assert mixedvol_degree_bound([f.support() for f in system], 3).value >= 2


def test_mixedvol_requires_square():
    with pytest.raises(ValueError):
        mixedvol_degree_bound([dense(1, 3)], 3)


def test_auto_resolution_takes_minimum():
    system = [poly_parse(s, ["x1", "x2"]) for s in ("x1^2 + x2^2 - 1", "x1*x2")]
    res = degree_bounds(system)
    assert res.chosen.value == min(c.value for c in res.candidates)
    assert {c.kind for c in res.candidates} == {"bezout-degree", "sparse-degree", "mixedvol-degree"}
    assert res.chosen.value == 4


def test_high_dimension_falls_back_to_bezout():
    names = [f"x{i}" for i in range(1, 6)]
    system = [poly_parse("x1^2 + x5", names)]
    for res in (noether_bounds(system), degree_bounds(system)):
        assert [c.kind for c in res.candidates] in (["bezout-noether"], ["bezout-degree"])
        assert res.warnings


def test_linear_system_bounds_are_one():
    names = ["x1", "x2"]
    system = [poly_parse(s, names) for s in ("x1 - x2", "x1 + 2*x2")]
    assert noether_bounds(system).chosen.value == 1
    assert all(c.value == 1 for c in degree_bounds(system).candidates)


def test_report_roundtrip():
    rep = sparse_degree_bound([dense(2, 2)], 2)
    assert BoundReport.from_dict(rep.to_dict()) == rep
    assert rep.value == Fraction(4)
