import math

import numpy as np
import pytest
from scipy.optimize import linprog
from utils import box_gauge, rectangle, triangle, unit_square

from gaugekit.errors import DegenerateBodyError, InvalidGaugeError
from gaugekit.geometry import AffineFlat, Polytope, Subspace, scale, translate
from gaugekit.measures import (
    GaugeBody,
    circumcenter_set,
    circumradius,
    circumradius_by_bisection,
    diameter,
    dist_to_flat,
    gamma,
    incenter_set,
    inradius,
    support_ratio_extremes,
    width,
)
from gaugekit.verify import dense_ratio_scan, random_pair


def scipy_circumradius(K: Polytope, C: GaugeBody) -> float:
    """min λ s.t. <n_i, v - x> <= λ for every vertex v and facet normal n_i."""
    N, V = C.normals, K.vertices
    d = K.dim
    rows = [np.concatenate([-n, [-1.0]]) for _ in V for n in N]
    rhs = [-float(n @ v) for v in V for n in N]
    c = np.zeros(d + 1)
    c[-1] = 1.0
    res = linprog(c, A_ub=np.array(rows), b_ub=np.array(rhs), bounds=[(None, None)] * (d + 1))
    return float(res.fun)


def test_gamma():
    C = box_gauge()
    assert gamma(C, [0.5, -0.25]) == pytest.approx(0.5)
    assert gamma(C, [0.0, 0.0]) == 0.0
    asymmetric = GaugeBody.from_points([[-1.0], [2.0]])
    assert gamma(asymmetric, [1.0]) == pytest.approx(0.5)
    assert gamma(asymmetric, [-1.0]) == pytest.approx(1.0)


def test_gamma_is_positively_homogeneous():
    _, C = random_pair(3, 2)
    x = np.array([0.3, -1.7])
    assert gamma(C, 2.5 * x) == pytest.approx(2.5 * gamma(C, x))


def test_invalid_gauges():
    with pytest.raises(InvalidGaugeError):
        GaugeBody(unit_square())
    with pytest.raises(InvalidGaugeError):
        GaugeBody(Polytope.from_points([[-1, 0], [1, 0]]))


def test_recentered_gauge():
    C, shift = GaugeBody.recentered(unit_square())
    np.testing.assert_allclose(shift, [0.5, 0.5], atol=1e-9)
    assert gamma(C, [0.5, 0.0]) == pytest.approx(1.0)


def test_dist_to_flat():
    C = box_gauge()
    line = AffineFlat([1.0, 0.0], Subspace.spanned_by([[0, 1]], 2))
    value, nearest = dist_to_flat(C, [3.0, 0.0], line)
    assert value == pytest.approx(2.0)
    assert nearest[0] == pytest.approx(1.0)

    point = AffineFlat([1.0, 1.0], Subspace.zero(2))
    value, _ = dist_to_flat(C, [3.0, 0.0], point)
    assert value == pytest.approx(2.0)


def test_square_in_box():
    K, C = unit_square(), box_gauge()
    R = circumradius(K, C)
    assert R.value == pytest.approx(0.5)
    assert R.method == "exact"
    np.testing.assert_allclose(R.witness_center, [0.5, 0.5], atol=1e-9)
    assert inradius(K, C).value == pytest.approx(0.5)
    assert diameter(K, C).value == pytest.approx(1.0)
    assert width(K, C).value == pytest.approx(1.0)


def test_rectangle_in_box():
    K, C = rectangle(2.0, 1.0), box_gauge()
    assert circumradius(K, C).value == pytest.approx(1.0)
    assert inradius(K, C).value == pytest.approx(0.5)
    assert diameter(K, C).value == pytest.approx(2.0)
    assert width(K, C).value == pytest.approx(1.0)


def test_rectangle_centers():
    K, C = rectangle(2.0, 1.0), box_gauge()

    centers = circumcenter_set(K, C)
    assert centers.affine_dim == 1
    np.testing.assert_allclose(centers.vertices, [[1.0, 0.0], [1.0, 1.0]], atol=1e-6)

    incenters = incenter_set(K, C)
    assert incenters.affine_dim == 1
    np.testing.assert_allclose(incenters.vertices, [[0.5, 0.5], [1.5, 0.5]], atol=1e-6)


def test_empty_and_degenerate_sets():
    C = box_gauge()
    assert circumradius(Polytope.empty(2), C).value == 0.0
    segment = Polytope.from_points([[0, 0], [1, 0]])
    assert circumradius(segment, C).value == pytest.approx(0.5)
    with pytest.raises(DegenerateBodyError):
        inradius(segment, C)
    with pytest.raises(DegenerateBodyError):
        incenter_set(segment, C)


@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("d", [2, 3])
def test_circumradius_matches_scipy(seed: int, d: int):
    K, C = random_pair(seed, d)
    assert circumradius(K, C).value == pytest.approx(scipy_circumradius(K, C), abs=1e-7)


@pytest.mark.parametrize("seed", [0, 4])
def test_circumradius_by_bisection(seed: int):
    K, C = random_pair(seed, 2)
    assert circumradius_by_bisection(K, C) == pytest.approx(circumradius(K, C).value, abs=1e-7)


@pytest.mark.parametrize("seed", [1, 5])
def test_inradius_duality(seed: int):
    K, C = random_pair(seed, 2)
    K_gauge, _ = GaugeBody.recentered(K)
    r = inradius(K, C).value
    assert r * circumradius(C.body, K_gauge).value == pytest.approx(1.0, abs=1e-8)


def test_translation_and_scaling():
    K, C = triangle(), box_gauge()
    R = circumradius(K, C).value
    r = inradius(K, C).value
    moved = translate(K, [3.0, -2.0])
    assert circumradius(moved, C).value == pytest.approx(R)
    assert inradius(moved, C).value == pytest.approx(r)
    assert circumradius(scale(K, 2.5), C).value == pytest.approx(2.5 * R)
    assert inradius(scale(K, 2.5), C).value == pytest.approx(2.5 * r)


def test_asymmetric_gauge_orientation():
    C = GaugeBody.from_points([[-1.0, -1.0], [2.0, -1.0], [-1.0, 2.0]])
    K = Polytope.from_points([[0, 0], [1, 0], [0, 1]])
    R = circumradius(K, C).value
    assert R == pytest.approx(1.0 / 3.0)
    # a triangle needs twice its size of the reflected triangle
    assert circumradius(K, C.reflect()).value == pytest.approx(2.0 / 3.0)


def test_inradius_of_body_in_itself():
    _, C = random_pair(9, 3)
    assert inradius(C.body, C).value == pytest.approx(1.0, abs=1e-8)
    assert circumradius(C.body, C).value == pytest.approx(1.0, abs=1e-8)
    assert math.isclose(diameter(C.body, C).value, 2.0, abs_tol=1e-8)


def test_support_ratio_extremes_rectangle():
    extremes = support_ratio_extremes(rectangle(2.0, 1.0), box_gauge())
    assert extremes.inf == pytest.approx(0.5)
    assert extremes.sup == pytest.approx(1.0)
    np.testing.assert_allclose(np.abs(extremes.inf_direction), [0.0, 1.0], atol=1e-12)
    np.testing.assert_allclose(np.abs(extremes.sup_direction), [1.0, 0.0], atol=1e-12)


@pytest.mark.parametrize("d", [2, 3])
def test_support_ratio_extremes_bracket_dense_scan(d: int):
    for seed in range(3):
        K, C = random_pair(seed, d)
        extremes = support_ratio_extremes(K, C)
        low, high = dense_ratio_scan(K, C, 100_000 if d == 2 else 20_000)
        assert extremes.inf <= low + 1e-12
        assert extremes.sup >= high - 1e-12
        assert extremes.inf == pytest.approx(low, rel=0.05)
        assert extremes.sup == pytest.approx(high, rel=0.05)
