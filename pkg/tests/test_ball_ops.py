import numpy as np
import pytest
from utils import box_gauge, unit_square

from gaugekit.errors import InputError, RadiusTooSmallError, UnboundedError
from gaugekit.geometry import Polytope, is_subset, scale, translate, vertex_hausdorff
from gaugekit.measures import GaugeBody, ball_hull, ball_intersect, circumradius, verify_ball_algebra
from gaugekit.measures.balls import _covering_gap
from gaugekit.records import CheckStatus
from gaugekit.verify import random_pair


def test_square_in_box():
    K, C = unit_square(), box_gauge()
    centers = ball_intersect(K, C, 1.0)
    assert vertex_hausdorff(centers, unit_square()) < 1e-9
    assert vertex_hausdorff(ball_hull(K, C, 1.0), K) < 1e-9


def test_radius_below_circumradius():
    K, C = unit_square(), box_gauge()
    assert ball_intersect(K, C, 0.4).is_empty
    with pytest.raises(RadiusTooSmallError):
        ball_hull(K, C, 0.4)


def test_invalid_radius_and_set():
    with pytest.raises(InputError):
        ball_intersect(unit_square(), box_gauge(), -1.0)
    with pytest.raises(UnboundedError):
        ball_intersect(Polytope.empty(2), box_gauge(), 1.0)


def test_triangle_hull_in_hexagon():
    angles = np.pi / 3 * np.arange(6)
    C = GaugeBody.from_points(np.stack([np.cos(angles), np.sin(angles)], axis=1))
    K = Polytope.from_points([[0.0, 0.0], [1.0, 0.0], [0.5, 0.8]])
    lam = 1.2 * circumradius(K, C).value

    hull = ball_hull(K, C, lam)

    assert is_subset(K, hull)
    for x in ball_intersect(K, C, lam).vertices:
        assert is_subset(hull, _ball(C, x, lam))


def _ball(C: GaugeBody, x: np.ndarray, lam: float) -> Polytope:
    return Polytope.from_points(x + lam * C.vertices)


def test_ball_hull_is_idempotent():
    K, C = random_pair(2, 2)
    lam = 1.1 * circumradius(K, C).value
    once = ball_hull(K, C, lam)
    assert vertex_hausdorff(ball_hull(once, C, lam), once) < 1e-6


@pytest.mark.parametrize(("seed", "d"), [(0, 2), (1, 2), (2, 3)])
def test_ball_algebra(seed: int, d: int):
    K, C = random_pair(seed, d)
    lam = 1.3 * circumradius(K, C).value

    checks = verify_ball_algebra(K, C, lam)

    assert len(checks) == 11
    assert all(c.name.startswith("ball.") for c in checks)
    failed = [c.name for c in checks if c.status is CheckStatus.FAIL]
    assert not failed


def test_ball_algebra_below_circumradius():
    K, C = random_pair(0, 2)
    with pytest.raises(RadiusTooSmallError):
        verify_ball_algebra(K, C, 0.5 * circumradius(K, C).value)


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("seed", range(8))
def test_ball_algebra_at_the_circumradius(seed: int, d: int):
    # bi(K, C, R) collapses to the circumcenters, often a single point
    K, C = random_pair(seed, d)
    R = circumradius(K, C).value

    checks = verify_ball_algebra(K, C, R)

    failed = [c.name for c in checks if c.status is CheckStatus.FAIL]
    assert not failed


@pytest.mark.parametrize("seed", range(10, 22))
def test_ball_algebra_over_radii(seed: int):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(2, 4))
    K, C = random_pair(seed, d)
    lam = float(rng.uniform(1.0, 3.0)) * circumradius(K, C).value

    checks = verify_ball_algebra(K, C, lam)

    failed = [c.name for c in checks if c.status is CheckStatus.FAIL]
    assert not failed


def test_covering_gap_detects_a_wrong_hull():
    K, C = random_pair(3, 2)
    lam = 1.4 * circumradius(K, C).value
    centers = ball_intersect(K, C, lam)
    hull = ball_hull(K, C, lam)
    assert _covering_gap(hull, centers, C, lam) == pytest.approx(0.0, abs=1e-8)
    center = hull.centroid
    grown = translate(scale(translate(hull, -center), 1.2), center)
    assert _covering_gap(grown, centers, C, lam) > 1e-3
    shrunk = translate(scale(translate(hull, -center), 0.8), center)
    assert _covering_gap(shrunk, centers, C, lam) > 1e-3
