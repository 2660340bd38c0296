import math
import warnings

import numpy as np
import pytest
from utils import SMALL_GRID, TINY_GRID, box_gauge, rectangle, unit_cube, unit_square

from gaugekit.config import GridConfig
from gaugekit.errors import DegenerateBodyError, QuantityFormatError
from gaugekit.fixtures import get_fixture
from gaugekit.geometry import AffineFlat, Polytope, Subspace, scale, translate
from gaugekit.measures import GaugeBody, circumradius, diameter, inradius, width
from gaugekit.records import CheckStatus
from gaugekit.successive import (
    Quantity,
    SuccessiveRadii,
    all_quantities,
    chain_checks,
    chains,
    cylinder_circumradius,
    cylinder_inradius,
    full_profile,
    longest_chord,
    search_directions,
    search_offsets,
    section_circumradius,
    section_circumradius_extremal,
    section_inradius,
    section_inradius_extremal,
    successive_radius,
)
from gaugekit.successive import profile as profile_module
from gaugekit.successive.profile import PLANE_OFFSETS
from gaugekit.successive.subspaces import hyperplane_normal_to, line_along
from gaugekit.verify import random_pair


def test_quantity_names():
    q = Quantity.parse("R-pi-sup:1")
    assert (q.family, q.mode, q.position, q.j) == ("R", "pi", "sup", 1)
    assert q.name == "R-pi-sup:1"
    assert q.symbol == "R_pi^1"
    assert Quantity.parse("r-sigma-inf:2").symbol == "r^sigma_2"
    assert q.subspace_dim(3) == 2
    assert Quantity.parse("R-sigma-sup:1").subspace_dim(3) == 1


@pytest.mark.parametrize("name", ["R-pi-sup", "R-pi-max:1", "X-pi-sup:1", "R-pi-sup:0", "R-pi-sup:-1"])
def test_malformed_quantity(name: str):
    with pytest.raises(QuantityFormatError):
        Quantity.parse(name)


def test_index_above_dimension():
    with pytest.raises(QuantityFormatError):
        successive_radius(unit_square(), box_gauge(), "R-pi-sup:3", SMALL_GRID)


def test_quantity_tables():
    assert len(all_quantities(2)) == 16
    assert len(all_quantities(3)) == 24
    table = chains(3)
    assert len(table) == 8
    assert all(len(chain) == 3 for chain in table)
    assert [q.j for q in table[0]] == [1, 2, 3]


def test_square_profile():
    profile = full_profile(unit_square(), box_gauge(), SMALL_GRID)

    assert profile.dim == 2
    assert len(profile.entries) == 16
    for q, result in profile.entries:
        assert result.value == pytest.approx(0.5, abs=1e-7), q.name
    assert profile.chains_hold
    assert len(profile.checks) == 8


def test_homothetic_cube_profile():
    # every successive radius of a homothet a + tC equals t
    K, C = unit_cube(), box_gauge(1.0, 3)
    evaluator = SuccessiveRadii(K, C, TINY_GRID)
    for q in all_quantities(3):
        assert evaluator.radius(q).value == pytest.approx(0.5, abs=1e-6), q.name


def test_collapse_at_full_index():
    K, C = random_pair(4, 2)
    R = circumradius(K, C).value
    r = inradius(K, C).value
    for name in ("R-pi-sup:2", "R-pi-inf:2", "R-sigma-sup:2", "R-sigma-inf:2"):
        assert successive_radius(K, C, name, SMALL_GRID).value == pytest.approx(R, abs=1e-9)
    for name in ("r-pi-sup:2", "r-pi-inf:2", "r-sigma-sup:2", "r-sigma-inf:2"):
        assert successive_radius(K, C, name, SMALL_GRID).value == pytest.approx(r, abs=1e-9)


@pytest.mark.parametrize("seed", [0, 3])
def test_planar_cylinder_radii_are_exact(seed: int):
    K, C = random_pair(seed, 2)
    evaluator = SuccessiveRadii(K, C, SMALL_GRID)
    sup, inf = evaluator.radius("R-pi-sup:1"), evaluator.radius("R-pi-inf:1")
    assert sup.method == "exact"
    assert inf.value <= sup.value + 1e-12
    # in the plane the outer cylinder radii are half the diameter and half the width
    assert sup.value == pytest.approx(diameter(K, C).value / 2, abs=1e-9)
    assert inf.value == pytest.approx(width(K, C).value / 2, abs=1e-9)


@pytest.mark.parametrize("seed", [1, 2])
def test_chains_hold_on_random_pairs(seed: int):
    K, C = random_pair(seed, 2)
    profile = full_profile(K, C, SMALL_GRID)
    assert profile.chains_hold, [c.name for c in profile.checks if not c.passed]


def test_searched_results_report_accuracy():
    K, C = random_pair(6, 2)
    result = successive_radius(K, C, "R-sigma-inf:1", SMALL_GRID)
    assert result.method == "searched"
    assert 0.0 < result.accuracy < 0.1
    assert result.witness_subspace is not None
    assert result.witness_subspace.dim == 1


def test_degenerate_body():
    segment = Polytope.from_points([[0, 0], [2, 0]])
    C = box_gauge()
    assert successive_radius(segment, C, "R-pi-sup:2", SMALL_GRID).value == pytest.approx(1.0)
    assert successive_radius(segment, C, "R-pi-sup:1", SMALL_GRID).value == pytest.approx(1.0)
    with pytest.raises(DegenerateBodyError):
        successive_radius(segment, C, "r-pi-sup:1", SMALL_GRID)
    with pytest.raises(DegenerateBodyError):
        successive_radius(segment, C, "R-sigma-sup:1", SMALL_GRID)


def test_chain_checks_flag_violations():
    values = {q: 1.0 for q in all_quantities(2)}
    values[Quantity.parse("R-pi-sup:1")] = 2.0
    checks = {c.name: c for c in chain_checks(values, 2)}
    assert checks["chain.R-pi-sup"].status is CheckStatus.FAIL
    assert checks["chain.R-pi-inf"].status is CheckStatus.PASS

    values = {q: 1.0 for q in all_quantities(2)}
    values[Quantity.parse("r-sigma-inf:2")] = 1.5
    checks = {c.name: c for c in chain_checks(values, 2)}
    assert checks["chain.r-sigma-inf"].status is CheckStatus.FAIL


def test_cylinder_methods_agree():
    K, C = random_pair(8, 3)
    L = Subspace.spanned_by([[1.0, 2.0, -0.5]], 3)
    projected = cylinder_circumradius(K, C, L)
    assert cylinder_circumradius(K, C, L, method="lp") == pytest.approx(projected, abs=1e-7)
    assert cylinder_circumradius(K, C, Subspace.zero(3)) == pytest.approx(circumradius(K, C).value)
    assert cylinder_circumradius(K, C, Subspace.whole(3)) == 0.0


def test_cylinder_inradius():
    K, C = rectangle(2.0, 1.0), box_gauge()
    vertical = Subspace.spanned_by([[0, 1]], 2)
    horizontal = Subspace.spanned_by([[1, 0]], 2)
    assert cylinder_inradius(K, C, vertical) == pytest.approx(1.0)
    assert cylinder_inradius(K, C, horizontal) == pytest.approx(0.5)
    assert cylinder_inradius(K, C, Subspace.zero(2)) == pytest.approx(0.5)
    assert math.isinf(cylinder_inradius(K, C, Subspace.whole(2)))


def test_sections_of_a_rectangle():
    K, C = rectangle(2.0, 1.0), box_gauge()
    horizontal = AffineFlat([0.0, 0.5], Subspace.spanned_by([[1, 0]], 2))
    assert section_circumradius(K, C, horizontal) == pytest.approx(1.0)
    assert section_inradius(K, C, horizontal) == pytest.approx(1.0)
    outside = AffineFlat([0.0, 3.0], Subspace.spanned_by([[1, 0]], 2))
    assert section_circumradius(K, C, outside) == 0.0
    assert math.isinf(section_inradius(K, C, outside))


def test_longest_chord():
    start, t = longest_chord(rectangle(2.0, 1.0), np.array([1.0, 0.0]))
    assert t == pytest.approx(2.0)
    assert start[0] == pytest.approx(0.0)


@pytest.mark.parametrize("take", ["sup", "inf"])
def test_extremal_sections_auto_and_general_agree(take: str):
    K, C = random_pair(5, 2)
    L = Subspace.spanned_by([[0.6, 0.8]], 2)
    auto = section_circumradius_extremal(K, C, L, take, SMALL_GRID)
    general = section_circumradius_extremal(K, C, L, take, SMALL_GRID, method="general")
    assert auto.value == pytest.approx(general.value, abs=1e-6)


def test_extremal_section_inradius():
    K, C = random_pair(5, 2)
    L = Subspace.spanned_by([[0.6, 0.8]], 2)
    auto = section_inradius_extremal(K, C, L, "inf", SMALL_GRID)
    general = section_inradius_extremal(K, C, L, "inf", SMALL_GRID, method="general")
    assert auto.value == pytest.approx(general.value, abs=1e-6)
    assert math.isinf(section_inradius_extremal(K, C, Subspace.zero(2)).value)
    assert section_inradius_extremal(K, C, Subspace.whole(2)).value == pytest.approx(
        inradius(K, C).value
    )


def test_extremal_section_edge_cases():
    K, C = random_pair(5, 2)
    assert section_circumradius_extremal(K, C, Subspace.zero(2)).value == 0.0
    assert section_circumradius_extremal(K, C, Subspace.whole(2)).value == pytest.approx(
        circumradius(K, C).value
    )
    assert section_circumradius_extremal(Polytope.empty(2), C, Subspace.whole(2)).value == 0.0


def test_search_directions_finds_extremes():
    target = np.array([np.cos(0.3), np.sin(0.3)])

    def alignment(u: np.ndarray) -> float:
        return float(abs(u @ target))

    best, (directions, values) = search_directions(alignment, 2, SMALL_GRID, maximize=True)
    assert best.value == pytest.approx(1.0, abs=1e-9)
    assert len(directions) == SMALL_GRID.angles

    worst, _ = search_directions(alignment, 2, SMALL_GRID, maximize=False, grid_values=(directions, values))
    assert worst.value == pytest.approx(0.0, abs=1e-6)


def test_search_directions_in_space():
    target = np.array([1.0, 2.0, 2.0]) / 3.0
    best, _ = search_directions(lambda u: float(abs(u @ target)), 3, SMALL_GRID, maximize=True)
    assert best.value == pytest.approx(1.0, abs=1e-6)


def test_search_offsets():
    result = search_offsets(
        lambda s: float((s[0] - 0.3) ** 2), np.array([0.0]), np.array([1.0]), SMALL_GRID, maximize=False
    )
    assert result.argument[0] == pytest.approx(0.3, abs=1e-5)
    assert result.accuracy >= 1e-7

    box = search_offsets(
        lambda s: -float(np.sum((s - [0.2, -0.4]) ** 2)),
        np.array([-1.0, -1.0]),
        np.array([1.0, 1.0]),
        SMALL_GRID,
        maximize=True,
    )
    np.testing.assert_allclose(box.argument, [0.2, -0.4], atol=1e-4)


def test_profile_exports():
    profile = full_profile(unit_square(), box_gauge(), SMALL_GRID)
    frame = profile.to_frame()
    assert list(frame.columns) == ["quantity", "symbol", "j", "value", "method", "accuracy"]
    assert len(frame) == 16
    data = profile.to_json()
    assert set(data) == {"dim", "entries", "checks"}
    assert data["entries"][0]["quantity"] == "R-pi-sup:1"
    assert "R_pi^1" in profile.to_text()
    assert profile["r-sigma-inf:1"].value == pytest.approx(0.5, abs=1e-7)


@pytest.mark.parametrize("seed", [0, 3, 5, 9])
@pytest.mark.parametrize("name", ["R-pi-sup:1", "R-pi-inf:1", "r-pi-sup:1", "r-pi-inf:1"])
def test_planar_cylinder_witness_attains_value(seed: int, name: str):
    K, C = random_pair(seed, 2)
    with warnings.catch_warnings():
        warnings.simplefilter("error", RuntimeWarning)
        result = successive_radius(K, C, name, SMALL_GRID)
    L = result.witness_subspace
    assert L is not None and L.dim == 1
    radius = cylinder_circumradius if name.startswith("R") else cylinder_inradius
    assert radius(K, C, L) == pytest.approx(result.value, rel=1e-7, abs=1e-9)


def test_line_and_hyperplane_builders():
    u = np.array([3.0, 4.0])
    assert line_along(u).dim == 1
    normal = hyperplane_normal_to(u)
    assert normal.dim == 1
    assert float(np.abs(normal.basis @ u).max()) == pytest.approx(0.0, abs=1e-12)
    assert hyperplane_normal_to(np.array([1.0, 2.0, 2.0])).dim == 2


def test_cylinder_over_a_degenerate_dual_basis():
    K = get_fixture("box3").polytope()
    C = GaugeBody(get_fixture("octahedron_gauge").polytope())
    L = line_along(np.array([0.42379602625851476, -0.3925006103816474, 0.8162966366324969]))
    projected = cylinder_circumradius(K, C, L)
    assert projected == pytest.approx(1.5, abs=1e-7)
    assert cylinder_circumradius(K, C, L, method="lp") == pytest.approx(projected, abs=1e-7)


def test_plane_sections_share_offset_searches(monkeypatch):
    K, C = random_pair(0, 3)
    grid = GridConfig(angles=24, sphere=20, offsets=9, refine_top=2)
    calls: list[tuple[bytes, int]] = []
    original = profile_module.plane_section_circumradius

    def counting(K, C, normal, grid, take):
        calls.append((normal.tobytes(), grid.offsets))
        return original(K, C, normal, grid, take)

    monkeypatch.setattr(profile_module, "plane_section_circumradius", counting)
    evaluator = SuccessiveRadii(K, C, grid)
    sup = evaluator.radius("R-sigma-sup:2")
    after_sup = len(calls)
    grid_normals = {n for n, _ in calls[: grid.sphere]}
    inf = evaluator.radius("R-sigma-inf:2")

    assert len(set(calls)) == len(calls)
    assert not grid_normals & {n for n, offsets in calls[after_sup:] if offsets == PLANE_OFFSETS}
    assert sorted(offsets for _, offsets in calls if offsets == grid.offsets) == [9, 9]
    assert {offsets for _, offsets in calls} == {PLANE_OFFSETS, grid.offsets}
    assert inf.value <= sup.value + sup.accuracy + inf.accuracy
    for result in (sup, inf):
        assert result.witness_subspace.dim == 2
        flat = AffineFlat(result.witness_center, result.witness_subspace)
        assert section_circumradius(K, C, flat) == pytest.approx(result.value, rel=1e-6, abs=1e-9)


@pytest.mark.parametrize("seed", [0, 4, 9])
def test_chains_hold_in_space(seed: int):
    K, C = random_pair(seed, 3)
    profile = full_profile(K, C, TINY_GRID)
    assert len(profile.entries) == 24
    assert profile.chains_hold, [c.name for c in profile.checks if not c.passed]


@pytest.mark.parametrize("seed", [1, 6])
def test_cylinder_duality_in_space(seed: int):
    # r_pi(K, C) * R_pi(C, K - c) = 1 with the opposite extremum
    K, C = random_pair(seed, 3)
    mine = SuccessiveRadii(K, C, TINY_GRID)
    theirs = SuccessiveRadii(C.body, GaugeBody.recentered(K)[0], TINY_GRID)
    for j in (1, 2, 3):
        for position, opposite in (("sup", "inf"), ("inf", "sup")):
            product = mine.radius(f"r-pi-{position}:{j}").value * theirs.radius(f"R-pi-{opposite}:{j}").value
            assert product == pytest.approx(1.0, abs=1e-6), (j, position)


@pytest.mark.parametrize(
    ("seed", "d", "grid"),
    [(2, 2, SMALL_GRID), (8, 2, SMALL_GRID), (3, 3, TINY_GRID)],
)
def test_profile_scales_and_translates(seed: int, d: int, grid):
    K, C = random_pair(seed, d)
    alpha, beta = 1.7, 0.6
    shift = np.random.default_rng(seed).normal(size=d)
    base = full_profile(K, C, grid)
    moved = full_profile(translate(scale(K, alpha), shift), GaugeBody(scale(C.body, beta)), grid)

    for (q, mine), (_, theirs) in zip(base.entries, moved.entries, strict=True):
        slack = mine.accuracy + theirs.accuracy * beta / alpha
        assert theirs.value * beta / alpha == pytest.approx(mine.value, rel=1e-6, abs=slack), q.name
