import json

import numpy as np
import pytest
from utils import SMALL_GRID, TINY_GRID, box_gauge, rectangle

from gaugekit.errors import UnsupportedDimensionError
from gaugekit.geometry import Polytope, scale
from gaugekit.measures import GaugeBody, RadiiResult, circumradius, gamma
from gaugekit.records import CheckStatus
from gaugekit.successive import RadiiProfile, full_profile
from gaugekit.verify import (
    REGISTRY,
    bisect_gamma,
    dense_ratio_scan,
    instance_id,
    load_manifest,
    oracle_circumradius,
    random_pair,
    run_verify,
)
from gaugekit.verify.checks import _profile_excess, _profile_rise


def test_manifest():
    manifest = load_manifest()
    names = [entry.name for entry in manifest]
    assert len(names) == len(set(names))
    assert sum(entry.kind == "hard" for entry in manifest) >= 25
    assert manifest[-1].kind == "info"
    assert all(entry.kind in ("hard", "info") for entry in manifest)
    registered = {name for entry in REGISTRY for name in entry.names}
    assert registered == set(names)


@pytest.mark.parametrize("seed", [0, 7, 11, 19, 23])
def test_random_instance_passes(seed: int):
    K, C = random_pair(seed, 2)
    report = run_verify(K, C, seed=seed, grid=SMALL_GRID)

    assert [c.name for c in report.checks] == [entry.name for entry in load_manifest()]
    failed = {c.name: c.detail for c in report.hard_failures}
    assert not failed
    assert report.passed


def test_symmetric_instance_passes():
    report = run_verify(rectangle(2.0, 1.0), box_gauge(), seed=1, grid=SMALL_GRID)
    assert report.passed
    assert report["symmetry.cc"].status is CheckStatus.PASS
    assert report["symmetry.cc"].lhs == "symmetric"
    assert report["info.r_pi_vs_half_diameter"].status is CheckStatus.INFO


def test_degenerate_instance_marks_checks_not_applicable():
    segment = Polytope.from_points([[0.0, 0.0], [1.0, 0.5]])
    report = run_verify(segment, box_gauge(), grid=SMALL_GRID)
    entry = report["inradius.duality"]
    assert entry.status is CheckStatus.INFO
    assert entry.detail.startswith("not applicable")


def test_report_exports():
    K, C = random_pair(3, 2)
    report = run_verify(K, C, seed=3, grid=SMALL_GRID)
    data = report.to_json()
    assert set(data) == {"instance_id", "seed", "passed", "checks"}
    assert data["instance_id"] == instance_id(K, C)
    json.dumps(data)
    assert len(report.to_frame()) == len(load_manifest())
    assert "hard failure" in report.to_text()
    with pytest.raises(KeyError):
        report["no.such.check"]


def test_instance_id_is_stable():
    K, C = random_pair(2, 3)
    again_K, again_C = random_pair(2, 3)
    assert instance_id(K, C) == instance_id(again_K, again_C)
    other_K, other_C = random_pair(3, 3)
    assert instance_id(K, C) != instance_id(other_K, other_C)


def test_unsupported_dimension():
    K = Polytope.from_points(np.vstack([np.eye(4), -np.eye(4)]))
    C = GaugeBody(Polytope.from_halfspaces(np.vstack([np.eye(4), -np.eye(4)]), np.ones(8)))
    with pytest.raises(UnsupportedDimensionError):
        run_verify(K, C)


@pytest.mark.parametrize("d", [2, 3])
def test_oracle_circumradius(d: int):
    K, C = random_pair(12, d)
    assert oracle_circumradius(K, C) == pytest.approx(circumradius(K, C).value, rel=1e-6)


def test_bisect_gamma():
    _, C = random_pair(1, 3)
    rng = np.random.default_rng(0)
    for x in rng.normal(size=(4, 3)):
        assert bisect_gamma(C, x) == pytest.approx(gamma(C, x), abs=1e-10)


def test_dense_scan_brackets_exact_extremes():
    low, high = dense_ratio_scan(rectangle(2.0, 1.0), box_gauge(), 1000)
    assert low == pytest.approx(0.5)
    assert high == pytest.approx(1.0)


@pytest.mark.parametrize("seed", [2, 5])
def test_random_instance_passes_in_space(seed: int):
    K, C = random_pair(seed, 3)
    report = run_verify(K, C, seed=seed, grid=TINY_GRID)

    failed = {c.name: c.detail for c in report.hard_failures}
    assert not failed
    assert report["invariance.scaling"].status is CheckStatus.PASS


def test_profile_excess_flags_a_moved_entry():
    K, C = random_pair(4, 2)
    base = full_profile(K, C, SMALL_GRID)
    doubled = full_profile(scale(K, 2.0), C, SMALL_GRID)
    assert _profile_excess(base, doubled, 2.0) <= 1e-6

    entries = list(doubled.entries)
    q, result = entries[0]
    entries[0] = (q, RadiiResult(result.value * 1.01))
    assert _profile_excess(base, RadiiProfile(2, entries), 2.0) > 1e-3


def test_profile_rise_flags_a_growing_entry():
    K, C = random_pair(6, 2)
    base = full_profile(K, C, SMALL_GRID)
    shrunk = full_profile(scale(K, 0.8), GaugeBody(scale(C.body, 1.2)), SMALL_GRID)
    assert _profile_rise(base, shrunk) <= 0.0

    entries = list(shrunk.entries)
    q, _ = entries[0]
    entries[0] = (q, RadiiResult(base[q.name].value * 1.01))
    assert _profile_rise(base, RadiiProfile(2, entries)) > 1e-3


def test_oracle_bisects_on_containment():
    # K = [0, 1], C = [-1, 2]: the best center is x = 1/3 with λ = 1/3
    K = Polytope.from_points([[0.0], [1.0]])
    C = GaugeBody(Polytope.from_points([[-1.0], [2.0]]))
    assert oracle_circumradius(K, C) == pytest.approx(1.0 / 3.0, abs=1e-8)

    K, C = random_pair(5, 2)
    value = oracle_circumradius(K, C)
    R = circumradius(K, C)
    assert value >= R.value - 1e-9
    assert value == pytest.approx(R.value, abs=1e-4)
