import json
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner
from utils import box, rectangle, triangle, unit_square, write_geometry

from gaugekit.cli import cli, main
from gaugekit.fixtures import FIXTURES

GRID = "angles=90,sphere=60,offsets=9,refine_top=2"


def _sorted(vrep: list) -> np.ndarray:
    return np.array(sorted(map(tuple, np.round(np.asarray(vrep, dtype=float), 6))))


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def square_files(tmp_path: Path) -> tuple[str, str]:
    K = write_geometry(tmp_path / "K.json", unit_square())
    C = write_geometry(tmp_path / "C.json", box())
    return str(K), str(C)


def invoke(runner: CliRunner, *args: str):
    return runner.invoke(cli, ["--grid", GRID, *args])


def test_circumradius(runner, square_files):
    K, C = square_files
    result = invoke(runner, "circumradius", "--set", K, "--gauge", C)
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["quantity"] == "circumradius"
    assert data["value"] == pytest.approx(0.5)
    assert data["witness"]["center"] == pytest.approx([0.5, 0.5], abs=1e-8)


@pytest.mark.parametrize("command, expected", [("inradius", 0.5), ("diameter", 1.0), ("width", 1.0)])
def test_scalar_measures(runner, square_files, command, expected):
    K, C = square_files
    result = invoke(runner, command, "--set", K, "--gauge", C)
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["value"] == pytest.approx(expected)


def test_gamma_and_dist(runner, square_files):
    _, C = square_files
    result = invoke(runner, "gamma", "--gauge", C, "--point", "0.5,-2")
    assert json.loads(result.output)["value"] == pytest.approx(2.0)

    result = invoke(
        runner, "dist", "--gauge", C, "--point", "3,1", "--through", "0,0", "--direction", "0,1"
    )
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["value"] == pytest.approx(3.0)


def test_center_sets(runner, tmp_path):
    K = str(write_geometry(tmp_path / "K.json", rectangle(2.0, 1.0)))
    C = str(write_geometry(tmp_path / "C.json", box()))
    result = invoke(runner, "cc", "--set", K, "--gauge", C)
    cc = json.loads(result.output)
    assert cc["dim"] == 2
    np.testing.assert_allclose(_sorted(cc["vrep"]), [(1.0, 0.0), (1.0, 1.0)], atol=1e-8)

    result = invoke(runner, "ic", "--set", K, "--gauge", C)
    ic = json.loads(result.output)
    np.testing.assert_allclose(_sorted(ic["vrep"]), [(0.5, 0.5), (1.5, 0.5)], atol=1e-8)


def test_radius_matches_circumradius(runner, tmp_path):
    K = str(write_geometry(tmp_path / "K.json", triangle()))
    C = str(write_geometry(tmp_path / "C.json", box()))
    radius = invoke(runner, "radius", "--set", K, "--gauge", C, "--quantity", "R-pi-sup:2")
    outer = invoke(runner, "circumradius", "--set", K, "--gauge", C)
    assert radius.exit_code == 0, radius.output
    value = json.loads(radius.output)["value"]
    assert value == pytest.approx(json.loads(outer.output)["value"], abs=1e-9)


def test_profile(runner, square_files):
    K, C = square_files
    result = invoke(runner, "profile", "--set", K, "--gauge", C)
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    values = [entry["value"] for entry in data["entries"]]
    assert len(values) == 16
    assert values == pytest.approx([0.5] * 16, abs=1e-7)

    result = invoke(runner, "profile", "--set", K, "--gauge", C, "--format", "text")
    assert "R-sigma-inf:1" in result.output


def test_ball_hull(runner, square_files, tmp_path):
    K, C = square_files
    out = tmp_path / "bh.json"
    result = invoke(runner, "bh", "--set", K, "--gauge", C, "--lambda", "1", "--out", str(out))
    assert result.exit_code == 0, result.output
    data = json.loads(out.read_text())
    np.testing.assert_allclose(_sorted(data["vrep"]), [(0, 0), (0, 1), (1, 0), (1, 1)], atol=1e-8)

    result = invoke(runner, "bi", "--set", K, "--gauge", C, "--lambda", "1")
    assert len(json.loads(result.output)["vrep"]) == 4


def test_radius_too_small(runner, square_files):
    K, C = square_files
    result = invoke(runner, "bh", "--set", K, "--gauge", C, "--lambda", "0.25")
    assert result.exit_code == 2
    assert "Error:" in result.output


def test_malformed_geometry(runner, tmp_path, square_files):
    _, C = square_files
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 2, "vrep": [[0, 0], [1, "x"]]}))
    result = invoke(runner, "circumradius", "--set", str(bad), "--gauge", C)
    assert result.exit_code == 1
    assert "vrep[1][1]" in result.output


def test_dimension_mismatch(runner, tmp_path):
    K = str(write_geometry(tmp_path / "K.json", unit_square()))
    C = str(write_geometry(tmp_path / "C.json", box(1.0, 3)))
    result = invoke(runner, "circumradius", "--set", K, "--gauge", C)
    assert result.exit_code == 1
    assert "dimension" in result.output


def test_verify(runner, tmp_path):
    K = str(write_geometry(tmp_path / "K.json", rectangle(2.0, 1.0)))
    C = str(write_geometry(tmp_path / "C.json", box()))
    result = invoke(runner, "verify", "--set", K, "--gauge", C, "--seed", "3")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["passed"]
    assert len(data["checks"]) >= 25

    result = invoke(runner, "verify", "--set", K, "--gauge", C, "--format", "text")
    assert result.exit_code == 0
    assert "0 hard failures" in result.output


def test_render(runner, tmp_path):
    K = str(write_geometry(tmp_path / "K.json", FIXTURES["hull_triangle"].polytope()))
    C = str(write_geometry(tmp_path / "C.json", FIXTURES["pentagon_gauge"].polytope()))
    args = ["render", "--set", K, "--gauge", C, "--lambda", "1"]
    first = invoke(runner, *args)
    assert first.exit_code == 0, first.output
    assert "<svg" in first.output
    assert "stroke-dasharray" in first.output
    assert invoke(runner, *args).output == first.output

    out = tmp_path / "figure.svg"
    assert invoke(runner, *args, "--out", str(out)).exit_code == 0
    assert out.read_text().strip() == first.output.strip()


def test_fixture(runner, tmp_path):
    result = invoke(runner, "fixture", "--list")
    for name in FIXTURES:
        assert name in result.output

    out = tmp_path / "C.json"
    assert invoke(runner, "fixture", "pentagon_gauge", "--out", str(out)).exit_code == 0
    assert len(json.loads(out.read_text())["vrep"]) == 5

    assert invoke(runner, "fixture", "heptagon").exit_code == 1


def test_projection(runner):
    result = invoke(runner, "projection")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["n"] == 64
    assert data["in_space"] == pytest.approx(2.0, abs=0.02)
    assert data["in_plane"] == pytest.approx(1.0, abs=1e-8)


def test_main_exit_codes(tmp_path, square_files):
    K, C = square_files
    assert main(["--grid", GRID, "width", "--set", K, "--gauge", C]) == 0
    assert main(["fixture"]) == 1
    assert main(["width", "--set", str(tmp_path / "missing.json"), "--gauge", C]) == 1
    assert main(["--grid", "angles=0", "width", "--set", K, "--gauge", C]) == 1
    assert main(["bh", "--set", K, "--gauge", C, "--lambda", "0.1"]) == 2


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert result.output.startswith("gaugekit, version ")
