import pytest

from gaugekit.config import GRID_ENV_VAR, TOLERANCES, GridConfig, grid_from_env
from gaugekit.errors import InputError, QuantityFormatError


def test_defaults():
    grid = GridConfig()
    assert (grid.angles, grid.sphere, grid.offsets, grid.workers) == (720, 400, 33, 1)
    assert TOLERANCES.lp_feasibility <= TOLERANCES.membership


def test_from_string():
    grid = GridConfig.from_string(" angles=360, offsets = 17 ")
    assert grid.angles == 360
    assert grid.offsets == 17
    assert grid.sphere == GridConfig().sphere
    assert GridConfig.from_string("") == GridConfig()


def test_from_string_keeps_base():
    base = GridConfig(sphere=50)
    assert GridConfig.from_string("angles=10", base) == GridConfig(angles=10, sphere=50)


@pytest.mark.parametrize(
    "spec, match",
    [
        ("angles", "invalid grid override"),
        ("colors=3", "invalid grid override"),
        ("angles=ten", "must be an integer"),
        ("angles=0", "positive integer"),
        ("workers=-2", "positive integer"),
    ],
)
def test_from_string_errors(spec: str, match: str):
    with pytest.raises(QuantityFormatError, match=match):
        GridConfig.from_string(spec)


def test_grid_from_env(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.delenv(GRID_ENV_VAR, raising=False)
    assert grid_from_env() == GridConfig()

    monkeypatch.setenv(GRID_ENV_VAR, "sphere=120,refine_top=1")
    grid = grid_from_env()
    assert grid.sphere == 120
    assert grid.refine_top == 1

    monkeypatch.setenv(GRID_ENV_VAR, "sphere=")
    with pytest.raises(InputError):
        grid_from_env()
