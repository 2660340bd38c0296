import os
from dataclasses import dataclass, fields, replace

from gaugekit.errors import QuantityFormatError

GRID_ENV_VAR = "GAUGEKIT_GRID"
"""Environment variable overriding the search grid sizes, e.g. `angles=360,sphere=200`."""


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical tolerances shared by every module.
    Modules read them from `TOLERANCES` instead of defining their own.
    """

    lp_feasibility: float = 1e-9
    """Absolute-plus-relative feasibility tolerance of the simplex solver."""

    lp_pivot: float = 1e-11
    """Smallest pivot / reduced cost magnitude treated as nonzero."""

    rank: float = 1e-8
    """Rank tolerance of affine hulls, relative to the point cloud's diameter."""

    degeneracy: float = 1e-9
    """Chebyshev radius below which a halfspace intersection counts as degenerate."""

    membership: float = 1e-7
    """Tolerance of vertex-membership tests used for set inclusions."""

    cross_check: float = 1e-8
    """Relative disagreement above which redundant computations emit a warning."""

    exact_accuracy: float = 1e-9
    """Accuracy reported by exact (non-searched) computations."""


TOLERANCES = Tolerances()


@dataclass(frozen=True)
class GridConfig:
    """
    Sizes of the grids used by the searched successive radii.

    Every field must be a positive integer.
    """

    angles: int = 720
    """Number of angles in $[0, \\pi)$ for subspaces of the plane."""

    sphere: int = 400
    """Number of points of the Fibonacci grid on the upper hemisphere (3D)."""

    offsets: int = 33
    """Grid points per axis when searching offsets of flats."""

    refine_top: int = 3
    """Number of best grid points handed to the local refinement."""

    workers: int = 1
    """Threads used to evaluate subspace grids. Results are reduced in grid order."""

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise QuantityFormatError(
                    f"grid field '{f.name}' must be a positive integer, got {value!r}"
                )

    @classmethod
    def from_string(cls, spec: str, base: "GridConfig | None" = None) -> "GridConfig":
        """
        Parses a comma separated override list on top of `base`.

        Args:
            spec (`str`): e.g. `"angles=360,sphere=200,offsets=17"`. Empty means
                no override.
            base (`GridConfig | None`): values to start from. Defaults to the
                built-in defaults.

        Returns:
            `GridConfig`: the updated configuration.
        """
        config = base or cls()
        known = {f.name for f in fields(cls)}
        updates: dict[str, int] = {}
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, raw = item.partition("=")
            key = key.strip()
            if not sep or key not in known:
                raise QuantityFormatError(
                    f"invalid grid override '{item}', expected one of "
                    f"{sorted(known)} as key=value"
                )
            try:
                updates[key] = int(raw)
            except ValueError as e:
                raise QuantityFormatError(
                    f"grid field '{key}' must be an integer, got '{raw.strip()}'"
                ) from e
        return replace(config, **updates)


def grid_from_env(base: GridConfig | None = None) -> GridConfig:
    """
    Reads `GAUGEKIT_GRID` and applies it on top of `base`.

    Args:
        base (`GridConfig | None`): configuration to override.

    Returns:
        `GridConfig`: `base` (or defaults) updated with the environment variable.
    """
    return GridConfig.from_string(os.environ.get(GRID_ENV_VAR, ""), base)
