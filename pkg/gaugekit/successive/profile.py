"""
The eight successive radii families and the full profile of a pair `(K, C)`.

Evaluation paths, for `d <= 3`:

- `j = d` collapses to `R(K, C)` or `r(K, C)`.
- Cylinder quantities with `j = 1` extremize the support ratio
  $h_{K-K}(u) / h_{C-C}(u)$ over exact candidate directions, and the attaining
  cylinder is re-solved as a cross-check.
- Cylinder quantities with `j = 2` in R^3 search the line `L` over the
  hemisphere. Inradii use `r(K + L, C) = 1 / R(C, K + L)` with the opposite
  extremum.
- Section quantities with `j = 1` search the line direction `w` of the ratio
  $\\gamma_{C-C}(w) / \\gamma_{K-K}(w)$, which is the exact inner extremum over
  parallel chords for both circumradii and inradii.
- Section quantities with `j = 2` in R^3 search plane normals against a coarse
  offset search (`PLANE_OFFSETS` grid points refined by a bounded scalar
  search), refining only the best normal. The full offset search runs once,
  at the normal found.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any

import pandas as pd

from gaugekit.config import GridConfig, grid_from_env
from gaugekit.errors import DegenerateBodyError, InputError, UnsupportedDimensionError
from gaugekit.geometry import Polytope, Subspace
from gaugekit.measures import GaugeBody, RadiiResult, circumradius, inradius
from gaugekit.measures.radii import SupportRatio, support_ratio_extremes, warn_disagreement
from gaugekit.records import CheckResult, at_most
from gaugekit.successive.cylinders import cylinder_fit, cylinder_inradius
from gaugekit.successive.quantities import Quantity, all_quantities, chains
from gaugekit.successive.search import SearchResult, search_directions
from gaugekit.successive.sections import (
    chord_ratio,
    difference_gauge,
    longest_chord,
    plane_section_circumradius,
    plane_section_inradius,
)
from gaugekit.successive.subspaces import hyperplane_normal_to, line_along
from gaugekit.types import MatrixArray, Vector

logger = logging.getLogger(__name__)

CHAIN_SLACK = 5e-3
"""Allowed violation of the monotone chains, relative to the chain's largest value."""

PLANE_OFFSETS = 5
"""Offset grid of the plane sections evaluated while searching their normal."""


class SuccessiveRadii:
    """
    Evaluates quantities of one pair `(K, C)`, caching the objects shared by
    several quantities: support ratio extremes, difference gauges, the grid
    values of each direction objective and the offset search of each plane
    normal, reused between sup and inf.
    """

    def __init__(self, K: Polytope, C: GaugeBody, grid: GridConfig | None = None) -> None:
        if K.dim != C.dim:
            raise InputError(f"K lives in R^{K.dim} but the gauge in R^{C.dim}")
        if K.dim > 3:
            raise UnsupportedDimensionError(f"successive radii support d <= 3, got d={K.dim}")
        self.K = K
        self.C = C
        self.grid = grid or grid_from_env()
        self.d = K.dim
        self._grids: dict[str, tuple[MatrixArray, Vector]] = {}
        self._planes: dict[tuple[str, int, int, bytes], SearchResult] = {}

    @cached_property
    def ratio(self) -> SupportRatio:
        return support_ratio_extremes(self.K, self.C)

    @cached_property
    def K_diff(self) -> GaugeBody:
        return difference_gauge(self.K)

    @cached_property
    def C_diff(self) -> GaugeBody:
        return difference_gauge(self.C.body)

    @cached_property
    def K_gauge(self) -> GaugeBody:
        return GaugeBody.recentered(self.K)[0]

    def _search(
        self,
        key: str,
        fn: Callable[[Vector], float],
        maximize: bool,
        grid: GridConfig | None = None,
    ) -> SearchResult:
        result, values = search_directions(
            fn, self.d, grid or self.grid, maximize, self._grids.get(key)
        )
        self._grids[key] = values
        return result

    def radius(self, q: Quantity | str) -> RadiiResult:
        """The quantity `q`, see `successive_radius`."""
        if isinstance(q, str):
            q = Quantity.parse(q)
        q.check_dimension(self.d)
        K = self.K
        if q.j == self.d:
            L = Subspace.zero(self.d) if q.mode == "pi" else Subspace.whole(self.d)
            if q.family == "R":
                full = circumradius(K, self.C)
            else:
                self._require_full(q)
                full = inradius(K, self.C)
            return RadiiResult(full.value, witness_center=full.witness_center, witness_subspace=L)
        if q.family == "r" or q.mode == "sigma":
            self._require_full(q)
        elif K.is_empty:
            return RadiiResult(0.0)

        if q.mode == "pi":
            return self._cylinder_hyperplane(q) if q.j == 1 else self._cylinder_line(q)
        return self._section_line(q) if q.j == 1 else self._section_plane(q)

    def _require_full(self, q: Quantity) -> None:
        if not self.K.is_full_dimensional:
            raise DegenerateBodyError(f"{q.name} needs a full-dimensional body")

    def _cylinder_hyperplane(self, q: Quantity) -> RadiiResult:
        ratio = self.ratio
        if q.position == "sup":
            value, u = ratio.sup, ratio.sup_direction
        else:
            value, u = ratio.inf, ratio.inf_direction
        L = hyperplane_normal_to(u)
        center = None
        if q.family == "R":
            check, center = cylinder_fit(self.K, self.C, L)
        else:
            check = cylinder_inradius(self.K, self.C, L)
        warn_disagreement(f"{q.name}: support ratio and cylinder program disagree", value, check)
        return RadiiResult(value, witness_center=center, witness_subspace=L)

    def _cylinder_line(self, q: Quantity) -> RadiiResult:
        sup = q.position == "sup"
        if q.family == "R":
            result = self._search(
                "cylinder-R",
                lambda w: cylinder_fit(self.K, self.C, line_along(w))[0],
                maximize=sup,
            )
            L = line_along(result.argument)
            _, center = cylinder_fit(self.K, self.C, L)
            return RadiiResult(
                result.value,
                method="searched",
                accuracy=result.accuracy,
                witness_center=center,
                witness_subspace=L,
            )
        # r(K + L, C) = 1 / R(C, K + L), the extremum flips
        result = self._search(
            "cylinder-r",
            lambda w: cylinder_fit(self.C.body, self.K_gauge, line_along(w))[0],
            maximize=not sup,
        )
        outer = result.value
        return RadiiResult(
            1.0 / outer,
            method="searched",
            accuracy=result.accuracy / outer**2,
            witness_subspace=line_along(result.argument),
        )

    def _section_line(self, q: Quantity) -> RadiiResult:
        result = self._search(
            "section-line",
            lambda w: chord_ratio(self.K_diff, self.C_diff, w),
            maximize=q.position == "sup",
        )
        w = result.argument
        start, _ = longest_chord(self.K if q.family == "R" else self.C.body, w)
        return RadiiResult(
            result.value,
            method="searched",
            accuracy=result.accuracy,
            witness_center=start,
            witness_subspace=line_along(w),
        )

    def _plane_offsets(self, family: str, normal: Vector, grid: GridConfig) -> SearchResult:
        # one offset search per normal, shared by the sup and inf searches
        key = (family, grid.offsets, grid.refine_top, normal.tobytes())
        cached = self._planes.get(key)
        if cached is None:
            if family == "R":
                cached = plane_section_circumradius(self.K, self.C, normal, grid, "sup")
            else:
                cached = plane_section_inradius(self.K, self.C, normal, grid, "inf")
            self._planes[key] = cached
        return cached

    def _section_plane(self, q: Quantity) -> RadiiResult:
        coarse = replace(self.grid, offsets=min(self.grid.offsets, PLANE_OFFSETS), refine_top=1)
        result = self._search(
            f"section-plane-{q.family}",
            lambda n: self._plane_offsets(q.family, n, coarse).value,
            maximize=q.position == "sup",
            grid=coarse,
        )
        normal = result.argument
        at_best = self._plane_offsets(q.family, normal, self.grid)
        drift = abs(at_best.value - self._plane_offsets(q.family, normal, coarse).value)
        return RadiiResult(
            max(0.0, at_best.value),
            method="searched",
            accuracy=result.accuracy + at_best.accuracy + drift,
            witness_center=float(at_best.argument[0]) * normal,
            witness_subspace=hyperplane_normal_to(normal),
        )


def successive_radius(
    K: Polytope, C: GaugeBody, q: Quantity | str, grid: GridConfig | None = None
) -> RadiiResult:
    """
    One successive radius of `K` with respect to the gauge `C`.

    Args:
        K (`Polytope`): the body, `d <= 3`. Inradius and section quantities need
            it full-dimensional, except at `j = d` for circumradii.
        C (`GaugeBody`): the gauge.
        q (`Quantity | str`): the quantity, or its name such as `R-pi-sup:1`.
        grid (`GridConfig | None`): search grids, `GAUGEKIT_GRID` defaults if `None`.

    Returns:
        `RadiiResult`: exact for `j = d` and for cylinders with `j = 1`,
        searched otherwise.

    Raises:
        UnsupportedDimensionError: for `d > 3`.
        QuantityFormatError: for malformed names or `j > d`.
        DegenerateBodyError: for lower-dimensional `K` where it must be full.
    """
    return SuccessiveRadii(K, C, grid).radius(q)


def chain_checks(values: dict[Quantity, float], d: int) -> list[CheckResult]:
    """
    Monotonicity of the eight chains over `j`, one check per chain. The left
    hand side is the worst violation, compared with `CHAIN_SLACK` times the
    largest finite value of the chain.
    """
    checks = []
    for chain in chains(d):
        head = chain[0]
        series = [values[q] for q in chain]
        steps = [
            (b - a) if head.family == "r" else (a - b)
            for a, b in zip(series, series[1:], strict=False)
            if not (math.isinf(a) or math.isinf(b))
        ]
        finite = [abs(v) for v in series if not math.isinf(v)]
        scale = max([1.0, *finite])
        name = f"chain.{head.family}-{head.mode}-{head.position}"
        checks.append(at_most(name, max([0.0, *steps]), 0.0, CHAIN_SLACK * scale))
    return checks


@dataclass(frozen=True)
class RadiiProfile:
    """All `8 d` successive radii of a pair, with the chain checks."""

    dim: int
    """Ambient dimension `d`."""

    entries: list[tuple[Quantity, RadiiResult]]
    """Quantities in `all_quantities` order."""

    checks: list[CheckResult] = field(default_factory=list)
    """Monotone chain checks, see `chain_checks`."""

    def __getitem__(self, q: Quantity | str) -> RadiiResult:
        name = q if isinstance(q, str) else q.name
        for quantity, result in self.entries:
            if quantity.name == name:
                return result
        raise KeyError(name)

    @property
    def chains_hold(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "quantity": q.name,
                    "symbol": q.symbol,
                    "j": q.j,
                    "value": r.value,
                    "method": r.method,
                    "accuracy": r.accuracy,
                }
                for q, r in self.entries
            ]
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "entries": [r.to_json(q.name) for q, r in self.entries],
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        table = self.to_frame().to_string(index=False, float_format=lambda v: f"{v:.10g}")
        lines = [table, ""]
        lines += [f"{c.name:<22} {c.status.value}" for c in self.checks]
        return "\n".join(lines)


def full_profile(K: Polytope, C: GaugeBody, grid: GridConfig | None = None) -> RadiiProfile:
    """
    Every successive radius of `(K, C)` for `j = 1..d`, with the eight chain
    checks attached. Direction grids are evaluated once per objective and
    shared between the sup and inf variants.
    """
    evaluator = SuccessiveRadii(K, C, grid)
    d = evaluator.d
    entries = []
    for q in all_quantities(d):
        entries.append((q, evaluator.radius(q)))
        logger.debug("%s = %.12g", q.name, entries[-1][1].value)
    checks = chain_checks({q: r.value for q, r in entries}, d)
    profile = RadiiProfile(d, entries, checks)
    if not profile.chains_hold:
        logger.warning(
            "monotone chains violated: %s",
            ", ".join(c.name for c in checks if not c.passed),
        )
    return profile

