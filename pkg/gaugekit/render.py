"""
SVG figures of planar ball constructions.

The set `K` is drawn with thin lines, the translates of `λC` generating the
construction dashed, and the result in bold. Output is deterministic: the SVG
carries no date and element ids come from a fixed hash salt.
"""

import io
import logging
from typing import Literal

import matplotlib as mpl
import numpy as np
from matplotlib.figure import Figure
from matplotlib.patches import Polygon

from gaugekit.errors import InputError, UnsupportedDimensionError
from gaugekit.geometry import Polytope, scale, translate
from gaugekit.measures import (
    GaugeBody,
    ball_hull,
    ball_intersect,
    circumcenter_set,
    circumradius,
    incenter_set,
    inradius,
)
from gaugekit.types import PointArray

logger = logging.getLogger(__name__)

What = Literal["bh", "bi", "cc", "ic"]

MARGIN = 0.05
"""Margin around the drawn bodies, as a fraction of their bounding box."""


def _cyclic(points: PointArray) -> PointArray:
    center = points.mean(axis=0)
    angles = np.arctan2(points[:, 1] - center[1], points[:, 0] - center[0])
    return points[np.argsort(angles, kind="stable")]


def _draw(ax, P: Polytope, linewidth: float, linestyle: str = "-") -> None:
    if P.is_empty:
        return
    V = P.vertices
    if len(V) == 1:
        ax.plot(V[:, 0], V[:, 1], marker="o", markersize=2 * linewidth, color="black")
    elif P.affine_dim == 1:
        ax.plot(V[:, 0], V[:, 1], color="black", linewidth=linewidth, linestyle=linestyle)
    else:
        ax.add_patch(
            Polygon(
                _cyclic(V),
                closed=True,
                fill=False,
                edgecolor="black",
                linewidth=linewidth,
                linestyle=linestyle,
            )
        )


def construction(
    K: Polytope, C: GaugeBody, what: What, lam: float | None = None
) -> tuple[Polytope, list[Polytope]]:
    """
    The result of `what` and the translates drawn along with it.

    - `bh`: `bh(K, C, λ)` and the translates `x + λC` over the vertices `x` of
      `bi(K, C, λ)`, whose intersection it is.
    - `bi`: `bi(K, C, λ)` and the translates `v - λC` over the vertices `v` of `K`.
    - `cc`: the circumcenters and the covering translate `x + R(K, C) C`.
    - `ic`: the incenters and the inscribed translate `y + r(K, C) C`.
    """
    if what in ("bh", "bi"):
        if lam is None:
            raise InputError(f"drawing {what} needs a radius")
        centers = ball_intersect(K, C, lam)
        if what == "bi":
            minus = scale(C.body, -lam)
            return centers, [translate(minus, v) for v in K.vertices]
        hull = ball_hull(K, C, lam)
        scaled = scale(C.body, lam)
        return hull, [translate(scaled, x) for x in centers.vertices]
    if what == "cc":
        result = circumradius(K, C)
        centers = circumcenter_set(K, C)
        return centers, [translate(scale(C.body, result.value), result.witness_center)]
    if what == "ic":
        result = inradius(K, C)
        incenters = incenter_set(K, C)
        return incenters, [translate(scale(C.body, result.value), result.witness_center)]
    raise InputError(f"unknown construction {what!r}, expected bh, bi, cc or ic")


def render_svg(K: Polytope, C: GaugeBody, what: What = "bh", lam: float | None = None) -> str:
    """
    Draws a planar construction as SVG text.

    Args:
        K (`Polytope`): the set, in the plane.
        C (`GaugeBody`): the gauge.
        what (`"bh" | "bi" | "cc" | "ic"`): the construction, see `construction`.
        lam (`float | None`): the radius of `bh` and `bi`.

    Returns:
        `str`: an SVG 1.1 document, y axis pointing up.

    Raises:
        UnsupportedDimensionError: outside the plane.
    """
    if K.dim != 2 or C.dim != 2:
        raise UnsupportedDimensionError("figures are drawn in the plane only")
    result, translates = construction(K, C, what, lam)

    fig = Figure(figsize=(6, 6))
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_axis_off()
    ax.set_aspect("equal")
    for body in translates:
        _draw(ax, body, 0.8, "--")
    _draw(ax, K, 0.8)
    _draw(ax, result, 2.5)

    drawn = [P.vertices for P in (K, result, *translates) if not P.is_empty]
    points = np.vstack(drawn)
    low, high = points.min(axis=0), points.max(axis=0)
    pad = MARGIN * max(float(np.max(high - low)), 1e-9)
    ax.set_xlim(low[0] - pad, high[0] + pad)
    ax.set_ylim(low[1] - pad, high[1] + pad)

    buffer = io.StringIO()
    with mpl.rc_context({"svg.hashsalt": "gaugekit", "svg.fonttype": "none"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug("rendered %s with %d translates", what, len(translates))
    return buffer.getvalue()
