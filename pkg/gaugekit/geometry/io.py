"""
Geometry JSON codec.

A polytope is stored as

```json
{"dim": 2, "vrep": [[0, 0], [1, 0], [0, 1]]}
```

and/or

```json
{"dim": 2, "hrep": [{"a": [1, 0], "b": 1}, {"a": [-1, 0], "b": 0}]}
```

When both representations are given they must describe the same set.
"""

import json
import math
from os import PathLike
from pathlib import Path
from typing import Any

import numpy as np

from gaugekit.config import TOLERANCES
from gaugekit.errors import GeometryFormatError
from gaugekit.geometry.hull import MAX_EXPLICIT_DIM, extent
from gaugekit.geometry.operations import vertex_hausdorff
from gaugekit.geometry.polytope import Polytope


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise GeometryFormatError(field, f"expected a number, got {value!r}")
    if not math.isfinite(value):
        raise GeometryFormatError(field, "coordinates must be finite")
    return float(value)


def _vector(value: Any, dim: int, field: str) -> list[float]:
    if not isinstance(value, list):
        raise GeometryFormatError(field, f"expected a list of {dim} numbers")
    if len(value) != dim:
        raise GeometryFormatError(field, f"expected {dim} coordinates, got {len(value)}")
    return [_number(x, f"{field}[{i}]") for i, x in enumerate(value)]


def polytope_from_json(data: Any) -> Polytope:
    """
    Decodes a geometry JSON object.

    Args:
        data (`Any`): the parsed JSON value.

    Returns:
        `Polytope`: the decoded polytope. Vertex inputs go through the convex hull,
        so redundant points are dropped.

    Raises:
        GeometryFormatError: naming the offending field.
    """
    if not isinstance(data, dict):
        raise GeometryFormatError("$", "expected a JSON object")
    if "dim" not in data:
        raise GeometryFormatError("dim", "missing field")
    dim = data["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise GeometryFormatError("dim", f"expected a positive integer, got {dim!r}")
    unknown = set(data) - {"dim", "vrep", "hrep"}
    if unknown:
        raise GeometryFormatError(sorted(unknown)[0], "unknown field")
    if "vrep" not in data and "hrep" not in data:
        raise GeometryFormatError("vrep", "at least one of 'vrep' and 'hrep' is required")

    points = None
    if "vrep" in data:
        vrep = data["vrep"]
        if not isinstance(vrep, list) or not vrep:
            raise GeometryFormatError("vrep", "expected a nonempty list of points")
        points = np.array([_vector(v, dim, f"vrep[{i}]") for i, v in enumerate(vrep)])

    halfspaces = None
    if "hrep" in data:
        hrep = data["hrep"]
        if not isinstance(hrep, list) or not hrep:
            raise GeometryFormatError("hrep", "expected a nonempty list of halfspaces")
        rows, offsets = [], []
        for i, h in enumerate(hrep):
            if not isinstance(h, dict) or set(h) != {"a", "b"}:
                raise GeometryFormatError(f"hrep[{i}]", "expected an object with fields 'a' and 'b'")
            a = _vector(h["a"], dim, f"hrep[{i}].a")
            if not any(a):
                raise GeometryFormatError(f"hrep[{i}].a", "normal must be nonzero")
            rows.append(a)
            offsets.append(_number(h["b"], f"hrep[{i}].b"))
        halfspaces = (np.array(rows), np.array(offsets))

    if points is not None and halfspaces is not None:
        polytope = Polytope.from_representations(points, *halfspaces)
        if dim <= MAX_EXPLICIT_DIM:
            _check_consistent(polytope, *halfspaces)
        return polytope
    if points is not None:
        return Polytope.from_points(points)
    assert halfspaces is not None
    return Polytope.from_halfspaces(*halfspaces)


def _check_consistent(polytope: Polytope, A: np.ndarray, b: np.ndarray) -> None:
    tol = TOLERANCES.membership * max(1.0, extent(polytope.vertices))
    if vertex_hausdorff(polytope, Polytope.from_halfspaces(A, b)) > tol:
        raise GeometryFormatError("hrep", "does not describe the same set as 'vrep'")


def polytope_to_json(P: Polytope, include_hrep: bool = False) -> dict[str, Any]:
    """
    Encodes a polytope. The Empty polytope is encoded with an empty `vrep`.

    Args:
        P (`Polytope`): the polytope.
        include_hrep (`bool`): also write the H-representation (full-dimensional
            polytopes only).

    Returns:
        `dict[str, Any]`: a JSON-serializable object.
    """
    data: dict[str, Any] = {"dim": P.dim, "vrep": P.vertices.tolist()}
    if include_hrep and P.is_full_dimensional:
        A, b = P.hrep
        data["hrep"] = [{"a": a.tolist(), "b": float(bi)} for a, bi in zip(A, b, strict=True)]
    return data


def load_polytope(path: str | PathLike) -> Polytope:
    """
    Reads a geometry JSON file.

    Raises:
        GeometryFormatError: if the file is not valid JSON or not valid geometry.
    """
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise GeometryFormatError("$", f"invalid JSON in {path}: {e.msg} (line {e.lineno})") from e
    return polytope_from_json(data)


def dump_polytope(P: Polytope, include_hrep: bool = False) -> str:
    return json.dumps(polytope_to_json(P, include_hrep))
