"""
Parametrizations of the subspace families searched by the successive radii.

In dimensions 2 and 3 every proper nonzero linear subspace is a line or a
hyperplane, so it is determined (up to sign) by one unit vector: its direction
or its normal. Directions live on the half circle `θ ∈ [0, π)` in the plane
and on the upper hemisphere in space, antipodal directions being identified.
"""

import numpy as np

from gaugekit.geometry import Subspace
from gaugekit.types import MatrixArray, Vector


def angle_directions(n: int) -> MatrixArray:
    """`n` equally spaced unit vectors with angles in `[0, π)`."""
    theta = np.pi * np.arange(n) / n
    return np.stack([np.cos(theta), np.sin(theta)], axis=1)


def unit_from_angle(theta: float) -> Vector:
    return np.array([np.cos(theta), np.sin(theta)])


def angle_of(u: Vector) -> float:
    return float(np.arctan2(u[1], u[0]))


def fibonacci_hemisphere(n: int) -> MatrixArray:
    """
    `n` nearly uniform unit vectors with nonnegative last coordinate, from a
    Fibonacci lattice.
    """
    golden = np.pi * (3.0 - np.sqrt(5.0))
    k = np.arange(n)
    z = 1.0 - (k + 0.5) / n
    radius = np.sqrt(1.0 - z**2)
    phi = golden * k
    return np.stack([radius * np.cos(phi), radius * np.sin(phi), z], axis=1)


def hemisphere_spacing(n: int) -> float:
    """Typical distance between neighbouring Fibonacci points."""
    return float(np.sqrt(2.0 * np.pi / n))


def tangent_basis(u: Vector) -> tuple[Vector, Vector]:
    """Two unit vectors completing `u` to an orthonormal basis of R^3."""
    helper = np.eye(3)[int(np.argmin(np.abs(u)))]
    e1 = np.cross(u, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(u, e1)


def tilt(u: Vector, e1: Vector, e2: Vector, s: Vector) -> Vector:
    """Unit vector `u + s1 e1 + s2 e2`, normalized."""
    v = u + s[0] * e1 + s[1] * e2
    return v / np.linalg.norm(v)


def direction_grid(d: int, angles: int, sphere: int) -> MatrixArray:
    """Grid of unit vectors covering the directions of `R^d` up to sign."""
    if d == 2:
        return angle_directions(angles)
    if d == 3:
        return fibonacci_hemisphere(sphere)
    raise ValueError(f"direction grids exist for d in (2, 3), got {d}")


def line_along(u: Vector) -> Subspace:
    """The line `span(u)`."""
    return Subspace.spanned_by(u[None, :], len(u))


def hyperplane_normal_to(u: Vector) -> Subspace:
    """The hyperplane `u^⊥`. In the plane this is the line orthogonal to `u`."""
    return line_along(u).complement()
