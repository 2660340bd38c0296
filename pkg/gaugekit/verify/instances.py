"""
Seeded random instances and instance identifiers.
"""

import hashlib
import json

import numpy as np

from gaugekit.errors import InputError
from gaugekit.geometry import Polytope, polytope_to_json, translate
from gaugekit.measures import GaugeBody


def random_polytope(rng: np.random.Generator, d: int, min_points: int = 4, max_points: int = 10) -> Polytope:
    """
    Hull of `n ∈ [min_points, max_points]` uniform points of `[-1, 1]^d`,
    resampled until it is full-dimensional.
    """
    if not 1 <= d <= 3:
        raise InputError(f"random instances exist for 1 <= d <= 3, got {d}")
    while True:
        n = int(rng.integers(min_points, max_points + 1))
        P = Polytope.from_points(rng.uniform(-1.0, 1.0, size=(n, d)))
        if P.is_full_dimensional:
            return P


def random_gauge(rng: np.random.Generator, d: int) -> GaugeBody:
    """A random polytope moved so that the centroid of its vertices is the origin."""
    P = random_polytope(rng, d)
    return GaugeBody(translate(P, -P.centroid))


def random_pair(seed: int, d: int) -> tuple[Polytope, GaugeBody]:
    """The instance `(K, C)` of `seed` in dimension `d`."""
    rng = np.random.default_rng(seed)
    K = random_polytope(rng, d)
    return K, random_gauge(rng, d)


def instance_id(K: Polytope, C: GaugeBody) -> str:
    """SHA-256 of the canonical JSON of both bodies."""
    canonical = json.dumps(
        {"set": polytope_to_json(K), "gauge": polytope_to_json(C.body)},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode()).hexdigest()
