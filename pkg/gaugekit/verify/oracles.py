"""
Brute-force oracles. They only rely on vertex lists, halfspaces and the
Minkowski functional, never on the LP solver.
"""

import logging

import numpy as np

from gaugekit.geometry import Polytope
from gaugekit.measures import GaugeBody
from gaugekit.types import PointArray, Vector

logger = logging.getLogger(__name__)


def _max_gamma(V: PointArray, C: GaugeBody, centers: PointArray) -> Vector:
    worst = np.zeros(len(centers))
    for v in V:
        np.maximum(worst, C.gamma(v - centers), out=worst)
    return worst


class _ZoomingLattice:
    """
    Lattice search of `min_x max_k γ_C(v_k - x)` over a box of centers, one
    zoom round at a time. Each round evaluates a lattice (65 points per axis for
    `d <= 2`, 33 in R^3) and recenters a box of half-width four lattice steps on
    the best point. The objective is convex, so the zoom keeps the minimizer
    once the lattice resolves it.
    """

    def __init__(self, K: Polytope, C: GaugeBody, bound: float, tol: float, max_rounds: int) -> None:
        d = K.dim
        self.V = K.vertices
        self.C = C
        self.n = 65 if d <= 2 else 33
        reach = bound * float(np.max(np.abs(C.vertices)))
        self.lower = self.V.min(axis=0) - reach
        self.upper = self.V.max(axis=0) + reach
        center = self.V.mean(axis=0)
        self.best_x = center
        self.best = float(_max_gamma(self.V, C, center[None, :])[0])
        self.min_step = tol * max(1.0, bound)
        self.max_rounds = max_rounds
        self.rounds = 0

    @property
    def converged(self) -> bool:
        step = (self.upper - self.lower) / (self.n - 1)
        return self.rounds >= self.max_rounds or float(np.max(step)) <= self.min_step

    def zoom(self) -> None:
        d = len(self.lower)
        axes = [np.linspace(lo, hi, self.n) for lo, hi in zip(self.lower, self.upper, strict=True)]
        lattice = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d)
        values = _max_gamma(self.V, self.C, lattice)
        i = int(np.argmin(values))
        if values[i] <= self.best:
            self.best, self.best_x = float(values[i]), lattice[i]
        step = (self.upper - self.lower) / (self.n - 1)
        self.lower, self.upper = self.best_x - 4.0 * step, self.best_x + 4.0 * step
        self.rounds += 1

    def reaches(self, lam: float) -> bool:
        """Whether some center `x` has `K ⊂ x + λC`, zooming further as needed."""
        while self.best > lam and not self.converged:
            self.zoom()
        return self.best <= lam


def oracle_circumradius(K: Polytope, C: GaugeBody, tol: float = 1e-10, max_rounds: int = 60) -> float:
    """
    `min {λ : K ⊂ x + λC for some x}` by bisection on `λ`, deciding each
    containment with the Minkowski functional, `max_k γ_C(v_k - x) <= λ`, over
    a zooming lattice of centers `x`.

    The first lattice box covers every center `x = v - λc` with `v ∈ K`,
    `c ∈ C` and `λ` below the pairwise bound `max γ_C(v - w)`, which also
    starts the bisection. Lattice rounds are shared by all bisection steps.
    """
    if K.is_empty:
        return 0.0
    V = K.vertices
    diffs = (V[:, None, :] - V[None, :, :]).reshape(-1, K.dim)
    bound = float(np.max(C.gamma(diffs)))
    lattice = _ZoomingLattice(K, C, bound, tol, max_rounds)
    lo, hi = 0.0, max(bound, lattice.best)
    while hi - lo > tol * max(1.0, bound):
        mid = 0.5 * (lo + hi)
        if lattice.reaches(mid):
            hi = mid
        else:
            lo = mid
    logger.debug("bisection oracle: %.12g after %d lattice rounds", hi, lattice.rounds)
    return hi


def bisect_gamma(C: GaugeBody, x: Vector, tol: float = 1e-12) -> float:
    """
    `inf {λ > 0 : x ∈ λC}` by bisection on the halfspaces `A y <= λ b` of `C`.
    """
    A, b = C.body.hrep
    x = np.asarray(x, dtype=np.float64)

    def inside(lam: float) -> bool:
        return bool(np.all(A @ x <= lam * b))

    if inside(0.0):
        return 0.0
    hi = 1.0
    while not inside(hi):
        hi *= 2.0
    lo = 0.0
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return hi


def dense_ratio_scan(K: Polytope, C: GaugeBody, n: int) -> tuple[float, float]:
    """
    Infimum and supremum of $h_{K-K}(u) / h_{C-C}(u)$ over `n` sampled
    directions: equally spaced angles in the plane, a Fibonacci sphere in R^3.
    """
    d = K.dim
    if d == 1:
        U = np.ones((1, 1))
    elif d == 2:
        theta = np.pi * np.arange(n) / n
        U = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    else:
        k = np.arange(n)
        z = 1.0 - (2.0 * k + 1.0) / (2.0 * n)
        phi = np.pi * (3.0 - np.sqrt(5.0)) * k
        rho = np.sqrt(1.0 - z**2)
        U = np.stack([rho * np.cos(phi), rho * np.sin(phi), z], axis=1)
    hK = K.vertices @ U.T
    hC = C.vertices @ U.T
    ratios = np.ptp(hK, axis=0) / np.ptp(hC, axis=0)
    return float(ratios.min()), float(ratios.max())
