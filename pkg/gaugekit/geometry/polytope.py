import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from gaugekit.config import TOLERANCES
from gaugekit.errors import DegenerateBodyError, EmptySetError, UnsupportedDimensionError
from gaugekit.geometry.hull import (
    MAX_EXPLICIT_DIM,
    AffineFrame,
    chebyshev_ball,
    edges,
    enumerate_vertices,
    facets,
    hull_vertices,
    normalize_rows,
)
from gaugekit.types import MatrixArray, PointArray, Vector

logger = logging.getLogger(__name__)


def _frozen(array: npt.ArrayLike) -> np.ndarray:
    out = np.array(array, dtype=np.float64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class Halfspace:
    """The halfspace `{x : <a, x> <= b}`."""

    a: Vector
    """Outer normal, nonzero."""

    b: float
    """Offset."""

    def __post_init__(self):
        a = _frozen(self.a).reshape(-1)
        if not np.any(a):
            raise ValueError("A halfspace needs a nonzero normal.")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", float(self.b))


@dataclass(frozen=True)
class Subspace:
    """
    Linear subspace of $\\mathbb{R}^d$ given by an orthonormal basis.
    """

    dim_ambient: int
    """Ambient dimension `d`."""

    basis: MatrixArray
    """Orthonormal rows, shape `(j, d)`. Empty for the zero subspace."""

    def __post_init__(self):
        basis = _frozen(self.basis).reshape(-1, self.dim_ambient)
        if basis.shape[0] > self.dim_ambient:
            raise ValueError("A subspace cannot have more basis vectors than d.")
        if not np.allclose(basis @ basis.T, np.eye(basis.shape[0]), atol=1e-12):
            raise ValueError("Subspace basis vectors must be orthonormal.")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def spanned_by(cls, vectors: npt.ArrayLike, dim_ambient: int) -> "Subspace":
        """
        Orthonormalizes `vectors` (rows) into a subspace.

        Args:
            vectors (`npt.ArrayLike`): spanning vectors, shape `(k, d)`.
            dim_ambient (`int`): `d`.

        Returns:
            `Subspace`: their span.
        """
        vectors = np.asarray(vectors, dtype=np.float64).reshape(-1, dim_ambient)
        if len(vectors) == 0:
            return cls.zero(dim_ambient)
        _, s, vt = np.linalg.svd(vectors, full_matrices=False)
        rank = int(np.count_nonzero(s > 1e-12 * max(s.max(), 1e-300)))
        return cls(dim_ambient, vt[:rank])

    @classmethod
    def zero(cls, dim_ambient: int) -> "Subspace":
        return cls(dim_ambient, np.zeros((0, dim_ambient)))

    @classmethod
    def whole(cls, dim_ambient: int) -> "Subspace":
        return cls(dim_ambient, np.eye(dim_ambient))

    @property
    def dim(self) -> int:
        """Dimension `j` of the subspace."""
        return self.basis.shape[0]

    @property
    def projector(self) -> MatrixArray:
        """Orthogonal projector onto the subspace, shape `(d, d)`."""
        return self.basis.T @ self.basis

    def complement(self) -> "Subspace":
        """Orthogonal complement."""
        if self.dim == 0:
            return Subspace.whole(self.dim_ambient)
        _, _, vt = np.linalg.svd(self.basis, full_matrices=True)
        return Subspace(self.dim_ambient, vt[self.dim :])

    def to_json(self) -> list[list[float]]:
        return self.basis.tolist()


@dataclass(frozen=True)
class AffineFlat:
    """The affine flat `point + span(basis)`."""

    point: Vector
    """A point `x` of the flat."""

    direction: Subspace
    """Direction space `L`."""

    def __post_init__(self):
        point = _frozen(self.point).reshape(-1)
        if point.shape[0] != self.direction.dim_ambient:
            raise ValueError("Flat point and direction space disagree on d.")
        object.__setattr__(self, "point", point)

    @property
    def basis(self) -> MatrixArray:
        return self.direction.basis


class Polytope:
    """
    A convex polytope of $\\mathbb{R}^d$, possibly lower-dimensional or empty.

    A polytope is built from vertices (`Polytope.from_points`), from halfspaces
    (`Polytope.from_halfspaces`), or both. Missing representations are computed
    on first access and cached. Values never change after construction.

    The H-representation only exists for full-dimensional polytopes. Lower
    dimensional polytopes carry their vertices plus an affine frame, and an
    H-representation inside that frame (`Polytope.frame_hrep`).
    """

    def __init__(
        self,
        dim: int,
        vertices: PointArray | None = None,
        frame: AffineFrame | None = None,
        hrep: tuple[MatrixArray, Vector] | None = None,
    ) -> None:
        """
        Low-level constructor. Prefer the `from_*` class methods, which
        canonicalize their input.

        Args:
            dim (`int`): ambient dimension `d`.
            vertices (`PointArray | None`): canonical vertices, shape `(n, d)`.
            frame (`AffineFrame | None`): affine hull of `vertices`.
            hrep (`tuple[MatrixArray, Vector] | None`): halfspaces `A x <= b`.
        """
        if vertices is None and hrep is None:
            raise ValueError("A polytope needs vertices or halfspaces.")
        self.dim = dim
        """Ambient dimension."""
        if vertices is not None:
            self.__dict__["vertices"] = _frozen(vertices).reshape(-1, dim)
        if frame is not None:
            self.__dict__["frame"] = frame
        self._hrep_in = hrep

    @classmethod
    def from_points(cls, points: npt.ArrayLike, abs_tol: float = 0.0) -> "Polytope":
        """
        Convex hull of a nonempty point set.

        Args:
            points (`npt.ArrayLike`): shape `(n, d)`.
            abs_tol (`float`): absolute thickness below which directions collapse.

        Returns:
            `Polytope`: the hull with canonical vertices.
        """
        points = np.atleast_2d(np.asarray(points, dtype=np.float64))
        if points.shape[1] > MAX_EXPLICIT_DIM and len(points):
            logger.debug("keeping %d raw points in R^%d", len(points), points.shape[1])
            return cls(points.shape[1], points)
        vertices, frame = hull_vertices(points, abs_tol)
        return cls(vertices.shape[1], vertices, frame)

    @classmethod
    def from_halfspaces(cls, A: npt.ArrayLike, b: npt.ArrayLike) -> "Polytope":
        """
        Intersection of the halfspaces `A x <= b`, computed lazily.

        Args:
            A (`npt.ArrayLike`): normals, shape `(m, d)`.
            b (`npt.ArrayLike`): offsets, shape `(m,)`.

        Returns:
            `Polytope`: the intersection, possibly empty.
        """
        A = np.atleast_2d(np.asarray(A, dtype=np.float64))
        return cls(A.shape[1], hrep=(A, np.asarray(b, dtype=np.float64).reshape(-1)))

    @classmethod
    def from_representations(
        cls, points: npt.ArrayLike, A: npt.ArrayLike, b: npt.ArrayLike
    ) -> "Polytope":
        """
        A polytope given by both representations. The caller is responsible
        for their consistency (see `gaugekit.geometry.io`).
        """
        polytope = cls.from_points(points)
        A = np.atleast_2d(np.asarray(A, dtype=np.float64))
        polytope._hrep_in = (A, np.asarray(b, dtype=np.float64).reshape(-1))
        return polytope

    @classmethod
    def empty(cls, dim: int) -> "Polytope":
        """The distinguished Empty polytope of $\\mathbb{R}^d$."""
        return cls(dim, np.zeros((0, dim)))

    @cached_property
    def vertices(self) -> PointArray:
        """Extreme points in canonical order, shape `(n, d)`. Empty has `n = 0`."""
        assert self._hrep_in is not None
        points, relax = enumerate_vertices(*self._hrep_in)
        if len(points) == 0:
            return _frozen(np.zeros((0, self.dim)))
        vertices, frame = hull_vertices(points, abs_tol=10.0 * relax)
        logger.debug("enumerated %d vertices from %d halfspaces", len(vertices), len(self._hrep_in[0]))
        self.__dict__["frame"] = frame
        return _frozen(vertices)

    @property
    def is_empty(self) -> bool:
        return len(self.vertices) == 0

    @cached_property
    def frame(self) -> AffineFrame:
        """Affine hull. The identity frame for full-dimensional polytopes."""
        if self.is_empty:
            raise EmptySetError("the Empty polytope has no affine hull")
        if "frame" in self.__dict__:
            return self.__dict__["frame"]
        return hull_vertices(self.vertices)[1]

    @property
    def affine_dim(self) -> int:
        """Dimension of the affine hull."""
        return self.frame.dim

    @property
    def is_full_dimensional(self) -> bool:
        return not self.is_empty and self.affine_dim == self.dim

    @cached_property
    def hrep(self) -> tuple[MatrixArray, Vector]:
        """
        Irredundant unit-normal halfspaces `(A, b)` with `P = {x : A x <= b}`.

        Raises:
            DegenerateBodyError: if the polytope is not full-dimensional.
        """
        if not self.is_full_dimensional:
            raise DegenerateBodyError(
                f"H-representation requested for a polytope of affine dimension "
                f"{'-' if self.is_empty else self.affine_dim} in R^{self.dim}"
            )
        if self._hrep_in is None:
            A, b = facets(self.vertices)
        else:
            A, b, _ = normalize_rows(*self._hrep_in)
            A, b = _canonical_hrep(A, b, self.vertices)
        return _frozen(A), _frozen(b)

    @cached_property
    def constraint_system(self) -> tuple[MatrixArray, Vector]:
        """
        Unit-normal halfspaces `(A, b)` of a full-dimensional polytope in any
        dimension. Equals `hrep` for `d <= 3`; above that the given halfspaces
        are used as they are, after a Chebyshev-ball check of full dimension.

        Raises:
            DegenerateBodyError: if the polytope is not full-dimensional.
            UnsupportedDimensionError: for `d > 3` without halfspaces.
        """
        if self.dim <= MAX_EXPLICIT_DIM:
            return self.hrep
        if self._hrep_in is None:
            raise UnsupportedDimensionError(
                f"R^{self.dim} polytopes need an explicit H-representation here"
            )
        A, b, infeasible = normalize_rows(*self._hrep_in)
        _, radius = chebyshev_ball(A, b)
        if infeasible or radius <= TOLERANCES.degeneracy * max(1.0, float(np.max(np.abs(b)))):
            raise DegenerateBodyError(f"the halfspaces do not bound a full-dimensional body in R^{self.dim}")
        return _frozen(A), _frozen(b)

    @property
    def has_explicit_vertices(self) -> bool:
        """Whether vertices are known or can be enumerated."""
        return "vertices" in self.__dict__ or self.dim <= MAX_EXPLICIT_DIM

    @property
    def halfspaces(self) -> list[Halfspace]:
        A, b = self.hrep
        return [Halfspace(a, float(bi)) for a, bi in zip(A, b, strict=True)]

    @cached_property
    def frame_hrep(self) -> tuple[MatrixArray, Vector]:
        """
        H-representation in the local coordinates of `frame`, i.e.
        `P = {frame.origin + y @ frame.basis : A y <= b}`.
        Zero-dimensional polytopes get an empty system.
        """
        if self.is_full_dimensional:
            return self.hrep
        k = self.affine_dim
        if k == 0:
            return np.zeros((0, 0)), np.zeros(0)
        local = self.frame.to_local(self.vertices)
        local_vertices, _ = hull_vertices(local)
        return facets(local_vertices)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        """Index pairs into `vertices` (3D: may include facet diagonals)."""
        if self.is_empty:
            return []
        return edges(self.vertices, self.frame)

    @property
    def centroid(self) -> Vector:
        """Average of the vertices."""
        if self.is_empty:
            raise EmptySetError("the Empty polytope has no centroid")
        return self.vertices.mean(axis=0)

    def iter_vertices(self) -> Iterator[Vector]:
        yield from self.vertices

    def __repr__(self) -> str:
        if self.is_empty:
            return f"Polytope(dim={self.dim}, empty)"
        return (
            f"Polytope(dim={self.dim}, affine_dim={self.affine_dim}, "
            f"n_vertices={len(self.vertices)})"
        )


def _canonical_hrep(
    A: MatrixArray, b: Vector, vertices: PointArray
) -> tuple[MatrixArray, Vector]:
    """
    Keeps one row per facet of `conv(vertices)`: rows that miss the body, touch
    it in a lower-dimensional face, or repeat a kept normal are dropped.
    """
    d = vertices.shape[1]
    tol = 1e-9 * max(1.0, float(np.max(np.abs(vertices))))
    heights = vertices @ A.T
    support = np.max(heights, axis=0)
    kept: list[int] = []
    for i in np.flatnonzero(b - support <= tol):
        face = vertices[support[i] - heights[:, i] <= tol]
        if np.linalg.matrix_rank(face - face[0], tol=tol) < d - 1:
            continue
        if any(np.linalg.norm(A[i] - A[k]) <= 1e-9 for k in kept):
            continue
        kept.append(int(i))
    return A[kept], support[kept]
