"""Core data model: point sets, labels, affine subspaces, embedding."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidInputError
from .numerics import DEFAULT_RANK_TOL

__all__ = [
    "DataMatrix", "AffineSubspaceModel", "Arrangement",
    "homogeneous_embed", "embed_matrix", "fit_affine_subspace",
    "normalize_labels",
]


def normalize_labels(labels) -> np.ndarray:
    """Map an arbitrary label alphabet to dense 1-based integer ids."""
    labels = np.asarray(labels)
    _, inv = np.unique(labels, return_inverse=True)
    return (inv + 1).astype(np.int64)


@dataclass(frozen=True)
class DataMatrix:
    """D x N column-major point set with optional 1-based cluster labels."""

    points: np.ndarray
    labels: Optional[np.ndarray] = None

    def __post_init__(self):
        pts = np.atleast_2d(np.asarray(self.points, dtype=np.float64))
        object.__setattr__(self, "points", pts)
        if not np.all(np.isfinite(pts)):
            raise InvalidInputError("data matrix entries must be finite")
        if self.labels is not None:
            lab = np.asarray(self.labels, dtype=np.int64)
            if lab.shape != (pts.shape[1],):
                raise InvalidInputError("labels must have one entry per column")
            uniq = np.unique(lab)
            if uniq.size and (uniq[0] < 1 or not np.array_equal(
                    uniq, np.arange(1, uniq.size + 1))):
                raise InvalidInputError(
                    "labels must be dense 1-based ids; use normalize_labels")
            object.__setattr__(self, "labels", lab)

    @property
    def ambient_dim(self) -> int:
        return self.points.shape[0]

    @property
    def n_points(self) -> int:
        return self.points.shape[1]

    @property
    def n_clusters(self) -> int:
        if self.labels is None:
            raise InvalidInputError("data matrix has no labels")
        return int(self.labels.max(initial=0))

    def cluster(self, ell: int) -> np.ndarray:
        """Column indices belonging to cluster ell (1-based)."""
        if self.labels is None:
            raise InvalidInputError("data matrix has no labels")
        return np.nonzero(self.labels == ell)[0]

    def column(self, j: int) -> np.ndarray:
        return self.points[:, j]


@dataclass(frozen=True)
class AffineSubspaceModel:
    """Affine subspace x0 + span(basis) with an orthonormal D x d basis."""

    offset: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        off = np.asarray(self.offset, dtype=np.float64).ravel()
        B = np.asarray(self.basis, dtype=np.float64)
        if B.ndim != 2:
            B = B.reshape(off.shape[0], -1)
        object.__setattr__(self, "offset", off)
        object.__setattr__(self, "basis", B)
        if B.shape[0] != off.shape[0]:
            raise InvalidInputError("offset and basis ambient dims differ")
        # d == D is tolerated: a full-dimensional hull occurs in the
        # single-cluster triangle example, where A is the whole plane
        if B.shape[1] > off.shape[0]:
            raise InvalidInputError("subspace dim exceeds ambient dim")
        if B.shape[1]:
            gram = B.T @ B
            if np.abs(gram - np.eye(B.shape[1])).max() > 1e-10:
                raise InvalidInputError("basis columns must be orthonormal")

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def ambient_dim(self) -> int:
        return self.offset.shape[0]

    def project(self, x: np.ndarray) -> np.ndarray:
        """Orthogonal projection of x onto the subspace."""
        d = np.asarray(x, dtype=np.float64) - self.offset
        return self.offset + self.basis @ (self.basis.T @ d)

    def distance(self, x: np.ndarray) -> float:
        return float(np.linalg.norm(np.asarray(x) - self.project(x)))

    def embedded_span_basis(self) -> np.ndarray:
        """(D+1) x (d+1) basis of the linear span of the embedded subspace."""
        top = np.column_stack([self.basis, self.offset])
        bottom = np.zeros(self.dim + 1)
        bottom[-1] = 1.0
        return np.vstack([top, bottom])


@dataclass(frozen=True)
class Arrangement:
    """A labeled dataset together with one subspace model per cluster."""

    subspaces: list
    data: DataMatrix
    fit_tol: float = 1e-6

    def __post_init__(self):
        if self.data.labels is None:
            raise InvalidInputError("an arrangement needs labeled data")
        if len(self.subspaces) != self.data.n_clusters:
            raise InvalidInputError("need one subspace model per cluster")
        scale = max(1.0, float(np.abs(self.data.points).max(initial=0.0)))
        for ell, sub in enumerate(self.subspaces, start=1):
            for j in self.data.cluster(ell):
                if sub.distance(self.data.column(j)) > self.fit_tol * scale:
                    raise InvalidInputError(
                        f"point {j} is not on its labeled subspace {ell}")

    @property
    def n_subspaces(self) -> int:
        return len(self.subspaces)


def homogeneous_embed(x: np.ndarray) -> np.ndarray:
    """Append a trailing 1, mapping R^D into R^(D+1)."""
    x = np.asarray(x, dtype=np.float64).ravel()
    return np.concatenate([x, [1.0]])


def embed_matrix(X: DataMatrix) -> DataMatrix:
    """Homogeneous embedding of every column; labels carry over."""
    pts = np.vstack([X.points, np.ones(X.n_points)])
    return DataMatrix(pts, X.labels)


def fit_affine_subspace(points: np.ndarray,
                        tol: float = DEFAULT_RANK_TOL) -> AffineSubspaceModel:
    """Fit the affine hull of a point set: mean offset + thresholded SVD basis."""
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if points.shape[1] < 1:
        raise InvalidInputError("need at least one point")
    if not np.all(np.isfinite(points)):
        raise InvalidInputError("points must be finite")
    offset = points.mean(axis=1)
    centered = points - offset[:, None]
    U, s, _ = np.linalg.svd(centered, full_matrices=False)
    if s.size and s[0] > 0:
        r = int(np.count_nonzero(s > tol * s[0]))
    else:
        r = 0
    return AffineSubspaceModel(offset, U[:, :r])
