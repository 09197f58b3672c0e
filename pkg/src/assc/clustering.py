"""Affinity construction, spectral clustering, and error scoring."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import linear_sum_assignment
from sklearn.cluster import KMeans

from .errors import InvalidInputError
from .model import normalize_labels
from .numerics import symmetric_eig

__all__ = ["AffinityMatrix", "build_affinity", "spectral_cluster",
           "clustering_error"]

DEGREE_EPS = 1e-12


@dataclass(frozen=True)
class AffinityMatrix:
    """Symmetric nonnegative N x N affinity with a zero diagonal."""

    matrix: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.matrix, dtype=np.float64)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise InvalidInputError("affinity must be square")
        if not np.array_equal(A, A.T):
            raise InvalidInputError("affinity must be exactly symmetric")
        if A.size and (A.min() < 0 or np.abs(np.diag(A)).max(initial=0) > 0):
            raise InvalidInputError("affinity must be nonnegative with a "
                                    "zero diagonal")
        object.__setattr__(self, "matrix", A)

    @property
    def n_points(self) -> int:
        return self.matrix.shape[0]


def build_affinity(C) -> AffinityMatrix:
    """A = (|C| + |C'|) / 2 from a coefficient matrix with zero diagonal."""
    M = C.matrix if hasattr(C, "matrix") else np.asarray(C, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidInputError("coefficient matrix must be square")
    dust = 1e-12 * max(1.0, float(np.abs(M).max(initial=0.0)))
    if M.size and np.abs(np.diag(M)).max(initial=0.0) > dust:
        raise InvalidInputError("coefficient matrix has nonzero diagonal "
                                "entries; columns must not self-represent")
    A = 0.5 * (np.abs(M) + np.abs(M.T))
    A = 0.5 * (A + A.T)            # force exact symmetry bit-for-bit
    np.fill_diagonal(A, 0.0)
    return AffinityMatrix(A)


@dataclass
class SpectralDetails:
    eigenvalues: np.ndarray = field(default_factory=lambda: np.empty(0))
    isolated: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=int))
    inertia: float = 0.0


def spectral_cluster(A: AffinityMatrix, n: int, seed: int = 0,
                     return_details: bool = False):
    """Normalized spectral clustering into n groups (1-based labels).

    Symmetric normalized Laplacian, row-normalized bottom-n eigenvector
    embedding, then k-means++ with 20 restarts; deterministic under seed.
    Zero-degree vertices get an epsilon-regularized degree and are flagged
    in the details.
    """
    if not isinstance(A, AffinityMatrix):
        A = AffinityMatrix(np.asarray(A, dtype=np.float64))
    N = A.n_points
    if n < 1 or n > N:
        raise InvalidInputError(f"cluster count {n} out of range 1..{N}")
    if n == 1:
        labels = np.ones(N, dtype=np.int64)
        return (labels, SpectralDetails()) if return_details else labels

    deg = A.matrix.sum(axis=1)
    isolated = np.nonzero(deg <= 0)[0]
    deg = np.maximum(deg, DEGREE_EPS)
    dinv = 1.0 / np.sqrt(deg)
    L = np.eye(N) - (dinv[:, None] * A.matrix) * dinv[None, :]
    vals, vecs = symmetric_eig(L)
    emb = vecs[:, :n]
    norms = np.linalg.norm(emb, axis=1, keepdims=True)
    emb = emb / np.where(norms > 0, norms, 1.0)
    km = KMeans(n_clusters=n, init="k-means++", n_init=20, max_iter=300,
                random_state=int(seed))
    raw = km.fit_predict(emb)
    labels = normalize_labels(raw)
    if return_details:
        return labels, SpectralDetails(vals[:n], isolated, float(km.inertia_))
    return labels


def clustering_error(pred, truth) -> float:
    """Misclassification percentage under the best label matching.

    The optimal assignment between predicted and true clusters is computed
    exactly (Hungarian method on the contingency table).
    """
    pred = np.asarray(pred).ravel()
    truth = np.asarray(truth).ravel()
    if pred.shape != truth.shape:
        raise InvalidInputError("label vectors must have the same length")
    if pred.size == 0:
        raise InvalidInputError("label vectors are empty")
    p = normalize_labels(pred)
    t = normalize_labels(truth)
    k = max(p.max(), t.max())
    cont = np.zeros((k, k), dtype=np.int64)
    for a, b in zip(p, t):
        cont[a - 1, b - 1] += 1
    rows, cols = linear_sum_assignment(-cont)
    correct = cont[rows, cols].sum()
    return 100.0 * (1.0 - correct / pred.size)
