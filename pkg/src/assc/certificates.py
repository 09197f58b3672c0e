"""Executable correctness conditions and per-dataset certificate reports.

The geometric verdicts (independence, hull separation, face structure) are
pure functions of the arrangement; the solver-dependent flags (preserving,
dense, nonnegative) refer to whichever coefficient matrix is supplied.
Theory cross-checks always consult the exact LP oracle so that solver
tolerance can never be mistaken for a theory failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from .clustering import AffinityMatrix, build_affinity, clustering_error
from .errors import InvalidInputError
from .geometry import (PointClass, affine_hull_dim, classify_point,
                       embedded_spans_independent,
                       face_affine_hull_intersects_hull,
                       is_affinely_independent, subspace_intersects_hull)
from .model import Arrangement, DataMatrix, embed_matrix, fit_affine_subspace
from .numerics import lp_feasible, rank_with_tol
from .solvers import ColumnSolution, CoefficientMatrix, compute_dual_point, \
    solve_column_oracle

__all__ = [
    "Theorem4Result", "GuaranteeSet", "PointReport", "ArrangementReport",
    "CertificateReport", "is_subspace_preserving", "is_subspace_dense",
    "subspace_incoherence", "check_theorem4", "evaluate_guarantees",
    "cluster_connectivity", "certify", "support_tolerance",
]

SUPPORT_REL_TOL = 1e-5     # |c_i| > tol * ||c||_inf counts as support
POSITIVE_NAMES = ("Thm3", "Thm5", "Thm6", "Thm7", "Cor2")
NEGATIVE_NAMES = ("Thm9", "Cor4")


def support_tolerance(c: np.ndarray) -> float:
    """Relative threshold separating genuine support from numerical dust."""
    return SUPPORT_REL_TOL * float(np.abs(c).max(initial=0.0))


def is_subspace_preserving(c: np.ndarray, labels: np.ndarray, j: int,
                           tol: float) -> bool:
    """True when no out-of-cluster coefficient exceeds tol."""
    if labels is None:
        raise InvalidInputError("labels are required")
    c = np.asarray(c, dtype=np.float64)
    labels = np.asarray(labels)
    mask = labels != labels[j]
    return bool(np.all(np.abs(c[mask]) <= tol))


def is_subspace_dense(c: np.ndarray, labels: np.ndarray, j: int,
                      tol: float) -> bool:
    """Subspace-preserving with every same-cluster coefficient active."""
    if not is_subspace_preserving(c, labels, j, tol):
        return False
    c = np.asarray(c, dtype=np.float64)
    labels = np.asarray(labels)
    same = (labels == labels[j]) & (np.arange(c.shape[0]) != j)
    return bool(np.all(np.abs(c[same]) > tol))


def subspace_incoherence(dual_point: np.ndarray, other_clusters) -> float:
    """Worst normalized correlation between the dual direction and the
    points of every other cluster."""
    v = np.asarray(dual_point, dtype=np.float64).ravel()
    nv = np.linalg.norm(v)
    if nv <= 0:
        raise InvalidInputError("dual point must be nonzero")
    vhat = v / nv
    worst = 0.0
    for Xk in other_clusters:
        Xk = np.atleast_2d(np.asarray(Xk, dtype=np.float64))
        if Xk.shape[1]:
            worst = max(worst, float(np.abs(Xk.T @ vhat).max()))
    return worst


@dataclass(frozen=True)
class Theorem4Result:
    mu_tilde: float
    inv_dual_norm: float
    holds: bool


def check_theorem4(X: DataMatrix, j: int) -> Theorem4Result:
    """Incoherence-vs-dual-norm condition evaluated on the embedded data."""
    if X.labels is None:
        raise InvalidInputError("labels are required")
    ell = int(X.labels[j])
    Xt = embed_matrix(X)
    same = [i for i in X.cluster(ell) if i != j]
    if not same:
        raise InvalidInputError("no same-cluster companions for the point")
    v = compute_dual_point(Xt.points[:, same], Xt.points[:, j])
    others = [Xt.points[:, Xt.cluster(k)]
              for k in range(1, X.n_clusters + 1) if k != ell]
    mu = subspace_incoherence(v, others)
    inv_norm = 1.0 / float(np.linalg.norm(v))
    return Theorem4Result(mu, inv_norm, bool(mu < inv_norm))


@dataclass(frozen=True)
class GuaranteeSet:
    """Which recovery statements apply to one point.

    thm3/thm5 hold irrespective of the point's hull position; thm6 covers
    relative-interior points, thm7/cor2 boundary points.  thm9/cor4 are
    negative certificates: they predict a non-preserving optimum.
    """

    thm3: bool = False
    thm5: bool = False
    thm6: bool = False
    thm7: bool = False
    cor2: bool = False
    thm9: bool = False
    cor4: bool = False

    def positive(self) -> List[str]:
        flags = (self.thm3, self.thm5, self.thm6, self.thm7, self.cor2)
        return [n for n, f in zip(POSITIVE_NAMES, flags) if f]

    def negative(self) -> List[str]:
        return [n for n, f in zip(NEGATIVE_NAMES, (self.thm9, self.cor4)) if f]

    @property
    def any_positive(self) -> bool:
        return bool(self.positive())

    @property
    def any_negative(self) -> bool:
        return bool(self.negative())


def _cluster_classes(arr: Arrangement) -> List[PointClass]:
    """classify_point per column, with generators in global column indices."""
    X = arr.data
    out: List[Optional[PointClass]] = [None] * X.n_points
    for ell in range(1, X.n_clusters + 1):
        idx = X.cluster(ell)
        pts = X.points[:, idx]
        for pos, j in enumerate(idx):
            pc = classify_point(pos, pts)
            gens = frozenset(int(idx[k]) for k in pc.face_generators)
            out[j] = PointClass(pc.kind, gens, pc.face_dim, pc.degenerate)
    return out


def evaluate_guarantees(arr: Arrangement,
                        classes: Optional[List[PointClass]] = None
                        ) -> List[GuaranteeSet]:
    """Evaluate every applicable positive/negative statement per point."""
    X = arr.data
    if classes is None:
        classes = _cluster_classes(arr)
    aff_indep = is_affinely_independent(arr.subspaces)
    emb_indep = embedded_spans_independent(arr.subspaces)
    n_cl = X.n_clusters
    separated = {}
    for ell in range(1, n_cl + 1):
        others = X.points[:, X.labels != ell]
        separated[ell] = not subspace_intersects_hull(
            arr.subspaces[ell - 1], others) if others.size else True

    out = []
    all_idx = np.arange(X.n_points)
    for j in range(X.n_points):
        ell = int(X.labels[j])
        pc = classes[j]
        same_others = X.points[:, (X.labels == ell) & (all_idx != j)]
        d_ell = arr.subspaces[ell - 1].dim
        thm5 = bool(aff_indep and same_others.shape[1]
                    and affine_hull_dim(same_others) == d_ell)
        emb_same = np.vstack([same_others, np.ones(same_others.shape[1])])
        thm3 = bool(emb_indep and same_others.shape[1]
                    and rank_with_tol(emb_same) == d_ell + 1)
        thm6 = bool(pc.is_interior and separated[ell])
        boundary = pc.kind == "BoundaryFace" and not pc.degenerate
        thm7 = bool(boundary and separated[ell])
        cor2 = False
        if boundary:
            face_idx = sorted(pc.face_generators)
            non_face = [i for i in range(X.n_points) if i not in pc.face_generators]
            cor2 = not face_affine_hull_intersects_hull(
                X.points[:, face_idx], X.points[:, non_face]) \
                if non_face else True
        neg = False
        if pc.is_extreme and X.n_points > 1:
            others = X.points[:, all_idx != j]
            eq = np.vstack([others, np.ones((1, others.shape[1]))])
            rhs = np.concatenate([X.column(j), [1.0]])
            neg = lp_feasible(eq, rhs, np.zeros(others.shape[1]))
        out.append(GuaranteeSet(thm3, thm5, thm6, thm7, cor2, neg, neg))
    return out


def cluster_connectivity(A, labels, tol: float = 1e-8) -> Dict[int, bool]:
    """Connectedness of each cluster's affinity subgraph (BFS per cluster)."""
    M = A.matrix if isinstance(A, AffinityMatrix) else np.asarray(A)
    labels = np.asarray(labels)
    result: Dict[int, bool] = {}
    for ell in np.unique(labels):
        idx = np.nonzero(labels == ell)[0]
        if idx.size <= 1:
            result[int(ell)] = True
            continue
        sub = M[np.ix_(idx, idx)] > tol
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                for v in np.nonzero(sub[u])[0]:
                    if v not in seen:
                        seen.add(int(v))
                        nxt.append(int(v))
            frontier = nxt
        result[int(ell)] = len(seen) == idx.size
    return result


@dataclass
class PointReport:
    j: int
    label: Optional[int]
    point_class: Optional[PointClass]
    subspace_preserving: Optional[bool]
    subspace_dense: Optional[bool]
    nonnegative: bool
    objective: float
    face_preserving: Optional[bool] = None
    theorem4: Optional[Theorem4Result] = None
    guarantees: Optional[GuaranteeSet] = None
    oracle_preserving: Optional[bool] = None
    theory_violation: bool = False
    converged: Optional[bool] = None


@dataclass
class ArrangementReport:
    affinely_independent: bool
    embedded_independent: bool
    subspace_hull_separated: Dict[int, bool]


@dataclass
class CertificateReport:
    per_point: List[PointReport]
    arrangement: Optional[ArrangementReport]
    connectivity: Optional[Dict[int, bool]]
    correct_clustering: Optional[bool]
    clustering_error: Optional[float]
    labeled: bool

    @property
    def any_theory_violation(self) -> bool:
        return any(p.theory_violation for p in self.per_point)

    def to_dict(self) -> dict:
        def pc_dict(pc):
            if pc is None:
                return None
            return {"kind": pc.kind, "face_dim": pc.face_dim,
                    "degenerate": pc.degenerate,
                    "face_generators": sorted(pc.face_generators)}

        return {
            "labeled": self.labeled,
            "per_point": [{
                "j": p.j, "label": p.label,
                "class": pc_dict(p.point_class),
                "subspace_preserving": p.subspace_preserving,
                "subspace_dense": p.subspace_dense,
                "nonnegative": p.nonnegative,
                "objective": p.objective,
                "face_preserving": p.face_preserving,
                "theorem4": None if p.theorem4 is None else {
                    "mu_tilde": p.theorem4.mu_tilde,
                    "inv_dual_norm": p.theorem4.inv_dual_norm,
                    "holds": p.theorem4.holds},
                "guarantees": None if p.guarantees is None else {
                    "positive": p.guarantees.positive(),
                    "negative": p.guarantees.negative()},
                "oracle_preserving": p.oracle_preserving,
                "theory_violation": p.theory_violation,
                "converged": p.converged,
            } for p in self.per_point],
            "arrangement": None if self.arrangement is None else {
                "affinely_independent": self.arrangement.affinely_independent,
                "embedded_independent": self.arrangement.embedded_independent,
                "subspace_hull_separated": {
                    str(k): v for k, v in
                    self.arrangement.subspace_hull_separated.items()},
            },
            "connectivity": None if self.connectivity is None else {
                str(k): v for k, v in self.connectivity.items()},
            "correct_clustering": self.correct_clustering,
            "clustering_error": self.clustering_error,
        }


def _face_preserving(X: DataMatrix, j: int, pc: PointClass, c: np.ndarray,
                     tol: float) -> Optional[bool]:
    if pc.kind != "BoundaryFace" or pc.degenerate:
        return None
    face = fit_affine_subspace(X.points[:, sorted(pc.face_generators)])
    scale = max(1.0, float(np.abs(X.points).max()))
    on_face = np.array([face.distance(X.column(i)) <= 1e-8 * scale
                        for i in range(X.n_points)])
    off = ~on_face
    off[j] = False
    return bool(np.all(np.abs(c[off]) <= tol))


def certify(data, C: CoefficientMatrix,
            predicted_labels=None, check_oracle: bool = True
            ) -> CertificateReport:
    """Full certificate report for a dataset and its coefficient matrix.

    Accepts an Arrangement (labeled; produces geometry verdicts, guarantees
    and the oracle cross-check) or a bare unlabeled DataMatrix (solver
    statistics only).  Any point whose positive guarantee holds while its
    exact-oracle solution is not subspace-preserving is flagged as a theory
    violation.
    """
    arr = data if isinstance(data, Arrangement) else None
    X = arr.data if arr is not None else data
    if not isinstance(X, DataMatrix):
        raise InvalidInputError("expected an Arrangement or DataMatrix")
    M = C.matrix
    if M.shape != (X.n_points, X.n_points):
        raise InvalidInputError("coefficient matrix does not match dataset")
    cols: List[Optional[ColumnSolution]] = list(C.columns) if C.columns else \
        [None] * X.n_points
    affinity = build_affinity(C)

    labeled = arr is not None and X.labels is not None
    per_point: List[PointReport] = []
    err = None
    if predicted_labels is not None and X.labels is not None:
        err = clustering_error(predicted_labels, X.labels)

    if not labeled:
        for j in range(X.n_points):
            c = M[:, j]
            tol = support_tolerance(c)
            col = cols[j]
            per_point.append(PointReport(
                j, None, None, None, None,
                bool(c.min(initial=0.0) >= -tol),
                float(np.abs(c).sum()) if col is None else col.objective,
                converged=None if col is None else col.converged))
        return CertificateReport(per_point, None, None, None, err, False)

    classes = _cluster_classes(arr)
    guarantees = evaluate_guarantees(arr, classes)
    seps = {}
    for ell in range(1, X.n_clusters + 1):
        others = X.points[:, X.labels != ell]
        seps[ell] = (not subspace_intersects_hull(arr.subspaces[ell - 1], others)
                     if others.size else True)
    arr_report = ArrangementReport(
        is_affinely_independent(arr.subspaces),
        embedded_spans_independent(arr.subspaces), seps)

    for j in range(X.n_points):
        c = M[:, j]
        tol = support_tolerance(c)
        pres = is_subspace_preserving(c, X.labels, j, tol)
        dense = is_subspace_dense(c, X.labels, j, tol)
        nonneg = bool(c.min(initial=0.0) >= -tol)
        try:
            t4 = check_theorem4(X, j) if X.n_clusters >= 2 else None
        except InvalidInputError:
            t4 = None
        oracle_pres = None
        violation = False
        if check_oracle and guarantees[j].any_positive:
            oc = solve_column_oracle(X, j, "ASSC")
            oracle_pres = is_subspace_preserving(
                oc.c, X.labels, j, support_tolerance(oc.c))
            violation = not oracle_pres
        col = cols[j]
        per_point.append(PointReport(
            j, int(X.labels[j]), classes[j], pres, dense, nonneg,
            float(np.abs(c).sum()) if col is None else col.objective,
            _face_preserving(X, j, classes[j], c, tol), t4, guarantees[j],
            oracle_pres, violation,
            None if col is None else col.converged))

    connectivity = cluster_connectivity(affinity, X.labels)
    all_pres = all(p.subspace_preserving for p in per_point)
    dense_per_cluster = {ell: False for ell in range(1, X.n_clusters + 1)}
    for p in per_point:
        if p.subspace_dense:
            dense_per_cluster[p.label] = True
    correct = bool(all_pres and all(dense_per_cluster.values()))
    return CertificateReport(per_point, arr_report, connectivity, correct,
                             err, True)
