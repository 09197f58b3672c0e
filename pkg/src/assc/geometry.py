"""Affine-arrangement predicates and convex-hull point classification.

All set-membership and intersection questions are answered by small LP
feasibility problems; face structure is discovered with per-index
coefficient-maximization LPs over the convex-representation polytope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet

import numpy as np

from .errors import InvalidInputError, PreconditionViolation
from .model import AffineSubspaceModel
from .numerics import (DEFAULT_FEAS_TOL, DEFAULT_RANK_TOL, LpProblem,
                       rank_with_tol, solve_lp, solve_lp_sequence)

__all__ = [
    "PointClass", "affine_hull_dim", "are_affinely_disjoint",
    "is_affinely_independent", "embedded_spans_independent", "classify_point",
    "subspace_intersects_hull", "face_affine_hull_intersects_hull",
    "strict_convex_combination",
]

RELATIVE_INTERIOR = "RelativeInterior"
BOUNDARY_FACE = "BoundaryFace"
EXTREME = "Extreme"

GENERATOR_TOL = 1e-7      # max-coefficient threshold for face membership
DUP_TOL = 1e-10           # coincident-point tolerance


@dataclass(frozen=True)
class PointClass:
    """Position of a sample point relative to its subspace's convex hull."""

    kind: str
    face_generators: FrozenSet[int] = field(default_factory=frozenset)
    face_dim: int = 0
    degenerate: bool = False

    @property
    def is_extreme(self) -> bool:
        return self.kind == EXTREME

    @property
    def is_interior(self) -> bool:
        return self.kind == RELATIVE_INTERIOR


def affine_hull_dim(points: np.ndarray, tol: float = DEFAULT_RANK_TOL) -> int:
    """Dimension of the affine hull of a point set."""
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if points.shape[1] < 1:
        raise InvalidInputError("need at least one point")
    centered = points - points.mean(axis=1, keepdims=True)
    if not centered.any():
        return 0
    return rank_with_tol(centered, tol)


def _pooled_affine_points(subspaces) -> np.ndarray:
    cols = []
    for sub in subspaces:
        cols.append(sub.offset)
        for k in range(sub.dim):
            cols.append(sub.offset + sub.basis[:, k])
    return np.column_stack(cols)


def are_affinely_disjoint(a: AffineSubspaceModel, b: AffineSubspaceModel,
                          tol: float = DEFAULT_FEAS_TOL) -> bool:
    """Empty intersection and trivially-intersecting direction subspaces."""
    if a.ambient_dim != b.ambient_dim:
        raise InvalidInputError("subspaces live in different ambient spaces")
    # A cap A' = empty: least-squares solvability of offset difference
    M = np.column_stack([a.basis, -b.basis]) if a.dim + b.dim else np.zeros(
        (a.ambient_dim, 0))
    rhs = b.offset - a.offset
    if M.shape[1]:
        sol, *_ = np.linalg.lstsq(M, rhs, rcond=None)
        resid = np.linalg.norm(M @ sol - rhs)
    else:
        resid = np.linalg.norm(rhs)
    scale = max(1.0, np.linalg.norm(a.offset), np.linalg.norm(b.offset))
    intersect = resid <= tol * scale
    # T(A) cap T(A') = {0}: stacked bases have full column rank
    directions_trivial = True
    if a.dim + b.dim:
        directions_trivial = rank_with_tol(
            np.column_stack([a.basis, b.basis])) == a.dim + b.dim
    return (not intersect) and directions_trivial


def is_affinely_independent(subspaces, tol: float = DEFAULT_RANK_TOL) -> bool:
    """dim(aff(union)) attains sum(dims) + (n - 1)."""
    if not subspaces:
        raise InvalidInputError("need at least one subspace")
    D = subspaces[0].ambient_dim
    if any(s.ambient_dim != D for s in subspaces):
        raise InvalidInputError("ambient dimensions differ")
    target = sum(s.dim for s in subspaces) + (len(subspaces) - 1)
    return affine_hull_dim(_pooled_affine_points(subspaces), tol) == target


def embedded_spans_independent(subspaces, tol: float = DEFAULT_RANK_TOL) -> bool:
    """Linear independence of the homogeneous-embedded subspace spans."""
    if not subspaces:
        raise InvalidInputError("need at least one subspace")
    D = subspaces[0].ambient_dim
    if any(s.ambient_dim != D for s in subspaces):
        raise InvalidInputError("ambient dimensions differ")
    stacked = np.column_stack([s.embedded_span_basis() for s in subspaces])
    return rank_with_tol(stacked, tol) == sum(s.dim + 1 for s in subspaces)


def _dedupe(points: np.ndarray, scale: float):
    """Indices of one representative per coincident-point group."""
    reps: list[int] = []
    groups: list[list[int]] = []
    for i in range(points.shape[1]):
        for g, r in enumerate(reps):
            if np.linalg.norm(points[:, i] - points[:, r]) <= DUP_TOL * scale:
                groups[g].append(i)
                break
        else:
            reps.append(i)
            groups.append([i])
    return reps, groups


def _convex_rep_problem(targets: np.ndarray, P: np.ndarray, objective=None):
    """LP data for {c >= 0 : P c = target, 1'c = 1}."""
    m = P.shape[1]
    eq = np.vstack([P, np.ones((1, m))])
    rhs = np.concatenate([targets, [1.0]])
    obj = np.zeros(m) if objective is None else objective
    return LpProblem(obj, eq, rhs, np.zeros(m))


def classify_point(j: int, same_subspace_points: np.ndarray,
                   tol: float = DEFAULT_FEAS_TOL) -> PointClass:
    """Classify column j of its subspace's sample matrix.

    Extreme when no convex combination of the other samples reproduces the
    point; otherwise the minimal face is discovered index by index (maximize
    each coefficient over the representation polytope) and the point is
    RelativeInterior exactly when every other sample generates the face.
    """
    pts = np.atleast_2d(np.asarray(same_subspace_points, dtype=np.float64))
    n = pts.shape[1]
    if n < 2:
        raise InvalidInputError("need at least two same-subspace points")
    if not (0 <= j < n):
        raise InvalidInputError(f"column index {j} out of range")
    xj = pts[:, j]
    scale = max(1.0, float(np.abs(pts).max()))

    others = [i for i in range(n) if i != j]
    dup_j = [i for i in others
             if np.linalg.norm(pts[:, i] - xj) <= DUP_TOL * scale]
    if dup_j:
        # coincident sample: zero-dimensional face shared with its twins
        return PointClass(BOUNDARY_FACE, frozenset([j, *dup_j]), 0,
                          degenerate=True)

    P_all = pts[:, others]
    reps, groups = _dedupe(P_all, scale)
    P = P_all[:, reps]
    base = _convex_rep_problem(xj, P)
    feas = solve_lp(base, feas_tol=tol)
    if not feas.is_optimal:
        return PointClass(EXTREME, frozenset([j]), 0)

    m = P.shape[1]
    objectives = [-np.eye(m)[i] for i in range(m)]
    sols = solve_lp_sequence(base, objectives, feas_tol=tol)
    gen_reps = [i for i, s in enumerate(sols)
                if s.is_optimal and -s.objective > GENERATOR_TOL]
    generators = {j}
    for i in gen_reps:
        generators.update(others[k] for k in groups[i])

    if len(gen_reps) == m:
        return PointClass(RELATIVE_INTERIOR, frozenset(range(n)),
                          affine_hull_dim(pts))
    face_pts = pts[:, sorted(generators)]
    return PointClass(BOUNDARY_FACE, frozenset(generators),
                      affine_hull_dim(face_pts))


def subspace_intersects_hull(a: AffineSubspaceModel, other_points: np.ndarray,
                             tol: float = DEFAULT_FEAS_TOL) -> bool:
    """Does the affine subspace meet the convex hull of the given points?"""
    P = np.atleast_2d(np.asarray(other_points, dtype=np.float64))
    if P.shape[0] != a.ambient_dim:
        raise InvalidInputError("ambient dimensions differ")
    m = P.shape[1]
    if m == 0:
        return False
    d = a.dim
    # basis t - P c = -offset ; 1'c = 1 ; c >= 0, t free
    eq = np.vstack([
        np.column_stack([a.basis, -P]),
        np.concatenate([np.zeros(d), np.ones(m)])[None, :],
    ])
    rhs = np.concatenate([-a.offset, [1.0]])
    lower = np.concatenate([np.full(d, -np.inf), np.zeros(m)])
    p = LpProblem(np.zeros(d + m), eq, rhs, lower)
    return solve_lp(p, feas_tol=tol).is_optimal


def face_affine_hull_intersects_hull(face_points: np.ndarray,
                                     non_face_points: np.ndarray,
                                     tol: float = DEFAULT_FEAS_TOL) -> bool:
    """Does aff(face_points) meet conv(non_face_points)?"""
    F = np.atleast_2d(np.asarray(face_points, dtype=np.float64))
    P = np.atleast_2d(np.asarray(non_face_points, dtype=np.float64))
    if F.shape[0] != P.shape[0]:
        raise InvalidInputError("ambient dimensions differ")
    k, m = F.shape[1], P.shape[1]
    if k == 0 or m == 0:
        return False
    eq = np.vstack([
        np.column_stack([F, -P]),
        np.concatenate([np.ones(k), np.zeros(m)])[None, :],
        np.concatenate([np.zeros(k), np.ones(m)])[None, :],
    ])
    rhs = np.concatenate([np.zeros(F.shape[0]), [1.0, 1.0]])
    lower = np.concatenate([np.full(k, -np.inf), np.zeros(m)])
    p = LpProblem(np.zeros(k + m), eq, rhs, lower)
    return solve_lp(p, feas_tol=tol).is_optimal


def strict_convex_combination(x: np.ndarray, points: np.ndarray,
                              tol: float = 1e-8) -> np.ndarray:
    """All-positive convex coefficients for a relative-interior point.

    For every sample y_i the segment through x is extended to its antipode
    inside the hull (an LP), the antipode's convex representation is read off
    the same LP, and the resulting representations are averaged; each term
    contributes positive mass to one coordinate, so the mean is strictly
    positive everywhere.
    """
    x = np.asarray(x, dtype=np.float64).ravel()
    P = np.atleast_2d(np.asarray(points, dtype=np.float64))
    D, m = P.shape
    if x.shape[0] != D:
        raise InvalidInputError("dimension mismatch")
    if m < 1:
        raise InvalidInputError("need at least one point")
    scale = max(1.0, float(np.abs(P).max()), float(np.abs(x).max()))

    c = np.zeros(m)
    for i in range(m):
        g = x - P[:, i]
        if np.linalg.norm(g) <= DUP_TOL * scale:
            raise PreconditionViolation(
                "a sample point coincides with the target; deduplicate first")
        # maximize s subject to x + s g in conv(points)
        eq = np.vstack([
            np.column_stack([P, -g]),
            np.concatenate([np.ones(m), [0.0]])[None, :],
        ])
        rhs = np.concatenate([x, [1.0]])
        obj = np.zeros(m + 1)
        obj[-1] = -1.0
        p = LpProblem(obj, eq, rhs, np.zeros(m + 1))
        sol = solve_lp(p)
        if not sol.is_optimal:
            raise PreconditionViolation(
                "target admits no convex representation; not in the hull")
        s = sol.x[-1]
        if s <= 1e-9:
            raise PreconditionViolation(
                "target is on the hull boundary; no strict combination exists")
        b0 = s / (1.0 + s)          # weight on y_i in x = b0 y_i + (1-b0) x_i
        d = sol.x[:m]
        c += b0 * np.eye(m)[i] + (1.0 - b0) * d
    c /= m

    if c.min() <= 0:
        raise PreconditionViolation("strict positivity failed; point is not "
                                    "in the relative interior")
    if np.linalg.norm(P @ c - x) > tol * scale or abs(c.sum() - 1.0) > tol:
        raise PreconditionViolation("averaged combination failed to "
                                    "reconstruct the target")
    return c
