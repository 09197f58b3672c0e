"""Sparse self-representation solvers.

Each column j of the data is expressed as a sparse (affine) combination of
the remaining columns, either exactly (ADMM on the translated equality-
constrained program, or a split-variable LP oracle) or with a quadratic
data-fit term for noisy data.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import _kernels
from .errors import (InvalidInputError, NoRepresentationError, SolverFailure)
from .model import DataMatrix
from .numerics import (LpProblem, min_norm_on_optimal_face, orthonormal_span,
                       solve_lp)

__all__ = [
    "SolverConfig", "ColumnSolution", "CoefficientMatrix",
    "solve_column_admm", "solve_column_oracle", "compute_dual_point",
    "compute_lambda", "build_coefficient_matrix", "solve_noisy_matrix",
]

SSC = "SSC"
ASSC = "ASSC"
EXACT = "Exact"
NOISY = "Noisy"


@dataclass(frozen=True)
class SolverConfig:
    """Mode (linear vs affine), variant (exact vs noisy) and ADMM schedule."""

    mode: str = ASSC
    variant: str = EXACT
    lam: Optional[float] = None          # data-fit weight, Noisy only
    mu0: float = 10.0
    rho: float = 1.05
    mu_cap: float = 1e8
    max_iters: int = 2000
    primal_tol: float = 1e-7
    dual_tol: float = 1e-7
    seed: int = 0
    noisy_penalty: Optional[float] = None   # None: lam-scaled automatically

    def __post_init__(self):
        if self.mode not in (SSC, ASSC):
            raise InvalidInputError(f"mode must be SSC or ASSC, got {self.mode!r}")
        if self.variant not in (EXACT, NOISY):
            raise InvalidInputError(
                f"variant must be Exact or Noisy, got {self.variant!r}")
        if self.variant == NOISY and (self.lam is None or self.lam <= 0):
            raise InvalidInputError("Noisy variant needs lam > 0")
        if self.rho <= 1:
            raise InvalidInputError("penalty growth rho must exceed 1")
        if min(self.mu0, self.primal_tol, self.dual_tol) <= 0:
            raise InvalidInputError("mu0 and tolerances must be positive")

    @property
    def is_affine(self) -> bool:
        return self.mode == ASSC


@dataclass
class ColumnSolution:
    """Coefficients and diagnostics for one self-representation column."""

    j: int
    c: np.ndarray                      # length N, c[j] == 0
    objective: float
    dual_w: Optional[np.ndarray] = None
    dual_nu: Optional[float] = None
    iterations: int = 0
    converged: bool = True
    residuals: dict = field(default_factory=dict)

    @property
    def n_points(self) -> int:
        return self.c.shape[0]


@dataclass
class CoefficientMatrix:
    """N x N matrix whose j-th column self-represents point j."""

    matrix: np.ndarray
    columns: List[ColumnSolution]
    config: Optional[SolverConfig] = None

    @property
    def n_points(self) -> int:
        return self.matrix.shape[0]

    @property
    def all_converged(self) -> bool:
        return all(col.converged for col in self.columns)


def _embed_column(n, j, c_sub):
    c = np.zeros(n)
    c[np.arange(n) != j] = c_sub
    return c


def _auto_noisy_penalty(X: DataMatrix, lam: float) -> float:
    """Penalty for the fixed-mu noisy ADMM, tied to the data scale.

    Undoes the lambda rule: with lam = alpha / min_j max_i x_i'x_j the
    penalty becomes alpha itself, which keeps the splitting terms and the
    data term on comparable scales regardless of feature units.
    """
    gram = X.points.T @ X.points
    np.fill_diagonal(gram, -np.inf)
    denom = float(gram.max(axis=0).min())
    if denom <= 0:
        return max(lam, 1.0)
    return max(lam * denom, 1e-6)


def solve_column_admm(X: DataMatrix, j: int, cfg: SolverConfig) -> ColumnSolution:
    """ADMM solve for column j under the given configuration.

    The affine problem is translated so the equality constraint becomes
    homogeneous (Y = X_others - x_j 1'), which keeps the c-update system
    penalty-free and lets one factorization serve every iteration.
    """
    n = X.n_points
    if not (0 <= j < n):
        raise InvalidInputError(f"column {j} out of range")
    if n < 2:
        raise InvalidInputError("need at least two points")
    xj = X.column(j)
    others = X.points[:, np.arange(n) != j]
    m = n - 1

    if cfg.variant == EXACT:
        if cfg.is_affine:
            Y = others - xj[:, None]
            G = np.vstack([Y, np.ones((1, m))])
            h = np.zeros(G.shape[0])
            h[-1] = 1.0
        else:
            G = others
            h = xj
        Minv = np.linalg.inv(np.eye(m) + G.T @ G)
        c_sub, y, w, iters, conv, r_split, r_lin, r_dual = _kernels.admm_exact(
            Minv, G, h, cfg.mu0, cfg.rho, cfg.mu_cap, cfg.max_iters,
            cfg.primal_tol, cfg.dual_tol)
        obj = float(np.abs(c_sub).sum())
        if cfg.is_affine:
            dual_w, dual_nu = w[:-1].copy(), float(w[-1])
        else:
            dual_w, dual_nu = w.copy(), None
        residuals = {"split": float(r_split), "linear": float(r_lin),
                     "dual": float(r_dual)}
    else:
        lam = float(cfg.lam)
        if cfg.is_affine:
            Gd = others - xj[:, None]
            g = np.zeros(X.ambient_dim)
        else:
            Gd = others
            g = xj
        mu = cfg.noisy_penalty if cfg.noisy_penalty is not None else \
            _auto_noisy_penalty(X, lam)
        F = lam * (Gd.T @ Gd) + mu * np.eye(m)
        if cfg.is_affine:
            F += mu * np.ones((m, m))
        Finv = np.linalg.inv(F)
        lin0 = lam * (Gd.T @ g)
        c_sub, y, nu, iters, conv, r_split, r_sum, r_dual = _kernels.admm_noisy(
            Finv, lin0, cfg.is_affine, mu, cfg.max_iters,
            cfg.primal_tol, cfg.dual_tol)
        obj = float(np.abs(c_sub).sum() + 0.5 * lam *
                    np.linalg.norm(g - Gd @ c_sub) ** 2)
        dual_w = None
        dual_nu = float(nu) if cfg.is_affine else None
        residuals = {"split": float(r_split), "sum": float(r_sum),
                     "dual": float(r_dual)}

    return ColumnSolution(j, _embed_column(n, j, c_sub), obj, dual_w, dual_nu,
                          iters, bool(conv), residuals)


def solve_column_oracle(X: DataMatrix, j: int, mode: str = ASSC,
                        nonnegative: bool = False,
                        feas_tol: float = 1e-9,
                        opt_tol: float = 1e-9) -> ColumnSolution:
    """Globally optimal l1 column solve via a split-variable LP.

    With nonnegative=True the combination is additionally constrained to
    c >= 0 (used to certify that an optimum is attained by a nonnegative
    solution).  Raises NoRepresentationError when infeasible.
    """
    if mode not in (SSC, ASSC):
        raise InvalidInputError(f"mode must be SSC or ASSC, got {mode!r}")
    n = X.n_points
    if not (0 <= j < n):
        raise InvalidInputError(f"column {j} out of range")
    xj = X.column(j)
    A = X.points[:, np.arange(n) != j]
    m = n - 1
    if mode == SSC:
        eqA, rhs = A, xj
    else:
        eqA = np.vstack([A, np.ones((1, m))])
        rhs = np.concatenate([xj, [1.0]])
    if nonnegative:
        eq = eqA
        obj = np.ones(m)
        lower = np.zeros(m)
    else:
        eq = np.hstack([eqA, -eqA])
        obj = np.ones(2 * m)
        lower = np.zeros(2 * m)
    sol = solve_lp(LpProblem(obj, eq, rhs, lower), feas_tol, opt_tol)
    if sol.status == "Infeasible":
        raise NoRepresentationError(
            f"point {j} has no {'nonnegative ' if nonnegative else ''}"
            f"{mode} representation by the remaining points")
    if not sol.is_optimal:
        raise SolverFailure(f"oracle LP ended with status {sol.status}")
    c_sub = sol.x[:m] if nonnegative else sol.x[:m] - sol.x[m:]
    return ColumnSolution(j, _embed_column(n, j, c_sub), float(sol.objective),
                          iterations=sol.pivots)


def compute_dual_point(subspace_points: np.ndarray, x: np.ndarray,
                       tol: float = 1e-8) -> np.ndarray:
    """Minimal-norm optimizer of the within-span dual program.

    Projects onto an orthonormal basis U of span(subspace_points), solves
    max w'(U'x) s.t. ||(U'P)'w||_inf <= 1, picks the least-Euclidean-norm
    point of the optimal face, and maps back through U.
    """
    P = np.atleast_2d(np.asarray(subspace_points, dtype=np.float64))
    x = np.asarray(x, dtype=np.float64).ravel()
    if P.shape[0] != x.shape[0]:
        raise InvalidInputError("dimension mismatch")
    if P.shape[1] == 0:
        raise InvalidInputError("need at least one subspace point")
    U = orthonormal_span(P)
    r = U.shape[1]
    if r == 0:
        raise InvalidInputError("subspace points span only the origin")
    if np.linalg.norm(x - U @ (U.T @ x)) > tol * max(1.0, np.linalg.norm(x)):
        raise InvalidInputError("point lies outside the span of the "
                                "subspace points")
    a = U.T @ x
    A = U.T @ P
    m = A.shape[1]
    # max a'w s.t. A'w + s+ = 1, -A'w + s- = 1, slacks >= 0
    eq = np.block([[A.T, np.eye(m), np.zeros((m, m))],
                   [-A.T, np.zeros((m, m)), np.eye(m)]])
    rhs = np.ones(2 * m)
    obj = np.concatenate([-a, np.zeros(2 * m)])
    lower = np.concatenate([np.full(r, -np.inf), np.zeros(2 * m)])
    p = LpProblem(obj, eq, rhs, lower)
    sol = solve_lp(p)
    if not sol.is_optimal:
        raise SolverFailure(f"dual LP ended with status {sol.status}")
    w = min_norm_on_optimal_face(p, sol, norm_subset=np.arange(r))[:r]
    return U @ w


def compute_lambda(X: DataMatrix, alpha: float) -> float:
    """Data-driven regularization weight alpha / min_j max_{i != j} x_i'x_j."""
    if alpha <= 0:
        raise InvalidInputError("alpha must be positive (lambda must be > 0)")
    if X.n_points < 2:
        raise InvalidInputError("need at least two points")
    gram = X.points.T @ X.points
    np.fill_diagonal(gram, -np.inf)
    denom = float(gram.max(axis=0).min())
    if denom <= 0:
        raise InvalidInputError(
            f"degenerate dataset: min-max inner product {denom:.3e} <= 0")
    return alpha / denom


def solve_noisy_matrix(X: DataMatrix, cfg: SolverConfig) -> CoefficientMatrix:
    """Noisy-variant ADMM in matrix form with in-iteration diagonal zeroing.

    All columns are iterated jointly on the shared factorization, the
    diagonal is projected to zero inside every iteration, and the loop
    stops on the max-norm split/affinity residuals only.  This mirrors the
    reference protocol of the noisy self-expressiveness lineage; its
    early-stopped iterates are denser than the per-column optima, which is
    what the real-data benchmark numbers reflect (see docs/noisy_admm.md).
    """
    if cfg.variant != NOISY:
        raise InvalidInputError("matrix method applies to the Noisy variant")
    n = X.n_points
    if n < 2:
        raise InvalidInputError("need at least two points")
    Y = X.points
    lam = float(cfg.lam)
    mu = cfg.noisy_penalty if cfg.noisy_penalty is not None else \
        _auto_noisy_penalty(X, lam)
    YtY = Y.T @ Y
    F = lam * YtY + mu * np.eye(n)
    if cfg.is_affine:
        F = F + mu * np.ones((n, n))
    Finv = np.linalg.inv(F)
    ones = np.ones(n)
    C = np.zeros((n, n))
    Lam2 = np.zeros((n, n))
    lam3 = np.zeros(n)
    err1 = err3 = np.inf
    converged = False
    it = 0
    for it in range(1, cfg.max_iters + 1):
        rhs = lam * YtY + mu * (C - Lam2 / mu)
        if cfg.is_affine:
            rhs = rhs + mu * np.outer(ones, ones - lam3 / mu)
        Z = Finv @ rhs
        np.fill_diagonal(Z, 0.0)
        V = Z + Lam2 / mu
        C = np.maximum(0.0, np.abs(V) - 1.0 / mu) * np.sign(V)
        np.fill_diagonal(C, 0.0)
        Lam2 = Lam2 + mu * (Z - C)
        err1 = float(np.abs(Z - C).max())
        if cfg.is_affine:
            s = ones @ Z - 1.0
            lam3 = lam3 + mu * s
            err3 = float(np.abs(s).max())
        else:
            err3 = 0.0
        if err1 <= cfg.primal_tol and err3 <= cfg.primal_tol:
            converged = True
            break
    cols = []
    for j in range(n):
        resid = Y[:, j] - Y @ C[:, j]
        obj = float(np.abs(C[:, j]).sum() + 0.5 * lam *
                    np.linalg.norm(resid) ** 2)
        cols.append(ColumnSolution(
            j, C[:, j].copy(), obj,
            dual_nu=float(lam3[j]) if cfg.is_affine else None,
            iterations=it, converged=converged,
            residuals={"split": err1, "sum": err3}))
    return CoefficientMatrix(C, cols, cfg)


def _worker_count() -> int:
    raw = os.environ.get("ASSC_MAX_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_coefficient_matrix(X: DataMatrix, cfg: SolverConfig,
                             method: str = "column") -> CoefficientMatrix:
    """Assemble the N x N self-representation matrix.

    method "column" solves each column's program independently to the
    configured tolerances (the default everywhere); "matrix" runs the
    joint matrix-form noisy protocol (see solve_noisy_matrix).
    """
    if method == "matrix":
        return solve_noisy_matrix(X, cfg)
    if method != "column":
        raise InvalidInputError(f"unknown method {method!r}")
    n = X.n_points
    if n < 2:
        raise InvalidInputError("need at least two points")
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cols = list(pool.map(lambda j: solve_column_admm(X, j, cfg),
                                 range(n)))
    else:
        cols = [solve_column_admm(X, j, cfg) for j in range(n)]
    C = np.column_stack([col.c for col in cols])
    return CoefficientMatrix(C, cols, cfg)
