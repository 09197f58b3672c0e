"""Dense linear-algebra and convex-programming kernels.

Everything here is a pure function of its inputs.  The LP solver is an
exact oracle for the rest of the package: small dense problems, solved by a
two-phase revised simplex (compiled kernel when available) with Bland's
rule as the anti-cycling fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .errors import InternalError, InvalidInputError, SolverFailure

DEFAULT_FEAS_TOL = 1e-8
DEFAULT_OPT_TOL = 1e-8
DEFAULT_RANK_TOL = 1e-9


@dataclass(frozen=True)
class LpProblem:
    """min objective'x  s.t.  eq_lhs x = eq_rhs,  x >= lower (-inf allowed)."""

    objective: np.ndarray
    eq_lhs: np.ndarray
    eq_rhs: np.ndarray
    lower: np.ndarray

    def __post_init__(self):
        obj = np.asarray(self.objective, dtype=np.float64)
        A = np.atleast_2d(np.asarray(self.eq_lhs, dtype=np.float64))
        b = np.asarray(self.eq_rhs, dtype=np.float64)
        lb = np.asarray(self.lower, dtype=np.float64)
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "eq_lhs", A)
        object.__setattr__(self, "eq_rhs", b)
        object.__setattr__(self, "lower", lb)
        n = obj.shape[0]
        if A.shape != (b.shape[0], n) or lb.shape != (n,):
            raise InvalidInputError(
                f"inconsistent LP dimensions: obj {obj.shape}, lhs {A.shape}, "
                f"rhs {b.shape}, lower {lb.shape}")
        if not (np.all(np.isfinite(obj)) and np.all(np.isfinite(A))
                and np.all(np.isfinite(b))):
            raise InvalidInputError("LP data must be finite")
        if np.any(np.isnan(lb)) or np.any(lb == np.inf):
            raise InvalidInputError("lower bounds must be finite or -inf")

    @property
    def n_vars(self) -> int:
        return self.objective.shape[0]


@dataclass
class LpSolution:
    status: str                      # "Optimal" | "Infeasible" | "Unbounded"
    x: np.ndarray
    objective: float
    pivots: int = 0
    basis: Optional[np.ndarray] = None
    farkas: Optional[np.ndarray] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == "Optimal"


def _standard_form(p: LpProblem):
    """Rewrite onto nonnegative variables: x_i = lb_i + u_i or x_i = u+ - u-."""
    n = p.n_vars
    finite = np.isfinite(p.lower)
    cols = []
    c_std = []
    # column k of the standard form maps back via (index, sign)
    back = []
    for i in range(n):
        a = p.eq_lhs[:, i]
        if finite[i]:
            cols.append(a)
            c_std.append(p.objective[i])
            back.append((i, 1.0))
        else:
            cols.append(a)
            c_std.append(p.objective[i])
            back.append((i, 1.0))
            cols.append(-a)
            c_std.append(-p.objective[i])
            back.append((i, -1.0))
    A_std = np.column_stack(cols) if cols else np.zeros((p.eq_lhs.shape[0], 0))
    shift = np.where(finite, p.lower, 0.0)
    b_std = p.eq_rhs - p.eq_lhs @ shift
    obj_shift = float(p.objective @ shift)
    return A_std, b_std, np.asarray(c_std), back, shift, obj_shift


def _equilibrate(A, b):
    scale = np.maximum(np.abs(A).max(axis=1), np.abs(b))
    scale = np.where(scale > 0, scale, 1.0)
    return A / scale[:, None], b / scale


def _recover(back, shift, u):
    x = shift.copy()
    for k, (i, s) in enumerate(back):
        x[i] += s * u[k]
    return x


def solve_lp(p: LpProblem, feas_tol: float = DEFAULT_FEAS_TOL,
             opt_tol: float = DEFAULT_OPT_TOL,
             basis: Optional[np.ndarray] = None,
             max_pivots: int = 20000) -> LpSolution:
    """Solve an LpProblem exactly with the dense simplex kernel.

    The returned basis can be passed back in to warm-start another solve
    against the same constraint system (different objective is fine).
    """
    A_std, b_std, c_std, back, shift, obj_shift = _standard_form(p)
    A_sc, b_sc = _equilibrate(A_std, b_std)
    status, u, obj, basis_out, pivots, farkas = _kernels.simplex_solve(
        A_sc, b_sc, c_std, feas_tol, opt_tol, max_pivots, basis)
    if status == _kernels.STALLED:
        raise SolverFailure(
            f"simplex stalled after {pivots} pivots on a "
            f"{A_std.shape[0]}x{A_std.shape[1]} problem")
    if status == _kernels.INFEASIBLE:
        return LpSolution("Infeasible", np.full(p.n_vars, np.nan), np.nan,
                          pivots, basis_out, farkas)
    if status == _kernels.UNBOUNDED:
        return LpSolution("Unbounded", np.full(p.n_vars, np.nan), -np.inf,
                          pivots, basis_out)
    x = _recover(back, shift, u)
    resid = np.abs(p.eq_lhs @ x - p.eq_rhs)
    rscale = max(1.0, float(np.abs(p.eq_rhs).max(initial=0.0)))
    if resid.size and resid.max() > 100 * feas_tol * rscale:
        raise SolverFailure(
            f"simplex returned an infeasible point (residual {resid.max():.3e})")
    return LpSolution("Optimal", x, float(obj) + obj_shift, pivots, basis_out)


def solve_lp_sequence(p: LpProblem, objectives: Sequence[np.ndarray],
                      feas_tol: float = DEFAULT_FEAS_TOL,
                      opt_tol: float = DEFAULT_OPT_TOL) -> list[LpSolution]:
    """Solve several LPs sharing p's constraints, warm-starting each solve."""
    sols = []
    basis = None
    for obj in objectives:
        q = LpProblem(np.asarray(obj, dtype=np.float64), p.eq_lhs, p.eq_rhs,
                      p.lower)
        sol = solve_lp(q, feas_tol, opt_tol, basis=basis)
        if sol.is_optimal:
            basis = sol.basis
        else:
            basis = None
        sols.append(sol)
    return sols


def lp_feasible(eq_lhs, eq_rhs, lower, feas_tol: float = DEFAULT_FEAS_TOL) -> bool:
    """Feasibility test for {x : eq_lhs x = eq_rhs, x >= lower}."""
    eq_lhs = np.atleast_2d(np.asarray(eq_lhs, dtype=np.float64))
    p = LpProblem(np.zeros(eq_lhs.shape[1]), eq_lhs, eq_rhs, lower)
    return solve_lp(p, feas_tol).is_optimal


def min_norm_on_optimal_face(p: LpProblem, sol: LpSolution,
                             norm_subset: Optional[np.ndarray] = None,
                             feas_tol: float = DEFAULT_FEAS_TOL,
                             opt_tol: float = DEFAULT_OPT_TOL) -> np.ndarray:
    """Least-Euclidean-norm point of the optimal face of p.

    Pins the objective at its optimal value and runs a primal active-set
    least-norm solve over the remaining polyhedron, starting from the
    simplex vertex.  With norm_subset only those coordinates enter the norm
    (the face point returned is still feasible and optimal for p).
    """
    if not sol.is_optimal:
        raise InternalError("min_norm_on_optimal_face needs an Optimal solution")
    n = p.n_vars
    sel = np.zeros(n, dtype=bool)
    sel[np.arange(n) if norm_subset is None else np.asarray(norm_subset)] = True

    E0 = np.vstack([p.eq_lhs, p.objective[None, :]])
    d0 = np.concatenate([p.eq_rhs, [sol.objective]])
    finite = np.isfinite(p.lower)
    x = sol.x.copy()
    act_tol = 1e4 * feas_tol
    W = set(np.nonzero(finite & (x <= p.lower + act_tol))[0])

    def face_point(active):
        rows = [E0] + [np.eye(n)[[i]] for i in sorted(active)]
        rhs = np.concatenate([d0] + [[p.lower[i]] for i in sorted(active)])
        C = np.vstack(rows)
        xp, *_ = np.linalg.lstsq(C, rhs, rcond=None)
        # null-space directions of the active constraints
        _, s, Vt = np.linalg.svd(C)
        r = int((s > max(C.shape) * np.finfo(float).eps * (s[0] if s.size else 1.0)).sum())
        Z = Vt[r:].T
        if Z.shape[1]:
            t, *_ = np.linalg.lstsq(Z[sel], -xp[sel], rcond=None)
            xp = xp + Z @ t
        return xp, C

    for _ in range(50 * (n + 2)):
        xhat, C = face_point(W)
        viol = np.where(finite, p.lower - xhat, -np.inf)
        viol[list(W)] = -np.inf
        worst = int(np.argmax(viol)) if n else 0
        if n and viol[worst] > act_tol:
            # step from x toward xhat until the first bound blocks
            d = xhat - x
            blocking, alpha = -1, 1.0
            for i in np.nonzero(finite)[0]:
                if i in W or d[i] >= -1e-15:
                    continue
                a = (p.lower[i] - x[i]) / d[i]
                if a < alpha:
                    alpha, blocking = a, i
            if blocking < 0:
                raise InternalError("violated bound without a blocking step")
            x = x + max(alpha, 0.0) * d
            W.add(blocking)
            continue
        x = xhat
        if not W:
            break
        # multipliers: grad = sum mu_i e_i - C' lam, mu >= 0 required
        g = np.where(sel, x, 0.0)
        idx = sorted(W)
        M = np.column_stack([np.eye(n)[:, idx], -C.T])
        coef, *_ = np.linalg.lstsq(M, g, rcond=None)
        mus = coef[:len(idx)]
        j = int(np.argmin(mus))
        if mus[j] >= -opt_tol:
            break
        W.discard(idx[j])
    else:
        raise InternalError("active-set least-norm refinement did not settle")

    if abs(float(p.objective @ x) - sol.objective) > 1e4 * opt_tol * max(
            1.0, abs(sol.objective)):
        raise InternalError("least-norm point drifted off the optimal face")
    return x


def rank_with_tol(m: np.ndarray, tol: float = DEFAULT_RANK_TOL) -> int:
    """Number of singular values above tol * (largest singular value)."""
    m = np.atleast_2d(np.asarray(m, dtype=np.float64))
    if m.size == 0:
        return 0
    if not np.all(np.isfinite(m)):
        raise InvalidInputError("matrix entries must be finite")
    if tol <= 0:
        raise InvalidInputError("tol must be positive")
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def soft_threshold(v: np.ndarray, tau: float) -> np.ndarray:
    """Elementwise shrinkage sign(v) * max(|v| - tau, 0)."""
    if tau < 0:
        raise InvalidInputError("shrinkage parameter must be nonnegative")
    v = np.asarray(v, dtype=np.float64)
    return np.sign(v) * np.maximum(np.abs(v) - tau, 0.0)


def symmetric_eig(m: np.ndarray):
    """Eigendecomposition of a symmetric matrix, eigenvalues ascending."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInputError("matrix must be square")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if np.abs(m - m.T).max(initial=0.0) > 1e-8 * scale:
        raise InvalidInputError("matrix is not symmetric to tolerance")
    vals, vecs = np.linalg.eigh(0.5 * (m + m.T))
    return vals, vecs


def orthonormal_span(points: np.ndarray, tol: float = DEFAULT_RANK_TOL):
    """Orthonormal basis (D x r) of the linear span of the given columns."""
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    U, s, _ = np.linalg.svd(points, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return U[:, :0]
    r = int(np.count_nonzero(s > tol * s[0]))
    return U[:, :r]
