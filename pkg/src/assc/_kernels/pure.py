"""NumPy reference implementations of the hot kernels.

These mirror the compiled extension in ``_core.pyx`` exactly: a dense
two-phase revised simplex for standard-form linear programs and the
per-column ADMM loops for the self-representation solvers.  The compiled
module is preferred at import time; this module is the fallback and the
behavioural reference the parity tests check against.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"

# simplex status codes (shared with the compiled kernel)
OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2
STALLED = 3

_BLAND_TRIGGER = 30          # degenerate pivots in a row before Bland's rule
_REFACTOR_EVERY = 100        # pivots between basis-inverse refactorizations
_PIVOT_TOL = 1e-9


def _refactor(Aext, basis):
    B = Aext[:, basis]
    try:
        return np.linalg.inv(B)
    except np.linalg.LinAlgError:
        return None


def _iterate(Aext, b, cost, basis, Binv, xB, dead, n_enter, opt_tol, max_pivots):
    """Run simplex pivots until optimal/unbounded/stalled.

    Mutates basis/Binv/xB in place; entering columns are restricted to
    indices < n_enter.  Returns (status, pivots_done).
    """
    m = Aext.shape[0]
    degen_streak = 0
    pivots = 0
    while pivots < max_pivots:
        cB = cost[basis]
        y = Binv.T @ cB
        reduced = cost[:n_enter] - Aext[:, :n_enter].T @ y
        reduced[basis[basis < n_enter]] = 0.0

        if degen_streak < _BLAND_TRIGGER:
            e = int(np.argmin(reduced))
            if reduced[e] >= -opt_tol:
                return OPTIMAL, pivots
        else:
            cand = np.nonzero(reduced < -opt_tol)[0]
            if cand.size == 0:
                return OPTIMAL, pivots
            e = int(cand[0])

        u = Binv @ Aext[:, e]
        ratio_rows = np.nonzero((u > _PIVOT_TOL) & ~dead)[0]
        if ratio_rows.size == 0:
            return UNBOUNDED, pivots
        ratios = xB[ratio_rows] / u[ratio_rows]
        theta = ratios.min()
        ties = ratio_rows[ratios <= theta + 1e-12]
        # smallest basis index among ties (Bland-compatible tie break)
        r = int(ties[np.argmin(basis[ties])])
        theta = xB[r] / u[r]

        xB -= theta * u
        xB[r] = theta
        basis[r] = e
        piv = u[r]
        Binv[r, :] /= piv
        other = np.arange(m) != r
        Binv[other, :] -= np.outer(u[other], Binv[r, :])
        np.maximum(xB, 0.0, out=xB)

        degen_streak = degen_streak + 1 if theta <= 1e-11 else 0
        pivots += 1
        if pivots % _REFACTOR_EVERY == 0:
            Binv2 = _refactor(Aext, basis)
            if Binv2 is None:
                return STALLED, pivots
            Binv = Binv2
            xB[:] = Binv @ b
            np.maximum(xB, 0.0, out=xB)
    return STALLED, pivots


def simplex_solve(A, b, c, feas_tol, opt_tol, max_pivots, basis=None):
    """Two-phase dense revised simplex for min c'x s.t. Ax = b, x >= 0.

    Returns (status, x, objective, basis, pivots, farkas) where basis can be
    fed back in for a warm start against the same (A, b) and farkas is a
    phase-1 dual certificate when status == INFEASIBLE (else None).
    """
    A = np.ascontiguousarray(A, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64).copy()
    c = np.asarray(c, dtype=np.float64)
    m, n = A.shape

    if m == 0:
        if np.any(c < -opt_tol):
            return UNBOUNDED, np.zeros(n), 0.0, np.empty(0, dtype=np.int64), 0, None
        return OPTIMAL, np.zeros(n), 0.0, np.empty(0, dtype=np.int64), 0, None

    flip = b < 0
    Aw = A.copy()
    Aw[flip] *= -1.0
    bw = np.abs(b)
    Aext = np.hstack([Aw, np.eye(m)])
    cost2 = np.concatenate([c, np.zeros(m)])
    dead = np.zeros(m, dtype=bool)
    pivots_total = 0

    warm = False
    if basis is not None and len(basis) == m:
        basis = np.asarray(basis, dtype=np.int64).copy()
        Binv = _refactor(Aext, basis)
        if Binv is not None:
            xB = Binv @ bw
            if xB.min() >= -feas_tol:
                np.maximum(xB, 0.0, out=xB)
                dead = basis >= n  # rows held by leftover artificials
                warm = True
    if not warm:
        basis = np.arange(n, n + m, dtype=np.int64)
        Binv = np.eye(m)
        xB = bw.copy()
        cost1 = np.concatenate([np.zeros(n), np.ones(m)])
        status, piv = _iterate(Aext, bw, cost1, basis, Binv, xB, dead, n,
                               opt_tol, max_pivots)
        pivots_total += piv
        if status == STALLED:
            return STALLED, np.zeros(n), np.nan, basis, pivots_total, None
        Binv = _refactor(Aext, basis)
        if Binv is None:
            return STALLED, np.zeros(n), np.nan, basis, pivots_total, None
        xB = Binv @ bw
        np.maximum(xB, 0.0, out=xB)
        p1 = xB[basis >= n].sum()
        scale = max(1.0, np.abs(bw).max())
        if p1 > feas_tol * scale:
            yf = Binv.T @ np.where(basis >= n, 1.0, 0.0)
            yf[flip] *= -1.0
            return INFEASIBLE, np.zeros(n), np.nan, basis, pivots_total, yf
        # drive leftover artificials out of the basis where possible
        for i in range(m):
            if basis[i] < n:
                continue
            row = Binv[i] @ Aw
            row[basis[basis < n]] = 0.0
            j = int(np.argmax(np.abs(row)))
            if abs(row[j]) > _PIVOT_TOL:
                u = Binv @ Aext[:, j]
                basis[i] = j
                Binv[i, :] /= u[i]
                other = np.arange(m) != i
                Binv[other, :] -= np.outer(u[other], Binv[i, :])
                xB = Binv @ bw
                np.maximum(xB, 0.0, out=xB)
            else:
                dead[i] = True

    status, piv = _iterate(Aext, bw, cost2, basis, Binv, xB, dead, n,
                           opt_tol, max_pivots)
    pivots_total += piv
    if status in (STALLED, UNBOUNDED):
        return status, np.zeros(n), np.nan, basis, pivots_total, None

    Binv = _refactor(Aext, basis)
    if Binv is not None:
        xB = Binv @ bw
        np.maximum(xB, 0.0, out=xB)
    x = np.zeros(n)
    keep = basis < n
    x[basis[keep]] = xB[keep]
    return OPTIMAL, x, float(c @ x), basis, pivots_total, None


def _soft(v, tau):
    return np.sign(v) * np.maximum(np.abs(v) - tau, 0.0)


def admm_exact(Minv, G, h, mu0, rho, mu_cap, max_iters, primal_tol, dual_tol):
    """ADMM for min ||c||_1 s.t. G c = h, with the z = c splitting.

    Minv must be the inverse of (I + G'G).  Returns
    (c, y, w, iters, converged, res_split, res_lin, res_dual).
    """
    mdim = Minv.shape[0]
    kdim = G.shape[0]
    c = np.zeros(mdim)
    z = np.zeros(mdim)
    y = np.zeros(mdim)
    w = np.zeros(kdim)
    q0 = G.T @ h
    mu = float(mu0)
    res_split = res_lin = res_dual = np.inf
    it = 0
    for it in range(1, max_iters + 1):
        z = _soft(c - y / mu, 1.0 / mu)
        rhs = z + q0 + (y - G.T @ w) / mu
        c_new = Minv @ rhs
        y += mu * (z - c_new)
        r = G @ c_new - h
        w += mu * r
        res_dual = np.max(np.abs(c_new - c)) if mdim else 0.0
        c = c_new
        res_split = np.max(np.abs(z - c)) if mdim else 0.0
        res_lin = np.max(np.abs(r)) if kdim else 0.0
        if res_split <= primal_tol and res_lin <= primal_tol and res_dual <= dual_tol:
            return c, y, w, it, True, res_split, res_lin, res_dual
        mu = min(mu * rho, mu_cap)
    return c, y, w, it, False, res_split, res_lin, res_dual


def admm_noisy(Finv, lin0, affine, mu, max_iters, primal_tol, dual_tol):
    """ADMM for min ||c||_1 + (lam/2)||g - G c||^2 (optionally s.t. 1'c = 1).

    The quadratic data term is folded into the c-update: Finv must invert
    (lam G'G + mu I [+ mu 11']) and lin0 = lam G'g.  The penalty mu is held
    fixed so the factorization is reused across iterations.  Returns
    (c, y, nu, iters, converged, res_split, res_sum, res_dual).
    """
    mdim = Finv.shape[0]
    c = np.zeros(mdim)
    z = np.zeros(mdim)
    y = np.zeros(mdim)
    nu = 0.0
    res_split = res_sum = res_dual = np.inf
    it = 0
    for it in range(1, max_iters + 1):
        z = _soft(c - y / mu, 1.0 / mu)
        rhs = lin0 + mu * z + y
        if affine:
            rhs = rhs + (mu - nu)
        c_new = Finv @ rhs
        y += mu * (z - c_new)
        if affine:
            s = c_new.sum() - 1.0
            nu += mu * s
        else:
            s = 0.0
        res_dual = np.max(np.abs(c_new - c)) if mdim else 0.0
        c = c_new
        res_split = np.max(np.abs(z - c)) if mdim else 0.0
        res_sum = abs(s)
        if res_split <= primal_tol and res_sum <= primal_tol and res_dual <= dual_tol:
            return c, y, nu, it, True, res_split, res_sum, res_dual
    return c, y, nu, it, False, res_split, res_sum, res_dual
