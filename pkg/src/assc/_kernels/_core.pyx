# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: simplex pivoting and ADMM column iterations.

Mirrors ``pure.py`` (same statuses, same pivot rules, same stopping tests);
the NumPy module is the behavioural reference, this one is the fast path.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()

BACKEND = "cython"

OPTIMAL = 0
INFEASIBLE = 1
UNBOUNDED = 2
STALLED = 3

cdef enum:
    _BLAND_TRIGGER = 30
    _REFACTOR_EVERY = 100

cdef double _PIVOT_TOL = 1e-9


cdef object _refactor_np(object Aext, object basis):
    B = Aext[:, basis]
    try:
        return np.linalg.inv(B)
    except np.linalg.LinAlgError:
        return None


def _iterate(object Aext_o, object b_o, object cost_o, object basis_o,
             object Binv_o, object xB_o, object dead_o, Py_ssize_t n_enter,
             double opt_tol, long max_pivots):
    """Pivot until optimal/unbounded/stalled; mutates basis/Binv/xB."""
    cdef double[:, ::1] Aext = Aext_o
    cdef double[::1] cost = cost_o
    cdef long long[::1] basis = basis_o
    cdef double[:, ::1] Binv = Binv_o
    cdef double[::1] xB = xB_o
    cdef unsigned char[::1] dead = dead_o

    cdef Py_ssize_t m = Aext.shape[0]
    cdef Py_ssize_t ncols = Aext.shape[1]
    cdef Py_ssize_t i, j, k, e, r
    cdef long pivots = 0, degen_streak = 0
    cdef double dj, best, theta, ratio, piv, ui

    y_np = np.zeros(m)
    u_np = np.zeros(m)
    inb_np = np.zeros(ncols, dtype=np.uint8)
    cdef double[::1] y = y_np
    cdef double[::1] u = u_np
    cdef unsigned char[::1] in_basis = inb_np
    for i in range(m):
        in_basis[basis[i]] = 1

    while pivots < max_pivots:
        # duals y = Binv' cB
        for j in range(m):
            y[j] = 0.0
        for i in range(m):
            piv = cost[basis[i]]
            if piv != 0.0:
                for j in range(m):
                    y[j] += Binv[i, j] * piv
        # entering column
        e = -1
        if degen_streak < _BLAND_TRIGGER:
            best = -opt_tol
            for j in range(n_enter):
                if in_basis[j]:
                    continue
                dj = cost[j]
                for i in range(m):
                    dj -= Aext[i, j] * y[i]
                if dj < best:
                    best = dj
                    e = j
            if e < 0:
                return OPTIMAL, pivots
        else:
            for j in range(n_enter):
                if in_basis[j]:
                    continue
                dj = cost[j]
                for i in range(m):
                    dj -= Aext[i, j] * y[i]
                if dj < -opt_tol:
                    e = j
                    break
            if e < 0:
                return OPTIMAL, pivots

        # direction u = Binv A_e and ratio test
        for i in range(m):
            ui = 0.0
            for k in range(m):
                ui += Binv[i, k] * Aext[k, e]
            u[i] = ui
        theta = -1.0
        for i in range(m):
            if dead[i] or u[i] <= _PIVOT_TOL:
                continue
            ratio = xB[i] / u[i]
            if theta < 0.0 or ratio < theta:
                theta = ratio
        if theta < 0.0:
            return UNBOUNDED, pivots
        r = -1
        for i in range(m):
            if dead[i] or u[i] <= _PIVOT_TOL:
                continue
            if xB[i] / u[i] <= theta + 1e-12:
                if r < 0 or basis[i] < basis[r]:
                    r = i
        theta = xB[r] / u[r]

        # pivot update
        for i in range(m):
            xB[i] -= theta * u[i]
            if xB[i] < 0.0:
                xB[i] = 0.0
        xB[r] = theta
        in_basis[basis[r]] = 0
        in_basis[e] = 1
        basis[r] = e
        piv = u[r]
        for j in range(m):
            Binv[r, j] /= piv
        for i in range(m):
            if i == r:
                continue
            ui = u[i]
            if ui != 0.0:
                for j in range(m):
                    Binv[i, j] -= ui * Binv[r, j]

        degen_streak = degen_streak + 1 if theta <= 1e-11 else 0
        pivots += 1
        if pivots % _REFACTOR_EVERY == 0:
            Binv2 = _refactor_np(np.asarray(Aext_o), np.asarray(basis_o))
            if Binv2 is None:
                return STALLED, pivots
            Binv_o[:, :] = Binv2
            xB_new = Binv2 @ np.asarray(b_o)
            np.maximum(xB_new, 0.0, out=xB_new)
            xB_o[:] = xB_new
    return STALLED, pivots


def simplex_solve(A, b, c, double feas_tol, double opt_tol, long max_pivots,
                  basis=None):
    """Two-phase dense revised simplex: min c'x s.t. Ax = b, x >= 0."""
    A = np.ascontiguousarray(A, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64).copy()
    c = np.ascontiguousarray(c, dtype=np.float64)
    cdef Py_ssize_t m = A.shape[0]
    cdef Py_ssize_t n = A.shape[1]

    if m == 0:
        if np.any(c < -opt_tol):
            return UNBOUNDED, np.zeros(n), 0.0, np.empty(0, dtype=np.int64), 0, None
        return OPTIMAL, np.zeros(n), 0.0, np.empty(0, dtype=np.int64), 0, None

    flip = b < 0
    Aw = A.copy()
    Aw[flip] *= -1.0
    bw = np.abs(b)
    Aext = np.ascontiguousarray(np.hstack([Aw, np.eye(m)]))
    cost2 = np.ascontiguousarray(np.concatenate([c, np.zeros(m)]))
    dead = np.zeros(m, dtype=np.uint8)
    pivots_total = 0

    warm = False
    if basis is not None and len(basis) == m:
        basis = np.ascontiguousarray(basis, dtype=np.int64).copy()
        Binv = _refactor_np(Aext, basis)
        if Binv is not None:
            xB = Binv @ bw
            if xB.min() >= -feas_tol:
                np.maximum(xB, 0.0, out=xB)
                dead = (basis >= n).astype(np.uint8)
                Binv = np.ascontiguousarray(Binv)
                warm = True
    if not warm:
        basis = np.arange(n, n + m, dtype=np.int64)
        Binv = np.eye(m)
        xB = bw.copy()
        cost1 = np.ascontiguousarray(
            np.concatenate([np.zeros(n), np.ones(m)]))
        status, piv = _iterate(Aext, bw, cost1, basis, Binv, xB, dead, n,
                               opt_tol, max_pivots)
        pivots_total += piv
        if status == STALLED:
            return STALLED, np.zeros(n), np.nan, basis, pivots_total, None
        Binv = _refactor_np(Aext, basis)
        if Binv is None:
            return STALLED, np.zeros(n), np.nan, basis, pivots_total, None
        Binv = np.ascontiguousarray(Binv)
        xB = Binv @ bw
        np.maximum(xB, 0.0, out=xB)
        p1 = xB[basis >= n].sum()
        scale = max(1.0, np.abs(bw).max())
        if p1 > feas_tol * scale:
            yf = Binv.T @ np.where(basis >= n, 1.0, 0.0)
            yf[flip] *= -1.0
            return INFEASIBLE, np.zeros(n), np.nan, basis, pivots_total, yf
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
                dead[i] = 1

    status, piv = _iterate(Aext, bw, cost2, basis, Binv, xB, dead, n,
                           opt_tol, max_pivots)
    pivots_total += piv
    if status == STALLED or status == UNBOUNDED:
        return status, np.zeros(n), np.nan, basis, pivots_total, None

    Binv2 = _refactor_np(Aext, basis)
    if Binv2 is not None:
        xB = Binv2 @ bw
        np.maximum(xB, 0.0, out=xB)
    x = np.zeros(n)
    keep = basis < n
    x[basis[keep]] = xB[keep]
    return OPTIMAL, x, float(c @ x), basis, pivots_total, None


def admm_exact(Minv_o, G_o, h_o, double mu0, double rho, double mu_cap,
               long max_iters, double primal_tol, double dual_tol):
    """ADMM for min ||c||_1 s.t. G c = h (z = c splitting)."""
    cdef double[:, ::1] Minv = np.ascontiguousarray(Minv_o, dtype=np.float64)
    cdef double[:, ::1] G = np.ascontiguousarray(G_o, dtype=np.float64)
    cdef double[::1] h = np.ascontiguousarray(h_o, dtype=np.float64)
    cdef Py_ssize_t mdim = Minv.shape[0]
    cdef Py_ssize_t kdim = G.shape[0]

    c_np = np.zeros(mdim)
    z_np = np.zeros(mdim)
    y_np = np.zeros(mdim)
    w_np = np.zeros(kdim)
    q0_np = np.asarray(G_o).T @ np.asarray(h_o)
    rhs_np = np.zeros(mdim)
    cnew_np = np.zeros(mdim)
    r_np = np.zeros(kdim)
    gtw_np = np.zeros(mdim)
    cdef double[::1] c = c_np, z = z_np, y = y_np, w = w_np
    cdef double[::1] q0 = q0_np, rhs = rhs_np, cnew = cnew_np, r = r_np
    cdef double[::1] gtw = gtw_np

    cdef double mu = mu0, inv_mu, zi, s, res_split, res_lin, res_dual, diff
    cdef Py_ssize_t i, k
    cdef long it = 0
    cdef bint converged = 0
    res_split = res_lin = res_dual = np.inf

    for it in range(1, max_iters + 1):
        inv_mu = 1.0 / mu
        for i in range(mdim):
            zi = c[i] - y[i] * inv_mu
            if zi > inv_mu:
                z[i] = zi - inv_mu
            elif zi < -inv_mu:
                z[i] = zi + inv_mu
            else:
                z[i] = 0.0
        for i in range(mdim):
            s = 0.0
            for k in range(kdim):
                s += G[k, i] * w[k]
            gtw[i] = s
        for i in range(mdim):
            rhs[i] = z[i] + q0[i] + (y[i] - gtw[i]) * inv_mu
        for i in range(mdim):
            s = 0.0
            for k in range(mdim):
                s += Minv[i, k] * rhs[k]
            cnew[i] = s
        res_dual = 0.0
        for i in range(mdim):
            y[i] += mu * (z[i] - cnew[i])
            diff = fabs(cnew[i] - c[i])
            if diff > res_dual:
                res_dual = diff
            c[i] = cnew[i]
        res_lin = 0.0
        for k in range(kdim):
            s = -h[k]
            for i in range(mdim):
                s += G[k, i] * c[i]
            r[k] = s
            w[k] += mu * s
            if fabs(s) > res_lin:
                res_lin = fabs(s)
        res_split = 0.0
        for i in range(mdim):
            diff = fabs(z[i] - c[i])
            if diff > res_split:
                res_split = diff
        if res_split <= primal_tol and res_lin <= primal_tol and \
                res_dual <= dual_tol:
            converged = 1
            break
        mu = mu * rho
        if mu > mu_cap:
            mu = mu_cap
    return c_np, y_np, w_np, it, bool(converged), float(res_split), \
        float(res_lin), float(res_dual)


def admm_noisy(Finv_o, lin0_o, bint affine, double mu, long max_iters,
               double primal_tol, double dual_tol):
    """ADMM for min ||c||_1 + (lam/2)||g - G c||^2 (opt. s.t. 1'c = 1)."""
    cdef double[:, ::1] Finv = np.ascontiguousarray(Finv_o, dtype=np.float64)
    cdef double[::1] lin0 = np.ascontiguousarray(lin0_o, dtype=np.float64)
    cdef Py_ssize_t mdim = Finv.shape[0]

    c_np = np.zeros(mdim)
    z_np = np.zeros(mdim)
    y_np = np.zeros(mdim)
    rhs_np = np.zeros(mdim)
    cnew_np = np.zeros(mdim)
    cdef double[::1] c = c_np, z = z_np, y = y_np
    cdef double[::1] rhs = rhs_np, cnew = cnew_np

    cdef double nu = 0.0, inv_mu = 1.0 / mu
    cdef double zi, s, extra, res_split, res_sum, res_dual, diff
    cdef Py_ssize_t i, k
    cdef long it = 0
    cdef bint converged = 0
    res_split = res_sum = res_dual = np.inf

    for it in range(1, max_iters + 1):
        for i in range(mdim):
            zi = c[i] - y[i] * inv_mu
            if zi > inv_mu:
                z[i] = zi - inv_mu
            elif zi < -inv_mu:
                z[i] = zi + inv_mu
            else:
                z[i] = 0.0
        extra = (mu - nu) if affine else 0.0
        for i in range(mdim):
            rhs[i] = lin0[i] + mu * z[i] + y[i] + extra
        for i in range(mdim):
            s = 0.0
            for k in range(mdim):
                s += Finv[i, k] * rhs[k]
            cnew[i] = s
        res_dual = 0.0
        s = 0.0
        for i in range(mdim):
            y[i] += mu * (z[i] - cnew[i])
            diff = fabs(cnew[i] - c[i])
            if diff > res_dual:
                res_dual = diff
            c[i] = cnew[i]
            s += cnew[i]
        if affine:
            s -= 1.0
            nu += mu * s
        else:
            s = 0.0
        res_split = 0.0
        for i in range(mdim):
            diff = fabs(z[i] - c[i])
            if diff > res_split:
                res_split = diff
        res_sum = fabs(s)
        if res_split <= primal_tol and res_sum <= primal_tol and \
                res_dual <= dual_tol:
            converged = 1
            break
    return c_np, y_np, nu, it, bool(converged), float(res_split), \
        float(res_sum), float(res_dual)
