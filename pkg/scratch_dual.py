import sys
sys.path.insert(0, "src")
import numpy as np
from assc.numerics import LpProblem, solve_lp, min_norm_on_optimal_face, orthonormal_span

X1 = np.array([[-1.0, 0.0, 1.0, 2.0], [1.0, 1.0, 1.0, 1.0]])
Xt = np.vstack([X1, np.ones(4)])  # embedded

def dual_point(points, x):
    U = orthonormal_span(points)
    a = U.T @ x
    A = U.T @ points
    r, m = A.shape
    # max w'a s.t. |A' w| <= 1  ->  min -a'w s.t. A'w + s+ = 1, -A'w + s- = 1
    eq = np.block([[A.T, np.eye(m), np.zeros((m, m))],
                   [-A.T, np.zeros((m, m)), np.eye(m)]])
    rhs = np.ones(2 * m)
    obj = np.concatenate([-a, np.zeros(2 * m)])
    lb = np.concatenate([np.full(r, -np.inf), np.zeros(2 * m)])
    p = LpProblem(obj, eq, rhs, lb)
    sol = solve_lp(p)
    assert sol.is_optimal, sol.status
    w = min_norm_on_optimal_face(p, sol, norm_subset=np.arange(r))[:r]
    return U @ w, -sol.objective

for j, expect in [(1, [0, 0.5, 0.5]), (0, [-1, 0.5, 0.5]), (3, [1, 0, 0])]:
    pts = np.delete(Xt, j, axis=1)
    v, opt = dual_point(pts, Xt[:, j])
    print(f"x{j+1}: v* = {np.round(v, 8)}, dual opt = {opt:.6f}, expect {expect}",
          "OK" if np.allclose(v, expect, atol=1e-8) else "FAIL")
