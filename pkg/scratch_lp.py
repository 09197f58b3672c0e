import sys
sys.path.insert(0, "src")
import numpy as np
from scipy.optimize import linprog
from assc.numerics import LpProblem, solve_lp, min_norm_on_optimal_face

rng = np.random.default_rng(0)
bad = 0
for trial in range(400):
    m = rng.integers(1, 8)
    n = rng.integers(1, 14)
    A = rng.normal(size=(m, n))
    # mix of bound types
    lbs = np.where(rng.random(n) < 0.6, 0.0, -np.inf)
    cvec = rng.normal(size=n)
    # build rhs from a feasible point half the time
    if rng.random() < 0.7:
        x0 = np.where(np.isfinite(lbs), np.abs(rng.normal(size=n)), rng.normal(size=n))
        b = A @ x0
    else:
        b = rng.normal(size=m)
    p = LpProblem(cvec, A, b, lbs)
    sol = solve_lp(p)
    ref = linprog(cvec, A_eq=A, b_eq=b,
                  bounds=[(lb if np.isfinite(lb) else None, None) for lb in lbs],
                  method="highs")
    if ref.status == 0:
        if not sol.is_optimal:
            print("MISMATCH feasible at", trial, sol.status, ref.status); bad += 1
        elif abs(sol.objective - ref.fun) > 1e-6 * max(1, abs(ref.fun)):
            print("OBJ mismatch", trial, sol.objective, ref.fun); bad += 1
    elif ref.status == 2:  # infeasible
        if sol.status != "Infeasible":
            print("MISMATCH infeasible at", trial, sol.status); bad += 1
    elif ref.status == 3:  # unbounded
        if sol.status != "Unbounded":
            print("MISMATCH unbounded at", trial, sol.status); bad += 1
print("bad:", bad)

# min-norm spot checks
# max x+y s.t. x+y<=1, |x|<=1, |y|<=1 -> face is the segment (1,0)-(0,1); min-norm (0.5,0.5)
# encode with slacks: x+y+s1=1; x+s2=1; -x+s3=1; y+s4=1; -y+s5=1; s>=0; x,y free
A = np.array([
    [1, 1, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0],
    [-1, 0, 0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0, 1, 0],
    [0, -1, 0, 0, 0, 0, 1],
], dtype=float)
b = np.ones(5)
c = np.array([-1.0, -1.0, 0, 0, 0, 0, 0])
lb = np.array([-np.inf, -np.inf, 0, 0, 0, 0, 0])
p = LpProblem(c, A, b, lb)
sol = solve_lp(p)
print("segment LP:", sol.status, sol.objective, sol.x[:2])
mn = min_norm_on_optimal_face(p, sol, norm_subset=np.array([0, 1]))
print("min-norm xy:", mn[:2])
mn_all = min_norm_on_optimal_face(p, sol)
print("min-norm all:", mn_all[:2])
