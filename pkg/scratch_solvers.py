import sys
sys.path.insert(0, "src")
import numpy as np
from assc.datagen import make_toy
from assc.solvers import (SolverConfig, solve_column_admm, solve_column_oracle,
                          compute_dual_point, build_coefficient_matrix)
from assc.model import embed_matrix

np.set_printoptions(precision=4, suppress=True, linewidth=150)

toy1 = make_toy("TwoLinesR3")
X = toy1.arrangement.data
cfg = SolverConfig(mode="ASSC", variant="Exact")

print("=== toy-1 ASSC exact, all columns ===")
for j in range(10):
    sol = solve_column_admm(X, j, cfg)
    orc = solve_column_oracle(X, j, "ASSC")
    print(f"j={j}: admm obj={sol.objective:.6f} iters={sol.iterations} conv={sol.converged} "
          f"nu={sol.dual_nu:+.4f} | lp obj={orc.objective:.6f} | gap={abs(sol.objective-orc.objective):.2e}")
    if j == 2:
        print("   c_admm:", np.round(sol.c, 5))
        print("   c_lp:  ", np.round(orc.c, 5))

print("\n=== toy-2 extreme x1 ===")
toy2 = make_toy("TwoLinesR2")
X2 = toy2.arrangement.data
s = solve_column_admm(X2, 0, cfg)
o = solve_column_oracle(X2, 0, "ASSC")
print("admm obj", s.objective, "lp obj", o.objective, "nu", s.dual_nu)
print("admm c:", np.round(s.c, 5))
print("lp c:  ", np.round(o.c, 5))

print("\n=== dual points vs paper ===")
dummy = make_toy("DualExampleR2")
Xd = embed_matrix(dummy.arrangement.data)
emb1 = Xd.points[:, :4]
for j, expect in [(1, [0, .5, .5]), (0, [-1, .5, .5]), (3, [1, 0, 0])]:
    v = compute_dual_point(np.delete(emb1, j, axis=1), emb1[:, j])
    print(j, np.round(v, 6), "expect", expect, "OK" if np.allclose(v, expect, atol=1e-8) else "FAIL")

print("\n=== oracle x1 restricted: expect obj 2, c=(1.5,0,-0.5) ===")
from assc.model import DataMatrix
X1only = DataMatrix(dummy.arrangement.data.points[:, :4])
o1 = solve_column_oracle(X1only, 0, "ASSC")
print("obj", o1.objective, "c", np.round(o1.c, 6))
o2 = solve_column_oracle(X1only, 1, "ASSC")
print("x2 restricted obj", o2.objective)

print("\n=== toy-2 full matrix + timing ===")
import time
t0 = time.time()
C = build_coefficient_matrix(X2, cfg)
print(f"{time.time()-t0:.2f}s; all converged: {C.all_converged}")
print(np.round(C.matrix, 3))
