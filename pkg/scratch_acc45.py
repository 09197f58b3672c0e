import time
import numpy as np
from assc.model import DataMatrix, embed_matrix
from assc.solvers import SolverConfig, solve_column_admm, solve_column_oracle, compute_dual_point
from assc.errors import NoRepresentationError

rng = np.random.default_rng(20250809)
t0 = time.time()
worst_gap = {"SSC": 0.0, "ASSC": 0.0}
nu_viol = 0
cor32_viol = 0
nonconv = 0
for t in range(200):
    D = int(rng.integers(2, 9))
    N = int(rng.integers(D + 2, 31))
    X = DataMatrix(rng.normal(size=(D, N)) * rng.uniform(0.5, 2))
    j = int(rng.integers(N))
    for mode in ["SSC", "ASSC"]:
        cfg = SolverConfig(mode=mode, variant="Exact")
        adm = solve_column_admm(X, j, cfg)
        orc = solve_column_oracle(X, j, mode)
        if not adm.converged:
            nonconv += 1
            continue
        gap = abs(adm.objective - orc.objective)
        worst_gap[mode] = max(worst_gap[mode], gap)
        if mode == "ASSC":
            nonneg = adm.c.min() >= -1e-6
            nu_ok = abs(adm.dual_nu + 1) <= 1e-3
            if nonneg != nu_ok:
                nu_viol += 1
                print(f"nu violation t={t}: min(c)={adm.c.min():.2e} nu={adm.dual_nu:.6f}")
            # Corollary III.2 on embedded data
            Xt = embed_matrix(X)
            others = np.delete(Xt.points, j, axis=1)
            v = compute_dual_point(others, Xt.points[:, j])
            inv_norm = 1.0 / np.linalg.norm(v)
            xnorm = np.linalg.norm(Xt.points[:, j])
            if inv_norm > xnorm + 1e-8:
                cor32_viol += 1
                print(f"cor32 violation t={t}: {inv_norm} > {xnorm}")
            if orc.c.min() < -1e-9 and not (inv_norm < xnorm + 1e-12):
                cor32_viol += 1
                print(f"cor32 strict violation t={t}")

print(f"{time.time()-t0:.1f}s  worst gaps: {worst_gap}  nu_viol={nu_viol} "
      f"cor32_viol={cor32_viol} nonconv={nonconv}")
