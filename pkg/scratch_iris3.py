import time
import numpy as np
from sklearn.datasets import load_iris
from assc._kernels import admm_noisy
from assc.model import DataMatrix, normalize_labels
from assc.solvers import compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))
N = X.n_points

def assc_noisy_matrix(lam, mu, max_iters=2000, tol=1e-7):
    C = np.zeros((N, N))
    conv = 0
    for j in range(N):
        others = X.points[:, np.arange(N) != j]
        xj = X.column(j)
        Gd, g = others, xj
        F = lam * (Gd.T @ Gd) + mu * (np.eye(N - 1) + np.ones((N - 1, N - 1)))
        Finv = np.linalg.inv(F)
        lin0 = lam * (Gd.T @ g)
        c, y, nu, it, cv, *_ = admm_noisy(Finv, lin0, True, mu, max_iters, tol, tol)
        C[np.arange(N) != j, j] = c
        conv += cv
    return C, conv

def colnorm_affinity(C):
    CAbs = np.abs(C)
    mx = CAbs.max(axis=0)
    CAbs = CAbs / np.where(mx > 0, mx, 1.0)
    return 0.5 * (CAbs + CAbs.T)

for alpha in [5, 20, 100]:
    lam = compute_lambda(X, alpha)
    C, cv = assc_noisy_matrix(lam, alpha)
    for name, A in [("plain", build_affinity(C).matrix), ("colnorm", colnorm_affinity(C))]:
        from assc.clustering import AffinityMatrix
        Am = AffinityMatrix(0.5*(A+A.T) - np.diag(np.diag(A)))
        errs = [clustering_error(spectral_cluster(Am, 3, seed=s), X.labels) for s in range(3)]
        print(f"alpha={alpha:4g} conv={cv}/150 {name:8s} errs={[f'{e:.2f}' for e in errs]}")

print("\n--- long run: alpha=20, 30000 iters ---")
t0=time.time()
lam = compute_lambda(X, 20.0)
C, cv = assc_noisy_matrix(lam, 20.0, max_iters=30000)
print(f"conv={cv}/150 in {time.time()-t0:.0f}s")
for name, A in [("plain", build_affinity(C).matrix), ("colnorm", colnorm_affinity(C))]:
    from assc.clustering import AffinityMatrix
    Am = AffinityMatrix(0.5*(A+A.T) - np.diag(np.diag(A)))
    errs = [clustering_error(spectral_cluster(Am, 3, seed=s), X.labels) for s in range(3)]
    print(f"LONG alpha=20 {name:8s} errs={[f'{e:.2f}' for e in errs]}")
