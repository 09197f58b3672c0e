import time
import numpy as np
from sklearn.datasets import load_iris
from assc._kernels import admm_noisy
from assc.model import DataMatrix, normalize_labels
from assc.solvers import compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))
denom = 1.0 / compute_lambda(X, 1.0)
N = X.n_points

def assc_noisy_matrix(lam, mu, translate, max_iters=2000, tol=1e-7):
    C = np.zeros((N, N))
    iters, conv = [], 0
    for j in range(N):
        others = X.points[:, np.arange(N) != j]
        xj = X.column(j)
        if translate:
            Gd = others - xj[:, None]; g = np.zeros(X.ambient_dim)
        else:
            Gd = others; g = xj
        F = lam * (Gd.T @ Gd) + mu * (np.eye(N - 1) + np.ones((N - 1, N - 1)))
        Finv = np.linalg.inv(F)
        lin0 = lam * (Gd.T @ g)
        c, y, nu, it, cv, *_ = admm_noisy(Finv, lin0, True, mu, max_iters, tol, tol)
        C[np.arange(N) != j, j] = c
        iters.append(it); conv += cv
    return C, np.mean(iters), conv

def score(C, seeds=range(5)):
    A = build_affinity(C)
    errs = [clustering_error(spectral_cluster(A, 3, seed=s), X.labels) for s in seeds]
    return np.mean(errs), errs

for alpha in [5, 20, 100]:
    lam = compute_lambda(X, alpha)
    for translate in [True, False]:
        t0 = time.time()
        C, mi, cv = assc_noisy_matrix(lam, alpha, translate)
        m, errs = score(C)
        print(f"alpha={alpha:4g} translate={translate} conv={cv}/150 iters={mi:.0f} "
              f"mean_err={m:.2f}% errs={errs} ({time.time()-t0:.0f}s)")
