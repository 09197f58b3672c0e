import numpy as np
from sklearn.datasets import load_iris
from assc._kernels import admm_noisy
from assc.model import DataMatrix, normalize_labels
from assc.solvers import compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
raw = iris.data.T.astype(float)
labels = normalize_labels(iris.target)
N = raw.shape[1]

def noisy_matrix(P, lam, mu, affine, max_iters=4000, tol=1e-7):
    C = np.zeros((N, N))
    conv = 0
    for j in range(N):
        others = P[:, np.arange(N) != j]
        xj = P[:, j]
        F = lam * (others.T @ others) + mu * np.eye(N - 1)
        if affine:
            F += mu * np.ones((N - 1, N - 1))
        Finv = np.linalg.inv(F)
        lin0 = lam * (others.T @ xj)
        c, y, nu, it, cv, *_ = admm_noisy(Finv, lin0, affine, mu, max_iters, tol, tol)
        C[np.arange(N) != j, j] = c
        conv += cv
    return C, conv

def run(P, affine, alphas, tag):
    Xd = DataMatrix(P, labels)
    for alpha in alphas:
        lam = compute_lambda(Xd, alpha)
        denom = alpha / lam
        C, cv = noisy_matrix(P, lam, alpha, affine)
        A = build_affinity(C)
        errs = [clustering_error(spectral_cluster(A, 3, seed=s), labels) for s in range(3)]
        print(f"{tag} alpha={alpha:6g} lam={lam:8.4f} conv={cv}/150 errs={[f'{e:.2f}' for e in errs]}")

print("== (b) unit-norm samples, SSC/ASSC hard ==")
un = raw / np.linalg.norm(raw, axis=0, keepdims=True)
run(un, False, [5, 20, 100], "SSC unit")
run(un, True, [5, 20, 100], "ASSC unit")

print("== (c) z-scored features ==")
zs = (raw - raw.mean(axis=1, keepdims=True)) / raw.std(axis=1, keepdims=True)
run(zs, True, [5, 20, 100], "ASSC zscore")

print("== (d) ASSC via embedded SSC(n), raw ==")
emb = np.vstack([raw, np.ones(N)])
run(emb, False, [2, 5, 10, 20, 50, 100], "embSSC raw")
