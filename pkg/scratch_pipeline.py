import sys, time
sys.path.insert(0, "src")
import numpy as np
from assc.datagen import make_toy
from assc.solvers import SolverConfig, build_coefficient_matrix
from assc.certificates import certify, check_theorem4
from assc.clustering import build_affinity, spectral_cluster, clustering_error

cfg = SolverConfig(mode="ASSC", variant="Exact")

for tid in ["TwoLinesR3", "TwoLinesR2", "TriangleLineR3", "TriangleR2"]:
    t0 = time.time()
    toy = make_toy(tid)
    arr = toy.arrangement
    C = build_coefficient_matrix(arr.data, cfg)
    rep = certify(arr, C)
    A = build_affinity(C)
    n = arr.data.n_clusters
    pred = spectral_cluster(A, n, seed=0)
    err = clustering_error(pred, arr.data.labels)
    print(f"--- {tid}: {time.time()-t0:.2f}s, error={err}")
    print(f"  aff_indep={rep.arrangement.affinely_independent} "
          f"emb_indep={rep.arrangement.embedded_independent} "
          f"hull_sep={rep.arrangement.subspace_hull_separated} "
          f"conn={rep.connectivity} correct_cluster={rep.correct_clustering} "
          f"violations={rep.any_theory_violation}")
    for p in rep.per_point:
        g = p.guarantees
        print(f"  j={p.j} lab={p.label} {p.point_class.kind[:12]:12s} "
              f"fdim={p.point_class.face_dim} pres={str(p.subspace_preserving):5s} "
              f"dense={str(p.subspace_dense):5s} nn={str(p.nonnegative):5s} "
              f"facep={str(p.face_preserving):5s} obj={p.objective:.4f} "
              f"pos={g.positive()} neg={g.negative()} "
              f"orc={p.oracle_preserving} t4={'' if p.theorem4 is None else p.theorem4.holds}")

    # expected facts cross-check
    exp = toy.expected
    ok = True
    for j, kind in exp.point_classes.items():
        if rep.per_point[j].point_class.kind != kind:
            print(f"  !! class mismatch j={j}: {rep.per_point[j].point_class.kind} != {kind}"); ok = False
    for j, v in exp.admm_preserving.items():
        if rep.per_point[j].subspace_preserving != v:
            print(f"  !! preserving mismatch j={j}"); ok = False
    for j, v in exp.admm_dense.items():
        if rep.per_point[j].subspace_dense != v:
            print(f"  !! dense mismatch j={j}"); ok = False
    for j, v in exp.admm_nonnegative.items():
        if rep.per_point[j].nonnegative != v:
            print(f"  !! nonneg mismatch j={j}"); ok = False
    for j, v in exp.face_preserving.items():
        if rep.per_point[j].face_preserving != v:
            print(f"  !! facep mismatch j={j}"); ok = False
    if exp.clustering_error is not None and err != exp.clustering_error:
        print(f"  !! error mismatch {err} != {exp.clustering_error}"); ok = False
    print("  expected-facts:", "OK" if ok else "MISMATCH")

print("\n--- theorem 4 regions (dual example) ---")
from assc.datagen import dual_example
for pt, expect in [((0,0), (True, True, True)), ((0,2), (False, None, None)), ((0.5, -2.9), (True,))]:
    toy = dual_example(pt)
    X = toy.arrangement.data
    r2 = check_theorem4(X, 1)
    r1 = check_theorem4(X, 0)
    r4 = check_theorem4(X, 3)
    print(f"A2 point {pt}: x2 holds={r2.holds} (mu={r2.mu_tilde:.5f} inv={r2.inv_dual_norm:.5f}) "
          f"x1 holds={r1.holds} x4 holds={r4.holds}")
