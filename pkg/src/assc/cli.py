"""Command-line harness: dataset I/O, pipeline orchestration, reports.

Verbs: synth (write a dataset), solve (self-representation + spectral
clustering), certify (condition checking for a coefficient matrix),
eval (clustering error only), sweep (alpha grid for the noisy variant).

CSV conventions: UTF-8, comma separator, '.' decimal, header row required;
one point per row with features in columns and an optional final integer
"label" column.  Exit codes: 0 success, 1 usage/config error, 2 data error,
3 total solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .certificates import certify
from .clustering import build_affinity, clustering_error, spectral_cluster
from .datagen import TOY_IDS, make_toy, random_arrangement
from .errors import AsscError, InvalidInputError
from .model import DataMatrix, normalize_labels
from .solvers import SolverConfig, build_coefficient_matrix, compute_lambda

REFERENCE_SWEEP_TOL = 2e-4      # stopping threshold of the cited
REFERENCE_SWEEP_ITERS = 200     # noisy-ADMM protocol (matrix method)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_SOLVER = 3

REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "config", "columns", "clustering",
                 "timings"],
    "properties": {
        "schema_version": {"const": 1},
        "config": {
            "type": "object",
            "required": ["mode", "variant", "seed", "n_clusters", "dataset"],
            "properties": {
                "mode": {"enum": ["SSC", "ASSC"]},
                "variant": {"enum": ["Exact", "Noisy"]},
                "lam": {"type": ["number", "null"]},
                "alpha": {"type": ["number", "null"]},
                "seed": {"type": "integer"},
                "n_clusters": {"type": ["integer", "null"]},
                "dataset": {
                    "type": "object",
                    "required": ["source", "n_points", "ambient_dim",
                                 "has_labels"],
                },
            },
        },
        "columns": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["j", "objective", "iterations", "converged"],
            },
        },
        "clustering": {
            "type": "object",
            "required": ["predicted", "error_percent"],
        },
        "certificate": {"type": ["object", "null"]},
        "timings": {"type": "object"},
    },
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit with code 1, not 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def read_dataset(path) -> DataMatrix:
    """Read a dataset CSV (points as rows, optional final label column)."""
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as fh:
            header = fh.readline().strip()
            if not header:
                raise InvalidInputError(f"{path}: empty file")
            names = [h.strip() for h in header.split(",")]
            rows = np.loadtxt(fh, delimiter=",", ndmin=2)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise InvalidInputError(f"{path}: malformed CSV ({exc})") from exc
    if rows.shape[1] != len(names):
        raise InvalidInputError(f"{path}: header/row width mismatch")
    labels = None
    if names and names[-1].lower() == "label":
        labels = rows[:, -1]
        if np.any(labels != np.round(labels)) or labels.min(initial=1) < 1:
            raise InvalidInputError(f"{path}: labels must be positive integers")
        labels = normalize_labels(labels.astype(np.int64))
        rows = rows[:, :-1]
    return DataMatrix(rows.T, labels)


def write_dataset(path, data: DataMatrix) -> None:
    """Write a dataset CSV; labels, when present, become the final column."""
    path = Path(path)
    D = data.ambient_dim
    names = [f"x{i+1}" for i in range(D)]
    cols = data.points.T
    if data.labels is not None:
        names.append("label")
        cols = np.column_stack([cols, data.labels.astype(np.float64)])
    with path.open("w", encoding="utf-8") as fh:
        fh.write(",".join(names) + "\n")
        for row in cols:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def write_labels(path, labels) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        fh.write("label\n")
        for v in np.asarray(labels).ravel():
            fh.write(f"{int(v)}\n")


def read_labels(path) -> np.ndarray:
    """Labels from a single-column CSV or the label column of a dataset."""
    data = read_dataset(path)
    if data.labels is not None:
        return data.labels
    if data.ambient_dim == 1:
        return normalize_labels(data.points.ravel().astype(np.int64))
    raise InvalidInputError(f"{path}: no label column found")


def write_matrix(path, M) -> None:
    """Plot-ready dump of a square matrix (no header, raw values)."""
    np.savetxt(Path(path), np.asarray(M), delimiter=",")


def read_matrix(path) -> np.ndarray:
    return np.loadtxt(Path(path), delimiter=",", ndmin=2)


def _dataset_from_args(args) -> tuple[DataMatrix, str]:
    if getattr(args, "toy", None):
        return make_toy(args.toy).arrangement.data, f"toy:{args.toy}"
    if getattr(args, "data", None):
        return read_dataset(args.data), str(args.data)
    raise InvalidInputError("no dataset given: use --toy or --data")


def _solver_config(args, data: DataMatrix):
    lam = args.lam
    alpha = getattr(args, "alpha", None)
    if args.variant == "Noisy" and lam is None:
        if alpha is None:
            raise InvalidInputError(
                "Noisy variant needs --alpha (lambda rule) or --lam")
        lam = compute_lambda(data, alpha)
    return SolverConfig(mode=args.mode, variant=args.variant, lam=lam,
                        max_iters=args.max_iters, seed=args.seed), alpha


def _run_pipeline(data: DataMatrix, cfg: SolverConfig, n_clusters, seed,
                  method: str = "column"):
    t0 = time.perf_counter()
    C = build_coefficient_matrix(data, cfg, method=method)
    t_solve = time.perf_counter() - t0
    t0 = time.perf_counter()
    A = build_affinity(C)
    pred = spectral_cluster(A, n_clusters, seed=seed)
    t_spec = time.perf_counter() - t0
    err = None
    if data.labels is not None:
        err = clustering_error(pred, data.labels)
    return C, A, pred, err, t_solve, t_spec


def _report_dict(cfg: SolverConfig, alpha, source, data, C, pred, err,
                 cert_dict, timings) -> dict:
    return {
        "schema_version": 1,
        "config": {
            "mode": cfg.mode, "variant": cfg.variant,
            "lam": cfg.lam, "alpha": alpha,
            "mu0": cfg.mu0, "rho": cfg.rho, "mu_cap": cfg.mu_cap,
            "max_iters": cfg.max_iters, "primal_tol": cfg.primal_tol,
            "dual_tol": cfg.dual_tol, "seed": cfg.seed,
            "n_clusters": int(pred.max()) if pred is not None else None,
            "dataset": {"source": source, "n_points": data.n_points,
                        "ambient_dim": data.ambient_dim,
                        "has_labels": data.labels is not None},
        },
        "columns": [{
            "j": col.j, "objective": col.objective,
            "iterations": col.iterations, "converged": col.converged,
            "residuals": col.residuals,
        } for col in C.columns],
        "clustering": {
            "predicted": [int(v) for v in pred] if pred is not None else None,
            "error_percent": err,
        },
        "certificate": cert_dict,
        "timings": timings,
    }


def _emit_report(report: dict, out_path) -> None:
    import jsonschema
    jsonschema.validate(report, REPORT_SCHEMA)
    text = json.dumps(report, indent=2, sort_keys=True)
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_synth(args) -> int:
    if args.toy:
        data = make_toy(args.toy).arrangement.data
    else:
        dims = [int(d) for d in args.dims.split(",")]
        arr = random_arrangement(
            n=len(dims), dims=dims, D=args.ambient,
            points_per_cluster=args.points_per_cluster, spread=args.spread,
            separation=args.separation, seed=args.seed,
            force_independent=args.force_independent, layout=args.layout)
        data = arr.data
    out = Path(args.out)
    write_dataset(out, data)
    if data.labels is not None:
        write_labels(out.with_name(out.stem + "_labels.csv"), data.labels)
    print(f"wrote {data.n_points} points (D={data.ambient_dim}) to {out}")
    return EXIT_OK


def cmd_solve(args) -> int:
    data, source = _dataset_from_args(args)
    cfg, alpha = _solver_config(args, data)
    if args.n_clusters is not None:
        n_clusters = args.n_clusters
    elif data.labels is not None:
        n_clusters = data.n_clusters
    else:
        raise InvalidInputError("--n-clusters required for unlabeled data")

    C, A, pred, err, t_solve, t_spec = _run_pipeline(
        data, cfg, n_clusters, args.seed)
    n_conv = sum(col.converged for col in C.columns)
    if n_conv == 0:
        print("error: no column solve converged", file=sys.stderr)
        return EXIT_SOLVER

    cert_dict = None
    if args.certify:
        if data.labels is None:
            raise InvalidInputError("--certify needs labeled data")
        from .model import Arrangement, fit_affine_subspace
        subs = [fit_affine_subspace(data.points[:, data.cluster(ell)])
                for ell in range(1, data.n_clusters + 1)]
        cert_dict = certify(Arrangement(subs, data), C, pred).to_dict()

    if args.out_coeff:
        write_matrix(args.out_coeff, C.matrix)
    if args.out_affinity:
        write_matrix(args.out_affinity, A.matrix)
    report = _report_dict(cfg, alpha, source, data, C, pred, err, cert_dict,
                          {"solve_s": t_solve, "spectral_s": t_spec})
    _emit_report(report, args.out_report)
    if err is not None:
        print(f"clustering error: {err:.2f}% "
              f"({n_conv}/{data.n_points} columns converged)")
    return EXIT_OK


def cmd_certify(args) -> int:
    data, source = _dataset_from_args(args)
    if data.labels is None:
        raise InvalidInputError("certify requires labeled data")
    from .model import Arrangement, fit_affine_subspace
    from .solvers import CoefficientMatrix
    M = read_matrix(args.coeff)
    if M.shape != (data.n_points, data.n_points):
        raise InvalidInputError(
            f"coefficient matrix {M.shape} does not match dataset "
            f"({data.n_points} points)")
    subs = [fit_affine_subspace(data.points[:, data.cluster(ell)])
            for ell in range(1, data.n_clusters + 1)]
    C = CoefficientMatrix(M, [])
    rep = certify(Arrangement(subs, data), C)
    text = json.dumps(rep.to_dict(), indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    n_pres = sum(bool(p.subspace_preserving) for p in rep.per_point)
    print(f"subspace-preserving columns: {n_pres}/{len(rep.per_point)}; "
          f"theory violations: {rep.any_theory_violation}", file=sys.stderr)
    return EXIT_OK


def cmd_eval(args) -> int:
    pred = read_labels(args.pred)
    truth = read_labels(args.truth)
    err = clustering_error(pred, truth)
    print(f"{err:.6f}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    data, source = _dataset_from_args(args)
    if data.labels is None:
        raise InvalidInputError("sweep requires labeled data for scoring")
    alphas = [float(a) for a in args.alphas.split(",")]
    results = []
    for alpha in alphas:
        lam = compute_lambda(data, alpha)
        if args.method == "matrix":
            cfg = SolverConfig(mode=args.mode, variant="Noisy", lam=lam,
                               max_iters=REFERENCE_SWEEP_ITERS,
                               primal_tol=REFERENCE_SWEEP_TOL,
                               dual_tol=REFERENCE_SWEEP_TOL, seed=args.seed)
        else:
            cfg = SolverConfig(mode=args.mode, variant="Noisy", lam=lam,
                               max_iters=args.max_iters, seed=args.seed)
        _, _, pred, err, t_solve, t_spec = _run_pipeline(
            data, cfg, data.n_clusters, args.seed, method=args.method)
        results.append({"alpha": alpha, "lambda": lam, "error_percent": err})
        print(f"alpha={alpha:g} lambda={lam:.6g} error={err:.2f}%")
    best = min(results, key=lambda r: r["error_percent"])
    out = {"source": source, "mode": args.mode, "results": results,
           "best": best}
    if args.out:
        Path(args.out).write_text(json.dumps(out, indent=2) + "\n",
                                  encoding="utf-8")
    print(f"best: alpha={best['alpha']:g} error={best['error_percent']:.2f}%")
    return EXIT_OK


def _add_dataset_args(p, toy_required=False):
    g = p.add_mutually_exclusive_group(required=toy_required)
    g.add_argument("--toy", choices=TOY_IDS, help="built-in toy dataset")
    g.add_argument("--data", help="dataset CSV path")


def _add_solver_args(p):
    p.add_argument("--mode", choices=["SSC", "ASSC"], default="ASSC")
    p.add_argument("--variant", choices=["Exact", "Noisy"], default="Exact")
    p.add_argument("--lam", type=float, default=None,
                   help="explicit lambda for the Noisy variant")
    p.add_argument("--alpha", type=float, default=None,
                   help="alpha for the data-driven lambda rule")
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="assc", description=__doc__,
                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="write a synthetic dataset CSV")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--toy", choices=TOY_IDS)
    g.add_argument("--random", action="store_true",
                   help="random affine arrangement (see --dims etc.)")
    p.add_argument("--dims", default="1,1", help="comma list, one per cluster")
    p.add_argument("--ambient", type=int, default=3)
    p.add_argument("--points-per-cluster", type=int, default=8)
    p.add_argument("--spread", type=float, default=1.0)
    p.add_argument("--separation", type=float, default=1.0)
    p.add_argument("--layout", choices=["box", "simplex"], default="box")
    p.add_argument("--force-independent", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("solve", help="solve, cluster, and report")
    _add_dataset_args(p, toy_required=True)
    _add_solver_args(p)
    p.add_argument("--n-clusters", type=int, default=None)
    p.add_argument("--certify", action="store_true")
    p.add_argument("--out-report", default=None)
    p.add_argument("--out-coeff", default=None)
    p.add_argument("--out-affinity", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("certify", help="certificate report for a saved C")
    _add_dataset_args(p, toy_required=True)
    p.add_argument("--coeff", required=True, help="coefficient matrix CSV")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("eval", help="clustering error between two labelings")
    p.add_argument("--pred", required=True)
    p.add_argument("--truth", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="alpha grid for the noisy variant")
    _add_dataset_args(p, toy_required=True)
    p.add_argument("--mode", choices=["SSC", "ASSC"], default="ASSC")
    p.add_argument("--alphas", required=True, help="comma list of alphas")
    p.add_argument("--method", choices=["column", "matrix"], default="column",
                   help="per-column exact solves, or the matrix-form "
                        "reference protocol (loose stopping)")
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        # config-shaped problems are usage errors; data-shaped ones are not
        message = str(exc)
        print(f"error: {message}", file=sys.stderr)
        config_markers = ("--", "variant", "alpha", "n-clusters", "unknown toy")
        if any(mark in message for mark in config_markers):
            return EXIT_USAGE
        return EXIT_DATA
    except AsscError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
