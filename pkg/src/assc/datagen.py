"""Synthetic datasets: the printed toy examples plus randomized arrangements."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from .errors import GenerationFailure, InvalidInputError
from .geometry import is_affinely_independent
from .model import (AffineSubspaceModel, Arrangement, DataMatrix,
                    fit_affine_subspace)

__all__ = ["ToyDataset", "ExpectedFacts", "make_toy", "dual_example",
           "random_arrangement", "add_noise", "TOY_IDS"]

TOY_IDS = ("TwoLinesR3", "TwoLinesR2", "TriangleLineR3", "TriangleR2",
           "DualExampleR2")


@dataclass(frozen=True)
class ExpectedFacts:
    """Ground-truth assertions a toy dataset is known to satisfy.

    Dictionaries are keyed by 0-based column index; absent keys are simply
    not asserted.  These facts double as a self-consistency gate: the test
    suite re-derives each of them with the geometry/certificate machinery.
    """

    affinely_independent: Optional[bool] = None
    embedded_independent: Optional[bool] = None
    point_classes: Dict[int, str] = field(default_factory=dict)
    oracle_preserving: Dict[int, bool] = field(default_factory=dict)
    admm_preserving: Dict[int, bool] = field(default_factory=dict)
    admm_dense: Dict[int, bool] = field(default_factory=dict)
    admm_nonnegative: Dict[int, bool] = field(default_factory=dict)
    face_preserving: Dict[int, bool] = field(default_factory=dict)
    clustering_error: Optional[float] = None


@dataclass(frozen=True)
class ToyDataset:
    id: str
    arrangement: Arrangement
    expected: ExpectedFacts


def _arrangement_from_groups(groups) -> Arrangement:
    points = np.column_stack([g for g in groups])
    labels = np.concatenate([
        np.full(g.shape[1], ell + 1, dtype=np.int64)
        for ell, g in enumerate(groups)])
    data = DataMatrix(points, labels)
    subs = [fit_affine_subspace(g) for g in groups]
    return Arrangement(subs, data)


def _two_lines_r3() -> ToyDataset:
    X1 = np.array([[-2.0, -1.0, 0.0, 1.0, 2.0],
                   [1.0, 1.0, 1.0, 1.0, 1.0],
                   [1.0, 1.0, 1.0, 1.0, 1.0]])
    X2 = np.array([[1.0, 0.0, -1.0, -2.0, -3.0],
                   [0.0, 1.0, 2.0, 3.0, 4.0],
                   [0.0, 0.0, 0.0, 0.0, 0.0]])
    interior = {1: "RelativeInterior", 2: "RelativeInterior",
                3: "RelativeInterior", 6: "RelativeInterior",
                7: "RelativeInterior", 8: "RelativeInterior"}
    classes = {0: "Extreme", 4: "Extreme", 5: "Extreme", 9: "Extreme",
               **interior}
    facts = ExpectedFacts(
        affinely_independent=True,
        embedded_independent=True,
        point_classes=classes,
        oracle_preserving={j: True for j in range(10)},
        admm_preserving={j: True for j in range(10)},
        admm_dense={j: True for j in interior},
        clustering_error=0.0,
    )
    return ToyDataset("TwoLinesR3", _arrangement_from_groups([X1, X2]), facts)


def _two_lines_r2() -> ToyDataset:
    X1 = np.array([[-1.0, 0.0, 1.0, 2.0],
                   [1.0, 1.0, 1.0, 1.0]])
    X2 = np.array([[-1.0, 0.0, 1.0, 2.0],
                   [-4.0, -4.0, -4.0, -4.0]])
    classes = {0: "Extreme", 1: "RelativeInterior", 2: "RelativeInterior",
               3: "Extreme", 4: "Extreme", 5: "RelativeInterior",
               6: "RelativeInterior", 7: "Extreme"}
    facts = ExpectedFacts(
        affinely_independent=False,
        embedded_independent=False,
        point_classes=classes,
        oracle_preserving={0: False, 1: True, 2: True, 3: False,
                           4: False, 5: True, 6: True, 7: False},
        admm_preserving={0: False, 1: True, 2: True, 3: False,
                         4: False, 5: True, 6: True, 7: False},
        admm_dense={1: True, 2: True, 5: True, 6: True},
        clustering_error=0.0,
    )
    return ToyDataset("TwoLinesR2", _arrangement_from_groups([X1, X2]), facts)


def _triangle_line_r3() -> ToyDataset:
    X1 = np.array([[0.0, 1.0, 2.0, 0.5, 1.5, 1.0],
                   [1.0, 1.0, 1.0, 0.0, 0.0, -1.0],
                   [0.0, 0.0, 0.0, 0.0, 0.0, 0.0]])
    X2 = np.array([[0.0, 1.0, 2.0, 3.0, 4.0, 5.0],
                   [-2.0, -2.0, -2.0, -2.0, -2.0, -2.0],
                   [1.0, 1.0, 1.0, 1.0, 1.0, 1.0]])
    classes = {0: "Extreme", 1: "BoundaryFace", 2: "Extreme",
               3: "BoundaryFace", 4: "BoundaryFace", 5: "Extreme",
               6: "Extreme", 7: "RelativeInterior", 8: "RelativeInterior",
               9: "RelativeInterior", 10: "RelativeInterior", 11: "Extreme"}
    facts = ExpectedFacts(
        affinely_independent=False,
        embedded_independent=False,
        point_classes=classes,
        oracle_preserving={1: True, 3: True, 4: True,
                           7: True, 8: True, 9: True, 10: True},
        admm_preserving={1: True, 3: True, 4: True,
                         7: True, 8: True, 9: True, 10: True},
        face_preserving={1: True, 3: True, 4: True},
    )
    return ToyDataset("TriangleLineR3",
                      _arrangement_from_groups([X1, X2]), facts)


def _triangle_r2() -> ToyDataset:
    v1 = np.array([0.0, -1.0])
    v5 = np.array([1.0, 1.0])
    v9 = np.array([2.0, -1.0])
    cols = []
    for k in range(4):                      # x1..x4 along edge v1 -> v5
        cols.append(v1 + (k / 4.0) * (v5 - v1))
    for k in range(4):                      # x5..x8 along edge v5 -> v9
        cols.append(v5 + (k / 4.0) * (v9 - v5))
    for k in range(8):                      # x9..x16 along edge v9 -> v1
        cols.append(v9 + (k / 8.0) * (v1 - v9))
    X = np.column_stack(cols)
    classes = {j: "BoundaryFace" for j in range(16)}
    classes[0] = classes[4] = classes[8] = "Extreme"
    nonneg = {j: True for j in range(16)}
    nonneg[0] = nonneg[4] = nonneg[8] = False
    facts = ExpectedFacts(
        affinely_independent=True,   # a single subspace, trivially
        point_classes=classes,
        admm_nonnegative=nonneg,
        clustering_error=0.0,
    )
    return ToyDataset("TriangleR2", _arrangement_from_groups([X]), facts)


def dual_example(a2_point=(0.0, 0.0)) -> ToyDataset:
    """The worked dual-point example: four collinear samples plus one
    parameterized sample from a second cluster."""
    X1 = np.array([[-1.0, 0.0, 1.0, 2.0],
                   [1.0, 1.0, 1.0, 1.0]])
    X2 = np.asarray(a2_point, dtype=np.float64).reshape(2, 1)
    classes = {0: "Extreme", 1: "RelativeInterior",
               2: "RelativeInterior", 3: "Extreme"}
    facts = ExpectedFacts(point_classes=classes)
    return ToyDataset("DualExampleR2",
                      _arrangement_from_groups([X1, X2]), facts)


_BUILDERS = {
    "twolinesr3": _two_lines_r3,
    "twolinesr2": _two_lines_r2,
    "trianglelineR3".lower(): _triangle_line_r3,
    "triangler2": _triangle_r2,
    "dualexampler2": dual_example,
}


def make_toy(toy_id: str) -> ToyDataset:
    """Build one of the named toy datasets with its expected facts."""
    key = toy_id.replace("_", "").replace("-", "").lower()
    builder = _BUILDERS.get(key)
    if builder is None:
        raise InvalidInputError(
            f"unknown toy dataset {toy_id!r}; valid ids: {', '.join(TOY_IDS)}")
    return builder()


def _random_subspace(rng, D, d, separation):
    G = rng.normal(size=(D, max(d, 1)))
    Q, _ = np.linalg.qr(G)
    basis = Q[:, :d]
    offset = separation * rng.normal(size=D)
    return offset, basis


def random_arrangement(n: int, dims, D: int, points_per_cluster: int,
                       spread: float = 1.0, separation: float = 1.0,
                       seed: int = 0, force_independent: bool = False,
                       layout: str = "box", max_tries: int = 100) -> Arrangement:
    """Random affine arrangement with points drawn inside each subspace.

    layout "box" scatters points uniformly in subspace coordinates; layout
    "simplex" places d+1 spread-out vertices per subspace and fills the
    remaining budget with edge-interior and strict-interior combinations,
    guaranteeing all three hull classes occur (for d >= 2).
    """
    dims = list(dims)
    if len(dims) != n:
        raise InvalidInputError("need one dimension per cluster")
    if any(d < 1 or d >= D for d in dims):
        raise InvalidInputError("cluster dims must satisfy 1 <= d < D")
    if points_per_cluster < max(dims) + 2:
        raise InvalidInputError("need at least d+2 points per cluster")
    if force_independent and sum(dims) + n - 1 > D:
        raise GenerationFailure(
            f"affine independence impossible: sum(dims)+n-1 = "
            f"{sum(dims) + n - 1} exceeds ambient dim {D}")

    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        subs = [_random_subspace(rng, D, d, separation) for d in dims]
        models = [AffineSubspaceModel(off, B) for off, B in subs]
        if force_independent and not is_affinely_independent(models):
            continue
        groups = []
        for (off, B), d in zip(subs, dims):
            npts = points_per_cluster
            if layout == "box":
                coords = rng.uniform(-spread, spread, size=(d, npts))
            elif layout == "simplex":
                verts = spread * np.column_stack(
                    [np.zeros(d)] + [2.0 * np.eye(d)[:, k] for k in range(d)])
                verts = verts - verts.mean(axis=1, keepdims=True)
                rest = npts - (d + 1)
                combos = []
                n_edge = rest // 2 if d >= 2 else 0
                for _k in range(n_edge):
                    i, j = rng.choice(d + 1, size=2, replace=False)
                    t = rng.uniform(0.2, 0.8)
                    combos.append(t * verts[:, i] + (1 - t) * verts[:, j])
                for _k in range(rest - n_edge):
                    wgt = rng.dirichlet(np.full(d + 1, 2.0))
                    wgt = 0.9 * wgt + 0.1 / (d + 1)   # keep weights away from 0
                    combos.append(verts @ wgt)
                coords = np.column_stack([verts] + combos) if combos \
                    else verts
            else:
                raise InvalidInputError(f"unknown layout {layout!r}")
            groups.append(off[:, None] + B @ coords)
        return _arrangement_from_groups(groups)
    raise GenerationFailure(
        f"no affinely independent arrangement found in {max_tries} tries")


def add_noise(data: DataMatrix, sigma: float, seed: int = 0) -> DataMatrix:
    """Additive Gaussian perturbation for noisy-variant experiments."""
    if sigma < 0:
        raise InvalidInputError("sigma must be nonnegative")
    rng = np.random.default_rng(seed)
    return DataMatrix(data.points + sigma * rng.normal(size=data.points.shape),
                      data.labels)
