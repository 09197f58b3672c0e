"""Affine sparse subspace clustering with exact oracles and certificates.

End-to-end pipeline: per-point l1/affine programs (ADMM or an exact LP
oracle), spectral clustering on the induced affinity, and a certificate
engine that mechanically verifies geometric correctness conditions on
concrete datasets.
"""

__version__ = "0.1.0"

from ._kernels import backend_name
from .certificates import (CertificateReport, certify, check_theorem4,
                           cluster_connectivity, evaluate_guarantees,
                           is_subspace_dense, is_subspace_preserving,
                           subspace_incoherence)
from .clustering import (AffinityMatrix, build_affinity, clustering_error,
                         spectral_cluster)
from .datagen import (ExpectedFacts, ToyDataset, add_noise, dual_example,
                      make_toy, random_arrangement)
from .errors import (AsscError, GenerationFailure, InternalError,
                     InvalidInputError, NoRepresentationError,
                     PreconditionViolation, SolverFailure)
from .geometry import (PointClass, affine_hull_dim, are_affinely_disjoint,
                       classify_point, embedded_spans_independent,
                       face_affine_hull_intersects_hull,
                       is_affinely_independent, strict_convex_combination,
                       subspace_intersects_hull)
from .model import (AffineSubspaceModel, Arrangement, DataMatrix,
                    embed_matrix, fit_affine_subspace, homogeneous_embed,
                    normalize_labels)
from .numerics import (LpProblem, LpSolution, min_norm_on_optimal_face,
                       rank_with_tol, soft_threshold, solve_lp,
                       solve_lp_sequence, symmetric_eig)
from .solvers import (ColumnSolution, CoefficientMatrix, SolverConfig,
                      build_coefficient_matrix, compute_dual_point,
                      compute_lambda, solve_column_admm, solve_column_oracle,
                      solve_noisy_matrix)

__all__ = [name for name in dir() if not name.startswith("_")]
