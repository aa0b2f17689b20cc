"""Multidimensional scaling of interval-valued dissimilarities (INTERSCAL),
Tops interval PCA, and box-distance stress."""
from .boxes import (DistanceWitness, interval_distance_matrix, max_box_distance,
                    mean_box_distance, min_box_distance)
from .embed import (AugmentedMatrix, IntervalEmbedding, build_augmented, describe_symbolic,
                    interscal_embed, rotate_embedding)
from .errors import *  # noqa: F401,F403
from .intervals import (Box, Interval, IntervalDissimMatrix, IntervalTable, SelfMode,
                        ValidationReport, Violation, make_interval, validate_dissim)
from .linalg import ClassicalScaling, EigenDecomposition, classical_mds, double_center, eigen_symmetric
from .quality import StressReport, compare_methods, embedding_stress, variance_explained
from .tops import TopsResult, VertexMatrix, standardize, tops_pca, vertex_matrix

__version__ = "0.1.0"
