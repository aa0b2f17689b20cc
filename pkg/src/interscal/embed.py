"""INTERSCAL: classical scaling of interval dissimilarities.

Each object i gets two rows in a 2m x 2m numeric matrix.  Against another
object j, the first row uses the minimum dissimilarity and the midpoint,
the second the midpoint and the maximum; within its own 2 x 2 block the
two rows sit at the object's maximum self-dissimilarity.  Scaling that
matrix classically yields 2m points, and the two points of each object
are folded into one interval per dimension.
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, InvalidInput, NotOrthogonal
from .intervals import Box, IntervalDissimMatrix, SelfMode, validate_dissim
from .linalg import double_center, eigen_symmetric, principal_coordinates


@dataclass(frozen=True, eq=False)
class AugmentedMatrix:
    entries: np.ndarray
    base_m: int
    self_mode: SelfMode


def build_augmented(delta: IntervalDissimMatrix) -> AugmentedMatrix:
    report = validate_dissim(delta)
    if report:
        raise InvalidInput(f"invalid dissimilarity matrix: {report.summary()}")
    m = delta.m
    mid = delta.mean()
    d = np.empty((2 * m, 2 * m))
    d[0::2, 0::2] = delta.lo
    d[0::2, 1::2] = mid
    d[1::2, 0::2] = mid
    d[1::2, 1::2] = delta.hi
    own = np.diag(delta.hi)
    idx = np.arange(m)
    d[2 * idx, 2 * idx] = 0.0
    d[2 * idx + 1, 2 * idx + 1] = 0.0
    d[2 * idx, 2 * idx + 1] = own
    d[2 * idx + 1, 2 * idx] = own
    d.setflags(write=False)
    return AugmentedMatrix(d, m, delta.self_mode)


def fold_pairs(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-object [min, max] over the point rows 2i and 2i + 1."""
    first, second = points[0::2], points[1::2]
    return np.minimum(first, second), np.maximum(first, second)


@dataclass(frozen=True, eq=False)
class IntervalEmbedding:
    """Result of an INTERSCAL run.

    ``point_coords`` is (2m, q); ``lo``/``hi`` are (m, q) interval principal
    coordinates.  Embeddings read back from a file carry no point coordinates.
    """

    eigenvalues: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    positive_rank: int
    point_coords: np.ndarray | None = None
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(f"S{i + 1}" for i in range(self.lo.shape[0])))

    @property
    def m(self) -> int:
        return self.lo.shape[0]

    @property
    def dims(self) -> int:
        return self.lo.shape[1]

    def box(self, i: int) -> Box:
        return Box(self.lo[i], self.hi[i])

    def widths(self) -> np.ndarray:
        return self.hi - self.lo

    def midpoints(self) -> np.ndarray:
        return (self.lo + self.hi) / 2


def interscal_embed(delta: IntervalDissimMatrix, q: int, max_sweeps: int = 100) -> IntervalEmbedding:
    """Embed each object as a q-dimensional box.

    Dimensions are ordered by decreasing eigenvalue.  When fewer than q
    eigenvalues are positive the surplus columns are zero and a
    RankDeficientWarning is issued.
    """
    aug = build_augmented(delta)
    eig = eigen_symmetric(double_center(aug.entries), max_sweeps=max_sweeps)
    points, rank = principal_coordinates(eig, q)
    lo, hi = fold_pairs(points)
    return IntervalEmbedding(eig.eigenvalues, lo, hi, rank, points, delta.names)


def rotate_embedding(e: IntervalEmbedding, t) -> IntervalEmbedding:
    """Apply an orthogonal q x q transform to the points and refold the intervals."""
    if e.point_coords is None:
        raise InvalidInput("embedding has no point coordinates to rotate")
    t = np.asarray(t, dtype=float)
    if t.shape != (e.dims, e.dims):
        raise NotOrthogonal(f"expected a {e.dims}x{e.dims} matrix, got {t.shape}")
    if np.abs(t @ t.T - np.eye(e.dims)).max() > 1e-10:
        raise NotOrthogonal("transform is not orthogonal within 1e-10")
    points = e.point_coords @ t
    lo, hi = fold_pairs(points)
    return replace(e, lo=lo, hi=hi, point_coords=points)


def _fmt2(x: float) -> str:
    q = decimal.Decimal(repr(float(x))).quantize(decimal.Decimal("0.01"), rounding=decimal.ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)
    return f"{q:.2f}"


def describe_symbolic(e: IntervalEmbedding, i: int, labels: Sequence[str] | None = None) -> str:
    """Render object ``i`` (0-based) as a conjunction of interval memberships."""
    if not 0 <= i < e.m:
        raise IndexOutOfRange(f"object index {i} outside 0..{e.m - 1}")
    labels = list(labels) if labels else [f"Y{r + 1}" for r in range(e.dims)]
    terms = [f"[{labels[r]}(w) ∈ [{_fmt2(e.lo[i, r])},{_fmt2(e.hi[i, r])}]]" for r in range(e.dims)]
    return "a(w)=" + " ∧ ".join(terms)
