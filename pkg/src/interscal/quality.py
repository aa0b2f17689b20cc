"""Embedding quality: box-distance stress, explained variance, method comparison."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boxes import box_distance_bounds
from .errors import AllNonpositive, InvalidInput, ShapeMismatch
from .intervals import IntervalDissimMatrix
from .linalg import POSITIVE_RTOL


@dataclass(frozen=True)
class StressReport:
    """Squared misfit between embedded box distances and observed bounds.

    ``per_pair`` rows are (i, j, d_min, d_max, delta_lo, delta_hi) for i < j.
    ``normalized_stress`` divides by the sum of delta_lo**2 + delta_hi**2.
    """

    raw_stress: float
    normalized_stress: float
    per_pair: tuple[tuple[int, int, float, float, float, float], ...]
    normalizer: str = "sum(delta_lo^2 + delta_hi^2) over i<j"


def embedding_stress(delta: IntervalDissimMatrix, e) -> StressReport:
    """``e`` is anything with (m, q) ``lo``/``hi`` interval coordinates."""
    lo, hi = np.asarray(e.lo, dtype=float), np.asarray(e.hi, dtype=float)
    if lo.shape != hi.shape or lo.ndim != 2 or lo.shape[0] != delta.m:
        raise ShapeMismatch(f"embedding with {lo.shape[0]} objects vs {delta.m}x{delta.m} dissimilarities")
    dmin, dmax = box_distance_bounds(lo, hi)
    iu, ju = np.triu_indices(delta.m, k=1)
    pairs = tuple((int(i), int(j), float(dmin[i, j]), float(dmax[i, j]),
                   float(delta.lo[i, j]), float(delta.hi[i, j])) for i, j in zip(iu, ju))
    raw = sum((a - c) ** 2 + (b - d) ** 2 for _, _, a, b, c, d in pairs)
    denom = sum(c * c + d * d for _, _, _, _, c, d in pairs)
    if denom > 0:
        normalized = raw / denom
    else:
        normalized = 0.0 if raw == 0 else float("inf")
    return StressReport(float(raw), float(normalized), pairs)


def variance_explained(eigenvalues, q: int) -> float:
    w = np.asarray(eigenvalues, dtype=float)
    if q < 1:
        raise InvalidInput("q must be at least 1")
    if w.size == 0 or w.max() <= 0 or not np.any(w > POSITIVE_RTOL * w.max()):
        raise AllNonpositive("no positive eigenvalues")
    pos = np.maximum(np.sort(w)[::-1], 0.0)
    return float(min(1.0, pos[:q].sum() / pos.sum()))


@dataclass(frozen=True)
class MethodComparison:
    """Per-dimension agreement of two interval configurations (diagnostic only)."""

    center_correlation: tuple[float, ...]
    signs: tuple[int, ...]
    width_correlation: tuple[float, ...]
    width_ratio: tuple[float, ...]   # mean width of the first input / mean width of the second


def _pearson(x, y) -> float:
    x, y = x - x.mean(), y - y.mean()
    den = np.sqrt((x * x).sum() * (y * y).sum())
    return float((x * y).sum() / den) if den > 0 else float("nan")


def _bounds(x):
    if hasattr(x, "lo") and hasattr(x, "hi"):
        return x.lo, x.hi
    lo, hi = x
    return lo, hi


def compare_methods(interscal_coords, pca_coords) -> MethodComparison:
    """Compare two (m, q) interval configurations column by column.

    Either argument may be an embedding/Tops result or a (lo, hi) pair.
    Center correlations are sign-aligned to be nonnegative; ``signs`` records
    the flip applied to the second input.
    """
    arrays = [np.asarray(v, dtype=float) for v in (*_bounds(interscal_coords), *_bounds(pca_coords))]
    if len({x.shape for x in arrays}) != 1 or arrays[0].ndim != 2:
        raise ShapeMismatch("interval configurations must share one (m, q) shape")
    a_lo, a_hi, b_lo, b_hi = arrays
    if a_lo.shape[0] < 3:
        raise ShapeMismatch("need at least three objects to correlate")
    a_mid, b_mid = (a_lo + a_hi) / 2, (b_lo + b_hi) / 2
    a_w, b_w = a_hi - a_lo, b_hi - b_lo
    corr, signs, wcorr, wratio = [], [], [], []
    for r in range(a_lo.shape[1]):
        c = _pearson(a_mid[:, r], b_mid[:, r])
        s = -1 if c < 0 else 1
        corr.append(abs(c) if c == c else c)
        signs.append(s)
        wcorr.append(_pearson(a_w[:, r], b_w[:, r]))
        bw = b_w[:, r].mean()
        wratio.append(float(a_w[:, r].mean() / bw) if bw > 0 else float("nan"))
    return MethodComparison(tuple(corr), tuple(signs), tuple(wcorr), tuple(wratio))
