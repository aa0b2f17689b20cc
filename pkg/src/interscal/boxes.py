"""Exact min / max / mean Euclidean distances between axis-aligned boxes.

Per coordinate, the smallest separation of two intervals is the gap
``max(0, a.lo - b.hi, b.lo - a.hi)`` and the largest is
``max(|a.hi - b.lo|, |b.hi - a.lo|)``; because the Euclidean norm is
separable over a product of intervals, the box distances are the norms of
those per-coordinate vectors.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .intervals import Box, IntervalDissimMatrix, IntervalTable, SelfMode


@dataclass(frozen=True, eq=False)
class DistanceWitness:
    """Pair of points, one in each box, realising a distance."""

    point_in_i: np.ndarray
    point_in_j: np.ndarray
    value: float


def _check(a: Box, b: Box) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"boxes of dimension {a.dim} and {b.dim}")


def _gaps(alo, ahi, blo, bhi):
    return np.maximum(0.0, np.maximum(alo - bhi, blo - ahi))


def _spans(alo, ahi, blo, bhi):
    return np.maximum(np.abs(ahi - blo), np.abs(bhi - alo))


def min_box_distance(a: Box, b: Box) -> tuple[float, DistanceWitness]:
    _check(a, b)
    value = float(np.sqrt(np.sum(_gaps(a.lo, a.hi, b.lo, b.hi) ** 2)))
    # a below b: a.hi / b.lo; b below a: a.lo / b.hi; overlap: shared point
    overlap = np.maximum(a.lo, b.lo)
    pa = np.where(a.hi < b.lo, a.hi, np.where(b.hi < a.lo, a.lo, overlap))
    pb = np.where(a.hi < b.lo, b.lo, np.where(b.hi < a.lo, b.hi, overlap))
    return value, DistanceWitness(pa, pb, value)


def max_box_distance(a: Box, b: Box) -> tuple[float, DistanceWitness]:
    _check(a, b)
    value = float(np.sqrt(np.sum(_spans(a.lo, a.hi, b.lo, b.hi) ** 2)))
    up = np.abs(a.hi - b.lo) >= np.abs(b.hi - a.lo)
    pa = np.where(up, a.hi, a.lo)
    pb = np.where(up, b.lo, b.hi)
    return value, DistanceWitness(pa, pb, value)


def mean_box_distance(a: Box, b: Box) -> float:
    lo, _ = min_box_distance(a, b)
    hi, _ = max_box_distance(a, b)
    return (lo + hi) / 2


def diameter(box: Box) -> float:
    return float(np.sqrt(np.sum((box.hi - box.lo) ** 2)))


def box_distance_bounds(lo: np.ndarray, hi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pairwise (min, max) distance matrices for boxes given as m x n bound arrays.

    Each pair is evaluated independently of every other, so entry (i, j)
    does not depend on evaluation order and equals entry (j, i) bit for bit.
    """
    alo, ahi = lo[:, None, :], hi[:, None, :]
    blo, bhi = lo[None, :, :], hi[None, :, :]
    g = _gaps(alo, ahi, blo, bhi)
    h = _spans(alo, ahi, blo, bhi)
    return np.sqrt(np.sum(g * g, axis=-1)), np.sqrt(np.sum(h * h, axis=-1))


def interval_distance_matrix(table: IntervalTable) -> IntervalDissimMatrix:
    """[min, max] box distances between every pair of table rows.

    The diagonal holds [0, diameter of the box] (feature-derived mode).
    """
    dmin, dmax = box_distance_bounds(table.lo, table.hi)
    np.fill_diagonal(dmin, 0.0)
    return IntervalDissimMatrix(dmin, dmax, SelfMode.FEATURE_DERIVED, table.names)
