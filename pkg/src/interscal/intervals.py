"""Interval, box and interval-matrix types.

Every container stores bounds as two read-only float arrays (``lo`` and
``hi``) rather than as nested :class:`Interval` objects; the scalar type is
used at the edges (construction, reporting, formatting).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch, NonFiniteBound, ReversedBounds


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


def _check_bounds(lo: np.ndarray, hi: np.ndarray) -> None:
    if lo.shape != hi.shape:
        raise DimensionMismatch(f"lower bounds {lo.shape} vs upper bounds {hi.shape}")
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise NonFiniteBound("interval bounds must be finite")
    bad = np.argwhere(lo > hi)
    if len(bad):
        idx = tuple(int(k) for k in bad[0])
        raise ReversedBounds(float(lo[idx]), float(hi[idx]), location=idx)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise NonFiniteBound(f"non-finite interval bound: [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ReversedBounds(self.lo, self.hi)

    def width(self) -> float:
        return self.hi - self.lo

    def midpoint(self) -> float:
        # lo + w/2 stays inside [lo, hi] even when lo + hi would overflow
        return self.lo + (self.hi - self.lo) / 2

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self):
        yield self.lo
        yield self.hi


def make_interval(lo: float, hi: float) -> Interval:
    return Interval(float(lo), float(hi))


@dataclass(frozen=True, eq=False)
class Box:
    """Axis-aligned hyperrectangle, the product of ``n`` intervals."""

    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo, hi = _frozen(self.lo).reshape(-1), _frozen(self.hi).reshape(-1)
        if lo.size == 0:
            raise DimensionMismatch("a box needs at least one coordinate")
        _check_bounds(lo, hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def from_intervals(cls, coords: Sequence[Interval | tuple[float, float]]) -> "Box":
        pairs = [tuple(c) for c in coords]
        return cls([p[0] for p in pairs], [p[1] for p in pairs])

    @classmethod
    def point(cls, x) -> "Box":
        return cls(x, x)

    @property
    def dim(self) -> int:
        return self.lo.size

    @property
    def coords(self) -> list[Interval]:
        return [Interval(float(a), float(b)) for a, b in zip(self.lo, self.hi)]

    def contains(self, x, atol: float = 0.0) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lo - atol) and np.all(x <= self.hi + atol))

    def __eq__(self, other):
        if not isinstance(other, Box):
            return NotImplemented
        return np.array_equal(self.lo, other.lo) and np.array_equal(self.hi, other.hi)

    def __repr__(self):
        body = " x ".join(f"[{a:g},{b:g}]" for a, b in zip(self.lo, self.hi))
        return f"Box({body})"


@dataclass(frozen=True, eq=False)
class IntervalTable:
    """``m`` objects described by ``n`` interval variables (lo/hi are m x n)."""

    lo: np.ndarray
    hi: np.ndarray
    columns: tuple[str, ...] = ()
    names: tuple[str, ...] = ()

    def __post_init__(self):
        lo, hi = _frozen(self.lo), _frozen(self.hi)
        if lo.ndim != 2:
            raise DimensionMismatch("an interval table is two-dimensional (objects x variables)")
        _check_bounds(lo, hi)
        m, n = lo.shape
        if n < 1:
            raise DimensionMismatch("an interval table needs at least one variable")
        columns = tuple(self.columns) or tuple(f"X{k + 1}" for k in range(n))
        names = tuple(self.names) or tuple(f"S{i + 1}" for i in range(m))
        if len(columns) != n or len(names) != m:
            raise DimensionMismatch("label counts do not match the table shape")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "names", names)

    @classmethod
    def from_boxes(cls, boxes: Sequence[Box], columns=(), names=()) -> "IntervalTable":
        dims = {b.dim for b in boxes}
        if len(dims) > 1:
            raise DimensionMismatch(f"boxes of differing dimension: {sorted(dims)}")
        return cls(np.stack([b.lo for b in boxes]), np.stack([b.hi for b in boxes]), columns, names)

    @property
    def m(self) -> int:
        return self.lo.shape[0]

    @property
    def n(self) -> int:
        return self.lo.shape[1]

    def row(self, i: int) -> Box:
        return Box(self.lo[i], self.hi[i])

    @property
    def rows(self) -> list[Box]:
        return [self.row(i) for i in range(self.m)]

    def midpoints(self) -> np.ndarray:
        return self.lo + (self.hi - self.lo) / 2

    def __eq__(self, other):
        if not isinstance(other, IntervalTable):
            return NotImplemented
        return (np.array_equal(self.lo, other.lo) and np.array_equal(self.hi, other.hi)
                and self.columns == other.columns and self.names == other.names)


class SelfMode(enum.Enum):
    """How self-dissimilarities are interpreted.

    ``PAIRWISE_ZERO``: judged pairwise data, every diagonal entry is [0, 0].
    ``FEATURE_DERIVED``: dissimilarities computed from boxes, the diagonal
    entry is [0, diameter of the object's box].
    """

    PAIRWISE_ZERO = "pairwise"
    FEATURE_DERIVED = "feature"


@dataclass(frozen=True, eq=False)
class IntervalDissimMatrix:
    """Square matrix of interval dissimilarities.

    Construction only checks shape and per-entry interval validity; the
    matrix-level invariants (symmetry, sign, diagonal) are checked by
    :func:`validate_dissim` so that broken inputs can still be reported on.
    """

    lo: np.ndarray
    hi: np.ndarray
    self_mode: SelfMode = SelfMode.PAIRWISE_ZERO
    names: tuple[str, ...] = ()

    def __post_init__(self):
        lo, hi = _frozen(self.lo), _frozen(self.hi)
        if lo.ndim != 2 or lo.shape[0] != lo.shape[1]:
            raise DimensionMismatch(f"dissimilarity matrix must be square, got {lo.shape}")
        _check_bounds(lo, hi)
        names = tuple(self.names) or tuple(f"S{i + 1}" for i in range(lo.shape[0]))
        if len(names) != lo.shape[0]:
            raise DimensionMismatch("name count does not match the matrix order")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "self_mode", SelfMode(self.self_mode))
        object.__setattr__(self, "names", names)

    @classmethod
    def from_points(cls, d, names=()) -> "IntervalDissimMatrix":
        """Degenerate matrix with every entry collapsed to the point d[i, j]."""
        d = np.asarray(d, dtype=float)
        return cls(d, d, SelfMode.PAIRWISE_ZERO, names)

    @property
    def m(self) -> int:
        return self.lo.shape[0]

    def entry(self, i: int, j: int) -> Interval:
        return Interval(float(self.lo[i, j]), float(self.hi[i, j]))

    def mean(self) -> np.ndarray:
        return (self.lo + self.hi) / 2

    def is_degenerate(self) -> bool:
        return bool(np.array_equal(self.lo, self.hi))

    def scaled(self, c: float) -> "IntervalDissimMatrix":
        return IntervalDissimMatrix(self.lo * c, self.hi * c, self.self_mode, self.names)

    def permuted(self, perm: Sequence[int]) -> "IntervalDissimMatrix":
        p = np.asarray(perm)
        return IntervalDissimMatrix(self.lo[np.ix_(p, p)], self.hi[np.ix_(p, p)],
                                    self.self_mode, tuple(self.names[k] for k in p))

    def __eq__(self, other):
        if not isinstance(other, IntervalDissimMatrix):
            return NotImplemented
        return (np.array_equal(self.lo, other.lo) and np.array_equal(self.hi, other.hi)
                and self.self_mode is other.self_mode and self.names == other.names)


@dataclass(frozen=True)
class Violation:
    kind: str  # "asymmetry" | "negative" | "self_dissimilarity"
    i: int
    j: int
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def __bool__(self):
        # truthy when something is wrong, mirroring a non-empty list
        return bool(self.violations)

    def __len__(self):
        return len(self.violations)

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.violations)

    def kinds(self) -> list[str]:
        return [v.kind for v in self.violations]

    def summary(self) -> str:
        return "; ".join(f"{v.kind} at ({v.i}, {v.j}){': ' + v.detail if v.detail else ''}"
                         for v in self.violations)


def validate_dissim(matrix: IntervalDissimMatrix) -> ValidationReport:
    """List every broken matrix invariant with its (0-based) location.

    Asymmetry is reported once per unordered pair, at (i, j) with i < j.
    """
    lo, hi, m = matrix.lo, matrix.hi, matrix.m
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            if lo[i, j] != lo[j, i] or hi[i, j] != hi[j, i]:
                out.append(Violation("asymmetry", i, j,
                                     f"[{lo[i, j]}, {hi[i, j]}] vs [{lo[j, i]}, {hi[j, i]}]"))
    for i, j in np.argwhere(lo < 0):
        out.append(Violation("negative", int(i), int(j), f"lower bound {lo[i, j]}"))
    for i in range(m):
        if lo[i, i] != 0:
            out.append(Violation("self_dissimilarity", i, i, f"lower bound {lo[i, i]} != 0"))
        elif matrix.self_mode is SelfMode.PAIRWISE_ZERO and hi[i, i] != 0:
            out.append(Violation("self_dissimilarity", i, i,
                                 f"upper bound {hi[i, i]} != 0 under pairwise mode"))
    return ValidationReport(tuple(out))
