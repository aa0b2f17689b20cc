"""Double centering, a cyclic Jacobi eigensolver and classical (Torgerson-Gower) scaling."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidInput, NoConvergence, NotSymmetric, RankDeficientWarning

#: eigenvalues at or below POSITIVE_RTOL * lambda_max carry no dimension
POSITIVE_RTOL = 1e-10
#: entries within this relative distance of the column's largest magnitude tie for the sign rule
SIGN_TIE_RTOL = 1e-9


def _square(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a


def double_center(d) -> np.ndarray:
    """Inner-product matrix -1/2 (d^2 - row means - column means + grand mean)."""
    d = _square(d)
    if np.any(d < 0):
        raise InvalidInput("dissimilarities must be nonnegative")
    d2 = d * d
    col = d2.mean(axis=0, keepdims=True)
    row = d2.mean(axis=1, keepdims=True)
    b = -0.5 * (d2 - row - col + d2.mean())
    # exact symmetry: the formula is symmetric for symmetric d, rounding aside
    return (b + b.T) / 2


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Eigenvalues in non-increasing order, eigenvectors as matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int = 0

    def positive_rank(self, rtol: float = POSITIVE_RTOL) -> int:
        return positive_rank(self.eigenvalues, rtol)


def positive_rank(eigenvalues, rtol: float = POSITIVE_RTOL) -> int:
    w = np.asarray(eigenvalues, dtype=float)
    if w.size == 0 or w.max() <= 0:
        return 0
    return int(np.count_nonzero(w > rtol * w.max()))


def fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-magnitude entry is positive (lowest index on ties)."""
    v = np.array(vectors, dtype=float)
    for r in range(v.shape[1]):
        mag = np.abs(v[:, r])
        top = mag.max()
        if top == 0:
            continue
        k = np.flatnonzero(mag >= top * (1 - SIGN_TIE_RTOL))[0]
        if v[k, r] < 0:
            v[:, r] = -v[:, r]
    return v


def _off_norm(a: np.ndarray) -> float:
    return math.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))


def _jacobi(a: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, np.ndarray, int]:
    n = a.shape[0]
    v = np.eye(n)
    scale = np.linalg.norm(a)
    if n < 2 or scale == 0:
        return np.diag(a).copy(), v, 0
    for sweep in range(1, max_sweeps + 1):
        off = _off_norm(a)
        if off <= 1e-15 * scale:
            return np.diag(a).copy(), v, sweep - 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                # negligible next to both diagonal entries: drop it outright
                if sweep > 4 and abs(app) + 100 * abs(apq) == abs(app) and abs(aqq) + 100 * abs(apq) == abs(aqq):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.hypot(theta, 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    off = _off_norm(a)
    if off <= 1e-15 * scale:
        return np.diag(a).copy(), v, max_sweeps
    raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                        f"(off-diagonal norm {off:.3e})")


def eigen_symmetric(a, max_sweeps: int = 100, sym_tol: float = 1e-12) -> EigenDecomposition:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    The input is symmetrised by averaging once its asymmetry is confirmed to be
    within ``sym_tol`` (relative to max(1, ||a||_inf)).  Eigenvalues come back
    non-increasing and each eigenvector column has its largest-magnitude entry
    positive.  The result depends only on the input bits.
    """
    a = _square(a)
    if not np.all(np.isfinite(a)):
        raise InvalidInput("matrix has non-finite entries")
    norm_inf = np.abs(a).sum(axis=1).max() if a.size else 0.0
    if np.abs(a - a.T).max(initial=0.0) > sym_tol * max(1.0, norm_inf):
        raise NotSymmetric("matrix is not symmetric within tolerance")
    work = (a + a.T) / 2
    w, v, sweeps = _jacobi(work, max_sweeps)
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(w[order], fix_signs(v[:, order]), sweeps)


@dataclass(frozen=True, eq=False)
class ClassicalScaling:
    coords: np.ndarray
    eigenvalues: np.ndarray
    positive_rank: int

    @property
    def rank_deficient(self) -> bool:
        return self.positive_rank < self.coords.shape[1]


def principal_coordinates(eig: EigenDecomposition, q: int) -> tuple[np.ndarray, int]:
    """Coordinates sqrt(lambda_r) * v_r for the top ``q`` eigenpairs.

    Row p, column r is point p on dimension r.  Columns whose eigenvalue is
    not positive are zero; a RankDeficientWarning says how many.
    """
    if q < 1:
        raise InvalidInput("at least one dimension is required")
    npts = eig.eigenvectors.shape[0]
    rank = eig.positive_rank()
    k = min(q, rank)
    coords = np.zeros((npts, q))
    coords[:, :k] = eig.eigenvectors[:, :k] * np.sqrt(eig.eigenvalues[:k])
    if rank < q:
        warnings.warn(f"only {rank} positive eigenvalue(s) for {q} requested dimension(s); "
                      f"{q - k} column(s) zero-filled", RankDeficientWarning, stacklevel=3)
    return coords, rank


def classical_mds(d, q: int, max_sweeps: int = 100) -> ClassicalScaling:
    """Torgerson-Gower scaling of a numeric dissimilarity matrix."""
    eig = eigen_symmetric(double_center(d), max_sweeps=max_sweeps)
    coords, rank = principal_coordinates(eig, q)
    return ClassicalScaling(coords, eig.eigenvalues, rank)
