"""Tops principal component analysis: PCA of every box corner.

Each object contributes the 2**n corners of its box to a vertex matrix;
ordinary PCA of that matrix gives principal axes, and each object's
interval component is the range of its own corners' projections.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooLarge, InvalidInput, ZeroVariance
from .intervals import IntervalTable
from .linalg import eigen_symmetric

MAX_VERTEX_DIM = 20


@dataclass(frozen=True, eq=False)
class VertexMatrix:
    rows: np.ndarray       # (m * 2**n, n)
    row_owner: np.ndarray  # (m * 2**n,) object index of each row

    @property
    def corners_per_object(self) -> int:
        m = int(self.row_owner.max()) + 1 if self.row_owner.size else 0
        return self.rows.shape[0] // max(m, 1)


def vertex_matrix(table: IntervalTable) -> VertexMatrix:
    """Corners of every box; coordinate 1 varies slowest, lo before hi."""
    m, n = table.m, table.n
    if n > MAX_VERTEX_DIM:
        raise DimensionTooLarge(f"{n} variables would need {2 ** n} corners per object")
    pick_hi = np.array(list(itertools.product((False, True), repeat=n)))  # (2**n, n)
    rows = np.where(pick_hi[None, :, :], table.hi[:, None, :], table.lo[:, None, :])
    owner = np.repeat(np.arange(m), 2 ** n)
    return VertexMatrix(rows.reshape(m * 2 ** n, n), owner)


def standardize(mat: VertexMatrix) -> VertexMatrix:
    """Center and scale each column to unit population standard deviation."""
    x = mat.rows
    sd = x.std(axis=0)
    zero = np.flatnonzero(sd == 0)
    if zero.size:
        raise ZeroVariance(int(zero[0]))
    return VertexMatrix((x - x.mean(axis=0)) / sd, mat.row_owner)


@dataclass(frozen=True, eq=False)
class TopsResult:
    eigenvalues: np.ndarray   # all n covariance eigenvalues, descending
    axes: np.ndarray          # (n, q) unit principal axes
    lo: np.ndarray            # (m, q)
    hi: np.ndarray
    scores: np.ndarray        # (m * 2**n, q) projections of every vertex
    row_owner: np.ndarray
    standardized: bool
    covariance_divisor: int   # population convention: the vertex row count
    names: tuple[str, ...] = ()

    @property
    def m(self) -> int:
        return self.lo.shape[0]

    @property
    def dims(self) -> int:
        return self.lo.shape[1]


def tops_pca(table: IntervalTable, q: int, standardized: bool = False) -> TopsResult:
    if not 1 <= q <= table.n:
        raise InvalidInput(f"need 1 <= q <= {table.n}, got {q}")
    vm = vertex_matrix(table)
    if standardized:
        vm = standardize(vm)
    x = vm.rows - vm.rows.mean(axis=0)
    cov = x.T @ x / x.shape[0]
    eig = eigen_symmetric((cov + cov.T) / 2)
    axes = eig.eigenvectors[:, :q]
    scores = x @ axes
    m = table.m
    per_obj = scores.reshape(m, -1, q)
    return TopsResult(eig.eigenvalues, axes, per_obj.min(axis=1), per_obj.max(axis=1), scores,
                      vm.row_owner, standardized, x.shape[0], table.names)
