"""Row-wise Fourier sparsification and the sparsified approximate product.

Transforming the pair as Atil = A W* and Btil = W B leaves the product
unchanged (Atil Btil = A B by unitarity) but concentrates smooth rows into a
few Fourier coefficients. Keeping the top-k entries per transformed row gives
sparse factors whose product costs O(k n^2) instead of O(n^3); the
first-order form corrects with the exact Btil against the truncation error
of Atil.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .core import as_matrix, unitary_dft
from .errest import ErrorModel, apriori_relative_error, posterior_relative_error
from .report import ApproxReport

__all__ = [
    "SparseRowMatrix",
    "FourierRowSpectrum",
    "fourier_row_decompose",
    "topk_sparsify",
    "sparse_dense_multiply",
    "fft_sparse_first_order_multiply",
]


@dataclass
class SparseRowMatrix:
    """Row-major sparse matrix: entries[i] is a list of (column, value).

    Column indices are strictly increasing within a row and the stored values
    are exactly the source entries at those positions (no rescaling).
    """

    rows: int
    cols: int
    entries: list[list[tuple[int, complex]]]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("need one entry list per row")
        for i, row in enumerate(self.entries):
            last = -1
            for j, _ in row:
                if not 0 <= j < self.cols:
                    raise ValueError(f"column {j} out of range in row {i}")
                if j <= last:
                    raise ValueError(f"row {i} columns not strictly increasing")
                last = j

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.entries)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.complex128)
        for i, row in enumerate(self.entries):
            for j, v in row:
                out[i, j] = v
        return out


@dataclass
class FourierRowSpectrum:
    """Weights and directions of the row-wise Fourier split A = sum_k f_k 1^T D^k.

    weights[k] = sqrt(n) * ||f_k||_2 so that sum weights^2 = ||A||_F^2;
    directions[:, k] is f_k normalized to unit length (zero column where the
    weight vanishes).
    """

    weights: np.ndarray
    directions: np.ndarray

    def __post_init__(self):
        if self.weights.ndim != 1 or self.directions.ndim != 2:
            raise ValueError("weights must be 1-D, directions 2-D")
        if self.directions.shape[1] != self.weights.size:
            raise ValueError("one direction column per weight required")
        if np.any(self.weights < 0):
            raise ValueError("weights must be nonnegative")


def fourier_row_decompose(A) -> FourierRowSpectrum:
    """Split an m x n matrix into rank-one Fourier components, O(mn log n).

    Row i of A is the Fourier series sum_k f[i, k] omega^{k.}, so one forward
    unitary DFT per row recovers all coefficient columns f_k at once.
    """
    A = as_matrix(A)
    n = A.shape[1]
    F = unitary_dft(A, "forward", axis=1) / math.sqrt(n)
    weights = math.sqrt(n) * np.linalg.norm(F, axis=0)
    directions = np.zeros_like(F)
    nz = weights > 0
    directions[:, nz] = F[:, nz] / np.linalg.norm(F[:, nz], axis=0)
    return FourierRowSpectrum(weights=weights, directions=directions)


def _row_budgets(k, rows: int, cols: int) -> list[int]:
    if np.isscalar(k):
        if k < 0:
            raise ValueError("k must be >= 0")
        return [min(int(k), cols)] * rows
    ks = [int(v) for v in k]
    if len(ks) != rows:
        raise ValueError(f"need one budget per row, got {len(ks)} for {rows} rows")
    if any(v < 0 for v in ks):
        raise ValueError("budgets must be >= 0")
    return [min(v, cols) for v in ks]


def topk_sparsify(M, k) -> SparseRowMatrix:
    """Keep the k largest-modulus entries of each row, zeroing the rest.

    Ties are broken toward the lower column index. k above the column count
    is clamped; a per-row budget may be passed as a sequence instead of one
    scalar. Deterministic.
    """
    M = as_matrix(M)
    rows, cols = M.shape
    budgets = _row_budgets(k, rows, cols)
    entries: list[list[tuple[int, complex]]] = []
    for i in range(rows):
        ki = budgets[i]
        if ki == 0:
            entries.append([])
            continue
        keep = np.argsort(-np.abs(M[i]), kind="stable")[:ki]
        entries.append([(int(j), complex(M[i, j])) for j in sorted(keep)])
    return SparseRowMatrix(rows=rows, cols=cols, entries=entries)


def sparse_dense_multiply(S: SparseRowMatrix, B, side: str = "left") -> np.ndarray:
    """S @ B (side="left") or B @ S (side="right"), O(nnz * dense width).

    Accumulates scaled rows (or columns) of B directly from the entry lists;
    never densifies S.
    """
    B = as_matrix(B)
    if side == "left":
        if S.cols != B.shape[0]:
            raise ValueError(f"dimension mismatch: ({S.rows},{S.cols}) x {B.shape}")
        out = np.zeros((S.rows, B.shape[1]), dtype=np.complex128)
        for i, row in enumerate(S.entries):
            for j, v in row:
                out[i] += v * B[j]
        return out
    if side == "right":
        if B.shape[1] != S.rows:
            raise ValueError(f"dimension mismatch: {B.shape} x ({S.rows},{S.cols})")
        out = np.zeros((B.shape[0], S.cols), dtype=np.complex128)
        for i, row in enumerate(S.entries):
            for j, v in row:
                out[:, j] += B[:, i] * v
        return out
    raise ValueError(f"unknown side {side!r}")


def fft_sparse_first_order_multiply(A, B, k: int, order: int,
                                    sparsify_b: str = "rows",
                                    model: ErrorModel | None = None):
    """Approximate A @ B through top-k sparsified Fourier transforms.

    Forms Atil = A W* and Btil = W B, sparsifies both to k entries per row
    (sparsify_b="cols" switches B's truncation to per-column), then evaluates

      order 0: SA @ dense(SB)
      order 1: SA @ Btil + (Atil - dense(SA)) @ SB

    The result is complex; residual norms in the report are those of the
    transformed factors, which equal the untransformed ones by unitarity.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    n = A.shape[1]
    if B.shape[0] != n:
        raise ValueError(f"dimension mismatch: {A.shape} x {B.shape}")
    if k < 0:
        raise ValueError(f"k={k} must be >= 0")
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")
    if sparsify_b not in ("rows", "cols"):
        raise ValueError(f"unknown sparsify_b {sparsify_b!r}")

    t0 = time.perf_counter()
    Atil = unitary_dft(A, "inverse", axis=1)
    Btil = unitary_dft(B, "forward", axis=0)
    SA = topk_sparsify(Atil, k)
    if sparsify_b == "rows":
        SB = topk_sparsify(Btil, k)
        SB_dense = SB.to_dense()
    else:
        SBt = topk_sparsify(Btil.T, k)
        SB_dense = SBt.to_dense().T
        SB = None
    dAt = Atil - SA.to_dense()
    dBt = Btil - SB_dense
    norm_da = float(np.linalg.norm(dAt))
    norm_db = float(np.linalg.norm(dBt))

    if order == 0:
        M = sparse_dense_multiply(SA, SB_dense, "left")
    else:
        term1 = sparse_dense_multiply(SA, Btil, "left")
        if SB is not None:
            term2 = sparse_dense_multiply(SB, dAt, "right")
        else:
            term2 = dAt @ SB_dense
        M = term1 + term2
    wall = time.perf_counter() - t0

    if model is None:
        model = ErrorModel(case="mean-zero", n=n)
    norm_a = float(np.linalg.norm(A))
    norm_b = float(np.linalg.norm(B))
    apriori = (apriori_relative_error(norm_a, norm_b, norm_da, norm_db, model)
               if norm_a > 0 and norm_b > 0 else None)
    norm_M = float(np.linalg.norm(M))
    posterior = (posterior_relative_error(norm_da, norm_db, norm_M, n)
                 if norm_M > 0 else None)
    report = ApproxReport(
        method="sfft",
        order=order,
        k=k,
        norm_da=norm_da,
        norm_db=norm_db,
        apriori_estimate=apriori,
        posterior_estimate=posterior,
        wall_time=wall,
    )
    return M, report
