"""Randomized outer-product low-rank multiplication, the comparison method.

Writes A @ B = sum_k (col_k of A)(row_k of B) and Monte-Carlo samples c of
the n outer products with probability proportional to the norm product
||A^(k)|| ||B_(k)||, rescaling each accepted term by 1/(c p_k) so the sum is
unbiased. Indices are drawn by rejection sampling and with replacement.
"""

from __future__ import annotations

import time

import numpy as np

from .core import as_matrix
from .report import ApproxReport

__all__ = ["randomized_outer_product_multiply"]


def randomized_outer_product_multiply(A, B, c: int, seed):
    """Unbiased c-sample outer-product estimate of A @ B.

    p_k is proportional to ||A column k|| * ||B row k||; a candidate k
    (uniform) is accepted when U * max_j p_j < p_k, with U uniform on [0, 1).
    Each loop draws k first, then U. Zero-probability indices are never
    accepted; if every p_k is zero the product is identically zero and there
    is nothing to sample, so that degenerate input is rejected.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape} x {B.shape}")
    if c < 1:
        raise ValueError("c must be >= 1")
    n = A.shape[1]

    t0 = time.perf_counter()
    weights = np.linalg.norm(A, axis=0) * np.linalg.norm(B, axis=1)
    total = float(weights.sum())
    if total == 0.0:
        raise ValueError("all column/row norm products are zero; nothing to sample")
    p = weights / total
    pmax = float(p.max())

    rng = np.random.default_rng(seed)
    dtype = np.complex128 if np.iscomplexobj(A) or np.iscomplexobj(B) else np.float64
    M = np.zeros((A.shape[0], B.shape[1]), dtype=dtype)
    accepted = 0
    while accepted < c:
        k = int(rng.integers(0, n))
        u = float(rng.uniform())
        if u * pmax < p[k]:
            M += np.outer(A[:, k], B[k, :]) / (c * p[k])
            accepted += 1
    wall = time.perf_counter() - t0

    report = ApproxReport(
        method="lowrank",
        order=0,
        k=c,
        norm_da=0.0,
        norm_db=0.0,
        apriori_estimate=None,
        posterior_estimate=None,
        wall_time=wall,
    )
    return M, report
