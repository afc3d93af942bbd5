"""Randomized truncated SVD and the SVD-based approximate product.

The decomposition keeps k = min(s * floor(log2 n) + 1, n) components, found
by sketching the range with a Gaussian test matrix, orthonormalizing, and
taking the exact SVD of the small projected factor. The multiply routines
evaluate the approximate product in factored form so the dense n x n
approximants are never built, except for the single residual matrix the
first-order correction needs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .core import as_matrix, frobenius
from .errest import ErrorModel, apriori_relative_error, posterior_relative_error
from .report import ApproxReport

__all__ = [
    "TruncatedSVD",
    "qr_decompose",
    "component_count",
    "randomized_partial_svd",
    "svd_residual_norm",
    "svd_reconstruct",
    "svd_first_order_multiply",
]


@dataclass
class TruncatedSVD:
    """Rank-k factorization A ~ U diag(sigma) V^T.

    U is m x k and V is n x k, both with orthonormal columns; sigma holds the
    k retained singular values in descending order. source_frobenius_sq
    stores ||A||_F^2 of the decomposed matrix so the residual norm can be
    recovered without A.
    """

    U: np.ndarray
    sigma: np.ndarray
    V: np.ndarray
    source_frobenius_sq: float

    def __post_init__(self):
        if self.U.ndim != 2 or self.V.ndim != 2 or self.sigma.ndim != 1:
            raise ValueError("U, V must be 2-D and sigma 1-D")
        k = self.sigma.size
        if self.U.shape[1] != k or self.V.shape[1] != k:
            raise ValueError("U, sigma, V have inconsistent component counts")
        if self.source_frobenius_sq < 0:
            raise ValueError("source_frobenius_sq must be >= 0")

    @property
    def k(self) -> int:
        return self.sigma.size


def qr_decompose(Y):
    """Thin QR of an m x k sketch, m >= k. Returns (Q, R) with Q m x k."""
    Y = as_matrix(Y)
    m, k = Y.shape
    if m < k:
        raise ValueError(f"need at least as many rows as columns, got {m} x {k}")
    return np.linalg.qr(Y, mode="reduced")


def component_count(n: int, s: int) -> int:
    """Retained rank k = min(s * floor(log2 n) + 1, n) for an oversampling level s."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if s < 1:
        raise ValueError("s must be >= 1")
    if n == 1:
        return 1
    return min(s * int(math.floor(math.log2(n))) + 1, n)


def randomized_partial_svd(A, s: int, seed, power_iterations: int = 0,
                           components: int | None = None) -> TruncatedSVD:
    """Rank-k randomized SVD of A with k set by `s` (or by `components` directly).

    Sketches Y = A phi with a Gaussian phi (n x k), orthonormalizes Y, and
    takes the exact SVD of Q^T A. `power_iterations` extra passes (Y <-
    A A^T Y with re-orthonormalization) sharpen the captured subspace for
    slowly decaying spectra; the default 0 matches the plain method.
    """
    A = as_matrix(A)
    if np.iscomplexobj(A):
        raise ValueError("randomized_partial_svd expects a real matrix")
    m, n = A.shape
    if components is not None:
        if components < 1:
            raise ValueError("components must be >= 1")
        k = min(components, m, n)
    else:
        k = min(component_count(n, s), m)
    if power_iterations < 0:
        raise ValueError("power_iterations must be >= 0")

    rng = np.random.default_rng(seed)
    phi = rng.standard_normal((n, k))
    Y = A @ phi
    Q, _ = qr_decompose(Y)
    for _ in range(power_iterations):
        Q, _ = qr_decompose(A.T @ Q)
        Q, _ = qr_decompose(A @ Q)
    B = Q.T @ A
    Ub, sigma, Vt = np.linalg.svd(B, full_matrices=False)
    return TruncatedSVD(
        U=Q @ Ub,
        sigma=sigma,
        V=Vt.T,
        source_frobenius_sq=float(np.linalg.norm(A) ** 2),
    )


def svd_residual_norm(decomp: TruncatedSVD) -> float:
    """||A - U diag(sigma) V^T||_F, recovered from stored norms.

    Because U and V are orthonormal the retained energy is sum(sigma^2), so
    the residual energy is ||A||_F^2 - sum(sigma^2); tiny negative values
    from roundoff are clamped to zero.
    """
    retained = float(np.sum(decomp.sigma**2))
    return math.sqrt(max(0.0, decomp.source_frobenius_sq - retained))


def svd_reconstruct(decomp: TruncatedSVD) -> np.ndarray:
    """Materialize the rank-k approximant U diag(sigma) V^T."""
    return (decomp.U * decomp.sigma) @ decomp.V.T


def svd_first_order_multiply(A, B, s: int, order: int, seed,
                             power_iterations: int = 0,
                             model: ErrorModel | None = None):
    """Approximate A @ B through rank-k truncations of both factors.

    order 0 returns Ahat @ Bhat evaluated through the factors (the k x k core
    is contracted first, so no n x n intermediate other than the result).
    order 1 adds the correction dA @ Bhat, computed as term1 + term2 where
    term1 = Ahat @ B uses the exact B; the residual dA = A - Ahat is the one
    dense intermediate materialized.

    The two decompositions draw from independent streams derived from `seed`.
    Returns (M, ApproxReport) with a-priori and posterior error estimates
    filled in; `model` defaults to the mean-zero entry model.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape} x {B.shape}")
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")

    t0 = time.perf_counter()
    seed_a = np.random.default_rng([seed, 0])
    seed_b = np.random.default_rng([seed, 1])
    da = randomized_partial_svd(A, s, seed_a, power_iterations=power_iterations)
    db = randomized_partial_svd(B, s, seed_b, power_iterations=power_iterations)
    norm_da = svd_residual_norm(da)
    norm_db = svd_residual_norm(db)

    Ua_s = da.U * da.sigma
    if order == 0:
        # (Ua sa Va^T)(Ub sb Vb^T): contract the k x k core first
        core = (da.V.T @ db.U) * db.sigma
        M = Ua_s @ (core @ db.V.T)
    else:
        term1 = Ua_s @ (da.V.T @ B)
        dA = A - svd_reconstruct(da)
        term2 = ((dA @ db.U) * db.sigma) @ db.V.T
        M = term1 + term2
    wall = time.perf_counter() - t0

    n_inner = A.shape[1]
    if model is None:
        model = ErrorModel(case="mean-zero", n=n_inner)
    normA = math.sqrt(da.source_frobenius_sq)
    normB = math.sqrt(db.source_frobenius_sq)
    apriori = (apriori_relative_error(normA, normB, norm_da, norm_db, model)
               if normA > 0 and normB > 0 else None)
    norm_M = frobenius(M)
    posterior = (posterior_relative_error(norm_da, norm_db, norm_M, n_inner)
                 if norm_M > 0 else None)
    report = ApproxReport(
        method="svd",
        order=order,
        k=da.k,
        norm_da=norm_da,
        norm_db=norm_db,
        apriori_estimate=apriori,
        posterior_estimate=posterior,
        wall_time=wall,
    )
    return M, report
