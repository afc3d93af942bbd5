"""Circulant decomposition of a square matrix and the truncated product.

Any n x n matrix splits uniquely as A = sum_k R_k D^k with R_k circulant and
D = diag(omega^q), omega = exp(2i*pi/n). The components are orthogonal under
the Frobenius inner product, so keeping the largest few is an L2-optimal
truncation within this family. The multiply kernels never materialize the
truncated approximant: a circulant is diagonal in the Fourier basis, so each
component costs one diagonal scaling plus one row rotation in the transformed
domain.

Sign conventions (fixed by the cross-check test optimized == materialized):
with W(p,q) = exp(-2i*pi*p*q/n)/sqrt(n) and (C^k z)_i = z_{(i-k) mod n},
the identities used are W D^k = C^k W and D^{-k} W* = W* C^{-k}.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace

import numpy as np

from .core import as_matrix, cycle_reorder, unitary_dft
from .errest import ErrorModel, apriori_relative_error, posterior_relative_error
from .report import ApproxReport

__all__ = [
    "CirculantSpectrum",
    "circulant_decompose",
    "circulant_component",
    "circulant_select",
    "circulant_materialize",
    "circulant_first_order_multiply",
    "top_indices",
]


@dataclass
class CirculantSpectrum:
    """Component data of the split A = sum_k R_k D^k.

    columns[k] is the first column of the circulant R_k (length n, complex);
    magnitudes[k] = ||columns[k]||_2, so n * magnitudes[k]^2 is the squared
    Frobenius weight of component k. selected lists the component indices a
    truncation keeps, ascending.
    """

    n: int
    columns: np.ndarray
    magnitudes: np.ndarray
    selected: list[int]

    def __post_init__(self):
        if self.columns.shape != (self.n, self.n):
            raise ValueError("columns must be n x n (row k = first column of R_k)")
        if self.magnitudes.shape != (self.n,):
            raise ValueError("need one magnitude per component")
        if any(not 0 <= k < self.n for k in self.selected):
            raise ValueError("selected index out of range")


def top_indices(weights, k: int) -> list[int]:
    """Indices of the k largest weights, ties to the lower index, ascending."""
    weights = np.asarray(weights)
    if not 0 <= k <= weights.size:
        raise ValueError(f"k={k} out of range [0, {weights.size}]")
    # stable sort on -w keeps the earlier index first among ties
    order = np.argsort(-weights, kind="stable")[:k]
    return sorted(int(i) for i in order)


def circulant_decompose(A) -> CirculantSpectrum:
    """Split A into its n circulant components via one FFT pass, O(n^2 log n).

    Column j of the cycle reordering holds cycle j of A, which is the
    j-th first-column entry of every R_k modulated by omega^{k.}; one forward
    unitary DFT down each column plus a 1/sqrt(n) rescale therefore yields
    all first columns at once (row k of the result is R_k's first column).
    """
    A = as_matrix(A)
    n = A.shape[0]
    if A.shape[1] != n:
        raise ValueError(f"square matrix required, got {A.shape}")
    S = unitary_dft(cycle_reorder(A, "right"), "forward", axis=0) / math.sqrt(n)
    return CirculantSpectrum(
        n=n,
        columns=S,
        magnitudes=np.linalg.norm(S, axis=1),
        selected=list(range(n)),
    )


def circulant_component(A, k: int) -> np.ndarray:
    """First column of R_k alone, by cycle averaging instead of the FFT.

    Entry j is the mean over cycle j of A D^{-k}; the phase multiply is
    entrywise on columns, never a matrix product. O(n^2) per component, and
    an independent route to the same numbers circulant_decompose produces.
    """
    A = as_matrix(A)
    n = A.shape[0]
    if A.shape[1] != n:
        raise ValueError(f"square matrix required, got {A.shape}")
    if not 0 <= k < n:
        raise ValueError(f"component index {k} out of range [0, {n})")
    phase = np.exp(-2j * np.pi * k * np.arange(n) / n)
    return cycle_reorder(A * phase[None, :], "right").mean(axis=0)


def circulant_select(spectrum: CirculantSpectrum, k: int) -> CirculantSpectrum:
    """Copy of the spectrum keeping the k largest-magnitude components."""
    return replace(spectrum, selected=top_indices(spectrum.magnitudes, k))


def circulant_materialize(spectrum: CirculantSpectrum) -> np.ndarray:
    """Dense sum_{k in selected} R_k D^k, O(|selected| n^2), complex output."""
    n = spectrum.n
    out = np.zeros((n, n), dtype=np.complex128)
    if not spectrum.selected:
        return out
    idx = np.arange(n)
    cyc = (idx[:, None] - idx[None, :]) % n
    omega = np.exp(2j * np.pi * idx / n)
    for k in spectrum.selected:
        out += spectrum.columns[k][cyc] * (omega**k)[None, :]
    return out


def _residual_norm(A_norm_sq: float, spectrum: CirculantSpectrum) -> float:
    """||A - sum_{k in selected} R_k D^k||_F via component orthogonality."""
    kept = spectrum.n * sum(float(spectrum.magnitudes[k]) ** 2 for k in spectrum.selected)
    return math.sqrt(max(0.0, A_norm_sq - kept))


def _left_product(spectrum: CirculantSpectrum, FB: np.ndarray) -> np.ndarray:
    """(sum_{t in selected} R_t D^t) B given FB = W B, without materializing.

    R_t D^t B = W* diag(L_t) C^t (W B) with L_t the unnormalized FFT of R_t's
    first column, by W D^t = C^t W. Accumulation runs in ascending t for a
    deterministic summation order.
    """
    acc = np.zeros_like(FB, dtype=np.complex128)
    for t in spectrum.selected:
        L = np.fft.fft(spectrum.columns[t])
        acc += L[:, None] * np.roll(FB, t, axis=0)
    return unitary_dft(acc, "inverse", axis=0)


def _right_product(spectrum: CirculantSpectrum, G: np.ndarray) -> np.ndarray:
    """G (sum_{t in selected} R_t D^t) without materializing the sum.

    Works on the conjugate transpose: (G Bhat)* = sum_t D^{-t} W* diag(L_t*) W G*,
    and D^{-t} W* = W* C^{-t} turns the outer phase into a row rotation.
    """
    X = unitary_dft(G.conj().T, "forward", axis=0)
    acc = np.zeros_like(X, dtype=np.complex128)
    for t in spectrum.selected:
        L = np.fft.fft(spectrum.columns[t])
        acc += np.roll(L.conj()[:, None] * X, -t, axis=0)
    return unitary_dft(acc, "inverse", axis=0).conj().T


def circulant_first_order_multiply(A, B, k: int, order: int,
                                   model: ErrorModel | None = None):
    """Approximate A @ B keeping the k largest circulant components of each.

    order 0 computes Ahat @ B with Ahat applied in the Fourier domain (the
    left factor is the only one truncated); order 1 adds the correction
    dA @ Bhat, with the residual dA = A - Ahat as the single dense
    intermediate. Both cost O(k n^2 + n^2 log n). The result is complex for
    real inputs; take the real part at the caller if wanted. Deterministic,
    no randomness involved.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    n = A.shape[0]
    if A.shape[1] != n or B.shape != (n, n):
        raise ValueError(f"two square n x n matrices required, got {A.shape} x {B.shape}")
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range [0, {n}]")
    if order not in (0, 1):
        raise ValueError("order must be 0 or 1")

    t0 = time.perf_counter()
    spec_a = circulant_select(circulant_decompose(A), k)
    spec_b = circulant_select(circulant_decompose(B), k)
    norm_a = float(np.linalg.norm(A))
    norm_b = float(np.linalg.norm(B))
    norm_da = _residual_norm(norm_a**2, spec_a)
    norm_db = _residual_norm(norm_b**2, spec_b)

    term1 = _left_product(spec_a, unitary_dft(B, "forward", axis=0))
    if order == 0:
        M = term1
    else:
        dA = A - circulant_materialize(spec_a)
        M = term1 + _right_product(spec_b, dA)
    wall = time.perf_counter() - t0

    if model is None:
        model = ErrorModel(case="mean-zero", n=n)
    apriori = (apriori_relative_error(norm_a, norm_b, norm_da, norm_db, model)
               if norm_a > 0 and norm_b > 0 else None)
    norm_M = float(np.linalg.norm(M))
    posterior = (posterior_relative_error(norm_da, norm_db, norm_M, n)
                 if norm_M > 0 else None)
    report = ApproxReport(
        method="cd",
        order=order,
        k=k,
        norm_da=norm_da,
        norm_db=norm_db,
        apriori_estimate=apriori,
        posterior_estimate=posterior,
        wall_time=wall,
    )
    return M, report
