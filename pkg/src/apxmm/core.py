"""Dense-matrix primitives shared by every approximation method.

Frobenius algebra, an arbitrary-length unitary DFT, cycle reordering of a
square matrix, and the exact multiplication oracle that all approximate
products are tested against.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_matrix",
    "matmul_naive",
    "frobenius",
    "unitary_dft",
    "cycle_reorder",
    "cycle_reorder_inverse",
    "apply_cycle_power",
    "relative_error",
]


def as_matrix(a, allow_complex: bool = True) -> np.ndarray:
    """Validate and coerce ``a`` to a 2-D float64/complex128 ndarray.

    Raises ValueError for non-2-D input or non-finite entries. This is the
    construction gate for the dense-matrix values used across the package.
    """
    m = np.asarray(a)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.size == 0:
        raise ValueError("empty matrix")
    if np.iscomplexobj(m):
        if not allow_complex:
            raise ValueError("complex entries not allowed here")
        m = m.astype(np.complex128, copy=False)
        finite = np.isfinite(m.real) & np.isfinite(m.imag)
    else:
        m = m.astype(np.float64, copy=False)
        finite = np.isfinite(m)
    if not finite.all():
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


def matmul_naive(A, B) -> np.ndarray:
    """Exact product A @ B with a fixed per-entry summation order.

    Single-threaded einsum reduction, ascending in the contraction index, so
    the oracle is bit-deterministic regardless of BLAS threading. Use for
    reference results only; the approximation code paths use optimized
    products.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"dimension mismatch: {A.shape} x {B.shape}")
    # optimize=False keeps einsum on the fixed-order nditer path
    return np.einsum("ik,kj->ij", A, B, optimize=False)


def frobenius(A, B=None):
    """Frobenius norm of A, or the inner product <A, B> = sum(conj(A) * B).

    With one argument returns the real norm ||A||_F. With two, returns the
    (possibly complex) Frobenius inner product.
    """
    A = as_matrix(A)
    if B is None:
        return float(np.linalg.norm(A))
    B = as_matrix(B)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    out = np.vdot(A, B)
    if not (np.iscomplexobj(A) or np.iscomplexobj(B)):
        return float(out.real)
    return complex(out)


def unitary_dft(x, direction: str = "forward", axis: int = -1) -> np.ndarray:
    """Unitary DFT along ``axis``: forward applies W, inverse applies W*.

    W(p,q) = (1/sqrt(n)) * exp(-2i*pi*p*q/n), so the transform preserves the
    2-norm in both directions and works for any length n (mixed-radix FFT
    with a Bluestein fallback underneath; O(n log n) for all n, including
    primes).
    """
    x = np.asarray(x)
    if x.ndim == 0 or x.shape[axis] < 1:
        raise ValueError("transform length must be >= 1")
    if direction == "forward":
        return np.fft.fft(x, axis=axis, norm="ortho")
    if direction == "inverse":
        return np.fft.ifft(x, axis=axis, norm="ortho")
    raise ValueError(f"unknown direction {direction!r}")


def _check_square(A) -> int:
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"square matrix required, got {A.shape}")
    return A.shape[0]


def cycle_reorder(A, side: str) -> np.ndarray:
    """Arrange the n cycles of a square matrix into columns.

    Column j of the result is the diagonal of Lambda_j in the split of A into
    cycle components:

      side="right": A = sum_j C^j Lambda_j, so result[i, j] = A[(i+j) % n, i]
      side="left":  A = sum_j Lambda_j C^j, so result[i, j] = A[i, (i-j) % n]

    where C is the cyclic shift with C[i, (i-1) % n] = 1. Cycle j is the
    entry set {A(i, (i-j) mod n)}; the n cycles partition the n^2 entries.
    """
    A = as_matrix(A)
    n = _check_square(A)
    I, J = np.indices((n, n))
    if side == "right":
        return A[(I + J) % n, I]
    if side == "left":
        return A[I, (I - J) % n]
    raise ValueError(f"unknown side {side!r}")


def cycle_reorder_inverse(At, side: str) -> np.ndarray:
    """Inverse of cycle_reorder: scatter columns back to matrix cycles."""
    At = as_matrix(At)
    n = _check_square(At)
    R, C = np.indices((n, n))
    if side == "right":
        return At[C, (R - C) % n]
    if side == "left":
        return At[R, (R - C) % n]
    raise ValueError(f"unknown side {side!r}")


def apply_cycle_power(M, k: int, side: str) -> np.ndarray:
    """Multiply by the k-th power of the cyclic shift C.

    side="left" computes C^k M (rows rotate down by k); side="right" computes
    M C^k (columns rotate left by k). Pure permutation, no arithmetic.
    """
    M = as_matrix(M)
    n = M.shape[0] if side == "left" else M.shape[1]
    if not 0 <= k < n:
        raise ValueError(f"k={k} out of range [0, {n})")
    if side == "left":
        return np.roll(M, k, axis=0)
    if side == "right":
        return np.roll(M, -k, axis=1)
    raise ValueError(f"unknown side {side!r}")


def relative_error(M, C_ref) -> float:
    """||C_ref - M||_F / ||C_ref||_F; complex M against a real reference is fine."""
    M = as_matrix(M)
    C_ref = as_matrix(C_ref)
    if M.shape != C_ref.shape:
        raise ValueError(f"shape mismatch: {M.shape} vs {C_ref.shape}")
    denom = np.linalg.norm(C_ref)
    if denom == 0.0:
        raise ValueError("zero-norm reference")
    return float(np.linalg.norm(C_ref - M) / denom)
