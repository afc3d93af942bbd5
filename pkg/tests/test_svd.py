import numpy as np
import pytest
from numpy.testing import assert_allclose

from apxmm.core import matmul_naive, relative_error
from apxmm.svd import (
    TruncatedSVD,
    component_count,
    qr_decompose,
    randomized_partial_svd,
    svd_first_order_multiply,
    svd_reconstruct,
    svd_residual_norm,
)


def test_qr_single_column():
    Q, R = qr_decompose(np.array([[3.0], [4.0]]))
    assert abs(R[0, 0]) == pytest.approx(5.0)
    assert_allclose(np.abs(Q[:, 0]), [0.6, 0.8], atol=1e-15)
    assert_allclose(Q @ R, [[3.0], [4.0]], atol=1e-14)


def test_qr_orthonormal_input():
    rng = np.random.default_rng(0)
    Y0, _ = np.linalg.qr(rng.standard_normal((10, 4)))
    Q, R = qr_decompose(Y0)
    # already orthonormal: Q can differ only by column signs, R by sign on I
    assert_allclose(np.abs(Q), np.abs(Y0), atol=1e-12)
    assert_allclose(np.abs(R), np.eye(4), atol=1e-12)


def test_qr_reconstruction():
    rng = np.random.default_rng(1)
    Y = rng.standard_normal((20, 5))
    Q, R = qr_decompose(Y)
    assert np.linalg.norm(Q @ R - Y) / np.linalg.norm(Y) < 1e-12
    assert_allclose(Q.T @ Q, np.eye(5), atol=1e-12)
    assert_allclose(R, np.triu(R), atol=0)


def test_qr_rejects_wide():
    with pytest.raises(ValueError):
        qr_decompose(np.ones((3, 5)))


def test_component_count():
    assert component_count(64, 1) == 7
    assert component_count(64, 2) == 13
    assert component_count(4, 100) == 4  # capped at n
    assert component_count(1, 3) == 1
    with pytest.raises(ValueError):
        component_count(64, 0)


def test_rank_one_captured_exactly():
    rng = np.random.default_rng(2)
    u = rng.standard_normal(64)
    v = rng.standard_normal(64)
    d = randomized_partial_svd(np.outer(u, v), 1, seed=3)
    assert d.sigma[0] == pytest.approx(np.linalg.norm(u) * np.linalg.norm(v),
                                       rel=1e-8)
    assert np.all(d.sigma[1:] < 1e-8)
    assert svd_residual_norm(d) < 1e-8 * d.sigma[0]


def test_diagonal_spectrum_captured():
    # rank-5 diagonal, k=13 components at s=2: leading values exact
    diag = np.maximum(5.0 - np.arange(64), 0.0)
    d = randomized_partial_svd(np.diag(diag), 2, seed=4)
    assert_allclose(d.sigma[:5], [5.0, 4.0, 3.0, 2.0, 1.0], atol=1e-6)


def test_zero_matrix():
    d = randomized_partial_svd(np.zeros((16, 16)), 1, seed=0)
    assert np.all(d.sigma == 0.0)
    assert svd_residual_norm(d) == 0.0


def test_factor_invariants():
    rng = np.random.default_rng(5)
    A = rng.standard_normal((40, 40))
    d = randomized_partial_svd(A, 2, seed=6)
    k = d.k
    assert_allclose(d.U.T @ d.U, np.eye(k), atol=1e-10)
    assert_allclose(d.V.T @ d.V, np.eye(k), atol=1e-10)
    assert np.all(np.diff(d.sigma) <= 0)
    assert np.all(d.sigma >= 0)
    assert np.sum(d.sigma**2) <= d.source_frobenius_sq * (1 + 1e-8)
    assert svd_residual_norm(d) <= np.linalg.norm(A)


def test_reproducible_per_seed():
    rng = np.random.default_rng(7)
    A = rng.standard_normal((32, 32))
    d1 = randomized_partial_svd(A, 2, seed=42)
    d2 = randomized_partial_svd(A, 2, seed=42)
    assert np.array_equal(d1.U, d2.U)
    assert np.array_equal(d1.sigma, d2.sigma)
    assert np.array_equal(d1.V, d2.V)


def test_residual_norm_arithmetic():
    # keep only sigma = 4 of diag(3, 4): residual must be exactly 3
    d = TruncatedSVD(
        U=np.array([[0.0], [1.0]]),
        sigma=np.array([4.0]),
        V=np.array([[0.0], [1.0]]),
        source_frobenius_sq=25.0,
    )
    assert svd_residual_norm(d) == pytest.approx(3.0)


def test_residual_clamped_at_zero():
    d = TruncatedSVD(
        U=np.eye(2),
        sigma=np.array([1.0, 1.0]),
        V=np.eye(2),
        source_frobenius_sq=2.0 - 1e-14,
    )
    assert svd_residual_norm(d) == 0.0


def test_multiply_rank_one_exact():
    rng = np.random.default_rng(8)
    A = np.outer(rng.standard_normal(64), rng.standard_normal(64))
    B = rng.standard_normal((64, 64))
    M, rep = svd_first_order_multiply(A, B, 1, 1, seed=9)
    assert relative_error(M, A @ B) < 1e-8
    assert rep.norm_da < 1e-8 * np.linalg.norm(A)


def test_multiply_exact_when_b_low_rank():
    # dB = 0 makes the first-order product exact
    rng = np.random.default_rng(10)
    A = rng.standard_normal((64, 64))
    B = rng.standard_normal((64, 3)) @ rng.standard_normal((3, 64))
    M, _ = svd_first_order_multiply(A, B, 1, 1, seed=11)
    assert relative_error(M, A @ B) < 1e-8


def test_first_order_identity():
    rng = np.random.default_rng(12)
    A = rng.standard_normal((64, 64))
    B = rng.standard_normal((64, 64))
    M, _ = svd_first_order_multiply(A, B, 2, 1, seed=13)
    da = randomized_partial_svd(A, 2, np.random.default_rng([13, 0]))
    db = randomized_partial_svd(B, 2, np.random.default_rng([13, 1]))
    dA = A - svd_reconstruct(da)
    dB = B - svd_reconstruct(db)
    gap = matmul_naive(A, B) - M
    assert np.linalg.norm(gap - matmul_naive(dA, dB)) < 1e-8 * np.linalg.norm(A @ B)


def test_zeroth_order_is_factored_product():
    rng = np.random.default_rng(14)
    A = rng.standard_normal((32, 32))
    B = rng.standard_normal((32, 32))
    M, _ = svd_first_order_multiply(A, B, 1, 0, seed=15)
    da = randomized_partial_svd(A, 1, np.random.default_rng([15, 0]))
    db = randomized_partial_svd(B, 1, np.random.default_rng([15, 1]))
    ref = svd_reconstruct(da) @ svd_reconstruct(db)
    assert np.linalg.norm(M - ref) < 1e-10 * np.linalg.norm(ref)


def test_error_nonincreasing_in_k_on_average():
    rng = np.random.default_rng(16)
    means = []
    for s in (1, 2, 3):
        errs = []
        for t in range(10):
            pair_rng = np.random.default_rng([16, t])
            A = pair_rng.standard_normal((32, 32))
            B = pair_rng.standard_normal((32, 32))
            M, _ = svd_first_order_multiply(A, B, s, 1, seed=t)
            errs.append(relative_error(M, A @ B))
        means.append(np.mean(errs))
    assert means[1] <= means[0] * 1.02
    assert means[2] <= means[1] * 1.02


def test_power_iterations_help_flat_spectra():
    rng = np.random.default_rng(17)
    # slowly decaying spectrum: extra passes must not hurt on average
    U, _ = np.linalg.qr(rng.standard_normal((48, 48)))
    V, _ = np.linalg.qr(rng.standard_normal((48, 48)))
    A = (U * np.exp(-np.arange(48) / 48)) @ V.T
    d0 = randomized_partial_svd(A, 1, seed=18, power_iterations=0)
    d2 = randomized_partial_svd(A, 1, seed=18, power_iterations=2)
    assert svd_residual_norm(d2) <= svd_residual_norm(d0) * (1 + 1e-9)


def test_report_contents():
    rng = np.random.default_rng(19)
    A = rng.standard_normal((32, 32))
    B = rng.standard_normal((32, 32))
    M, rep = svd_first_order_multiply(A, B, 1, 1, seed=20)
    assert rep.method == "svd"
    assert rep.order == 1
    assert rep.k == component_count(32, 1)
    assert rep.norm_da > 0 and rep.norm_db > 0
    assert rep.apriori_estimate > 0
    assert rep.posterior_estimate > 0
    assert rep.wall_time > 0
    # mean-zero model: a-priori estimate is the product of relative residues
    expected = (rep.norm_da / np.linalg.norm(A)) * (rep.norm_db / np.linalg.norm(B))
    assert rep.apriori_estimate == pytest.approx(expected, rel=1e-12)


def test_multiply_errors():
    A = np.ones((4, 4))
    with pytest.raises(ValueError):
        svd_first_order_multiply(A, np.ones((5, 5)), 1, 1, seed=0)
    with pytest.raises(ValueError):
        svd_first_order_multiply(A, A, 1, 2, seed=0)
    with pytest.raises(ValueError):
        randomized_partial_svd(A.astype(complex), 1, seed=0)
    with pytest.raises(ValueError):
        randomized_partial_svd(A, 1, seed=0, power_iterations=-1)
    with pytest.raises(ValueError):
        randomized_partial_svd(A, 1, seed=0, components=0)
