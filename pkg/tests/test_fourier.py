"""Coefficient closed forms and quadrature verification of the series identities."""

import math

import numpy as np
import pytest

from latticeqmc.errors import DomainError
from latticeqmc.fourier import (
    C_PRIME,
    appendix_inner_sum,
    c_phi,
    c_sym,
    cosine_coeff_quadrature,
    run_appendix_checks,
    sin_tent_coeff,
    tent_kernel_partial_sum,
    tent_kernel_reference,
)
from latticeqmc.lattice import tent


def test_c_phi_cases():
    assert c_phi(1, 1) == pytest.approx(58.0 / 3.0 - 32.0 / math.pi**2, rel=1e-15)
    assert c_phi(2, 2) == pytest.approx(6.0 / 16.0, rel=1e-15)
    assert c_phi(1, 2) == 0.0
    assert c_phi(3, 1) == pytest.approx(
        (52.0 / 3.0 - 16.0 / (9 * math.pi**2) - 16.0 / math.pi**2) / 9.0, rel=1e-15
    )
    assert c_phi(2, 4) == pytest.approx(4.0 / 64.0, rel=1e-15)


def test_c_sym_cases():
    assert c_sym(2, 2, 2) == pytest.approx(6.0 / 16.0, rel=1e-15)
    assert c_sym(1, 2, 2) == pytest.approx(1.0, rel=1e-15)
    assert c_sym(3, 3, 4) == pytest.approx(6.0 / 3**8, rel=1e-15)
    with pytest.raises(DomainError):
        c_sym(1, 1, 3)


def test_coefficient_bounds_exhaustive():
    k, l = np.meshgrid(np.arange(1, 1001), np.arange(1, 1001), indexing="ij")
    vals = c_phi(k, l)
    bound = C_PRIME / (k.astype(float) ** 2 * l.astype(float) ** 2)
    assert np.all(vals >= 0.0)
    assert np.all(vals <= bound + 1e-15)
    for alpha in (2, 4):
        vs = c_sym(k, l, alpha)
        assert np.all(vs <= 6.0 / (k.astype(float) ** alpha * l.astype(float) ** alpha) + 1e-15)


def test_coefficient_symmetry():
    k, l = np.meshgrid(np.arange(1, 64), np.arange(1, 64), indexing="ij")
    np.testing.assert_array_equal(c_phi(k, l), c_phi(l, k))
    np.testing.assert_array_equal(c_sym(k, l, 2), c_sym(l, k, 2))


def test_sin_tent_coeff_values():
    assert sin_tent_coeff(1, 1) == pytest.approx(8.0 / (3.0 * math.pi), rel=1e-15)
    assert sin_tent_coeff(1, 2) == 0.0
    assert sin_tent_coeff(2, 3) == pytest.approx(16.0 / (7.0 * math.pi), rel=1e-15)


def test_tent_kernel_series_limit_at_origin():
    # limit value -1 + K_sob2(0, 0) = 1/4 + 1/144 + 1/720 = 31/120
    assert tent_kernel_reference(0.0, 0.0) == pytest.approx(31.0 / 120.0, rel=1e-14)
    got = tent_kernel_partial_sum(0.0, 0.0, 200_000)
    assert got == pytest.approx(31.0 / 120.0, abs=2e-5)


def test_tent_kernel_reconstruction_tolerances():
    rng = np.random.default_rng(12)
    for x, y in rng.random((20, 2)):
        ref = tent_kernel_reference(x, y)
        assert abs(tent_kernel_partial_sum(x, y, 1_000) - ref) <= 5e-3
        assert abs(tent_kernel_partial_sum(x, y, 10_000) - ref) <= 5e-4


def test_tent_kernel_reflection_invariance():
    rng = np.random.default_rng(13)
    for x, y in rng.random((10, 2)):
        a = tent_kernel_partial_sum(x, y, 500)
        b = tent_kernel_partial_sum(1.0 - x, y, 500)
        assert a == pytest.approx(b, rel=1e-12, abs=1e-12)


def test_partial_sum_matches_direct_double_sum():
    """The separable O(kmax) evaluation equals the O(kmax^2) definition."""
    rng = np.random.default_rng(14)
    kmax = 40
    k, l = np.meshgrid(np.arange(1, kmax + 1), np.arange(1, kmax + 1), indexing="ij")
    coeffs = c_phi(k, l)
    for x, y in rng.random((5, 2)):
        direct = float(
            np.sum(coeffs * np.cos(2 * math.pi * k * x) * np.cos(2 * math.pi * l * y))
        ) / math.pi**4
        fast = tent_kernel_partial_sum(x, y, kmax)
        assert fast == pytest.approx(direct, rel=1e-12, abs=1e-14)


def test_quadrature_oracle_basics():
    # orthogonality and normalization
    assert cosine_coeff_quadrature(lambda t: np.ones_like(t), 1) == pytest.approx(0.0, abs=1e-14)
    assert cosine_coeff_quadrature(lambda t: np.cos(2 * math.pi * 3 * t), 3) == pytest.approx(
        0.5, abs=1e-13
    )
    # Fourier coefficient of the sine-of-tent function: half the series coefficient
    got = cosine_coeff_quadrature(lambda t: np.sin(2 * math.pi * tent(t)), 1, panels=64)
    assert got == pytest.approx(4.0 / (3.0 * math.pi), abs=1e-10)


def test_sine_of_tent_quadrature_sweep():
    for k in range(1, 9):
        for l in range(1, 9):
            cos_coeff = cosine_coeff_quadrature(
                lambda t, k=k: np.sin(2 * math.pi * k * tent(t)), l, panels=64
            )
            assert cos_coeff == pytest.approx(0.5 * sin_tent_coeff(k, l), abs=1e-9)
            sin_coeff = cosine_coeff_quadrature(
                lambda t, k=k: np.sin(2 * math.pi * k * tent(t)), l, panels=64, weight="sin2pi"
            )
            assert abs(sin_coeff) <= 1e-10


def test_inner_sum_identities():
    partial, closed = appendix_inner_sum(1, "first", 1_000_000)
    assert closed == 0.5
    assert 0.0 <= closed - partial <= 1.0 / (4.0 * 1_000_000) + 1e-12
    partial, closed = appendix_inner_sum(3, "first", 1_000_000)
    assert closed == pytest.approx(1.0 / 18.0, rel=1e-15)
    assert abs(partial - closed) <= 1.0 / (4.0 * 1_000_000) + 1e-12
    partial, closed = appendix_inner_sum(1, "second", 10_000)
    assert closed == pytest.approx(0.25 * (math.pi**2 / 4.0 - 2.0), rel=1e-15)
    assert abs(partial - closed) <= 1e-11
    with pytest.raises(DomainError):
        appendix_inner_sum(2, "first", 100)


def test_appendix_suite_all_green():
    rows = run_appendix_checks()
    assert rows and all(ok for _, ok, _ in rows)
