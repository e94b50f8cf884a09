import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunklkit.errors import AccuracyError, InvalidArgumentError, UnsupportedCaseError
from dunklkit.kernel import (
    KernelConfig,
    bessel_j_normalized,
    check_bounds,
    kernel_1d,
    kernel_1d_dz,
    kernel_series,
    kernel_value,
)
from dunklkit.rootsys import axis_product, rank_one


def test_bessel_normalized_at_zero():
    for alpha in (-0.5, 0.0, 0.5, 1.5, 2.0):
        assert bessel_j_normalized(alpha, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_bessel_normalized_half_is_sinc():
    u = np.linspace(0.1, 8.0, 40)
    # j_{1/2}(u) = sin(u)/u after the normalization
    assert np.allclose(bessel_j_normalized(0.5, u), np.sin(u) / u, atol=1e-13)


def test_kernel_gamma_zero_is_exponential():
    z = np.array([0.3, -1.2, 2.0])
    t = 1.7
    assert np.allclose(kernel_1d(0, z, t), np.exp(z * t), rtol=0, atol=1e-15)


def test_kernel_value_at_zero(rs_one):
    assert kernel_value(rs_one, 0.0, 2.3) == pytest.approx(1.0, abs=1e-15)
    assert kernel_value(rs_one, 1.4, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_kernel_gamma_one_closed_form():
    # gamma = 1: K(z, t) = (sinh u - u cosh u ... ) reduces to
    # j_{1/2}(izt) + zt/3 j_{3/2}(izt); check against the elementary form
    z, t = 1.3, 0.8
    u = z * t
    expected = (math.cosh(u) - math.sinh(u) / u) / u + math.sinh(u) / u
    assert kernel_1d(1, z, t) == pytest.approx(expected, rel=1e-13)


def test_kernel_symmetry(rs_two):
    a = kernel_value(rs_two, 0.9, 1.7)
    b = kernel_value(rs_two, 1.7, 0.9)
    assert a == pytest.approx(b, rel=1e-13)


def test_kernel_product_factorizes(rs_product):
    x = np.array([0.7, -1.1])
    z = np.array([1.2, 0.4])
    prod = kernel_1d(1, x[0], z[0]) * kernel_1d(2, x[1], z[1])
    assert kernel_value(rs_product, x, z) == pytest.approx(prod, rel=1e-13)


@pytest.mark.parametrize("gamma", [Fraction(1, 2), 1, 2, Fraction(7, 3)])
def test_series_matches_closed_form(gamma):
    rs = rank_one(gamma)
    for x, z in [(0.3, 0.9), (-1.1, 0.7), (1.2, -1.2)]:
        closed = kernel_value(rs, x, z)
        series = kernel_series(rs, x, z)
        assert abs(closed - series) < 1e-10


def test_series_product_system(rs_product):
    x = np.array([0.5, -0.8])
    z = np.array([0.9, 0.3])
    assert abs(kernel_value(rs_product, x, z) - kernel_series(rs_product, x, z)) < 1e-10


def test_series_truncation_guard():
    rs = rank_one(1)
    with pytest.raises(AccuracyError):
        kernel_series(rs, 4.0, 4.0, KernelConfig(truncation=10, tolerance=1e-12))


def test_kernel_derivative_matches_difference():
    for gamma in (0.0, 1.0, 2.5):
        z, t = 0.9, 1.4
        h = 1e-6
        fd = (kernel_1d(gamma, z + h, t) - kernel_1d(gamma, z - h, t)) / (2 * h)
        assert kernel_1d_dz(gamma, z, t) == pytest.approx(fd, rel=1e-8)


def test_negative_gamma_rejected():
    with pytest.raises(InvalidArgumentError):
        kernel_1d(-0.5, 1.0, 1.0)


def test_check_bounds_report(rs_one):
    rng = np.random.default_rng(3)
    samples = [(rng.uniform(-4, 4, 1), rng.uniform(-4, 4, 1)) for _ in range(50)]
    report = check_bounds(rs_one, samples)
    assert report.all_passed
    ids = {c.id for c in report.checks}
    assert "unit-bound-imaginary" in ids
    assert "value-at-zero" in ids


def test_check_bounds_dimension_mismatch(rs_product):
    with pytest.raises(InvalidArgumentError):
        check_bounds(rs_product, [(np.array([1.0]), np.array([1.0, 2.0]))])


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=-4, max_value=4),
    st.floats(min_value=-4, max_value=4),
    st.sampled_from([0.0, 0.5, 1.0, 2.0, 7.0 / 3.0]),
)
def test_imaginary_argument_bounded(x, y, gamma):
    val = kernel_1d(gamma, 1j * x, y)
    assert abs(val) <= 1.0 + 1e-12


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=-3, max_value=3),
    st.floats(min_value=-3, max_value=3),
    st.sampled_from([0.5, 1.0, 2.0]),
)
def test_real_argument_positive(x, y, gamma):
    # the closed form is a positive function of real arguments
    val = kernel_1d(gamma, x, y)
    assert np.real(val) > 0.0
    assert abs(np.imag(val)) < 1e-13
