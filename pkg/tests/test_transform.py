import math
import warnings
from fractions import Fraction

import numpy as np
import pytest

from dunklkit.errors import AccuracyWarning, InvalidArgumentError
from dunklkit.functions import PolyGauss, gaussian, standard_bump
from dunklkit.rootsys import mehta_constant, rank_one
from dunklkit.transform import (
    DecayClass,
    SampledFunction,
    classical_fourier_many,
    dunkl_inverse_many,
    dunkl_roundtrip_many,
    dunkl_transform_many,
    fourier_bessel,
    gaussian_eigen_constant,
    hermite_grid,
    make_plan,
    multiplier_P_many,
    plain_line_grid,
    sampled,
    tensor_grid,
    weighted_grid,
    weighted_line_grid,
)


def test_weighted_grid_gaussian_mass():
    # integral of exp(-x^2) |x|^(2 gamma) = 1 / c_k
    for gamma in (0.0, 0.5, 1.0, 7.0 / 3.0):
        grid = weighted_line_grid(gamma, radius=9.0, n=120)
        val = float(np.sum(grid.weights * np.exp(-grid.nodes**2)))
        assert val == pytest.approx(1.0 / mehta_constant(rank_one(Fraction(gamma))), rel=1e-12)


def test_grid_calibration_small():
    for grid in (weighted_line_grid(1.0), plain_line_grid(), hermite_grid()):
        assert grid.calibration_residual() < 1e-9


def test_tensor_grid_mass(rs_product):
    grid = weighted_grid(rs_product, radius=9.0, n=60)
    val = float(np.sum(grid.weights * np.exp(-np.sum(grid.nodes**2, axis=1))))
    assert val == pytest.approx(1.0 / mehta_constant(rs_product), rel=1e-10)


def test_gaussian_eigenfunction(plan_one, rs_one):
    ys = np.linspace(-4, 4, 33)
    hv = dunkl_transform_many(rs_one, gaussian(), ys, plan_one)
    ref = gaussian_eigen_constant(rs_one) * np.exp(-0.5 * ys**2)
    assert np.max(np.abs(hv - ref) / ref) < 1e-10


def test_roundtrip_hermite_set(plan_two, rs_two):
    xs = np.linspace(-3, 3, 21)
    for n in range(5):
        f = PolyGauss.monomial(n)
        back = dunkl_roundtrip_many(rs_two, f, xs, plan_two)
        assert np.max(np.abs(back - f(xs))) < 1e-8


def test_transform_parity(plan_one, rs_one):
    # odd input -> purely imaginary odd transform
    f = PolyGauss.monomial(1)
    ys = np.array([0.5, 1.5, 2.5])
    hv = dunkl_transform_many(rs_one, f, ys, plan_one)
    hv_neg = dunkl_transform_many(rs_one, f, -ys, plan_one)
    assert np.max(np.abs(np.real(hv))) < 1e-12
    assert np.max(np.abs(hv + hv_neg)) < 1e-12


def test_classical_fourier_gaussian(plan_one):
    ys = np.linspace(-3, 3, 13)
    hv = classical_fourier_many(lambda x: np.exp(-0.5 * x**2), ys, plan_one)
    ref = math.sqrt(2 * math.pi) * np.exp(-0.5 * ys**2)
    assert np.max(np.abs(hv - ref)) < 1e-12


def test_fourier_bessel_gaussian_self_reciprocal():
    # exp(-r^2/2) is a fixed point of the normalized Bessel transform
    for alpha in (0.0, 0.5, 1.5):
        for lam in (0.0, 0.7, 1.9):
            val = fourier_bessel(
                lambda r: np.exp(-0.5 * r**2), lam, alpha, radius=9.0, n=200
            )
            assert val == pytest.approx(math.exp(-0.5 * lam**2), abs=1e-13)


def test_multiplier_P_is_negative_second_derivative(plan_one, rs_one):
    # at gamma = 1 the multiplier operator acts on nice even+odd data like
    # the prefactored local operator
    f = PolyGauss.monomial(2)
    dd = f.derivative().derivative()
    xs = np.array([-1.3, -0.4, 0.5, 1.1])
    vals = multiplier_P_many(rs_one, f, xs, plan_one)
    assert np.max(np.abs(vals - (-dd(xs)))) < 1e-10


def test_multiplier_P_gamma_two(plan_two, rs_two):
    f = gaussian()
    d4 = f.derivative().derivative().derivative().derivative()
    xs = np.array([-0.8, 0.3, 1.2])
    vals = multiplier_P_many(rs_two, f, xs, plan_two)
    assert np.max(np.abs(vals - d4(xs) / 9.0)) < 1e-9


def test_decay_validation():
    with pytest.raises(InvalidArgumentError):
        DecayClass("nope", radius=1.0)
    with pytest.raises(InvalidArgumentError):
        DecayClass.compact(0.0)
    assert not DecayClass.poly_growth(2).integrable


def test_sampled_growth_warns(plan_one, rs_one):
    from dunklkit.transform import dunkl_transform

    bad = sampled(lambda x: np.exp(np.abs(np.asarray(x))), DecayClass.schwartz(), "liar")
    with pytest.warns(AccuracyWarning):
        dunkl_transform(rs_one, bad, 0.0, plan_one)


def test_poly_growth_rejected_by_transform(plan_one, rs_one):
    grows = sampled(lambda x: np.asarray(x) ** 2, DecayClass.poly_growth(2))
    from dunklkit.transform import dunkl_transform

    with pytest.raises(InvalidArgumentError):
        dunkl_transform(rs_one, grows, 0.0, plan_one)


def test_bump_sampled_has_compact_decay():
    s = standard_bump().as_sampled()
    assert s.decay.kind == "compact"
    assert s.decay.radius == 1.0


def test_make_plan_shapes(rs_product):
    plan = make_plan(rs_product, grid_n=24, freq_count=17)
    assert plan.space.nodes.shape[1] == 2
    assert plan.freq_points.shape == (17 * 17, 2)
    hv = dunkl_transform_many(
        rs_product, lambda p: np.exp(-0.5 * np.sum(np.atleast_2d(p) ** 2, axis=1)),
        np.array([[0.0, 0.0]]), plan,
    )
    # transform at zero is the weighted integral of the Gaussian
    assert np.real(hv[0]) == pytest.approx(
        float(np.sum(plan.space.weights * np.exp(-0.5 * np.sum(plan.space.nodes**2, axis=1)))),
        rel=1e-12,
    )


def test_inverse_constant_roundtrip_delta(plan_one, rs_one):
    # inverting the transform of a narrow Gaussian recovers its peak value
    f = gaussian()
    hv = dunkl_transform_many(rs_one, f, plan_one.freq.nodes, plan_one)
    back = dunkl_inverse_many(rs_one, hv, np.array([0.0]), plan_one)
    assert np.real(back[0]) == pytest.approx(1.0, abs=1e-9)
