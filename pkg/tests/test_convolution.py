import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunklkit.convolution import (
    BumpProfile,
    ConcreteDistribution,
    approx_identity_check,
    convolve,
    convolve_many,
    distribution_convolve,
    kernel_multiplier,
    translate_measure,
    translate_spectral,
    translate_spectral_many,
)
from dunklkit.errors import InvalidArgumentError, UnsupportedCaseError
from dunklkit.functions import PolyGauss, gaussian
from dunklkit.intertwine1d import default_line_plan
from dunklkit.kernel import kernel_1d
from dunklkit.rootsys import rank_one
from dunklkit.transform import dunkl_transform_many


# ----------------------------------------------------------------- translation


def test_translate_at_zero_is_identity(rs_one, plan_one):
    f = PolyGauss.monomial(2)
    ys = np.linspace(-3.0, 3.0, 13)
    vals = translate_spectral_many(rs_one, f, 0.0, ys, plan_one)
    assert np.max(np.abs(np.real(vals) - f(ys))) < 1e-8
    assert np.max(np.abs(np.imag(vals))) < 1e-10


def test_translate_gamma_zero_is_shift(rs_zero):
    f = gaussian()
    plan = default_line_plan(0.0)
    x, ys = 0.8, np.array([-1.0, 0.2, 1.5])
    vals = translate_spectral_many(rs_zero, f, x, ys, plan)
    assert np.max(np.abs(np.real(vals) - f(x + ys))) < 1e-9


@pytest.mark.parametrize("gamma", [1.0, 2.0])
def test_translate_paths_agree(gamma):
    rs = rank_one(int(gamma))
    plan = default_line_plan(gamma)
    f = gaussian()
    for x, y in [(0.5, 1.0), (1.2, -0.6), (-0.8, -0.9)]:
        spectral = float(np.real(translate_spectral(rs, f, x, y, plan)))
        via_p = translate_measure(gamma, f, x, y, method="P", plan=plan)
        via_q = translate_measure(gamma, f, x, y, method="Q", plan=plan)
        assert spectral == pytest.approx(via_p, abs=2e-6)
        assert spectral == pytest.approx(via_q, abs=2e-6)


def test_translate_symmetric_in_arguments(rs_one, plan_one):
    f = gaussian()
    a = translate_spectral(rs_one, f, 0.7, 1.3, plan_one)
    b = translate_spectral(rs_one, f, 1.3, 0.7, plan_one)
    assert complex(a) == pytest.approx(complex(b), abs=1e-10)


def test_kernel_multiplier_at_origin(rs_two):
    ts = np.linspace(-3.0, 3.0, 7)
    assert np.allclose(kernel_multiplier(rs_two, 0.0, ts), 1.0, atol=1e-14)


# ----------------------------------------------------------------- convolution


def test_convolve_many_matches_scalar(rs_one, plan_one):
    f = gaussian()
    g = lambda y: np.exp(-np.asarray(y) ** 2 / 4.0)
    xs = np.array([0.0, 0.6, -1.1])
    many = convolve_many(rs_one, f, g, xs, plan_one)
    for i, x in enumerate(xs):
        assert convolve(rs_one, f, g, float(x), plan_one) == pytest.approx(
            float(np.real(many[i])), abs=1e-12
        )


def test_convolution_commutes(rs_two, plan_two):
    f = gaussian()
    g = lambda y: np.exp(-np.asarray(y) ** 2 / 4.0)
    xs = np.array([0.3, 1.2, -0.7])
    fg = np.real(convolve_many(rs_two, f, g, xs, plan_two))
    gf = np.real(convolve_many(rs_two, g, f, xs, plan_two))
    assert np.max(np.abs(fg - gf)) < 1e-9


def test_convolution_transform_is_product(rs_one, plan_one):
    # transform of f * g equals the product of the transforms
    f = gaussian()
    g = lambda y: np.exp(-np.asarray(y) ** 2 / 4.0)
    nodes, w = plan_one.space.nodes, plan_one.space.weights
    conv = np.real(convolve_many(rs_one, f, g, nodes, plan_one))
    ts = np.array([0.0, 0.4, 1.1, -1.6])
    ker = kernel_1d(1.0, nodes[:, None], -1j * ts[None, :])
    lhs = (w * conv) @ ker
    rhs = dunkl_transform_many(rs_one, f, ts, plan_one) * dunkl_transform_many(
        rs_one, g, ts, plan_one
    )
    assert np.max(np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))) < 1e-6


def test_convolve_rejects_higher_rank(rs_product, plan_two):
    with pytest.raises(UnsupportedCaseError):
        convolve_many(rs_product, gaussian(), gaussian(), np.array([[0.0, 0.0]]))


# ----------------------------------------------------------------- distributions


def test_point_mass_convolution_is_translation(rs_one, plan_one):
    # convolving with the point mass at z translates by -z; the translation
    # is symmetric in its two arguments
    z = 0.7
    S = ConcreteDistribution.point_mass(z)
    phi = gaussian()
    for x in (0.0, 0.5, -1.2):
        lhs = float(np.real(distribution_convolve(S, phi, x, rs_one, plan_one)))
        rhs = float(np.real(translate_spectral(rs_one, phi, -z, x, plan_one)))
        assert lhs == pytest.approx(rhs, abs=1e-8)


def test_point_mass_convolution_classical_limit(rs_zero):
    plan = default_line_plan(0.0)
    S = ConcreteDistribution.point_mass(0.4)
    phi = gaussian()
    for x in (0.0, 0.9, -1.3):
        lhs = float(np.real(distribution_convolve(S, phi, x, rs_zero, plan)))
        assert lhs == pytest.approx(phi(np.array([x - 0.4]))[0], abs=1e-9)


def test_weighted_distribution_pairing(rs_one, plan_one):
    g = lambda x: np.exp(-np.asarray(x) ** 2 / 8.0)
    S = ConcreteDistribution.weighted(g)
    f = PolyGauss.monomial(2)
    nodes, w = plan_one.space.nodes, plan_one.space.weights
    expected = float(np.sum(w * g(nodes) * f(nodes)))
    assert complex(S.pair(f, plan_one)).real == pytest.approx(expected, rel=1e-14)


def test_point_mass_transform_is_kernel(rs_one, plan_one):
    S = ConcreteDistribution.point_mass(0.9)
    ys = np.array([0.0, 1.0, -2.0])
    vals = S.transform_values(rs_one, ys, plan_one)
    ref = kernel_1d(1.0, 0.9, -1j * ys)
    assert np.max(np.abs(vals - ref)) < 1e-14


# ----------------------------------------------------------------- bump


@pytest.mark.parametrize("gamma", [0.5, 1.0, 2.0])
def test_bump_unit_mass(gamma):
    bump = BumpProfile.create(gamma)
    assert bump.mass() == pytest.approx(1.0, abs=1e-12)
    assert bump.scaled(0.25).mass() == pytest.approx(1.0, abs=1e-12)


def test_bump_transform_at_zero():
    bump = BumpProfile.create(1.0, 0.5)
    assert complex(bump.transform_at(np.array([0.0]))[0]) == pytest.approx(1.0, abs=1e-12)


def test_bump_support():
    bump = BumpProfile.create(1.0, 0.5)
    vals = bump(np.array([0.51, 0.7, -0.6]))
    assert np.max(np.abs(vals)) == 0.0
    assert bump(np.array([0.2]))[0] > 0.0


def test_bump_epsilon_validation():
    with pytest.raises(InvalidArgumentError):
        BumpProfile.create(1.0, 1.5)
    with pytest.raises(InvalidArgumentError):
        BumpProfile.create(1.0, 0.0)


# ----------------------------------------------------------------- approximate identity


@pytest.mark.parametrize("gamma", [1.0, 2.0])
def test_approx_identity_passes(gamma):
    S = ConcreteDistribution.weighted(lambda x: np.exp(-np.asarray(x) ** 2 / 8.0))
    report = approx_identity_check(gamma, S)
    assert report.status == "pass"
    by_id = {c.id: c for c in report.checks}
    assert by_id["residual-decay"].residual <= 0.2
    assert by_id["smallest-eps-residual"].residual <= 1e-4
    assert np.isfinite(float(report.env["fitted_M"]))


def test_approx_identity_eps_validation():
    S = ConcreteDistribution.weighted(lambda x: np.exp(-np.asarray(x) ** 2 / 8.0))
    with pytest.raises(InvalidArgumentError):
        approx_identity_check(1.0, S, eps_seq=(0.5, 0.5))
    with pytest.raises(InvalidArgumentError):
        approx_identity_check(1.0, S, eps_seq=(1.5, 0.5))
    with pytest.raises(InvalidArgumentError):
        approx_identity_check(1.0, S, eps_seq=(0.5, 0.01))
    with pytest.raises(UnsupportedCaseError):
        approx_identity_check(1.0, ConcreteDistribution.point_mass(0.0))


# ----------------------------------------------------------------- properties


@settings(max_examples=15, deadline=None)
@given(st.floats(min_value=-1.2, max_value=1.2), st.sampled_from([1.0, 2.0]))
def test_translation_linearity(x, gamma):
    rs = rank_one(int(gamma))
    plan = default_line_plan(gamma)
    f = gaussian()
    g = PolyGauss.monomial(2)
    ys = np.array([0.4])
    lhs = translate_spectral_many(rs, lambda t: f(t) + g(t), x, ys, plan)[0]
    rhs = (
        translate_spectral_many(rs, f, x, ys, plan)[0]
        + translate_spectral_many(rs, g, x, ys, plan)[0]
    )
    assert complex(lhs) == pytest.approx(complex(rhs), abs=1e-10)
