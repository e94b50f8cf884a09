"""Generalized translation, convolution, and the approximate identity.

Translation has a spectral form (a kernel multiplier under the transform)
and two measure forms (double averaging of an inverse-intertwined function).
They are computed through genuinely different pipelines, so their agreement
exercises most of the library at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import InvalidArgumentError, UnsupportedCaseError
from .functions import PolyGauss, SmoothBump, standard_bump
from .intertwine1d import (
    default_line_plan,
    inv_V_via_P,
    inv_V_via_Q,
    mu_quadrature,
    _rs_for,
)
from .kernel import kernel_1d
from .report import VerificationReport
from .rootsys import RootSystem
from .transform import (
    TransformPlan,
    dunkl_inverse_many,
    dunkl_transform_many,
    inverse_constant,
    weighted_line_grid,
)


def _axis_gammas(rs: RootSystem):
    profile = rs.axis_profile()
    if profile is None:
        raise UnsupportedCaseError(
            "translation needs a product system with per-axis kernels"
        )
    return [float(k) for _, k in profile]


def kernel_multiplier(rs: RootSystem, x, ts) -> np.ndarray:
    """K(ix, t) on an array of frequency nodes t."""
    gammas = _axis_gammas(rs)
    if rs.dimension == 1:
        return kernel_1d(gammas[0], 1j * float(np.asarray(x).reshape(())), np.asarray(ts))
    pts = np.atleast_2d(ts)
    xv = np.asarray(x, dtype=float).reshape(-1)
    out = np.ones(pts.shape[0], dtype=complex)
    for j, g in enumerate(gammas):
        out = out * kernel_1d(g, 1j * xv[j], pts[:, j])
    return out


def translate_spectral_many(rs: RootSystem, f, x, ys, plan: TransformPlan = None):
    if plan is None:
        if rs.dimension != 1:
            raise InvalidArgumentError("a plan is required beyond one dimension")
        plan = default_line_plan(float(_axis_gammas(rs)[0]))
    hv = dunkl_transform_many(rs, f, plan.freq.nodes, plan)
    mult = kernel_multiplier(rs, x, plan.freq.nodes)
    return dunkl_inverse_many(rs, hv * mult, ys, plan)


def translate_spectral(rs: RootSystem, f, x, y, plan: TransformPlan = None) -> float:
    """Translation through the transform: multiply by K(ix, .) and invert."""
    ys = [y] if rs.dimension == 1 else [list(np.atleast_1d(y))]
    val = translate_spectral_many(rs, f, x, ys, plan)[0]
    return float(np.real(val))


def translate_measure(gamma, f, x, y, n: int = 48, method: str = "P",
                      plan: TransformPlan = None) -> float:
    """Translation as a double average of the inverse-intertwined function.

    method "P" routes the inverse through the Fourier multiplier (any
    positive multiplicity); "Q" routes it through the difference-differential
    multiplier (positive integer multiplicity, closed families only).
    """
    g = float(gamma)
    if g <= 0:
        raise InvalidArgumentError("the measure form needs a positive multiplicity")
    t, w = mu_quadrature(g, n)
    pts = (float(x) * t)[:, None] + (float(y) * t)[None, :]
    flat = pts.reshape(-1)
    if method == "P":
        vals = inv_V_via_P(g, f, flat, plan=plan)
    elif method == "Q":
        vals = inv_V_via_Q(g, f, flat)
    else:
        raise InvalidArgumentError(f"unknown method {method!r}")
    return float(w @ np.asarray(vals).reshape(pts.shape) @ w)


def convolve_many(rs: RootSystem, f, g, xs, plan: TransformPlan = None) -> np.ndarray:
    """Weighted convolution of f and g at many points in one contraction.

    Only the one-dimensional line is wired; higher rank goes through
    repeated calls to the translation primitive.
    """
    if rs.dimension != 1:
        raise UnsupportedCaseError("batch convolution is one-dimensional")
    gam = _axis_gammas(rs)[0]
    if plan is None:
        plan = default_line_plan(gam)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    nodes, weights = plan.space.nodes, plan.space.weights
    hv_f = dunkl_transform_many(rs, f, plan.freq.nodes, plan)
    gv = np.asarray(g(nodes))
    # inner_l = integral of g(y) K(-y, i t_l) against the weight
    b = kernel_1d(gam, -nodes[:, None], 1j * plan.freq.nodes[None, :])
    inner = (b * (gv * weights)[:, None]).sum(axis=0)
    a = kernel_1d(gam, 1j * xs[:, None], plan.freq.nodes[None, :])
    return inverse_constant(rs) * (a * (plan.freq.weights * hv_f * inner)[None, :]).sum(axis=1)


def convolve(rs: RootSystem, f, g, x, plan: TransformPlan = None) -> float:
    """Weighted convolution: integrate tau_x f(-y) g(y) against the weight."""
    if rs.dimension == 1:
        return float(np.real(convolve_many(rs, f, g, [x], plan)[0]))
    if plan is None:
        raise InvalidArgumentError("a plan is required beyond one dimension")
    nodes = plan.space.nodes
    tv = translate_spectral_many(rs, f, x, -np.atleast_2d(nodes), plan)
    gv = np.asarray(g(nodes))
    return float(np.real(np.sum(plan.space.weights * tv * gv)))


# ---------------------------------------------------------------------------
# concrete distributions

@dataclass(frozen=True)
class ConcreteDistribution:
    """Either a weighted function g times the reflection weight, or a point
    mass.  These are the two kinds every distributional check here uses."""

    kind: str
    g: Optional[Callable] = None
    point: Optional[float] = None

    @staticmethod
    def weighted(g: Callable) -> "ConcreteDistribution":
        return ConcreteDistribution("weighted-function", g=g)

    @staticmethod
    def point_mass(z: float) -> "ConcreteDistribution":
        return ConcreteDistribution("point-mass", point=float(z))

    def pair(self, f, plan: TransformPlan) -> complex:
        """<S, f> with the weight included for the function kind."""
        if self.kind == "point-mass":
            return complex(np.asarray(f(np.array([self.point])))[0])
        nodes = plan.space.nodes
        return complex(np.sum(plan.space.weights * np.asarray(self.g(nodes)) * np.asarray(f(nodes))))

    def transform_values(self, rs: RootSystem, ys, plan: TransformPlan) -> np.ndarray:
        """Pointwise values of the transformed distribution on frequency nodes."""
        if self.kind == "point-mass":
            gam = _axis_gammas(rs)[0]
            return kernel_1d(gam, self.point, -1j * np.asarray(ys))
        return dunkl_transform_many(rs, self.g, ys, plan)


def distribution_convolve(S: ConcreteDistribution, phi, x, rs: RootSystem = None,
                          plan: TransformPlan = None) -> float:
    """S convolved with a test function: <S_y, tau_x phi(-y)>."""
    if rs is None:
        raise InvalidArgumentError("a root system is required")
    if plan is None:
        plan = default_line_plan(float(_axis_gammas(rs)[0]))
    if S.kind == "point-mass":
        return translate_spectral(rs, phi, x, -S.point, plan)
    nodes = plan.space.nodes
    tv = translate_spectral_many(rs, phi, x, -nodes, plan)
    return float(np.real(np.sum(plan.space.weights * np.asarray(S.g(nodes)) * tv)))


# ---------------------------------------------------------------------------
# the approximate identity

@dataclass(frozen=True)
class BumpProfile:
    """Radial bump scaled to support radius epsilon, with unit weighted mass.

    The normalization constant is fixed once on a support-fitted grid; the
    scaling is exactly mass-preserving, so the transform at zero computed on
    the matching scaled grid reproduces 1 to rounding.
    """

    gamma: float
    epsilon: float
    norm: float
    grid_n: int = 160

    @staticmethod
    def create(gamma, epsilon: float = 1.0, grid_n: int = 160) -> "BumpProfile":
        g = float(gamma)
        if not 0.0 < epsilon <= 1.0:
            raise InvalidArgumentError("epsilon must lie in (0, 1]")
        base = standard_bump()
        grid = weighted_line_grid(g, 1.0, grid_n)
        mass = float(np.sum(grid.weights * base(grid.nodes)))
        return BumpProfile(g, float(epsilon), 1.0 / mass, grid_n)

    def scaled(self, epsilon: float) -> "BumpProfile":
        if not 0.0 < epsilon <= 1.0:
            raise InvalidArgumentError("epsilon must lie in (0, 1]")
        return BumpProfile(self.gamma, float(epsilon), self.norm, self.grid_n)

    def profile(self, r):
        """The unscaled radial profile, support in [0, 1]."""
        return self.norm * standard_bump()(np.asarray(r))

    def __call__(self, x):
        e = self.epsilon
        scale = e ** (-(2.0 * self.gamma + 1.0))
        return scale * self.norm * standard_bump()(np.asarray(x, dtype=float) / e)

    def support_grid(self):
        return weighted_line_grid(self.gamma, self.epsilon, self.grid_n)

    def mass(self) -> float:
        grid = self.support_grid()
        return float(np.sum(grid.weights * self(grid.nodes)))

    def transform_at(self, ys) -> np.ndarray:
        """Transform values on a support-fitted grid; exact 1 at y = 0."""
        grid = self.support_grid()
        fv = self(grid.nodes)
        ker = kernel_1d(self.gamma, grid.nodes[:, None], -1j * np.atleast_1d(ys)[None, :])
        return (grid.weights * fv) @ ker


DEFAULT_EPS = (0.5, 0.2, 0.1, 0.05)


def approx_identity_check(gamma, S: ConcreteDistribution, eps_seq: Sequence[float] = DEFAULT_EPS,
                          plan: TransformPlan = None, test_set=None) -> VerificationReport:
    """Convergence of mollified distributions back to the distribution.

    Residuals pair (S * bump_eps) times the weight against a fixed test set
    and compare with pairing S directly; the frequency-side quadratic bound
    is fitted at the largest epsilon and checked at the smaller ones.
    """
    g = float(gamma)
    eps = [float(e) for e in eps_seq]
    if any(e2 >= e1 for e1, e2 in zip(eps, eps[1:])) or not eps:
        raise InvalidArgumentError("epsilon sequence must be strictly decreasing")
    if not 0.0 < eps[0] <= 1.0:
        raise InvalidArgumentError("epsilon must lie in (0, 1]")
    if eps[-1] < 0.02:
        raise InvalidArgumentError(
            "epsilon below 0.02 is not resolvable by the default frequency grid"
        )
    if S.kind != "weighted-function":
        raise UnsupportedCaseError("the convergence check pairs against the weighted kind")
    if plan is None:
        plan = default_line_plan(g)
    rs = _rs_for(g)
    if test_set is None:
        # wide fixed test functions keep the curvature constant of the
        # epsilon^2 residual small enough to resolve the smallest scale
        test_set = [
            lambda x: np.exp(-(x * x) / 8.0),
            lambda x: x * x * np.exp(-(x * x) / 8.0),
            lambda x: (1.0 + x) * np.exp(-(x * x) / 8.0),
        ]
    report = VerificationReport("approx-identity", env={
        "gamma": g, "eps": eps, "grid_n": len(plan.space.nodes),
    })

    bump = BumpProfile.create(g)
    nodes = plan.space.nodes
    weights = plan.space.weights
    gv = np.asarray(S.g(nodes))
    base_pairs = [complex(np.sum(weights * gv * np.asarray(psi(nodes)))) for psi in test_set]

    residuals = []
    m_fits = []
    norm_resid = 0.0
    support_resid = 0.0
    ybox = np.linspace(-plan.freq_radius, plan.freq_radius, 81)
    ybox = ybox[np.abs(ybox) > 1e-9]
    for e in eps:
        phi = bump.scaled(e)
        norm_resid = max(norm_resid, abs(phi.mass() - 1.0))
        outside = np.linspace(e * 1.0001, max(2.0, 4 * e), 33)
        support_resid = max(support_resid, float(np.max(np.abs(phi(outside)))))
        # S * phi on the space grid through the spectral translation matrix
        hv_phi = phi.transform_at(plan.freq.nodes)
        a = kernel_1d(g, 1j * nodes[:, None], plan.freq.nodes[None, :])
        b = kernel_1d(g, -nodes[:, None], 1j * plan.freq.nodes[None, :])
        inner = (b * gv[:, None] * weights[:, None]).sum(axis=0)
        conv = inverse_constant(rs) * (a * (plan.freq.weights * hv_phi * inner)[None, :]).sum(axis=1)
        worst = 0.0
        for psi, base in zip(test_set, base_pairs):
            got = complex(np.sum(weights * conv * np.asarray(psi(nodes))))
            worst = max(worst, abs(got - base) / max(1e-12, abs(base)))
        residuals.append(worst)
        tv = phi.transform_at(ybox)
        m_fits.append(float(np.max(np.abs(tv - 1.0) / (e * ybox**2))))

    report.add("bump-normalization", "scaled bump keeps unit weighted mass", norm_resid, 1e-10)
    report.add("bump-support", "scaled bump vanishes outside its ball", support_resid, 0.0)
    report.add(
        "residual-decay",
        "pairings of the mollified distribution approach the distribution",
        residuals[-1] / max(1e-300, residuals[0]),
        0.2,
    )
    report.add("smallest-eps-residual", "residual at the smallest scale", residuals[-1], 1e-4)
    trend = max(residuals[i + 1] / max(1e-300, residuals[i]) for i in range(len(residuals) - 1))
    report.add("monotone-trend", "residuals decrease along the scale sequence", trend, 1.0)
    report.add(
        "quadratic-frequency-bound",
        "transform of the bump stays within the fitted quadratic envelope",
        max(m_fits[1:]) / max(1e-300, m_fits[0]) if len(m_fits) > 1 else 1.0,
        1.05,
    )
    report.env["fitted_M"] = m_fits[0]
    report.add_curve(
        "residual-vs-eps",
        ["eps", "residual"],
        [[e, r] for e, r in zip(eps, residuals)],
    )
    return report
