"""Quadrature grids and the Dunkl transform on the line and on products.

Weighted integrals absorb the weight into Gauss-Jacobi nodes split at the
origin, so non-integer exponents cost no accuracy.  Transforms over product
systems contract one axis at a time; nothing here attempts non-product
systems, which only the exact polynomial path supports.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from .errors import AccuracyWarning, InvalidArgumentError, UnsupportedCaseError
from .kernel import bessel_j_normalized, kernel_1d
from .rootsys import RootSystem, mehta_constant


# ---------------------------------------------------------------------------
# grids

@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    """Nodes and weights with a declared absorbed weight function.

    weight_kind records what the weights integrate against: "plain" for dx,
    "gauss-jacobi(a,b)" when a power of |x| has been absorbed, and so on.
    calibration is the exact integral of the absorbed weight over the domain,
    used as a self-check.
    """

    nodes: np.ndarray
    weights: np.ndarray
    weight_kind: str
    domain: tuple
    calibration: float
    axes: Optional[tuple] = None

    @property
    def dimension(self) -> int:
        return 1 if self.nodes.ndim == 1 else self.nodes.shape[1]

    def integrate(self, values) -> complex:
        return np.sum(self.weights * np.asarray(values))

    def calibration_residual(self) -> float:
        total = float(np.sum(self.weights))
        return abs(total - self.calibration) / max(1.0, abs(self.calibration))


@lru_cache(maxsize=None)
def _jacobi_rule(n: int, a: float, b: float):
    return roots_jacobi(n, a, b)


def weighted_line_grid(gamma, radius: float = 10.0, n: int = 192) -> QuadratureGrid:
    """Grid absorbing |x|^(2 gamma) on [-radius, radius], split at the origin.

    On each half-line the substitution x = radius (t+1)/2 turns the weight
    into (1+t)^(2 gamma), which Gauss-Jacobi nodes handle exactly.
    """
    g = float(gamma)
    if g < 0:
        raise InvalidArgumentError("gamma must be nonnegative")
    if n < 2 or radius <= 0:
        raise InvalidArgumentError("need n >= 2 and radius > 0")
    t, w = _jacobi_rule(n, 0.0, 2.0 * g)
    half = radius / 2.0
    x_pos = half * (t + 1.0)
    w_pos = w * half ** (2.0 * g + 1.0)
    nodes = np.concatenate([-x_pos[::-1], x_pos])
    weights = np.concatenate([w_pos[::-1], w_pos])
    calibration = 2.0 * radius ** (2.0 * g + 1.0) / (2.0 * g + 1.0)
    return QuadratureGrid(
        nodes, weights, f"gauss-jacobi(0,{2.0 * g})", (-radius, radius), calibration
    )


def plain_line_grid(radius: float = 10.0, n: int = 384) -> QuadratureGrid:
    """Plain Gauss-Legendre grid on [-radius, radius]."""
    t, w = roots_legendre(n)
    return QuadratureGrid(
        radius * t, radius * w, "plain", (-radius, radius), 2.0 * radius
    )


def trapezoid_line_grid(radius: float = 10.0, n: int = 257) -> QuadratureGrid:
    """Truncated trapezoid rule; useful for grid-refinement sanity checks."""
    if n < 3:
        raise InvalidArgumentError("need n >= 3")
    nodes = np.linspace(-radius, radius, n)
    h = nodes[1] - nodes[0]
    weights = np.full(n, h)
    weights[0] = weights[-1] = h / 2.0
    return QuadratureGrid(nodes, weights, "truncated-trapezoid", (-radius, radius), 2.0 * radius)


def hermite_grid(n: int = 64) -> QuadratureGrid:
    from scipy.special import roots_hermite

    x, w = roots_hermite(n)
    return QuadratureGrid(x, w, "gauss-hermite", (-math.inf, math.inf), math.sqrt(math.pi))


def tensor_grid(axes) -> QuadratureGrid:
    """Tensor product of one-dimensional grids."""
    axes = tuple(axes)
    grids = np.meshgrid(*[g.nodes for g in axes], indexing="ij")
    nodes = np.stack([g.reshape(-1) for g in grids], axis=-1)
    wmesh = np.meshgrid(*[g.weights for g in axes], indexing="ij")
    weights = np.ones(nodes.shape[0])
    for wm in wmesh:
        weights = weights * wm.reshape(-1)
    kind = " x ".join(g.weight_kind for g in axes)
    calibration = float(np.prod([g.calibration for g in axes]))
    domain = tuple(g.domain for g in axes)
    return QuadratureGrid(nodes, weights, kind, domain, calibration, axes=axes)


def weighted_grid(rs: RootSystem, radius: float = 10.0, n: int = 192) -> QuadratureGrid:
    """Grid absorbing the full reflection weight of an axis-product system."""
    profile = rs.axis_profile()
    if profile is None:
        raise UnsupportedCaseError(
            "weighted grids exist only for products of one-dimensional factors"
        )
    axes = []
    for scale, k in profile:
        g = weighted_line_grid(k, radius, n)
        if scale is not None and scale != 1:
            factor = float(scale * scale) ** float(k)
            g = QuadratureGrid(
                g.nodes, g.weights * factor, g.weight_kind + f"*scale^{2 * k}",
                g.domain, g.calibration * factor,
            )
        axes.append(g)
    if rs.dimension == 1:
        return axes[0]
    return tensor_grid(axes)


# ---------------------------------------------------------------------------
# sampled functions

@dataclass(frozen=True)
class DecayClass:
    """Declared decay behavior: schwartz, compact(radius), or poly-growth(order)."""

    kind: str
    radius: float = 10.0
    order: int = 0

    def __post_init__(self):
        if self.kind not in ("schwartz", "compact", "poly-growth"):
            raise InvalidArgumentError(f"unknown decay kind {self.kind!r}")
        if self.radius <= 0:
            raise InvalidArgumentError("decay radius must be positive")

    @staticmethod
    def schwartz(radius: float = 10.0) -> "DecayClass":
        return DecayClass("schwartz", radius=radius)

    @staticmethod
    def compact(radius: float) -> "DecayClass":
        return DecayClass("compact", radius=radius)

    @staticmethod
    def poly_growth(order: int) -> "DecayClass":
        return DecayClass("poly-growth", order=order)

    @property
    def integrable(self) -> bool:
        return self.kind in ("schwartz", "compact")


@dataclass(frozen=True)
class SampledFunction:
    """A function given by a vectorized evaluator plus its decay class."""

    evaluator: Callable
    decay: DecayClass
    name: str = ""

    def __call__(self, points):
        return np.asarray(self.evaluator(np.asarray(points, dtype=float)))


def sampled(fn, decay: DecayClass, name: str = "") -> SampledFunction:
    return SampledFunction(fn, decay, name)


def _require_integrable(f: SampledFunction, op: str, dimension: int = 1):
    if not isinstance(f, SampledFunction):
        raise InvalidArgumentError(f"{op} expects a SampledFunction")
    if not f.decay.integrable:
        raise InvalidArgumentError(
            f"{op} needs schwartz or compactly supported input, got {f.decay.kind}"
        )
    check_decay(f, dimension)


def check_decay(f: SampledFunction, dimension: int = 1, tol: float = 1e-8) -> float:
    """Largest |f| sampled on the calibration sphere of its declared radius."""
    r = f.decay.radius
    if dimension == 1:
        pts = np.array([-r, r])
    else:
        theta = np.linspace(0.0, 2.0 * math.pi, 16, endpoint=False)
        pts = r * np.stack([np.cos(theta), np.sin(theta)], axis=-1)
    worst = float(np.max(np.abs(f(pts))))
    if f.decay.kind == "compact" and worst > 0:
        warnings.warn(
            f"function {f.name or '<anon>'} is nonzero on its declared support boundary",
            AccuracyWarning,
        )
    elif f.decay.kind == "schwartz" and worst > tol:
        warnings.warn(
            f"function {f.name or '<anon>'} decays slower than declared "
            f"(|f| = {worst:.2e} at radius {r})",
            AccuracyWarning,
        )
    return worst


# ---------------------------------------------------------------------------
# plans and constants

@dataclass(frozen=True, eq=False)
class TransformPlan:
    """Grids and frequency targets shared by a family of transform calls."""

    rs: RootSystem
    space: QuadratureGrid
    space_plain: QuadratureGrid
    freq: QuadratureGrid
    freq_points: np.ndarray
    radius: float
    freq_radius: float


def make_plan(
    rs: RootSystem,
    radius: float = 10.0,
    grid_n: Optional[int] = None,
    freq_radius: float = 8.0,
    freq_count: int = 257,
    plain_n: Optional[int] = None,
) -> TransformPlan:
    d = rs.dimension
    if grid_n is None:
        grid_n = 192 if d == 1 else 64
    if plain_n is None:
        plain_n = 2 * grid_n
    space = weighted_grid(rs, radius, grid_n)
    if d == 1:
        space_plain = plain_line_grid(radius, plain_n)
        freq_pts = np.linspace(-freq_radius, freq_radius, freq_count)
    else:
        space_plain = tensor_grid([plain_line_grid(radius, plain_n)] * d)
        axis = np.linspace(-freq_radius, freq_radius, freq_count)
        mesh = np.meshgrid(*([axis] * d), indexing="ij")
        freq_pts = np.stack([m.reshape(-1) for m in mesh], axis=-1)
    freq = weighted_grid(rs, freq_radius + 2.0, grid_n)
    return TransformPlan(rs, space, space_plain, freq, freq_pts, radius, freq_radius)


def _axis_gammas(rs: RootSystem):
    profile = rs.axis_profile()
    if profile is None:
        raise UnsupportedCaseError(
            "numeric transforms exist only for products of one-dimensional factors"
        )
    return [k for _, k in profile]


def gaussian_eigen_constant(rs: RootSystem) -> float:
    """Scale of the Gaussian under the transform: 2^(gamma + d/2) / c_k."""
    return 2.0 ** (float(rs.gamma) + rs.dimension / 2.0) / mehta_constant(rs)


def inverse_constant(rs: RootSystem) -> float:
    """Scalar in front of the inverse transform: c_k^2 / 2^(2 gamma + d)."""
    c = mehta_constant(rs)
    return c * c / 2.0 ** (2.0 * float(rs.gamma) + rs.dimension)


def p_multiplier_constant(rs: RootSystem) -> float:
    """Scalar pi^d c_k^2 / 2^(2 gamma) in front of both inversion multipliers."""
    c = mehta_constant(rs)
    return math.pi**rs.dimension * c * c / 2.0 ** (2.0 * float(rs.gamma))


# ---------------------------------------------------------------------------
# transforms

def _points_2d(points, d):
    pts = np.asarray(points, dtype=float)
    if d == 1:
        return pts.reshape(-1)
    return pts.reshape(-1, d)


def _grid_values(f, grid: QuadratureGrid):
    return np.asarray(f(grid.nodes))


def _contract(rs: RootSystem, grid: QuadratureGrid, fvals, ys, arg_side: complex):
    """sum_nodes w f(x) K(x, arg_side * y) over a (possibly tensor) grid.

    arg_side is the constant multiplying y inside the kernel: -1j for the
    forward transform, +1j for the inverse.
    """
    gammas = _axis_gammas(rs)
    d = rs.dimension
    if d == 1:
        ker = kernel_1d(gammas[0], grid.nodes[:, None], arg_side * np.atleast_1d(ys)[None, :])
        return (grid.weights * fvals) @ ker
    if d == 2 and grid.axes is not None:
        g1, g2 = grid.axes
        n1, n2 = len(g1.nodes), len(g2.nodes)
        fw = (fvals * grid.weights).reshape(n1, n2)
        pts = _points_2d(ys, 2)
        k1 = kernel_1d(gammas[0], g1.nodes[:, None], arg_side * pts[None, :, 0])
        k2 = kernel_1d(gammas[1], g2.nodes[:, None], arg_side * pts[None, :, 1])
        return np.einsum("ab,am,bm->m", fw, k1, k2, optimize=True)
    # generic fallback: full node-by-target kernel products
    pts = _points_2d(ys, d)
    out = np.zeros(len(pts), dtype=complex)
    for i, (x, w) in enumerate(zip(np.atleast_2d(grid.nodes), grid.weights)):
        ker = np.ones(len(pts), dtype=complex)
        for j, g in enumerate(gammas):
            ker *= kernel_1d(g, x[j], arg_side * pts[:, j])
        out += w * fvals[i] * ker
    return out


def dunkl_transform_many(rs: RootSystem, f, ys, plan: TransformPlan) -> np.ndarray:
    fvals = _grid_values(f, plan.space)
    return _contract(rs, plan.space, fvals, ys, -1j)


def dunkl_transform(rs: RootSystem, f: SampledFunction, y, plan: TransformPlan) -> complex:
    """Weighted integral of f against K(x, -i y)."""
    _require_integrable(f, "dunkl_transform", rs.dimension)
    return complex(dunkl_transform_many(rs, f, [y] if rs.dimension == 1 else [list(np.atleast_1d(y))], plan)[0])


def dunkl_inverse_many(rs: RootSystem, hvals_on_freq, xs, plan: TransformPlan) -> np.ndarray:
    return inverse_constant(rs) * _contract(rs, plan.freq, hvals_on_freq, xs, 1j)


def dunkl_inverse(rs: RootSystem, h: SampledFunction, x, plan: TransformPlan) -> complex:
    """Inverse transform; h must decay (schwartz or compact)."""
    _require_integrable(h, "dunkl_inverse", rs.dimension)
    hvals = np.asarray(h.evaluator(plan.freq.nodes))
    return complex(dunkl_inverse_many(rs, hvals, [x] if rs.dimension == 1 else [list(np.atleast_1d(x))], plan)[0])


def dunkl_roundtrip_many(rs: RootSystem, f, xs, plan: TransformPlan) -> np.ndarray:
    """Forward transform sampled on the frequency grid, then inverted at xs."""
    hvals = dunkl_transform_many(rs, f, plan.freq.nodes, plan)
    return dunkl_inverse_many(rs, hvals, xs, plan)


def _plain_contract(grid: QuadratureGrid, fvals, ys, sign: float):
    d = 1 if grid.nodes.ndim == 1 else grid.nodes.shape[1]
    if d == 1:
        phase = np.exp(sign * 1j * np.outer(grid.nodes, np.atleast_1d(ys)))
        return (grid.weights * fvals) @ phase
    pts = _points_2d(ys, d)
    if grid.axes is not None and d == 2:
        g1, g2 = grid.axes
        fw = (fvals * grid.weights).reshape(len(g1.nodes), len(g2.nodes))
        p1 = np.exp(sign * 1j * np.outer(g1.nodes, pts[:, 0]))
        p2 = np.exp(sign * 1j * np.outer(g2.nodes, pts[:, 1]))
        return np.einsum("ab,am,bm->m", fw, p1, p2, optimize=True)
    phase = np.exp(sign * 1j * (np.atleast_2d(grid.nodes) @ pts.T))
    return (grid.weights * fvals) @ phase


def classical_fourier_many(f, ys, plan: TransformPlan) -> np.ndarray:
    fvals = np.asarray(f(plan.space_plain.nodes))
    return _plain_contract(plan.space_plain, fvals, ys, -1.0)


def classical_fourier(f: SampledFunction, y, plan: TransformPlan) -> complex:
    """Plain Fourier integral with kernel exp(-i <x, y>) and no prefactor."""
    _require_integrable(f, "classical_fourier", plan.rs.dimension)
    return complex(classical_fourier_many(f, [y] if plan.rs.dimension == 1 else [list(np.atleast_1d(y))], plan)[0])


def fourier_bessel(profile, lam: float, alpha: float, radius: float = 1.0, n: int = 128) -> float:
    """Bessel transform of a radial profile.

    Integrates profile(r) j_alpha(lam r) r^(2 alpha + 1) / (2^alpha Gamma(alpha+1))
    over [0, radius], with the power of r absorbed into Jacobi nodes.  At
    lam = 0 this is the normalized moment integral of the profile.
    """
    if alpha < -0.5:
        raise InvalidArgumentError("alpha must be >= -1/2")
    t, w = _jacobi_rule(n, 0.0, 2.0 * alpha + 1.0)
    half = radius / 2.0
    r = half * (t + 1.0)
    wts = w * half ** (2.0 * alpha + 2.0)
    vals = np.asarray(profile(r)) * np.real(bessel_j_normalized(alpha, lam * r))
    norm = 2.0**alpha * math.gamma(alpha + 1.0)
    return float(np.sum(wts * vals) / norm)


def multiplier_P_many(rs: RootSystem, f, xs, plan: TransformPlan) -> np.ndarray:
    """Weight-multiplier operator: conjugate multiplication by the weight
    with the plain Fourier transform, times the inversion scalar."""
    hvals = classical_fourier_many(f, plan.freq.nodes, plan)
    pref = p_multiplier_constant(rs) / (2.0 * math.pi) ** rs.dimension
    return pref * _plain_contract(plan.freq, hvals, xs, 1.0)


def multiplier_P(rs: RootSystem, f: SampledFunction, x, plan: TransformPlan) -> float:
    _require_integrable(f, "multiplier_P", rs.dimension)
    val = multiplier_P_many(rs, f, [x] if rs.dimension == 1 else [list(np.atleast_1d(x))], plan)[0]
    if abs(val.imag) > 1e-7 * max(1.0, abs(val.real)):
        warnings.warn("multiplier_P produced a significant imaginary part", AccuracyWarning)
    return float(val.real)
