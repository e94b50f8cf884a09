"""The Dunkl kernel: closed form on the line, moment series in general.

The one-dimensional kernel is a two-term combination of normalized Bessel
functions.  The general kernel is the generating series of intertwined powers
of a linear form, summed with an explicit tail bound.  Second arguments are
real or purely imaginary vectors; the one-dimensional closed form also accepts
general complex scalars of moderate size through the Bessel series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gamma as gamma_fn
from scipy.special import iv, jv

from .errors import AccuracyError, InvalidArgumentError, UnsupportedCaseError
from .polyexact import intertwine_matrix, monomial_basis
from .report import VerificationReport
from .rootsys import RootSystem

_SERIES_RADIUS = 12.0
_COMPLEX_RADIUS = 30.0


@dataclass(frozen=True)
class KernelConfig:
    """Truncation order and certified tolerance for series evaluation."""

    truncation: int = 40
    tolerance: float = 1e-12


DEFAULT_CONFIG = KernelConfig()


def _bessel_series(alpha: float, u: np.ndarray, max_terms: int = 400) -> np.ndarray:
    """Power series for the normalized Bessel function, adaptive truncation."""
    z = -((u / 2.0) ** 2)
    term = np.ones_like(z)
    total = np.ones_like(z)
    for n in range(1, max_terms + 1):
        term = term * z / (n * (n + alpha))
        total = total + term
        if np.max(np.abs(term)) <= 1e-18 * max(1.0, np.max(np.abs(total))):
            return total
    raise AccuracyError("Bessel series did not converge", residual=float(np.max(np.abs(term))))


def bessel_j_normalized(alpha: float, u):
    """j_alpha(u) = Gamma(alpha+1) sum (-1)^n (u/2)^(2n) / (n! Gamma(n+alpha+1)).

    Normalized so j_alpha(0) = 1.  Even in u.  Real and purely imaginary
    arguments are supported at any magnitude; general complex arguments only
    while the series is numerically safe.
    """
    if alpha < -0.5:
        raise InvalidArgumentError("order must be >= -1/2")
    arr = np.asarray(u, dtype=complex)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty(arr.shape, dtype=complex)

    mag = np.abs(arr)
    scale = np.maximum(1.0, mag)
    is_real = np.abs(arr.imag) <= 1e-14 * scale
    is_imag = np.abs(arr.real) <= 1e-14 * scale
    small = mag <= _SERIES_RADIUS

    todo_small = small
    if np.any(todo_small):
        out[todo_small] = _bessel_series(alpha, arr[todo_small])

    rest = ~small
    m_real = rest & is_real
    if np.any(m_real):
        x = np.abs(arr[m_real].real)
        vals = (2.0**alpha) * gamma_fn(alpha + 1.0) * jv(alpha, x) / x**alpha
        out[m_real] = vals
    m_imag = rest & is_imag & ~is_real
    if np.any(m_imag):
        y = np.abs(arr[m_imag].imag)
        vals = (2.0**alpha) * gamma_fn(alpha + 1.0) * iv(alpha, y) / y**alpha
        out[m_imag] = vals
    m_gen = rest & ~is_real & ~is_imag
    if np.any(m_gen):
        if np.max(mag[m_gen]) > _COMPLEX_RADIUS:
            raise InvalidArgumentError(
                "general complex argument outside the supported range "
                f"|u| <= {_COMPLEX_RADIUS}"
            )
        out[m_gen] = _bessel_series(alpha, arr[m_gen])

    return complex(out[0]) if scalar else out


def kernel_1d(gamma, z, t):
    """The rank-one kernel via its Bessel closed form.

    Arguments may be scalars or broadcastable arrays; real or purely imaginary
    values cover the transform-side uses, and modest general complex values
    are handled by the series.  gamma = 0 degenerates to exp(z t).
    """
    g = float(gamma)
    if g < 0:
        raise InvalidArgumentError("gamma must be nonnegative")
    zz = np.asarray(z, dtype=complex)
    tt = np.asarray(t, dtype=complex)
    if g == 0.0:
        val = np.exp(zz * tt)
    else:
        u = 1j * zz * tt
        val = bessel_j_normalized(g - 0.5, u) + (zz * tt / (2.0 * g + 1.0)) * bessel_j_normalized(
            g + 0.5, u
        )
    if zz.ndim == 0 and tt.ndim == 0:
        return complex(val)
    return val


def kernel_1d_dz(gamma, z, t):
    """Derivative of kernel_1d in its first argument, via j' identities."""
    g = float(gamma)
    zz = np.asarray(z, dtype=complex)
    tt = np.asarray(t, dtype=complex)
    if g == 0.0:
        val = tt * np.exp(zz * tt)
        if zz.ndim == 0 and tt.ndim == 0:
            return complex(val)
        return val
    u = 1j * zz * tt
    ja = bessel_j_normalized(g + 0.5, u)
    jb = bessel_j_normalized(g + 1.5, u)
    # d/du j_a(u) = -u j_{a+1}(u) / (2(a+1))
    term1 = (1j * tt) * (-u * ja / (2.0 * g + 1.0))
    term2 = (tt / (2.0 * g + 1.0)) * ja
    term3 = (zz * tt / (2.0 * g + 1.0)) * (1j * tt) * (-u * jb / (2.0 * g + 3.0))
    val = term1 + term2 + term3
    if zz.ndim == 0 and tt.ndim == 0:
        return complex(val)
    return val


def _as_vector(x, dimension: int) -> np.ndarray:
    arr = np.asarray(x, dtype=complex).reshape(-1)
    if arr.size != dimension:
        raise InvalidArgumentError(f"expected a point of dimension {dimension}")
    return arr


def kernel_value(rs: RootSystem, x, z, config: KernelConfig = DEFAULT_CONFIG) -> complex:
    """K(x, z) for a point x and a real or purely imaginary vector z.

    Product systems factor into one-dimensional kernels (the reflection part
    of each factor only sees its own coordinate); anything else goes through
    the moment series.
    """
    xv = _as_vector(x, rs.dimension)
    zv = _as_vector(z, rs.dimension)
    profile = rs.axis_profile()
    if profile is not None:
        out = complex(1.0)
        for j, (_, k) in enumerate(profile):
            out *= kernel_1d(k, xv[j], zv[j])
        return out
    return kernel_series(rs, x, z, config)


@lru_cache(maxsize=None)
def _intertwine_matrix_float(rs: RootSystem, degree: int) -> np.ndarray:
    mat = intertwine_matrix(rs, degree)
    return np.array([[float(v) for v in row] for row in mat])


def _multinomial_coeffs(exponents, v: np.ndarray, n: int) -> np.ndarray:
    out = np.empty(len(exponents))
    for i, e in enumerate(exponents):
        c = math.factorial(n)
        mono = 1.0
        for ei, vi in zip(e, v):
            c //= math.factorial(ei)
            mono *= vi**ei
        out[i] = c * mono
    return out


def kernel_series(rs: RootSystem, x, z, config: KernelConfig = DEFAULT_CONFIG) -> complex:
    """K(x, z) as the series of intertwined powers of <., z>.

    The n-th term applies the exact degree-n intertwining matrix to the
    coefficients of <y, z>^n / n! and evaluates at x.  The tail is bounded by
    the exponential remainder with ratio |x||z|; if the bound cannot be pushed
    below the configured tolerance within the truncation order, an accuracy
    error is raised rather than returning an uncertified value.
    """
    xv = np.real_if_close(_as_vector(x, rs.dimension))
    if np.iscomplexobj(xv) and np.max(np.abs(xv.imag)) > 1e-14 * max(1.0, np.max(np.abs(xv))):
        raise UnsupportedCaseError("series path needs a real first argument")
    xv = xv.real.astype(float)
    zv = _as_vector(z, rs.dimension)
    scale = max(1.0, float(np.max(np.abs(zv)))) if zv.size else 1.0
    if np.max(np.abs(zv.imag)) <= 1e-14 * scale:
        factor, v = 1.0 + 0j, zv.real.astype(float)
    elif np.max(np.abs(zv.real)) <= 1e-14 * scale:
        factor, v = 1j, zv.imag.astype(float)
    else:
        raise UnsupportedCaseError(
            "series path supports real or purely imaginary second arguments"
        )
    r = float(np.linalg.norm(xv) * np.linalg.norm(v))
    total = complex(1.0)
    fact = 1.0
    phase = complex(1.0)
    for n in range(1, config.truncation + 1):
        basis = monomial_basis(rs.dimension, n)
        coeffs = _multinomial_coeffs(basis, v, n)
        image = _intertwine_matrix_float(rs, n) @ coeffs
        mono_vals = np.array([np.prod(xv**np.array(e)) for e in basis])
        moment = float(image @ mono_vals)
        fact *= n
        phase *= factor
        total += phase * moment / fact
        if r < n + 2:
            tail = r ** (n + 1) / (math.factorial(n + 1) * (1.0 - r / (n + 2)))
            if tail <= config.tolerance:
                return total
    tail = float("inf") if r >= config.truncation + 2 else r ** (
        config.truncation + 1
    ) / math.factorial(config.truncation + 1)
    raise AccuracyError(
        "kernel series truncation tail exceeds the configured tolerance; "
        "increase the truncation order or shrink the arguments",
        residual=tail,
    )


def check_bounds(
    rs: RootSystem,
    samples,
    tol: float = 1e-12,
    config: KernelConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Boundedness and invariance checks on a sample set of real pairs (x, y).

    Violations are reported as residuals, not exceptions: each check carries
    the largest observed excess over its bound.
    """
    pairs = [(np.atleast_1d(np.asarray(x, float)), np.atleast_1d(np.asarray(y, float))) for x, y in samples]
    for x, y in pairs:
        if x.size != rs.dimension or y.size != rs.dimension:
            raise InvalidArgumentError("sample dimension mismatch")
    report = VerificationReport(suite="kernel-bounds", env={"samples": len(pairs), "tol": tol})

    excess_unit = 0.0
    excess_exp = 0.0
    excess_sharp = 0.0
    invariance = 0.0
    at_zero = 0.0
    group = [np.array([[float(c) for c in row] for row in w]) for w in rs.group()]
    axis = rs.axis_profile()
    for x, y in pairs:
        k_imag = kernel_value(rs, 1j * x, y, config)
        excess_unit = max(excess_unit, abs(k_imag) - 1.0)
        k_real = kernel_value(rs, x, y, config)
        bound = math.exp(float(np.linalg.norm(x) * np.linalg.norm(y)))
        excess_exp = max(excess_exp, abs(k_real) / bound - 1.0)
        if axis is not None:
            sharp = math.exp(float(np.sum(np.abs(x * y))))
            excess_sharp = max(excess_sharp, abs(k_real) / sharp - 1.0)
        at_zero = max(at_zero, abs(kernel_value(rs, np.zeros_like(x), y, config) - 1.0))
        for w in group:
            invariance = max(
                invariance, abs(kernel_value(rs, w @ x, w @ y, config) - k_real)
            )

    report.add("unit-bound-imaginary", "|K(ix, y)| <= 1 for real x, y", excess_unit, tol)
    report.add(
        "exponential-bound-real", "|K(x, y)| <= exp(|x||y|) for real x, y", excess_exp, tol
    )
    if axis is not None:
        report.add(
            "sharp-exponential-bound",
            "|K(x, y)| <= exp(max over the group of <wx, y>)",
            excess_sharp,
            tol,
        )
    report.add("value-at-zero", "K(0, y) = 1", at_zero, tol)
    report.add(
        "group-invariance", "K(wx, wy) = K(x, y) for group elements w", invariance, 10 * tol
    )
    return report
