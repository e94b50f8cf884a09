"""Root systems, reflection groups, and reflection-invariant weights.

Everything here is exact: roots and multiplicities are rational vectors,
reflections are rational matrices, and group closure is computed by a plain
breadth-first product closure.  Floating point enters only in ``weight`` and
``mehta_constant``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AccuracyError,
    InvalidArgumentError,
    NotARootSystemError,
    UnsupportedCaseError,
)

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def rational(value) -> Fraction:
    """Parse a rational from an int, Fraction, or 'p/q' string."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise InvalidArgumentError(f"not a rational: {value!r}")


def _vec(values: Iterable) -> Vector:
    return tuple(rational(v) for v in values)


def dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def reflect(alpha: Sequence, x: Sequence):
    """Reflection of x in the hyperplane orthogonal to alpha.

    Exact when alpha and x are rational; also accepts float sequences.
    """
    nn = dot(alpha, alpha)
    if nn == 0:
        raise InvalidArgumentError("reflection axis must be nonzero")
    c = 2 * dot(alpha, x) / nn
    return tuple(xi - c * ai for xi, ai in zip(x, alpha))


def reflection_matrix(alpha: Vector) -> Matrix:
    d = len(alpha)
    nn = dot(alpha, alpha)
    return tuple(
        tuple((1 if i == j else 0) - 2 * alpha[i] * alpha[j] / nn for j in range(d))
        for i in range(d)
    )


def mat_vec(m: Matrix, x: Sequence) -> tuple:
    return tuple(dot(row, x) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    cols = tuple(zip(*b))
    return tuple(tuple(dot(a[i], cols[j]) for j in range(d)) for i in range(d))


def identity_matrix(d: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


@dataclass(frozen=True)
class MultiplicityProfile:
    """Multiplicity data attached to a root system.

    gamma is the sum of the multiplicities over the positive roots; it is the
    homogeneity index of the weight.  is_integer_case gates the operators that
    exist only for integer multiplicities.
    """

    by_root: tuple[Fraction, ...]
    gamma: Fraction
    is_integer_case: bool


@dataclass(frozen=True)
class ReflectionGroup:
    """A finite group of orthogonal rational matrices."""

    dimension: int
    elements: tuple[Matrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def apply(self, w: Matrix, x: Sequence):
        return mat_vec(w, x)


@dataclass(frozen=True)
class RootSystem:
    """A reduced root system with a reflection-invariant multiplicity.

    positive_roots holds one representative per pair {alpha, -alpha};
    multiplicities is aligned with it.  Use ``RootSystem.create`` so the
    closure and invariance checks run.
    """

    dimension: int
    positive_roots: tuple[Vector, ...]
    multiplicities: tuple[Fraction, ...]

    @staticmethod
    def create(dimension: int, positive_roots, multiplicities, max_order: int = 1024):
        if dimension < 1:
            raise InvalidArgumentError("dimension must be >= 1")
        roots = tuple(_vec(r) for r in positive_roots)
        mults = tuple(rational(k) for k in multiplicities)
        if len(roots) != len(mults):
            raise InvalidArgumentError("one multiplicity per positive root required")
        if not roots:
            raise NotARootSystemError("at least one positive root required")
        for r in roots:
            if len(r) != dimension:
                raise NotARootSystemError(f"root {r} has wrong dimension")
            if all(c == 0 for c in r):
                raise NotARootSystemError("roots must be nonzero")
        for k in mults:
            if k < 0:
                raise InvalidArgumentError("multiplicities must be nonnegative")
        for i, a in enumerate(roots):
            for b in roots[i + 1 :]:
                if _parallel(a, b):
                    raise NotARootSystemError(
                        f"positive roots {a} and {b} are parallel; the system must be reduced"
                    )
        rs = RootSystem(dimension, roots, mults)
        group = close_group(rs, max_order=max_order)
        _check_invariance(rs, group)
        return rs

    @property
    def gamma(self) -> Fraction:
        return sum(self.multiplicities, Fraction(0))

    @property
    def is_integer_case(self) -> bool:
        return all(k.denominator == 1 for k in self.multiplicities)

    def multiplicity_profile(self) -> MultiplicityProfile:
        return MultiplicityProfile(self.multiplicities, self.gamma, self.is_integer_case)

    def group(self) -> ReflectionGroup:
        return close_group(self)

    def multiplicity_of(self, root: Vector) -> Fraction:
        """Multiplicity of a root given up to sign and scaling."""
        for beta, k in zip(self.positive_roots, self.multiplicities):
            if _parallel(root, beta):
                return k
        raise InvalidArgumentError(f"{root} is not a root of this system")

    def axis_profile(self):
        """Per-axis (scale, multiplicity) when every root lies on a coordinate axis.

        Returns a tuple of (scale, k) pairs, one per coordinate, with scale None
        and k = 0 on axes that carry no root; returns None when some root is not
        axis-aligned.  This is the product structure used by the closed-form
        normalization and the one-dimensional factorizations.
        """
        profile: list = [(None, Fraction(0))] * self.dimension
        for alpha, k in zip(self.positive_roots, self.multiplicities):
            support = [j for j, c in enumerate(alpha) if c != 0]
            if len(support) != 1:
                return None
            j = support[0]
            profile[j] = (abs(alpha[j]), k)
        return tuple(profile)


def _parallel(a: Vector, b: Vector) -> bool:
    d = len(a)
    for i in range(d):
        for j in range(i + 1, d):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


def close_group(rs: RootSystem, max_order: int = 1024) -> ReflectionGroup:
    """Close the generating reflections under products.

    Raises NotARootSystemError when the closure exceeds max_order, which is the
    practical signal that the given roots do not generate a finite group.
    """
    return _close_group_cached(rs.dimension, rs.positive_roots, max_order)


@lru_cache(maxsize=None)
def _close_group_cached(dimension, roots, max_order) -> ReflectionGroup:
    generators = [reflection_matrix(a) for a in roots]
    seen = {identity_matrix(dimension)}
    frontier = list(seen)
    while frontier:
        new = []
        for w in frontier:
            for g in generators:
                wg = mat_mul(g, w)
                if wg not in seen:
                    seen.add(wg)
                    new.append(wg)
                    if len(seen) > max_order:
                        raise NotARootSystemError(
                            f"reflection closure exceeds {max_order} elements; "
                            "roots do not generate a finite group"
                        )
        frontier = new
    return ReflectionGroup(dimension, tuple(sorted(seen)))


def _check_invariance(rs: RootSystem, group: ReflectionGroup):
    """Every group image of a root must be a root with the same multiplicity."""
    for w in group:
        for alpha, k in zip(rs.positive_roots, rs.multiplicities):
            image = mat_vec(w, alpha)
            try:
                k_image = rs.multiplicity_of(image)
            except InvalidArgumentError:
                raise NotARootSystemError(
                    f"image {image} of root {alpha} is not in the system; "
                    "the root set is not closed under its reflections"
                ) from None
            if k_image != k:
                raise NotARootSystemError(
                    "multiplicity is not constant on the orbit of "
                    f"{alpha}: {k} vs {k_image}"
                )


def weight(rs: RootSystem, x):
    """The reflection-invariant weight prod |<alpha, x>|^(2 k(alpha)).

    Accepts a single point (scalar for d = 1, length-d sequence otherwise) and
    returns a float, or an (m, d) array (m-vector for d = 1) and returns an
    m-vector.
    """
    arr = np.asarray(x, dtype=float)
    single = arr.ndim == 0 or (arr.ndim == 1 and rs.dimension > 1)
    pts = arr.reshape(-1, rs.dimension)
    out = np.ones(pts.shape[0])
    for alpha, k in zip(rs.positive_roots, rs.multiplicities):
        a = np.array([float(c) for c in alpha])
        out *= np.abs(pts @ a) ** (2 * float(k))
    return float(out[0]) if single else out


def weight_exact(rs: RootSystem, x: Sequence) -> Fraction:
    """Exact weight at a rational point; needs all 2 k(alpha) integral."""
    out = Fraction(1)
    for alpha, k in zip(rs.positive_roots, rs.multiplicities):
        e = 2 * k
        if e.denominator != 1:
            raise UnsupportedCaseError("exact weight needs integer 2k")
        out *= abs(dot(alpha, _vec(x))) ** int(e)
    return out


def _gamma_half(k: Fraction) -> float:
    from scipy.special import gamma as _g

    return float(_g(float(k) + 0.5))


def mehta_constant(rs: RootSystem) -> float:
    """Normalization c_k = (integral of exp(-|x|^2) times the weight)^(-1).

    Closed form for products of one-dimensional factors; otherwise a tensor
    Gauss-Hermite quadrature with a refinement check.
    """
    profile = rs.axis_profile()
    if profile is not None:
        value = 1.0
        for scale, k in profile:
            g = _gamma_half(k)
            value *= 1.0 / g
            if scale is not None and scale != 1:
                value *= float(scale * scale) ** (-float(k))
        return value
    return _mehta_by_quadrature(rs)


def mehta_by_quadrature(rs: RootSystem) -> float:
    """Normalization by refinement-checked quadrature, independent of the
    closed form, so the two can be compared."""
    return _mehta_by_quadrature(rs)


def _axis_factor_quadrature(k: Fraction, scale) -> "Callable[[int], float]":
    # |a x|^{2k} exp(-x^2) on [0, R], mirrored; the Jacobi rule absorbs the
    # fractional power so the remaining integrand is entire
    from scipy.special import roots_jacobi

    g = float(k)
    c = 1.0 if scale is None else float(scale) ** (2.0 * g)
    radius = 9.0

    def integral(n):
        t, w = roots_jacobi(n, 0.0, 2.0 * g)
        x = radius * (t + 1.0) / 2.0
        wt = w * (radius / 2.0) ** (2.0 * g + 1.0)
        return 2.0 * c * float(np.sum(wt * np.exp(-(x**2))))

    return integral


def _mehta_by_quadrature(rs: RootSystem) -> float:
    from scipy.special import roots_hermite

    profile = rs.axis_profile()
    if profile is not None:

        def integral(n):
            value = 1.0
            for scale, k in profile:
                value *= _axis_factor_quadrature(k, scale)(n)
            return value

        coarse, fine = integral(80), integral(160)
    else:
        if rs.dimension > 3:
            raise UnsupportedCaseError(
                "generic normalization quadrature supports dimension <= 3"
            )

        def integral(n):
            nodes, wts = roots_hermite(n)
            pts = np.array(list(itertools.product(*([nodes] * rs.dimension))))
            wt = np.array(list(itertools.product(*([wts] * rs.dimension)))).prod(axis=1)
            return float(np.sum(wt * weight(rs, pts)))

        coarse, fine = integral(48), integral(96)
    if abs(coarse - fine) > 1e-9 * abs(fine):
        raise AccuracyError(
            "normalization quadrature did not converge",
            residual=abs(coarse - fine) / abs(fine),
        )
    return 1.0 / fine


# ---------------------------------------------------------------------------
# serialization and presets

def root_system_to_dict(rs: RootSystem) -> dict:
    return {
        "dimension": rs.dimension,
        "positive_roots": [[str(c) for c in r] for r in rs.positive_roots],
        "multiplicities": [str(k) for k in rs.multiplicities],
    }


def root_system_from_dict(data: dict) -> RootSystem:
    try:
        dimension = int(data["dimension"])
        roots = data["positive_roots"]
        mults = data["multiplicities"]
    except (KeyError, TypeError) as exc:
        raise InvalidArgumentError(f"malformed root-system document: {exc}") from None
    return RootSystem.create(dimension, roots, mults)


def load_root_system(path) -> RootSystem:
    with open(path) as fh:
        return root_system_from_dict(json.load(fh))


def save_root_system(rs: RootSystem, path):
    with open(path, "w") as fh:
        json.dump(root_system_to_dict(rs), fh, indent=2)
        fh.write("\n")


def rank_one(gamma) -> RootSystem:
    """The line with sign reflection: positive root 1 with multiplicity gamma."""
    return RootSystem.create(1, [[1]], [rational(gamma)])


def axis_product(*ks) -> RootSystem:
    """Sign reflections on each coordinate axis of R^d with the given multiplicities."""
    d = len(ks)
    roots = [[1 if j == i else 0 for j in range(d)] for i in range(d)]
    return RootSystem.create(d, roots, [rational(k) for k in ks])
