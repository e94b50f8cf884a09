"""Exact polynomial calculus for Dunkl operators.

Polynomials carry Fraction coefficients, so the transmutation identities can
be asserted with zero residual.  The intertwining operator is realized degree
by degree as the unique solution of an exact linear system, and its inverse is
the exact matrix inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from .errors import (
    InternalInvariantError,
    InvalidArgumentError,
    UnsupportedCaseError,
)
from .rootsys import RootSystem, rational, reflection_matrix

Exponents = tuple[int, ...]


class RationalPoly:
    """A multivariate polynomial over the rationals.

    Stored as a map from exponent tuples to nonzero Fraction coefficients.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("dimension", "terms")

    def __init__(self, dimension: int, terms=None):
        if dimension < 1:
            raise InvalidArgumentError("dimension must be >= 1")
        clean = {}
        for exps, coeff in (terms or {}).items():
            c = rational(coeff)
            if c == 0:
                continue
            e = tuple(int(v) for v in exps)
            if len(e) != dimension or any(v < 0 for v in e):
                raise InvalidArgumentError(f"bad exponent tuple {exps}")
            clean[e] = c
        self.dimension = dimension
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(dimension: int) -> "RationalPoly":
        return RationalPoly(dimension, {})

    @staticmethod
    def constant(dimension: int, value) -> "RationalPoly":
        return RationalPoly(dimension, {(0,) * dimension: rational(value)})

    @staticmethod
    def variable(dimension: int, j: int) -> "RationalPoly":
        if not 0 <= j < dimension:
            raise InvalidArgumentError("variable index out of range")
        e = tuple(1 if i == j else 0 for i in range(dimension))
        return RationalPoly(dimension, {e: Fraction(1)})

    @staticmethod
    def monomial(dimension: int, exponents, coeff=1) -> "RationalPoly":
        return RationalPoly(dimension, {tuple(exponents): rational(coeff)})

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_components(self) -> dict[int, "RationalPoly"]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {n: RationalPoly(self.dimension, t) for n, t in sorted(parts.items())}

    def __eq__(self, other):
        return (
            isinstance(other, RationalPoly)
            and self.dimension == other.dimension
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.dimension, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero():
            return "RationalPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i}^{p}" for i, p in enumerate(e) if p) or "1"
            bits.append(f"{c}*{mono}")
        return "RationalPoly(" + " + ".join(bits) + ")"

    # -- arithmetic ----------------------------------------------------------

    def _binop(self, other, sign):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.constant(self.dimension, other)
        if self.dimension != other.dimension:
            raise InvalidArgumentError("dimension mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + sign * c
        return RationalPoly(self.dimension, terms)

    def __add__(self, other):
        return self._binop(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RationalPoly(self.dimension, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = rational(other)
            return RationalPoly(self.dimension, {e: c * v for e, v in self.terms.items()})
        if self.dimension != other.dimension:
            raise InvalidArgumentError("dimension mismatch")
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return RationalPoly(self.dimension, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidArgumentError("negative power")
        out = RationalPoly.constant(self.dimension, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus ------------------------------------------------------------

    def partial(self, j: int) -> "RationalPoly":
        if not 0 <= j < self.dimension:
            raise InvalidArgumentError("variable index out of range")
        terms = {}
        for e, c in self.terms.items():
            if e[j] == 0:
                continue
            ne = e[:j] + (e[j] - 1,) + e[j + 1 :]
            terms[ne] = terms.get(ne, Fraction(0)) + c * e[j]
        return RationalPoly(self.dimension, terms)

    def compose_linear(self, m) -> "RationalPoly":
        """p(M x) for a rational square matrix M given as rows."""
        forms = [
            RationalPoly(
                self.dimension,
                {
                    tuple(1 if jj == j else 0 for jj in range(self.dimension)): rational(m[i][j])
                    for j in range(self.dimension)
                    if rational(m[i][j]) != 0
                },
            )
            for i in range(self.dimension)
        ]
        powers: dict[tuple[int, int], RationalPoly] = {}

        def power(i, n):
            if n == 0:
                return RationalPoly.constant(self.dimension, 1)
            key = (i, n)
            if key not in powers:
                powers[key] = power(i, n - 1) * forms[i]
            return powers[key]

        out = RationalPoly.zero(self.dimension)
        for e, c in self.terms.items():
            term = RationalPoly.constant(self.dimension, c)
            for i, p in enumerate(e):
                if p:
                    term = term * power(i, p)
            out = out + term
        return out

    def evaluate(self, point) -> Fraction:
        pt = [rational(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for xi, p in zip(pt, e):
                v *= xi**p
            total += v
        return total

    def evaluate_float(self, points) -> np.ndarray:
        """Evaluate at float points of shape (m, d); returns an m-vector."""
        pts = np.asarray(points, dtype=float).reshape(-1, self.dimension)
        out = np.zeros(pts.shape[0])
        for e, c in self.terms.items():
            mono = np.ones(pts.shape[0])
            for i, p in enumerate(e):
                if p:
                    mono *= pts[:, i] ** p
            out += float(c) * mono
        return out


def divide_by_linear_form(p: RationalPoly, alpha) -> RationalPoly:
    """Exact quotient p / <alpha, x> for p divisible by the linear form.

    Synthetic division in the first variable alpha touches; a nonzero
    remainder means the caller's divisibility assumption failed and is
    reported as an internal error.
    """
    a = [rational(v) for v in alpha]
    try:
        i = next(idx for idx, v in enumerate(a) if v != 0)
    except StopIteration:
        raise InvalidArgumentError("linear form must be nonzero") from None
    ai = a[i]
    quot: dict = {}
    rem = dict(p.terms)
    while rem:
        m = max(e[i] for e in rem)
        if m == 0:
            raise InternalInvariantError("polynomial is not divisible by the linear form")
        slab = [(e, c) for e, c in rem.items() if e[i] == m]
        for e, c in slab:
            qe = e[:i] + (m - 1,) + e[i + 1 :]
            qc = c / ai
            quot[qe] = quot.get(qe, Fraction(0)) + qc
            for j, aj in enumerate(a):
                if aj == 0:
                    continue
                be = qe[:j] + (qe[j] + 1,) + qe[j + 1 :]
                nv = rem.get(be, Fraction(0)) - qc * aj
                if nv == 0:
                    rem.pop(be, None)
                else:
                    rem[be] = nv
    return RationalPoly(p.dimension, quot)


def dunkl_apply(rs: RootSystem, j: int, p: RationalPoly) -> RationalPoly:
    """The j-th Dunkl operator: partial_j plus the weighted difference part."""
    if p.dimension != rs.dimension:
        raise InvalidArgumentError("polynomial dimension does not match the root system")
    if not 0 <= j < rs.dimension:
        raise InvalidArgumentError("direction index out of range")
    out = p.partial(j)
    for alpha, k in zip(rs.positive_roots, rs.multiplicities):
        if k == 0 or alpha[j] == 0:
            continue
        reflected = p.compose_linear(reflection_matrix(alpha))
        diff = p - reflected
        if diff.is_zero():
            continue
        out = out + (k * alpha[j]) * divide_by_linear_form(diff, alpha)
    return out


def directional_apply(rs: RootSystem, alpha, p: RationalPoly, dunkl: bool) -> RationalPoly:
    """(alpha . D) p where D is either the gradient or the Dunkl gradient."""
    out = RationalPoly.zero(p.dimension)
    for j, aj in enumerate(alpha):
        aj = rational(aj)
        if aj == 0:
            continue
        part = dunkl_apply(rs, j, p) if dunkl else p.partial(j)
        out = out + aj * part
    return out


# ---------------------------------------------------------------------------
# exact linear algebra

def solve_exact(a_rows, b_rows):
    """Solve A X = B exactly for A of full column rank; B holds stacked columns.

    a_rows: m x n Fractions, b_rows: m x r.  Raises when the system is
    rank-deficient or inconsistent.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    r = len(b_rows[0]) if b_rows else 0
    aug = [list(a_rows[i]) + list(b_rows[i]) for i in range(m)]
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if piv is None:
            raise InternalInvariantError("rank-deficient system in exact solve")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        row += 1
    for i in range(row, m):
        if any(v != 0 for v in aug[i][n:]):
            raise InternalInvariantError("inconsistent system in exact solve")
    return [aug[i][n:] for i in range(n)]


def invert_exact(m_rows):
    n = len(m_rows)
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return solve_exact(m_rows, eye)


# ---------------------------------------------------------------------------
# the intertwining operator, degree by degree

@lru_cache(maxsize=None)
def monomial_basis(dimension: int, degree: int) -> tuple[Exponents, ...]:
    """All exponent tuples of total degree ``degree``, in sorted order."""
    if degree == 0:
        return ((0,) * dimension,)
    out = set()
    for combo in combinations_with_replacement(range(dimension), degree):
        e = [0] * dimension
        for i in combo:
            e[i] += 1
        out.add(tuple(e))
    return tuple(sorted(out))


def _coeff_vector(p: RationalPoly, basis) -> list[Fraction]:
    return [p.terms.get(e, Fraction(0)) for e in basis]


@lru_cache(maxsize=None)
def _dunkl_matrix(rs: RootSystem, j: int, degree: int):
    """Matrix of the j-th Dunkl operator from degree n to degree n - 1."""
    src = monomial_basis(rs.dimension, degree)
    dst = monomial_basis(rs.dimension, degree - 1)
    cols = []
    for e in src:
        image = dunkl_apply(rs, j, RationalPoly.monomial(rs.dimension, e))
        cols.append(_coeff_vector(image, dst))
    return [[cols[c][r] for c in range(len(src))] for r in range(len(dst))]


@lru_cache(maxsize=None)
def intertwine_matrix(rs: RootSystem, degree: int):
    """Matrix of the intertwining operator on homogeneous degree ``degree``.

    Characterized by sending 1 to 1 and by the transmutation property: the
    Dunkl image of a transformed monomial equals the transform of its plain
    derivative.  For nonnegative multiplicities the stacked system has a
    unique solution, which is found by exact elimination.
    """
    d = rs.dimension
    if degree == 0:
        return [[Fraction(1)]]
    prev = intertwine_matrix(rs, degree - 1)
    basis_n = monomial_basis(d, degree)
    basis_p = monomial_basis(d, degree - 1)
    index_p = {e: i for i, e in enumerate(basis_p)}
    a_rows = []
    for j in range(d):
        a_rows.extend(_dunkl_matrix(rs, j, degree))
    rhs_rows = [[Fraction(0)] * len(basis_n) for _ in range(d * len(basis_p))]
    for col, e in enumerate(basis_n):
        for j in range(d):
            if e[j] == 0:
                continue
            lower = e[:j] + (e[j] - 1,) + e[j + 1 :]
            src = index_p[lower]
            for r in range(len(basis_p)):
                rhs_rows[j * len(basis_p) + r][col] += e[j] * prev[r][src]
    return solve_exact(a_rows, rhs_rows)


@lru_cache(maxsize=None)
def intertwine_matrix_inverse(rs: RootSystem, degree: int):
    return invert_exact(intertwine_matrix(rs, degree))


def _apply_graded_matrix(rs: RootSystem, p: RationalPoly, matrix_for):
    if p.dimension != rs.dimension:
        raise InvalidArgumentError("polynomial dimension does not match the root system")
    out = RationalPoly.zero(p.dimension)
    for n, comp in p.homogeneous_components().items():
        basis = monomial_basis(p.dimension, n)
        vec = _coeff_vector(comp, basis)
        mat = matrix_for(rs, n)
        terms = {}
        for r, e in enumerate(basis):
            c = sum((mat[r][col] * vec[col] for col in range(len(basis))), Fraction(0))
            if c != 0:
                terms[e] = c
        out = out + RationalPoly(p.dimension, terms)
    return out


def intertwine(rs: RootSystem, p: RationalPoly) -> RationalPoly:
    """Apply the intertwining operator; degree-preserving and exact."""
    return _apply_graded_matrix(rs, p, intertwine_matrix)


def intertwine_inverse(rs: RootSystem, p: RationalPoly) -> RationalPoly:
    """Apply the inverse of the intertwining operator on polynomials."""
    return _apply_graded_matrix(rs, p, intertwine_matrix_inverse)


# ---------------------------------------------------------------------------
# the scalar in front of the inversion operators

@dataclass(frozen=True)
class OperatorConstants:
    """The scalar pi^d c_k^2 / 2^(2 gamma) kept in symbolic parts.

    value = rational * pi^pi_power * prod Gamma(a)^e * prod base^q.  For
    integer multiplicities on an axis-product system everything collapses into
    ``rational`` and the operators built from it stay exact.
    """

    rational: Fraction
    pi_power: int
    gamma_factors: tuple[tuple[Fraction, int], ...]
    power_factors: tuple[tuple[Fraction, Fraction], ...]

    def as_float(self) -> float:
        from scipy.special import gamma as _g

        value = float(self.rational) * float(np.pi) ** self.pi_power
        for arg, e in self.gamma_factors:
            value *= float(_g(float(arg))) ** e
        for base, q in self.power_factors:
            value *= float(base) ** float(q)
        return value

    def as_fraction(self) -> Fraction:
        if self.pi_power != 0 or self.gamma_factors or self.power_factors:
            raise UnsupportedCaseError(
                "the operator scalar is rational only for integer multiplicities"
            )
        return self.rational

    @property
    def is_rational(self) -> bool:
        return self.pi_power == 0 and not self.gamma_factors and not self.power_factors


def _gamma_half_squared_inverse(k: Fraction):
    """Pieces of Gamma(k + 1/2)^(-2): (rational, pi_power, gamma_factors)."""
    if k.denominator == 1:
        from math import factorial

        n = int(k)
        f = Fraction(4**n * factorial(n), factorial(2 * n))
        return f * f, -1, ()
    return Fraction(1), 0, ((k + Fraction(1, 2), -2),)


def operator_prefactor(rs: RootSystem) -> OperatorConstants:
    """The scalar appearing in both inversion multipliers.

    Requires an axis-product system, where the normalization constant has the
    closed Gamma-product form.
    """
    profile = rs.axis_profile()
    if profile is None:
        raise UnsupportedCaseError(
            "closed-form operator scalar needs a product of one-dimensional factors"
        )
    rat = Fraction(1)
    pi_power = rs.dimension
    gammas: list = []
    powers: list = []
    for scale, k in profile:
        g_rat, g_pi, g_fac = _gamma_half_squared_inverse(k)
        rat *= g_rat
        pi_power += g_pi
        gammas.extend(g_fac)
        if scale is not None and scale != 1 and k != 0:
            e = -2 * k
            if e.denominator == 1:
                rat *= (scale * scale) ** int(e)
            else:
                powers.append((scale * scale, e))
    two_gamma = 2 * rs.gamma
    if two_gamma.denominator == 1:
        rat /= Fraction(2) ** int(two_gamma)
    else:
        powers.append((Fraction(2), -two_gamma))
    return OperatorConstants(rat, pi_power, tuple(gammas), tuple(powers))


def _require_integer_case(rs: RootSystem, what: str):
    if not rs.is_integer_case:
        raise UnsupportedCaseError(f"{what} exists only for integer multiplicities")


def apply_P_poly(rs: RootSystem, p: RationalPoly) -> RationalPoly:
    """The local form of the first inversion multiplier on polynomials.

    Scalar times the product over positive roots of (-1)^k (alpha . grad)^(2k).
    Integer multiplicities only; the result is exact.
    """
    _require_integer_case(rs, "the differential form of the inversion multiplier")
    pref = operator_prefactor(rs).as_fraction()
    out = p
    sign = 1
    for alpha, k in zip(rs.positive_roots, rs.multiplicities):
        n = int(k)
        sign *= (-1) ** n
        for _ in range(2 * n):
            out = directional_apply(rs, alpha, out, dunkl=False)
    return (pref * sign) * out


def apply_Q_poly(rs: RootSystem, p: RationalPoly) -> RationalPoly:
    """Same scalar and product shape as apply_P_poly with Dunkl gradients."""
    _require_integer_case(rs, "the Dunkl form of the inversion multiplier")
    pref = operator_prefactor(rs).as_fraction()
    out = p
    sign = 1
    for alpha, k in zip(rs.positive_roots, rs.multiplicities):
        n = int(k)
        sign *= (-1) ** n
        for _ in range(2 * n):
            out = directional_apply(rs, alpha, out, dunkl=True)
    return (pref * sign) * out


# ---------------------------------------------------------------------------
# serialization

def poly_to_terms(p: RationalPoly) -> list[dict]:
    return [
        {"exponents": list(e), "coeff": str(c)} for e, c in sorted(p.terms.items())
    ]


def poly_from_terms(dimension: int, terms) -> RationalPoly:
    data = {}
    for item in terms:
        try:
            e = tuple(int(v) for v in item["exponents"])
            c = rational(item["coeff"])
        except (KeyError, TypeError) as exc:
            raise InvalidArgumentError(f"malformed polynomial term: {exc}") from None
        data[e] = data.get(e, Fraction(0)) + c
    return RationalPoly(dimension, data)
