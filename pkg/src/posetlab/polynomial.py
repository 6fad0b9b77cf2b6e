"""Exact univariate polynomial machinery.

Integer polynomials are dense coefficient tuples (index = degree).
Everything is arbitrary precision; real-rootedness is decided exactly
with Sturm sequences over the rationals, never with floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb

from .errors import (
    InvalidSize,
    NegativeCoefficient,
    NonIntegerSolution,
    NotSymmetric,
    PreconditionViolated,
    ZeroPolynomial,
)


class IntPolynomial:
    """Dense integer-coefficient polynomial, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(int(a) for a in c)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def t(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other) -> "IntPolynomial":
        other = other if isinstance(other, IntPolynomial) else IntPolynomial((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __sub__(self, other) -> "IntPolynomial":
        other = other if isinstance(other, IntPolynomial) else IntPolynomial((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) - other.coefficient(i) for i in range(n))

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * a for i, a in enumerate(self.coeffs) if i > 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


@dataclass(frozen=True)
class SymmetricExpansion:
    """Coefficients a_i of f = sum a_i t^i (1+t)^(d-2i)."""

    d: int
    a: tuple[int, ...]

    @property
    def nonnegative(self) -> bool:
        return all(x >= 0 for x in self.a)

    def to_polynomial(self) -> IntPolynomial:
        total = IntPolynomial.zero()
        for i, ai in enumerate(self.a):
            total = total + ai * _t_pow(i) * _one_plus_t_pow(self.d - 2 * i)
        return total


@dataclass(frozen=True)
class EVector:
    """e_i = number of surjective partitions onto {1..i}; basis x^(i-1)(1-x)^(p-i)."""

    e: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.e)

    def to_w_polynomial(self) -> IntPolynomial:
        total = IntPolynomial.zero()
        for i, ei in enumerate(self.e, start=1):
            total = total + ei * _t_pow(i - 1) * _one_minus_t_pow(self.p - i)
        return total


def _t_pow(k: int) -> IntPolynomial:
    return IntPolynomial([0] * k + [1])


def _one_plus_t_pow(k: int) -> IntPolynomial:
    return IntPolynomial(comb(k, i) for i in range(k + 1))


def _one_minus_t_pow(k: int) -> IntPolynomial:
    return IntPolynomial((-1) ** i * comb(k, i) for i in range(k + 1))


def eulerian(n: int) -> IntPolynomial:
    """A_n(t) = sum over permutations of n letters of t^descents."""
    if n < 1:
        raise InvalidSize("eulerian polynomials need n >= 1")
    row = [1]
    for m in range(2, n + 1):
        row = [(k + 1) * (row[k] if k < len(row) else 0)
               + (m - k) * (row[k - 1] if k >= 1 else 0)
               for k in range(m)]
        while row and row[-1] == 0:
            row.pop()
    return IntPolynomial(row)


def eulerian_bruteforce(n: int) -> IntPolynomial:
    """Descent-count oracle by scanning all n! permutations."""
    if n < 1:
        raise InvalidSize("eulerian polynomials need n >= 1")
    counts = [0] * n
    for perm in permutations(range(n)):
        counts[sum(perm[i] > perm[i + 1] for i in range(n - 1))] += 1
    return IntPolynomial(counts)


def is_symmetric(f: IntPolynomial, d: int) -> bool:
    """coefficient(i) == coefficient(d - i) for 0 <= i <= d."""
    if f.degree > d:
        raise InvalidSize("degree exceeds symmetry bound d")
    return all(f.coefficient(i) == f.coefficient(d - i) for i in range(d + 1))


def is_unimodal(f: IntPolynomial) -> bool:
    c = f.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def symmetric_expand(f: IntPolynomial, d: int) -> SymmetricExpansion:
    """Expand f in the basis {t^i (1+t)^(d-2i)} by peeling off a_0.

    Negative coefficients are reported, not rejected: the expansion
    exists for every symmetric polynomial with center d/2.
    """
    if not is_symmetric(f, d):
        raise NotSymmetric(f"not symmetric with center {d}/2")
    a = []
    rest = f
    dd = d
    for _ in range(d // 2 + 1):
        a0 = rest.coefficient(0)
        a.append(a0)
        rest = rest - a0 * _one_plus_t_pow(dd)
        assert rest.coefficient(0) == 0
        rest = IntPolynomial(rest.coeffs[1:])
        dd -= 2
    assert rest.is_zero
    exp = SymmetricExpansion(d, tuple(a))
    assert exp.to_polynomial() == f
    return exp


# -- exact rational polynomial helpers --------------------------------

def qp_trim(c: list[Fraction]) -> tuple[Fraction, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def qp_from_int(f: IntPolynomial) -> tuple[Fraction, ...]:
    return tuple(Fraction(a) for a in f.coeffs)


def qp_add(a, b):
    n = max(len(a), len(b))
    return qp_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                    for i in range(n)])


def qp_scale(a, s):
    s = Fraction(s)
    return qp_trim([x * s for x in a])


def qp_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return qp_trim(out)


def qp_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def qp_compose_linear(f, a, b):
    """f(a*t + b) for rational a, b."""
    lin = qp_trim([Fraction(b), Fraction(a)])
    acc: tuple[Fraction, ...] = ()
    for c in reversed(f):
        acc = qp_add(qp_mul(acc, lin), (Fraction(c),))
    return acc


def qp_interpolate(points: list[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Lagrange interpolation through exact points."""
    total: tuple[Fraction, ...] = ()
    for i, (xi, yi) in enumerate(points):
        term: tuple[Fraction, ...] = (Fraction(yi),)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = qp_mul(term, (Fraction(-xj, 1) / (xi - xj), Fraction(1, xi - xj)))
        total = qp_add(total, term)
    return total


# -- Sturm-based root location ----------------------------------------

def _qp_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for i in range(len(b)):
            a[k + i] -= f * b[i]
        a.pop()
    return qp_trim(q), qp_trim(a)


def _qp_gcd(a, b):
    while b:
        _, r = _qp_divmod(a, b)
        a, b = b, r
    if a:
        a = qp_scale(a, Fraction(1, 1) / a[-1])
    return a


def _qp_derivative(a):
    return qp_trim([i * c for i, c in enumerate(a)][1:])


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def real_nonpositive_roots(f: IntPolynomial) -> bool:
    """True iff every complex root of f is real and <= 0 (exact Sturm count).

    t^k factors are stripped first; the squarefree part is then required
    to have as many distinct real roots in (-inf, 0] as its degree.
    """
    if f.is_zero:
        raise ZeroPolynomial("zero polynomial has no root locus")
    c = list(f.coeffs)
    while c[0] == 0:
        c.pop(0)
    g = qp_from_int(IntPolynomial(c))
    if len(g) <= 1:
        return True
    g = _qp_divmod(g, _qp_gcd(g, _qp_derivative(g)))[0]  # squarefree part
    deg = len(g) - 1
    chain = [g, _qp_derivative(g)]
    while chain[-1]:
        _, r = _qp_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append(qp_scale(r, -1))
    at_minus_inf = [_sign(p[-1]) * (-1) ** (len(p) - 1) for p in chain if p]
    at_zero = [_sign(p[0]) for p in chain if p]
    roots_in_interval = _variations(at_minus_inf) - _variations(at_zero)
    return roots_in_interval == deg


def mode(f: IntPolynomial) -> Fraction:
    """Mean of the argmax indices of the coefficient sequence."""
    if f.is_zero:
        raise ZeroPolynomial("mode of the zero polynomial is undefined")
    if any(a < 0 for a in f.coeffs):
        raise NegativeCoefficient("mode requires non-negative coefficients")
    top = max(f.coeffs)
    arg = [i for i, a in enumerate(f.coeffs) if a == top]
    return Fraction(sum(arg), len(arg))


def mode_bound_check(f: IntPolynomial) -> bool:
    """|f'(1)/f(1) - mode(f)| < 1, exactly in rationals."""
    if f.is_zero or f.coeffs[-1] <= 0 or not real_nonpositive_roots(f):
        raise PreconditionViolated("needs positive leading coefficient and "
                                   "real non-positive roots")
    ratio = Fraction(f.derivative()(1), f(1))
    return abs(ratio - mode(f)) < 1


def to_e_vector(w: IntPolynomial, p: int) -> EVector:
    """Solve W(x) = sum_i e_i x^(i-1) (1-x)^(p-i) (unit triangular system)."""
    if w.degree > p - 1:
        raise InvalidSize("degree of w exceeds p - 1")
    residual = [w.coefficient(i) for i in range(p)]
    e = []
    for i in range(1, p + 1):
        ei = residual[i - 1]
        e.append(ei)
        basis = _t_pow(i - 1) * _one_minus_t_pow(p - i)
        for k in range(p):
            residual[k] -= ei * basis.coefficient(k)
    if any(residual):
        raise NonIntegerSolution("no expansion in the e-vector basis")
    return EVector(tuple(e))


# -- serialization -----------------------------------------------------

def poly_to_json(f: IntPolynomial) -> list[str]:
    """JSON form: decimal coefficient strings, constant term first."""
    return [str(a) for a in f.coeffs]


def poly_from_json(data) -> IntPolynomial:
    return IntPolynomial(int(s) for s in data)
