"""Exact rational polynomials, Bernoulli numbers and generalized Faulhaber polynomials.

Nothing in here touches floating point; every coefficient is a ``Fraction``.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .setcomb import integer_composition_coarsenings


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalPolynomial:
    """Dense polynomial with ``Fraction`` coefficients in ascending degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [_frac(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "RationalPolynomial":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self.coefficients == RationalPolynomial([other]).coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other) -> "RationalPolynomial":
        other = _poly(other)
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return RationalPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coefficients)

    def __sub__(self, other) -> "RationalPolynomial":
        return self + (-_poly(other))

    def __rsub__(self, other) -> "RationalPolynomial":
        return _poly(other) - self

    def __mul__(self, other) -> "RationalPolynomial":
        other = _poly(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPolynomial":
        out = RationalPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def compose_negate(self) -> "RationalPolynomial":
        """The polynomial ``x -> p(-x)``."""
        return RationalPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients))

    def shift(self, s) -> "RationalPolynomial":
        """The polynomial ``x -> p(x + s)``."""
        out = RationalPolynomial()
        base = RationalPolynomial([s, 1])
        for c in reversed(self.coefficients):
            out = out * base + c
        return out

    def to_strings(self) -> list[str]:
        return [fraction_to_string(c) for c in self.coefficients] or ["0"]

    def __repr__(self) -> str:
        return f"RationalPolynomial({self.to_strings()})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            coef = "" if (mag == 1 and i > 0) else fraction_to_string(mag)
            mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            body = coef + ("*" if coef and mono else "") + mono
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def _poly(x) -> RationalPolynomial:
    return x if isinstance(x, RationalPolynomial) else RationalPolynomial([x])


def fraction_to_string(c) -> str:
    c = _frac(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


# -- Bernoulli numbers ------------------------------------------------------

_bernoulli_table: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(j: int) -> Fraction:
    """Bernoulli number ``B_j`` with ``B_1 = -1/2``.

    Uses ``sum_{k=0}^{m} C(m+1, k) B_k = 0`` and a shared memo table.
    """
    if j < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if j < len(_bernoulli_table):
        return _bernoulli_table[j]
    with _bernoulli_lock:
        table = _bernoulli_table
        while len(table) <= j:
            m = len(table)
            s = sum(comb(m + 1, k) * table[k] for k in range(m))
            table.append(-s / (m + 1))
        return table[j]


# -- Lagrange interpolation --------------------------------------------------


def lagrange_interpolate(points: Sequence[tuple]) -> RationalPolynomial:
    """The unique polynomial of degree < len(points) through ``points``."""
    xs = [_frac(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be distinct")
    result = RationalPolynomial()
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        yi = _frac(yi)
        if yi == 0:
            continue
        basis = RationalPolynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * RationalPolynomial([-xj, 1])
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


# -- generalized Faulhaber polynomials --------------------------------------


def _index(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if any(x < 0 for x in p):
        raise ValueError("Faulhaber exponents must be nonnegative")
    return p


def partial_degrees(p: Sequence[int]) -> list[int]:
    """``d_k = p_1 + ... + p_k + k`` for k = 1..t."""
    out, acc = [], 0
    for k, x in enumerate(p, start=1):
        acc += x
        out.append(acc + k)
    return out


def _power(k: int, e: int) -> int:
    # 0**0 == 1 by convention, which Python already follows
    return k**e


def faulhaber_direct(p: Sequence[int], n: int) -> int:
    """``sum_{0 <= k_1 < ... < k_t <= n-1} prod k_i**p_i`` for ``n >= 0``.

    Dynamic programming over the last summation index; the empty index gives 1.
    """
    p = _index(p)
    if n < 0:
        raise ValueError("direct Faulhaber sums need n >= 0")
    # row[m] = value of the partial sum over k_1 < ... < k_s <= m-1
    row = [1] * (n + 1)
    for e in p:
        new = [0] * (n + 1)
        for m in range(1, n + 1):
            new[m] = new[m - 1] + _power(m - 1, e) * row[m - 1]
        row = new
    return row[n]


def faulhaber_value(p: Sequence[int], n: int) -> Fraction:
    """``F_p(n)``: the nested power sum for ``n >= 0``, the polynomial extension below."""
    if n >= 0:
        return Fraction(faulhaber_direct(p, n))
    return faulhaber_poly(p)(n)


@lru_cache(maxsize=None)
def _faulhaber_coefficients(p: tuple[int, ...]) -> tuple[Fraction, ...]:
    t = len(p)
    if t == 0:
        return (Fraction(1),)
    d = partial_degrees(p)
    dt = d[-1]

    def term(k: int, jprev: int, jk: int) -> Fraction:
        # k is 1-based; d[k-1] = d_k
        dk = d[k - 1]
        return comb(dk - jprev, jk - jprev) * bernoulli(jk - jprev) / (dk - jprev)

    def nested(k: int, jk: int) -> Fraction:
        # sum over j_{k-1} of the product of factors 1..k with j_k fixed
        if k == 1:
            return term(1, 0, jk)
        total = Fraction(0)
        for jprev in range(0, min(jk, d[k - 2] - 1) + 1):
            total += nested(k - 1, jprev) * term(k, jprev, jk)
        return total

    coeffs = [Fraction(0)] * (dt + 1)
    for i in range(dt):
        coeffs[dt - i] = nested(t, i)
    return tuple(coeffs)


def faulhaber_poly(p: Sequence[int]) -> RationalPolynomial:
    """``F_p`` from the closed Bernoulli-binomial coefficient formula.

    Degree ``d_t``, zero constant term. Exponents of 0 are accepted (``k**0 = 1``).
    The empty index gives the constant 1.
    """
    return RationalPolynomial(_faulhaber_coefficients(_index(p)))


def faulhaber_poly_interpolated(p: Sequence[int]) -> RationalPolynomial:
    """``F_p`` rebuilt from direct sums at ``n = 0..d_t``."""
    p = _index(p)
    dt = partial_degrees(p)[-1] if p else 0
    return lagrange_interpolate([(n, faulhaber_direct(p, n)) for n in range(dt + 1)])


def faulhaber_reciprocity_rhs(p: Sequence[int], n: int) -> Fraction:
    """``(-1)**d_t * sum_{q coarsening p} F_q(n + 1)``."""
    p = _index(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    dt = partial_degrees(p)[-1]
    total = sum(faulhaber_direct(q, n + 1) for q in integer_composition_coarsenings(p))
    return Fraction((-1) ** dt * total)


@lru_cache(maxsize=None)
def shifted_faulhaber_poly(p: tuple[int, ...]) -> RationalPolynomial:
    """Polynomial ``G_p(n) = sum_{1 <= k_1 < ... < k_t <= n} prod k_i**p_i``.

    Equal to ``F_p(n + 1)`` unless ``p_1 == 0``, where the ``k_1 = 0`` summands of
    ``F_p(n + 1)`` contribute ``G_{p[1:]}(n)`` and must be removed.
    """
    p = _index(p)
    if not p:
        return RationalPolynomial([1])
    base = faulhaber_poly(p).shift(1)
    if p[0] == 0:
        return base - shifted_faulhaber_poly(p[1:])
    return base


def binomial_poly(k: int) -> RationalPolynomial:
    """``n -> C(n, k)`` as a polynomial in n."""
    out = RationalPolynomial([1])
    for i in range(k):
        out = out * RationalPolynomial([-i, 1])
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return out * Fraction(1, fact)
