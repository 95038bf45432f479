"""The chromatic-style polynomial invariant ``chi`` of a hypergraph and a character.

``chi(n)`` sums the character over ``mu_delta(h, c)`` for all colorings ``c`` with
``n`` colors. Several routes compute it:

* :func:`chi_oracle` enumerates the colorings;
* :func:`chi_orientation` groups colorings by their max-orientation;
* :func:`chi_negative_via_antipode` evaluates ``chi`` of the antipode.

They are kept side by side so every result can be cross-checked.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import Character
from .errors import BudgetExceeded, DisagreementError, default_budget
from .hypergraph import Hypergraph, mu_delta
from .orientations import Orientation, OrientationRow, cancellation_free_antipode, orientation_table
from .polynomials import RationalPolynomial, lagrange_interpolate
from .setcomb import color_tuples


class Method(str, enum.Enum):
    ORACLE = "oracle"
    ORIENTATION = "orientation-formula"


@dataclass
class InvariantResult:
    polynomial: RationalPolynomial
    per_orientation_breakdown: list[tuple[Orientation, Fraction, RationalPolynomial]] = field(default_factory=list)
    method: Method = Method.ORIENTATION

    def __call__(self, n) -> Fraction:
        return self.polynomial(n)


def chi_oracle(h: Hypergraph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """Definition-level ``chi(n)``: one character evaluation per coloring."""
    if n < 0:
        raise ValueError("the oracle needs n >= 0")
    budget = default_budget() if budget is None else budget
    if n ** len(h) > budget:
        raise BudgetExceeded(f"{n}**{len(h)} colorings exceed the budget of {budget}")
    return sum((zeta(mu_delta(h, c)) for c in color_tuples(h.ground, n)), Fraction(0))


def _reduce(rows, fn, jobs: int) -> Fraction:
    # exact sums, so the reduction order is irrelevant
    if jobs > 1 and len(rows) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, rows))
    else:
        parts = [fn(r) for r in rows]
    return sum(parts, Fraction(0))


def chi_orientation(
    h: Hypergraph, zeta: Character, n: int, budget: int | None = None, jobs: int = 1
) -> Fraction:
    """``chi(n)`` through acyclic orientations, for any integer ``n``.

    Nonnegative ``n`` counts strictly compatible colorings per orientation.
    Negative ``n = -m`` uses signed counts of compatible colorings with ``m`` colors.
    """
    rows = orientation_table(h, budget)
    if n >= 0:
        def contribution(row: OrientationRow) -> Fraction:
            z = zeta(row.image)
            return z * row.strict(n) if z else Fraction(0)
    else:
        m = -n

        def contribution(row: OrientationRow) -> Fraction:
            z = zeta(row.image)
            return (-1) ** row.components * z * row.compatible(m) if z else Fraction(0)

    return _reduce(rows, contribution, jobs)


def _oracle_affordable(h: Hypergraph, n: int, budget: int | None) -> bool:
    budget = default_budget() if budget is None else budget
    return n ** len(h) <= budget


def chi_polynomial(
    h: Hypergraph, zeta: Character, budget: int | None = None, verify: bool = True, jobs: int = 1
) -> InvariantResult:
    """``chi`` as a polynomial, interpolated from the orientation formula at ``0..|V|``.

    With ``verify`` the result is compared against the oracle at ``n = 1, 2``
    whenever that is affordable; a mismatch raises :class:`DisagreementError`.
    """
    points = [(n, chi_orientation(h, zeta, n, budget, jobs)) for n in range(len(h) + 1)]
    poly = lagrange_interpolate(points)
    if verify:
        for n in (1, 2):
            if _oracle_affordable(h, n, budget):
                expected = chi_oracle(h, zeta, n, budget)
                if poly(n) != expected:
                    raise DisagreementError(f"chi({n}): interpolated {poly(n)} but oracle gives {expected}")
    breakdown = []
    for row in orientation_table(h, budget):
        z = zeta(row.image)
        if z:
            breakdown.append((row.orientation, z, row.strict * z))
    return InvariantResult(poly, breakdown, Method.ORIENTATION)


def chi_polynomial_oracle(h: Hypergraph, zeta: Character, budget: int | None = None) -> InvariantResult:
    """``chi`` interpolated from the oracle alone."""
    points = [(n, chi_oracle(h, zeta, n, budget)) for n in range(len(h) + 1)]
    return InvariantResult(lagrange_interpolate(points), [], Method.ORACLE)


def chi_negative_via_antipode(h: Hypergraph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """``chi(-n)`` as ``chi`` of the antipode of ``h`` evaluated at ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    total = Fraction(0)
    for term, coeff in cancellation_free_antipode(h, budget).items():
        total += coeff * chi_orientation(term, zeta, n, budget)
    return total


@dataclass(frozen=True)
class ReciprocityRow:
    n: int
    positive: Fraction
    polynomial_at_minus_n: Fraction
    orientation_at_minus_n: Fraction
    antipode_at_n: Fraction
    inequality_holds: bool | None


@dataclass(frozen=True)
class ReciprocityReport:
    hypergraph: Hypergraph
    character: str
    polynomial: RationalPolynomial
    rows: tuple[ReciprocityRow, ...]

    @property
    def all_agree(self) -> bool:
        return all(
            r.polynomial_at_minus_n == r.orientation_at_minus_n == r.antipode_at_n for r in self.rows
        )

    @property
    def inequality_holds(self) -> bool | None:
        flags = [r.inequality_holds for r in self.rows]
        return None if None in flags else all(flags)


def reciprocity_report(
    h: Hypergraph, zeta: Character, n_max: int, budget: int | None = None
) -> ReciprocityReport:
    """Cross-check the three negative evaluation routes for ``n = 1..n_max``.

    For odd characters also records whether ``chi(n) <= (-1)**|V| chi(-n)``.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    poly = chi_polynomial(h, zeta, budget).polynomial
    sign = (-1) ** len(h)
    rows = []
    for n in range(1, n_max + 1):
        a = poly(-n)
        b = chi_orientation(h, zeta, -n, budget)
        c = chi_negative_via_antipode(h, zeta, n, budget)
        if not a == b == c:
            raise DisagreementError(f"chi(-{n}): polynomial {a}, orientations {b}, antipode {c}")
        pos = poly(n)
        ineq = (pos <= sign * a) if zeta.declared_odd else None
        rows.append(ReciprocityRow(n, pos, a, b, c, ineq))
    return ReciprocityReport(h, zeta.name, poly, tuple(rows))
