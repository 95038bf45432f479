"""Sets of paths, their coproduct, and the line-graph map into rip/sew graphs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from ..characters import Character, zeta1
from ..errors import BudgetExceeded, DisagreementError, ValidationError, default_budget
from ..setcomb import color_tuples
from .graphs import Graph
from .ripsew import ripsew_chi


def _canonical(word: Sequence[str]) -> tuple[str, ...]:
    w = tuple(word)
    return min(w, w[::-1])


@dataclass(frozen=True)
class PathFamily:
    """Words on the blocks of a set partition, each read up to reversal."""

    ground: frozenset[str]
    paths: tuple[tuple[str, ...], ...]

    def __init__(self, ground: Iterable, paths: Iterable[Sequence]):
        ground = frozenset(str(v) for v in ground)
        words = [_canonical([str(v) for v in p]) for p in paths]
        used = [v for w in words for v in w]
        if any(not w for w in words):
            raise ValidationError("paths are nonempty")
        if len(used) != len(set(used)) or set(used) != ground:
            raise ValidationError("paths must use every element exactly once")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "paths", tuple(sorted(words)))

    @classmethod
    def parse(cls, text: str) -> "PathFamily":
        """Read ``"bfcg|aed"`` style notation with one-character labels."""
        words = [list(w) for w in text.split("|") if w]
        return cls({v for w in words for v in w}, words)

    def __str__(self) -> str:
        return "|".join("".join(w) for w in self.paths) if self.paths else ""


def path_restrict(alpha: PathFamily, S) -> PathFamily:
    """Keep the elements of ``S`` in each path, closing up the gaps."""
    S = frozenset(str(x) for x in S)
    return PathFamily(S, [[v for v in w if v in S] for w in alpha.paths if any(v in S for v in w)])


def path_contract(alpha: PathFamily, S) -> PathFamily:
    """Cut every path at the elements of ``S`` and drop them."""
    S = frozenset(str(x) for x in S)
    pieces = []
    for w in alpha.paths:
        current: list[str] = []
        for v in w:
            if v in S:
                if current:
                    pieces.append(current)
                current = []
            else:
                current.append(v)
        if current:
            pieces.append(current)
    return PathFamily(alpha.ground - S, pieces)


def path_coproduct(alpha: PathFamily, S) -> tuple[PathFamily, PathFamily]:
    return path_restrict(alpha, S), path_contract(alpha, S)


def path_product(*alphas: PathFamily) -> PathFamily:
    ground: set[str] = set()
    words = []
    for a in alphas:
        if ground & a.ground:
            raise ValueError("product needs disjoint ground sets")
        ground |= a.ground
        words.extend(a.paths)
    return PathFamily(ground, words)


def line_graph(alpha: PathFamily) -> Graph:
    """``l(alpha)``: consecutive letters of each word are joined by an edge."""
    edges = [(w[i], w[i + 1]) for w in alpha.paths for i in range(len(w) - 1)]
    return Graph(sorted(alpha.ground), edges)


def path_mu_delta(alpha: PathFamily, parts: Sequence) -> PathFamily:
    pieces, current = [], alpha
    for part in parts:
        left, current = path_coproduct(current, part)
        pieces.append(left)
    return path_product(*pieces)


def path_chi(alpha: PathFamily, zeta: Character, n: int) -> Fraction:
    """The invariant of ``alpha`` as the rip/sew invariant of its line graph."""
    return ripsew_chi(line_graph(alpha), zeta, n)


def path_chi_oracle(alpha: PathFamily, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """Definition-level value with the path coproduct; ``zeta`` is read on line graphs."""
    budget = default_budget() if budget is None else budget
    if n < 0:
        raise ValueError("the oracle needs n >= 0")
    if n ** len(alpha.ground) > budget:
        raise BudgetExceeded(f"{n}**{len(alpha.ground)} colorings exceed the budget of {budget}")
    total = Fraction(0)
    for c in color_tuples(sorted(alpha.ground), n):
        parts = [[v for v in c if c[v] == k] for k in sorted(set(c.values()))]
        total += zeta(line_graph(path_mu_delta(alpha, parts)).hypergraph)
    return total


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def path_catalan_check(alpha: PathFamily) -> int:
    """``|chi(alpha)(-1)|`` for the discrete character, checked against Catalan numbers.

    The value factors over the paths, and each path on ``k`` vertices must give ``C_k``.
    """
    expected = 1
    for w in alpha.paths:
        single = PathFamily(w, [w])
        value = abs(path_chi(single, zeta1, -1))
        if value != catalan(len(w)):
            raise DisagreementError(f"path {''.join(w)}: |chi(-1)| = {value}, expected {catalan(len(w))}")
        expected *= value
    total = abs(path_chi(alpha, zeta1, -1))
    if total != expected:
        raise DisagreementError(f"|chi(-1)| = {total} is not the product {expected} over paths")
    return int(total)
