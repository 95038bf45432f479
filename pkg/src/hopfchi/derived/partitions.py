"""Set partitions: both coproduct factors are blockwise restrictions."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping

from ..characters import Character
from ..errors import BudgetExceeded, default_budget
from ..hypergraph import Hypergraph
from ..setcomb import SetPartition, color_tuples, set_partitions


def cliquey_graph(pi: SetPartition) -> Hypergraph:
    """Disjoint union of the complete graphs on the blocks."""
    edges = []
    for b in pi.blocks:
        edges.extend(itertools.combinations(sorted(b), 2))
    return Hypergraph(pi.ground, edges)


def partition_character(zeta: Character, pi: SetPartition) -> Fraction:
    """A graph-level character read on partitions through the cliquey graph."""
    return zeta(cliquey_graph(pi))


def partition_refinements(pi: SetPartition) -> Iterator[SetPartition]:
    """Every partition whose blocks each lie inside one block of ``pi``."""
    per_block = [list(set_partitions(sorted(b))) for b in pi.blocks]
    for choice in itertools.product(*per_block):
        yield SetPartition(pi.ground, [blk for part in choice for blk in part])


def partition_mu_delta(pi: SetPartition, c: Mapping) -> SetPartition:
    """Intersect every block with every color class."""
    blocks = []
    for b in pi.blocks:
        for k in sorted({c[v] for v in b}):
            blocks.append([v for v in b if c[v] == k])
    return SetPartition(pi.ground, blocks)


def refinement_sum(pi: SetPartition, zeta: Character, n: int) -> Fraction:
    """``sum_{tau refining pi} zeta(tau) l(tau)! C(n, l(tau))``.

    This counts colorings whose color classes each sit inside one block, which is
    the invariant only when ``pi`` has a single block.
    """
    total = Fraction(0)
    for tau in partition_refinements(pi):
        z = partition_character(zeta, tau)
        if z:
            k = len(tau)
            total += z * factorial(k) * _binom(n, k)
    return total


def partition_chi(pi: SetPartition, zeta: Character, n: int) -> Fraction:
    """The invariant in closed form: the refinement sum on each block, multiplied."""
    total = Fraction(1)
    for b in pi.blocks:
        total *= refinement_sum(SetPartition(b, [b]), zeta, n)
    return total


def _binom(n: int, k: int) -> Fraction:
    # polynomial extension, so negative n is allowed
    if n >= 0:
        return Fraction(comb(n, k))
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(n - i, i + 1)
    return out


def partition_chi_oracle(pi: SetPartition, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    budget = default_budget() if budget is None else budget
    if n < 0:
        raise ValueError("the oracle needs n >= 0")
    if n ** len(pi.ground) > budget:
        raise BudgetExceeded(f"{n}**{len(pi.ground)} colorings exceed the budget of {budget}")
    return sum((partition_character(zeta, partition_mu_delta(pi, c)) for c in color_tuples(pi.ground, n)), Fraction(0))
