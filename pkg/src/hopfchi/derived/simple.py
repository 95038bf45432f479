"""Simple hypergraphs: edge sets instead of multisets; contraction deduplicates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..characters import Character
from ..errors import BudgetExceeded, ValidationError, default_budget
from ..hypergraph import Hypergraph, mu_delta, product, restrict
from ..invariants import chi_orientation
from ..setcomb import color_tuples


@dataclass(frozen=True)
class SimpleHypergraph:
    hypergraph: Hypergraph

    def __init__(self, ground, edges: Iterable[Iterable] = ()):
        h = Hypergraph(ground, edges)
        if len(set(h.edges)) != len(h.edges):
            raise ValidationError("a simple hypergraph has no repeated edges")
        object.__setattr__(self, "hypergraph", h)

    @classmethod
    def dom(cls, h: Hypergraph) -> "SimpleHypergraph":
        """The underlying edge set of a hypergraph."""
        return cls(h.ground, set(h.edges))

    @property
    def ground(self):
        return self.hypergraph.ground

    @property
    def edges(self):
        return self.hypergraph.edges


def simple_restrict(h: SimpleHypergraph, W) -> SimpleHypergraph:
    return SimpleHypergraph.dom(restrict(h.hypergraph, W))


def simple_contract(h: SimpleHypergraph, W) -> SimpleHypergraph:
    """Traces of the edges not inside ``W`` on the complement, as a set."""
    W = frozenset(str(x) for x in W)
    rest = h.ground.as_set() - W
    return SimpleHypergraph(rest, {e & rest for e in h.edges if not e <= W})


def simple_mu_delta(h: SimpleHypergraph, c) -> SimpleHypergraph:
    return SimpleHypergraph.dom(mu_delta(h.hypergraph, c))


def dom_character(zeta: Character) -> Character:
    """``zeta o dom``: the character evaluated after removing repeated edges."""
    return zeta.pulled_back(f"{zeta.name}.dom", lambda h: h.deduplicated())


def simple_chi(h: SimpleHypergraph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """The invariant of a simple hypergraph through acyclic orientations."""
    return chi_orientation(h.hypergraph, dom_character(zeta), n, budget)


def simple_mu_delta_iterated(h: SimpleHypergraph, c) -> SimpleHypergraph:
    """Split off color classes in increasing order with the set-valued coproduct."""
    colors = sorted(set(c.values()))
    pieces, current = [], h
    for k in colors:
        part = [v for v in current.ground if c[v] == k]
        pieces.append(simple_restrict(current, part))
        current = simple_contract(current, part)
    return SimpleHypergraph.dom(product(*(p.hypergraph for p in pieces)))


def simple_chi_oracle(h: SimpleHypergraph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """Definition-level value using the set-valued coproduct directly."""
    budget = default_budget() if budget is None else budget
    if n < 0:
        raise ValueError("the oracle needs n >= 0")
    if n ** len(h.ground) > budget:
        raise BudgetExceeded(f"{n}**{len(h.ground)} colorings exceed the budget of {budget}")
    total = Fraction(0)
    for c in color_tuples(h.ground, n):
        total += zeta(simple_mu_delta_iterated(h, c).hypergraph)
    return total
