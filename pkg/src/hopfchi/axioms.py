"""Checks of the Hopf monoid axioms for hypergraphs on explicit instances."""
from __future__ import annotations

from .hypergraph import Hypergraph, contract, product, restrict


def _sets(*parts):
    return [frozenset(str(x) for x in p) for p in parts]


def coassociative_at(h: Hypergraph, S, T, U) -> bool:
    """Both ways of splitting ``h`` into ``S | T | U`` give the same three factors."""
    S, T, U = _sets(S, T, U)
    if S | T | U != h.ground.as_set() or (S & T) or (S & U) or (T & U):
        raise ValueError("S, T, U must partition the ground set")
    first = restrict(h, S | T)
    left = (restrict(first, S), contract(first, S), contract(h, S | T))
    rest = contract(h, S)
    right = (restrict(h, S), restrict(rest, T), contract(rest, T))
    return left == right


def compatible_at(h1: Hypergraph, h2: Hypergraph, A) -> bool:
    """Splitting a disjoint union equals splitting each factor and multiplying."""
    (A,) = _sets(A)
    h = product(h1, h2)
    if not A <= h.ground.as_set():
        raise ValueError("A must lie in the ground set")
    A1, A2 = A & h1.ground.as_set(), A & h2.ground.as_set()
    lhs = (restrict(h, A), contract(h, A))
    rhs = (
        product(restrict(h1, A1), restrict(h2, A2)),
        product(contract(h1, A1), contract(h2, A2)),
    )
    return lhs == rhs
