"""Graphs with the restriction/contraction structure, partial orientations and flats."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from ..characters import Character
from ..errors import BudgetExceeded, ValidationError, default_budget
from ..hypergraph import Hypergraph, cc, component_sets, edge_key
from ..orientations import Orientation, OrientationRow, enumerate_acyclic, orientation_table
from ..polynomials import RationalPolynomial, lagrange_interpolate
from ..setcomb import color_tuples, set_partitions


@dataclass(frozen=True)
class Graph:
    """A simple graph; every edge has exactly two endpoints."""

    hypergraph: Hypergraph

    def __init__(self, ground, edges: Iterable[Iterable] = ()):
        h = Hypergraph(ground, edges)
        if any(len(e) != 2 for e in h.edges):
            raise ValidationError("graph edges must have exactly two endpoints")
        if len(set(h.edges)) != len(h.edges):
            raise ValidationError("graph edges must be distinct")
        object.__setattr__(self, "hypergraph", h)

    @property
    def ground(self):
        return self.hypergraph.ground

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.hypergraph.vertices

    @property
    def edges(self):
        return self.hypergraph.edges

    def induced(self, W) -> "Graph":
        W = frozenset(str(x) for x in W)
        return Graph(W, [e for e in self.edges if e <= W])

    def components(self) -> list[frozenset[str]]:
        return component_sets(self.vertices, self.edges)

    def __str__(self) -> str:
        return str(self.hypergraph)


def forget_singletons(h: Hypergraph) -> Hypergraph:
    """The graph part of a hypergraph with edges of size at most 2."""
    return Hypergraph(h.ground, [e for e in h.edges if len(e) == 2])


def graph_character(zeta: Character) -> Character:
    """``zeta o s`` where ``s`` forgets edges of size one."""
    return zeta.pulled_back(f"{zeta.name}.s", forget_singletons)


@dataclass(frozen=True)
class PartialOrientation:
    host: Graph
    directed: tuple[tuple[frozenset[str], str], ...]

    def __init__(self, host: Graph, directed: Mapping):
        items = []
        for e, head in directed.items():
            e = frozenset(str(x) for x in e)
            if e not in host.edges:
                raise ValidationError(f"{sorted(e)} is not an edge of the host")
            if str(head) not in e:
                raise ValidationError("the head of a directed edge must be one of its endpoints")
            items.append((e, str(head)))
        items.sort(key=lambda it: edge_key(it[0]))
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "directed", tuple(items))

    def kappa(self) -> Orientation:
        """The admissible orientation: heads on directed edges, whole edge elsewhere."""
        heads = dict(self.directed)
        images = [{heads[e]} if e in heads else e for e in self.host.edges]
        return Orientation(self.host.hypergraph, images)

    @classmethod
    def from_orientation(cls, host: Graph, f: Orientation) -> "PartialOrientation":
        directed = {}
        for e, im in zip(host.edges, f.images):
            if len(im) == 1:
                (directed[e],) = im
        return cls(host, directed)

    def undirected_part(self) -> Graph:
        """``f(g)``: the subgraph of edges left without a direction."""
        heads = dict(self.directed)
        return Graph(self.host.ground, [e for e in self.host.edges if e not in heads])


def acyclic_partial_orientations(g: Graph, budget: int | None = None) -> list[PartialOrientation]:
    return [PartialOrientation.from_orientation(g, f) for f in enumerate_acyclic(g.hypergraph, budget)]


def graph_mu_delta(g: Graph, c: Mapping) -> Graph:
    """Keep exactly the monochromatic edges."""
    return Graph(g.ground, [e for e in g.edges if len({c[v] for v in e}) == 1])


def graph_chi_oracle(g: Graph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    budget = default_budget() if budget is None else budget
    if n < 0:
        raise ValueError("the oracle needs n >= 0")
    if n ** len(g.vertices) > budget:
        raise BudgetExceeded(f"{n}**{len(g.vertices)} colorings exceed the budget of {budget}")
    return sum((zeta(graph_mu_delta(g, c).hypergraph) for c in color_tuples(g.ground, n)), Fraction(0))


def _row_value(row: OrientationRow, zeta: Character, n: int) -> Fraction:
    z = zeta(forget_singletons(row.image))
    if not z:
        return Fraction(0)
    if n >= 0:
        return z * row.strict(n)
    return (-1) ** row.components * z * row.compatible(-n)


def graph_chi_value(g: Graph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """``chi(n)`` summed over acyclic partial orientations, any integer ``n``."""
    return sum((_row_value(r, zeta, n) for r in orientation_table(g.hypergraph, budget)), Fraction(0))


# -- flats ---------------------------------------------------------------------


@dataclass(frozen=True)
class Flat:
    edges: frozenset[frozenset[str]]
    components: tuple[frozenset[str], ...]


def flats(g: Graph) -> list[Flat]:
    """Distinct unions of induced subgraphs over set partitions of the vertices."""
    seen: dict[frozenset, Flat] = {}
    for blocks in set_partitions(g.vertices):
        index = {v: i for i, b in enumerate(blocks) for v in b}
        es = frozenset(e for e in g.edges if len({index[v] for v in e}) == 1)
        if es not in seen:
            seen[es] = Flat(es, tuple(component_sets(g.vertices, es)))
    return sorted(seen.values(), key=lambda F: sorted(edge_key(e) for e in F.edges))


def quotient(g: Graph, F: Flat) -> Hypergraph:
    """``g/F``: drop the flat's edges, merge each flat component to its least vertex.

    Parallel edges may appear, so the result is a hypergraph (multiset of edges).
    """
    rep = {v: min(comp) for comp in F.components for v in comp}
    ground = sorted(set(rep.values()))
    return Hypergraph(ground, [{rep[v] for v in e} for e in g.edges if e not in F.edges])


def graph_chi_via_flats(g: Graph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """``chi(n)`` as a sum over flats and discrete acyclic orientations of quotients."""
    total = Fraction(0)
    for F in flats(g):
        z = zeta(Hypergraph(g.ground, F.edges))
        if not z:
            continue
        for row in orientation_table(quotient(g, F), budget):
            if not row.orientation.is_discrete():
                continue
            if n >= 0:
                total += z * row.strict(n)
            else:
                total += (-1) ** len(F.components) * z * row.compatible(-n)
    return total


@dataclass
class GraphChiResult:
    polynomial: RationalPolynomial
    breakdown: list[tuple[PartialOrientation, Fraction, RationalPolynomial]]
    flats: list[Flat]


def graph_chi(g: Graph, zeta: Character, budget: int | None = None) -> GraphChiResult:
    """The invariant as a polynomial, with a per-partial-orientation breakdown."""
    points = [(n, graph_chi_value(g, zeta, n, budget)) for n in range(len(g.vertices) + 1)]
    breakdown = []
    for row in orientation_table(g.hypergraph, budget):
        z = zeta(forget_singletons(row.image))
        if z:
            breakdown.append((PartialOrientation.from_orientation(g, row.orientation), z, row.strict * z))
    return GraphChiResult(lagrange_interpolate(points), breakdown, flats(g))


# -- chromatic polynomial by deletion and contraction ---------------------------


@lru_cache(maxsize=None)
def _chromatic(vertices: frozenset[str], edges: frozenset[frozenset[str]]) -> RationalPolynomial:
    if not edges:
        return RationalPolynomial.monomial(len(vertices))
    e = min(edges, key=edge_key)
    deleted = edges - {e}
    u, w = sorted(e)
    merged = frozenset(frozenset(u if x == w else x for x in f) for f in deleted)
    return _chromatic(vertices, deleted) - _chromatic(vertices - {w}, merged)


def deletion_contraction_chromatic(g: Graph) -> RationalPolynomial:
    """Chromatic polynomial by ``T(g) = T(g - e) - T(g / e)``."""
    return _chromatic(frozenset(g.vertices), frozenset(g.edges))
