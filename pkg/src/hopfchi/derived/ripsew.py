"""Simple graphs with the ripping/sewing structure, tubes and partitioning forests.

Restriction to ``W`` is the induced subgraph ("ripping out ``W``"). The other
factor lives on the complement and joins ``v, v'`` whenever some path from ``v``
to ``v'`` has all its inner vertices in ``W`` ("sewing through ``W``").
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping, Sequence

from ..characters import Character
from ..errors import BudgetExceeded, default_budget
from ..hypergraph import Hypergraph, cc, product
from ..polynomials import lagrange_interpolate
from ..setcomb import color_tuples
from .building_sets import BForest, BuildingSet, forest_coloring_count
from .graphs import Graph


def rip(g: Graph, W) -> Graph:
    return g.induced(W)


def sew(g: Graph, W) -> Graph:
    """The graph on ``V - W`` joining ends of paths whose inner vertices lie in ``W``."""
    W = frozenset(str(x) for x in W)
    rest = [v for v in g.vertices if v not in W]
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    edges = set()
    for v in rest:
        seen, stack = {v}, [v]
        while stack:
            for w in adj[stack.pop()]:
                if w in seen:
                    continue
                seen.add(w)
                if w in W:
                    stack.append(w)
                else:
                    edges.add(frozenset((v, w)))
    return Graph(rest, edges)


def ripsew_mu_delta(g: Graph, parts: Sequence) -> Graph:
    """Split off ``parts`` in order, ripping each out and sewing through it."""
    pieces, current = [], g
    for part in parts:
        pieces.append(rip(current, part).hypergraph)
        current = sew(current, part)
    if current.vertices:
        raise ValueError("parts must cover the vertex set")
    h = product(*pieces)
    return Graph(h.ground, h.edges)


def _color_parts(c: Mapping) -> list[list[str]]:
    return [[v for v in c if c[v] == k] for k in sorted(set(c.values()))]


def ripsew_chi_oracle(g: Graph, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    budget = default_budget() if budget is None else budget
    if n < 0:
        raise ValueError("the oracle needs n >= 0")
    if n ** len(g.vertices) > budget:
        raise BudgetExceeded(f"{n}**{len(g.vertices)} colorings exceed the budget of {budget}")
    total = Fraction(0)
    for c in color_tuples(g.ground, n):
        total += zeta(ripsew_mu_delta(g, _color_parts(c)).hypergraph)
    return total


def tubes(g: Graph) -> BuildingSet:
    """The graphical building set: vertex sets inducing connected subgraphs."""
    out = []
    for r in range(1, len(g.vertices) + 1):
        for W in itertools.combinations(g.vertices, r):
            if len(g.induced(W).components()) == 1:
                out.append(W)
    return BuildingSet(g.vertices, out)


def _partitioning_trees(g: Graph) -> list[dict]:
    V = frozenset(g.vertices)
    if len(V) == 1:
        return [{V: None}]
    out = []
    items = sorted(V)
    for k in range(1, len(items) + 1):
        for W in itertools.combinations(items, k):
            W = frozenset(W)
            below = g.induced(V - W)
            subtrees = [_partitioning_trees(below.induced(comp)) for comp in below.components()]
            for choice in itertools.product(*subtrees):
                tree = {W: None}
                for sub in choice:
                    for node, par in sub.items():
                        tree[node] = W if par is None else par
                out.append(tree)
    return out


def partitioning_forests(g: Graph) -> list[BForest]:
    per_component = [_partitioning_trees(g.induced(comp)) for comp in g.components()]
    out = []
    for choice in itertools.product(*per_component):
        parent = {}
        for tree in choice:
            parent.update(tree)
        out.append(BForest(parent))
    return out


def ripped_sewed(g: Graph, F: BForest) -> Graph:
    """``g_F``: rip out and sew through the nodes of ``F``, leaves first."""
    return ripsew_mu_delta(g, F.post_order())


def ripsew_chi(g: Graph, zeta: Character, n: int) -> Fraction:
    """Sum over partitioning forests of ``zeta(g_F)`` times forest coloring counts."""
    total = Fraction(0)
    for F in partitioning_forests(g):
        gF = ripped_sewed(g, F)
        value = zeta(gF.hypergraph)
        if not value:
            continue
        if n >= 0:
            total += value * forest_coloring_count(F, n, strict=True)
        else:
            total += (-1) ** cc(gF.hypergraph) * value * forest_coloring_count(F, -n, strict=False)
    return total


def ripsew_chi_polynomial(g: Graph, zeta: Character):
    return lagrange_interpolate([(n, ripsew_chi(g, zeta, n)) for n in range(len(g.vertices) + 1)])


def separated_coloring_count(g: Graph, n: int) -> int:
    """Colorings in which any two distinct vertices of one color are separated.

    Separated means every path between them has a vertex of strictly larger color.
    """
    count = 0
    adj = {v: set() for v in g.vertices}
    for e in g.edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    for c in color_tuples(g.ground, n):
        ok = True
        for v in g.vertices:
            # walk from v through vertices colored at most c[v]
            seen, stack = {v}, [v]
            while stack and ok:
                for w in adj[stack.pop()]:
                    if w in seen or c[w] > c[v]:
                        continue
                    if c[w] == c[v]:
                        ok = False
                        break
                    seen.add(w)
                    stack.append(w)
            if not ok:
                break
        count += ok
    return count


def tubes_hypergraph(g: Graph) -> Hypergraph:
    return tubes(g).hypergraph()
