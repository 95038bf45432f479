"""Deterministic instance families shared by the test modules."""
from __future__ import annotations

import itertools
import random

from hopfchi.derived.building_sets import BuildingSet
from hopfchi.derived.complexes import SimplicialComplex
from hopfchi.derived.graphs import Graph
from hopfchi.hypergraph import Hypergraph

SEED = 20240611


def hypergraph_family(count: int = 220, seed: int = SEED) -> list[Hypergraph]:
    """Distinct hypergraphs on at most 4 vertices with at most 3 edges (repeats allowed)."""
    rng = random.Random(seed)
    seen: set[Hypergraph] = set()
    out: list[Hypergraph] = []
    while len(out) < count:
        nv = rng.randint(1, 4)
        V = [str(i) for i in range(1, nv + 1)]
        edges = [rng.sample(V, rng.randint(1, nv)) for _ in range(rng.randint(0, 3))]
        h = Hypergraph(V, edges)
        if h not in seen:
            seen.add(h)
            out.append(h)
    return out


def all_graphs(max_vertices: int) -> list[Graph]:
    out = []
    for nv in range(1, max_vertices + 1):
        V = [str(i) for i in range(1, nv + 1)]
        pairs = list(itertools.combinations(V, 2))
        for mask in range(2 ** len(pairs)):
            out.append(Graph(V, [p for i, p in enumerate(pairs) if mask >> i & 1]))
    return out


def complex_family() -> list[SimplicialComplex]:
    """Downward closures of the hypergraph family, deduplicated."""
    seen = {}
    for h in hypergraph_family():
        C = SimplicialComplex.generated_by(h.vertices, h.edges)
        seen.setdefault(C, None)
    return list(seen)


def all_building_sets(max_elements: int) -> list[BuildingSet]:
    out = []
    for nv in range(1, max_elements + 1):
        V = [str(i) for i in range(1, nv + 1)]
        big = [frozenset(s) for r in range(2, nv + 1) for s in itertools.combinations(V, r)]
        singles = [frozenset({v}) for v in V]
        for mask in range(2 ** len(big)):
            chosen = [s for i, s in enumerate(big) if mask >> i & 1]
            closed = all(
                not (a & b) or (a | b) in chosen for a, b in itertools.combinations(chosen, 2)
            )
            if closed:
                out.append(BuildingSet(V, singles + chosen))
    return out


def _relabel(g: Graph, perm: dict[str, str]) -> frozenset:
    return frozenset(frozenset(perm[v] for v in e) for e in g.edges)


def graphs_up_to_isomorphism(nv: int) -> list[Graph]:
    """One labeled representative per isomorphism class on ``nv`` vertices."""
    V = [str(i) for i in range(1, nv + 1)]
    perms = [dict(zip(V, p)) for p in itertools.permutations(V)]
    seen: set[frozenset] = set()
    out = []
    for g in all_graphs(nv):
        if len(g.vertices) != nv:
            continue
        key = _relabel(g, perms[0])
        if key in seen:
            continue
        seen.update(_relabel(g, p) for p in perms)
        out.append(g)
    return out


def graph_family() -> list[Graph]:
    """Every labeled graph on at most 4 vertices, and every 5-vertex graph up to isomorphism."""
    return all_graphs(4) + graphs_up_to_isomorphism(5)


def random_hypergraph(rng: random.Random, vertices: list[str], max_edges: int = 3) -> Hypergraph:
    edges = [rng.sample(vertices, rng.randint(1, len(vertices))) for _ in range(rng.randint(0, max_edges))]
    return Hypergraph(vertices, edges)
