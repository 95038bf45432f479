"""The Hopf monoid of hypergraphs: restriction/contraction, disjoint union, antipode."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import BudgetExceeded
from .setcomb import Decomposition, GroundSet, enumerate_compositions


def _edge(e: Iterable) -> frozenset[str]:
    return frozenset(str(x) for x in e)


def edge_key(e: frozenset[str]) -> tuple[str, ...]:
    return tuple(sorted(e))


def format_edge(e: frozenset[str]) -> str:
    return "{" + ",".join(edge_key(e)) + "}"


@dataclass(frozen=True)
class Hypergraph:
    """A multiset of nonempty edges over a labeled ground set.

    Edges are stored sorted, so equal hypergraphs have equal fields. Two hypergraphs
    with the same edges over different ground sets are different.
    """

    ground: GroundSet
    edges: tuple[frozenset[str], ...]

    def __init__(self, ground, edges: Iterable[Iterable] = ()):
        ground = ground if isinstance(ground, GroundSet) else GroundSet(ground)
        es = [_edge(e) for e in edges]
        gs = ground.as_set()
        for e in es:
            if not e:
                raise ValueError("hypergraph edges must be nonempty")
            if not e <= gs:
                raise ValueError(f"edge {format_edge(e)} is not contained in the ground set")
        es.sort(key=edge_key)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "edges", tuple(es))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.ground.elements

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_multiset(self) -> Counter:
        return Counter(edge_key(e) for e in self.edges)

    def covered(self) -> frozenset[str]:
        """Vertices lying in at least one edge."""
        out: set[str] = set()
        for e in self.edges:
            out |= e
        return frozenset(out)

    def isolated(self) -> frozenset[str]:
        return self.ground.as_set() - self.covered()

    def is_discrete(self) -> bool:
        return all(len(e) == 1 for e in self.edges)

    def deduplicated(self) -> "Hypergraph":
        return Hypergraph(self.ground, set(self.edges))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(edge_key(e)) for e in self.edges]}

    def __str__(self) -> str:
        es = ", ".join(format_edge(e) for e in self.edges)
        return f"{{{es}}} on {{{','.join(self.vertices)}}}"


def _subset(h: Hypergraph, W) -> frozenset[str]:
    W = frozenset(str(x) for x in W)
    if not W <= h.ground.as_set():
        raise ValueError("subset must lie inside the ground set")
    return W


def restrict(h: Hypergraph, W) -> Hypergraph:
    """``h|_W``: the edges contained in ``W``."""
    W = _subset(h, W)
    return Hypergraph(W, [e for e in h.edges if e <= W])


def contract(h: Hypergraph, W) -> Hypergraph:
    """``h/_W``: traces on the complement of the edges not contained in ``W`` (multiset)."""
    W = _subset(h, W)
    rest = h.ground.as_set() - W
    return Hypergraph(rest, [e & rest for e in h.edges if not e <= W])


def coproduct(h: Hypergraph, W) -> tuple[Hypergraph, Hypergraph]:
    return restrict(h, W), contract(h, W)


def product(*hs: Hypergraph) -> Hypergraph:
    """Disjoint union; the empty product is the unit on the empty set."""
    ground: list[str] = []
    edges: list[frozenset[str]] = []
    seen: set[str] = set()
    for h in hs:
        if seen & h.ground.as_set():
            raise ValueError("product needs disjoint ground sets")
        seen |= h.ground.as_set()
        ground.extend(h.vertices)
        edges.extend(h.edges)
    return Hypergraph(ground, edges)


def _check_decomposition(h: Hypergraph, D: Decomposition) -> None:
    if D.ground != h.ground:
        raise ValueError("decomposition must be of the hypergraph's ground set")


def iterated_coproduct(h: Hypergraph, D: Decomposition) -> list[Hypergraph]:
    """``Delta_D(h)`` as the list of tensor factors, split off part by part."""
    _check_decomposition(h, D)
    pieces = []
    current = h
    for part in D.parts:
        pieces.append(restrict(current, part))
        current = contract(current, part)
    return pieces


def mu_delta_iterated(h: Hypergraph, D: Decomposition) -> Hypergraph:
    return product(*iterated_coproduct(h, D))


def mu_delta(h: Hypergraph, D: Decomposition | Mapping) -> Hypergraph:
    """``mu_D o Delta_D (h)``: each edge shrinks to its vertices in the highest part it meets.

    ``D`` may also be a coloring given as a mapping vertex -> color.
    """
    if isinstance(D, Decomposition):
        _check_decomposition(h, D)
        index = D.as_map()
    else:
        index = {str(k): v for k, v in D.items()}
    out = []
    for e in h.edges:
        top = max(index[v] for v in e)
        out.append([v for v in e if index[v] == top])
    return Hypergraph(h.ground, out)


# -- connected components ---------------------------------------------------


@dataclass(frozen=True)
class ConnectedComponentSplit:
    components: tuple[tuple[frozenset[str], Hypergraph], ...]
    isolated: frozenset[str]

    def __len__(self) -> int:
        return len(self.components)


def component_sets(ground: Iterable[str], edges: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    """Vertex sets of connected components, sorted by their smallest label."""
    parent = {v: v for v in ground}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        it = iter(e)
        first = find(next(it))
        for v in it:
            r = find(v)
            if r != first:
                parent[r] = first
    groups: dict[str, set[str]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=lambda s: min(s))


def connected_components(h: Hypergraph) -> ConnectedComponentSplit:
    comps = component_sets(h.vertices, h.edges)
    return ConnectedComponentSplit(
        tuple((c, restrict(h, c)) for c in comps),
        h.isolated(),
    )


def cc(h: Hypergraph) -> int:
    """Number of connected components, isolated vertices included."""
    return len(component_sets(h.vertices, h.edges))


def is_connected(h: Hypergraph) -> bool:
    return len(h) > 0 and cc(h) == 1


# -- formal sums and the antipode -------------------------------------------


class FormalSum:
    """Finite rational combination of hypergraphs sharing one ground set."""

    def __init__(self, terms: Mapping[Hypergraph, Fraction] | None = None):
        self.terms: dict[Hypergraph, Fraction] = {}
        self._ground: GroundSet | None = None
        for h, c in (terms or {}).items():
            self.add(h, c)

    def add(self, h: Hypergraph, c) -> None:
        if self._ground is None:
            self._ground = h.ground
        elif h.ground != self._ground:
            raise ValueError("all terms of a formal sum share one ground set")
        value = self.terms.get(h, Fraction(0)) + Fraction(c)
        if value:
            self.terms[h] = value
        else:
            self.terms.pop(h, None)

    def merge(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum(self.terms)
        for h, c in other.terms.items():
            out.add(h, c)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, h: Hypergraph) -> Fraction:
        return self.terms.get(h, Fraction(0))

    def items(self) -> list[tuple[Hypergraph, Fraction]]:
        """Terms in canonical order (by edge list)."""
        return sorted(self.terms.items(), key=lambda kv: [edge_key(e) for e in kv[0].edges])

    def __repr__(self) -> str:
        body = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*{h}" for h, c in self.items())
        return f"FormalSum({body})"


def fubini(k: int) -> int:
    """Number of set compositions of a k-set."""
    from math import comb

    a = [1]
    for m in range(1, k + 1):
        a.append(sum(comb(m, j) * a[m - j] for j in range(1, m + 1)))
    return a[k]


def takeuchi_terms(h: Hypergraph) -> Iterator[tuple[int, Hypergraph]]:
    for C in enumerate_compositions(h.ground):
        yield (-1) ** len(C), mu_delta(h, C)


def takeuchi_antipode(h: Hypergraph, budget: int | None = None) -> FormalSum:
    """Antipode by the alternating sum over all set compositions of the ground set."""
    if len(h) == 0:
        return FormalSum({h: 1})
    if budget is not None and fubini(len(h)) > budget:
        raise BudgetExceeded(f"{fubini(len(h))} compositions exceed the budget of {budget}")
    acc: Counter = Counter()
    for sign, term in takeuchi_terms(h):
        acc[term] += sign
    return FormalSum({t: c for t, c in acc.items() if c})
