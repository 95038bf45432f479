"""Admissible and acyclic orientations of hypergraphs and their coloring counts.

An orientation picks a nonempty head ``f(e) ⊆ e`` for every edge instance. The
tail of an edge is ``e \\ f(e)``. Two arc types link edge instances:

* strict ``e -> e'`` when ``f(e)`` meets the tail of ``e'``;
* weak ``e -> e'`` when ``∅ ⊊ f(e) ∩ e' ⊊ f(e')``.

An orientation is cyclic when some closed walk through distinct edges uses these
arcs and closes with a strict arc. That happens exactly when a strict arc joins
two members of one strongly connected component.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterator, Mapping, Sequence

from .errors import BudgetExceeded, CollisionError, CyclicOrientationError, default_budget
from .hypergraph import FormalSum, Hypergraph, cc, component_sets, format_edge
from .polynomials import RationalPolynomial, faulhaber_poly, shifted_faulhaber_poly
from .setcomb import color_tuples, set_compositions


@dataclass(frozen=True)
class Orientation:
    host: Hypergraph
    images: tuple[frozenset[str], ...]

    def __init__(self, host: Hypergraph, images: Sequence):
        images = tuple(frozenset(str(v) for v in im) for im in images)
        if len(images) != len(host.edges):
            raise ValueError("one image per edge instance is required")
        for e, im in zip(host.edges, images):
            if not im or not im <= e:
                raise ValueError(f"image {format_edge(im)} is not a nonempty subset of {format_edge(e)}")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "images", images)

    def tail(self, i: int) -> frozenset[str]:
        return self.host.edges[i] - self.images[i]

    def is_discrete(self) -> bool:
        return all(len(im) == 1 for im in self.images)

    def to_json(self) -> list[dict]:
        return [
            {"edge": sorted(e), "image": sorted(im)}
            for e, im in zip(self.host.edges, self.images)
        ]

    def __str__(self) -> str:
        return ", ".join(f"{format_edge(e)}->{format_edge(im)}" for e, im in zip(self.host.edges, self.images))


@dataclass(frozen=True)
class OrientationConstraintDigraph:
    nodes: tuple[int, ...]
    strict_arcs: frozenset[tuple[int, int]]
    weak_arcs: frozenset[tuple[int, int]]


def _arc_kinds(edges, images, i: int, j: int) -> tuple[bool, bool]:
    fi, ej, fj = images[i], edges[j], images[j]
    strict = bool(fi & (ej - fj))
    meet = fi & ej
    weak = bool(meet) and meet < fj
    return strict, weak


def constraint_digraph(f: Orientation) -> OrientationConstraintDigraph:
    edges, images = f.host.edges, f.images
    strict, weak = set(), set()
    for i, j in itertools.permutations(range(len(edges)), 2):
        s, w = _arc_kinds(edges, images, i, j)
        if s:
            strict.add((i, j))
        if w:
            weak.add((i, j))
    return OrientationConstraintDigraph(tuple(range(len(edges))), frozenset(strict), frozenset(weak))


def _cyclic(edges, images, k: int) -> bool:
    """Whether the orientation restricted to the first ``k`` edge instances is cyclic."""
    succ: list[list[int]] = [[] for _ in range(k)]
    strict = []
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            s, w = _arc_kinds(edges, images, i, j)
            if s or w:
                succ[i].append(j)
            if s:
                strict.append((i, j))
    if not strict:
        return False
    reach: dict[int, set[int]] = {}

    def reachable(src: int) -> set[int]:
        if src not in reach:
            seen, stack = {src}, [src]
            while stack:
                for w in succ[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            reach[src] = seen
        return reach[src]

    return any(a in reachable(b) for a, b in strict)


def is_acyclic(f: Orientation) -> bool:
    return not _cyclic(f.host.edges, f.images, len(f.images))


def _nonempty_subsets(e: frozenset[str]) -> list[frozenset[str]]:
    items = sorted(e)
    out = []
    for r in range(1, len(items) + 1):
        out.extend(frozenset(c) for c in itertools.combinations(items, r))
    return out


def orientation_space_size(h: Hypergraph) -> int:
    return prod(2 ** len(e) - 1 for e in h.edges)


def _check_budget(h: Hypergraph, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    size = orientation_space_size(h)
    if size > budget:
        raise BudgetExceeded(f"{size} admissible orientations exceed the budget of {budget}")


def enumerate_admissible(h: Hypergraph, budget: int | None = None) -> Iterator[Orientation]:
    _check_budget(h, budget)
    for images in itertools.product(*(_nonempty_subsets(e) for e in h.edges)):
        yield Orientation(h, images)


def enumerate_acyclic(h: Hypergraph, budget: int | None = None) -> list[Orientation]:
    """All acyclic orientations, in the lexicographic order of the admissible ones.

    Backtracks over edge instances; a cyclic prefix can never be completed to an
    acyclic orientation, so it is pruned.
    """
    _check_budget(h, budget)
    edges = h.edges
    m = len(edges)
    choices = [_nonempty_subsets(e) for e in edges]
    out: list[Orientation] = []
    images: list[frozenset[str]] = []
    # arcs among the current prefix, kept in step with the backtracking
    succ: list[set[int]] = [set() for _ in range(m)]
    pred: list[set[int]] = [set() for _ in range(m)]
    strict: set[tuple[int, int]] = set()

    def reach(src: int, adj: list[set[int]]) -> set[int]:
        seen, stack = {src}, [src]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def push(k: int) -> list[tuple[int, int, bool]]:
        added = []
        for i in range(k):
            for a, b in ((i, k), (k, i)):
                s, w = _arc_kinds(edges, images, a, b)
                if s or w:
                    added.append((a, b, s))
        for a, b, s in added:
            succ[a].add(b)
            pred[b].add(a)
            if s:
                strict.add((a, b))
        return added

    def pop(added) -> None:
        for a, b, s in added:
            succ[a].discard(b)
            pred[b].discard(a)
            strict.discard((a, b))

    def closes_cycle(k: int) -> bool:
        # the prefix before k was acyclic, so a new cycle runs through k
        scc = reach(k, succ) & reach(k, pred)
        return len(scc) > 1 and any(a in scc and b in scc for a, b in strict)

    def extend(k: int) -> None:
        if k == m:
            out.append(Orientation(h, images))
            return
        for im in choices[k]:
            images.append(im)
            added = push(k)
            if not closes_cycle(k):
                extend(k + 1)
            pop(added)
            images.pop()

    extend(0)
    return out


def max_orientation(h: Hypergraph, c: Mapping) -> Orientation:
    """The orientation sending each edge to its vertices of maximal color."""
    c = {str(k): v for k, v in c.items()} if not hasattr(c, "as_dict") else c.as_dict()
    images = []
    for e in h.edges:
        top = max(c[v] for v in e)
        images.append([v for v in e if c[v] == top])
    return Orientation(h, images)


def image_hypergraph(f: Orientation) -> Hypergraph:
    return Hypergraph(f.host.ground, f.images)


# -- direct coloring counts -------------------------------------------------


def _require_acyclic(f: Orientation) -> None:
    if not is_acyclic(f):
        raise CyclicOrientationError(f"orientation is cyclic: {f}")


def is_strictly_compatible(f: Orientation, c: Mapping[str, int]) -> bool:
    for e, im in zip(f.host.edges, f.images):
        top = max(c[v] for v in e)
        if any((c[v] == top) != (v in im) for v in e):
            return False
    return True


def is_compatible(f: Orientation, c: Mapping[str, int]) -> bool:
    for e, im in zip(f.host.edges, f.images):
        top = max(c[v] for v in e)
        if any(c[v] != top for v in im):
            return False
    return True


def count_strict_colorings(f: Orientation, n: int) -> int:
    """Number of colorings with ``[n]`` whose max-orientation is ``f``, by enumeration."""
    _require_acyclic(f)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for c in color_tuples(f.host.ground, n) if is_strictly_compatible(f, c))


def count_compatible_colorings(f: Orientation, n: int) -> int:
    """Number of colorings with ``[n]`` in which every head vertex is maximal in its edge."""
    _require_acyclic(f)
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(1 for c in color_tuples(f.host.ground, n) if is_compatible(f, c))


# -- coloring counts through generalized Faulhaber polynomials ---------------


def faulhaber_blocks(f: Orientation, weak: bool) -> list[tuple[int, ...]]:
    """Exponent sequences ``p`` of the admissible orderings of the head blocks.

    Heads are grouped into connected components of the image hypergraph. Each
    ordered grouping of components that respects the strict arcs (``<``, or ``≤``
    when ``weak``) between disjoint heads contributes one sequence; ``p_i`` counts
    the vertices outside every head that first meet block ``i``.
    """
    h = f.host
    edges, images = h.edges, f.images
    covered = frozenset().union(*images) if images else frozenset()
    comps = component_sets(sorted(covered), set(images))
    comp_index = {v: k for k, comp in enumerate(comps) for v in comp}
    edge_comp = [comp_index[next(iter(im))] for im in images]

    arcs = set()
    for i, j in itertools.permutations(range(len(edges)), 2):
        if images[i] & images[j]:
            continue
        if images[i] & (edges[j] - images[j]):
            a, b = edge_comp[i], edge_comp[j]
            if a == b:
                if weak:
                    continue
                return []
            arcs.add((a, b))

    uncovered = h.covered() - covered
    sources = [frozenset() for _ in comps]
    for e, k in zip(edges, edge_comp):
        sources[k] = sources[k] | e

    out = []
    for P in set_compositions(range(len(comps))):
        pos = {k: i for i, block in enumerate(P) for k in block}
        if weak:
            ok = all(pos[a] <= pos[b] for a, b in arcs)
        else:
            ok = all(pos[a] < pos[b] for a, b in arcs)
        if not ok:
            continue
        remaining = set(uncovered)
        p = []
        for block in P:
            src = frozenset().union(*(sources[k] for k in block))
            tilde = remaining & src
            remaining -= tilde
            p.append(len(tilde))
        assert not remaining
        out.append(tuple(p))
    return out


@lru_cache(maxsize=65536)
def strict_count_polynomial(f: Orientation) -> RationalPolynomial:
    """``n -> |strictly compatible colorings with [n]|`` as a polynomial."""
    _require_acyclic(f)
    total = RationalPolynomial()
    for p in faulhaber_blocks(f, weak=False):
        total = total + faulhaber_poly(p)
    return total * RationalPolynomial.monomial(len(f.host.isolated()))


@lru_cache(maxsize=65536)
def compatible_count_polynomial(f: Orientation) -> RationalPolynomial:
    """``n -> |compatible colorings with [n]|`` as a polynomial."""
    _require_acyclic(f)
    total = RationalPolynomial()
    for p in faulhaber_blocks(f, weak=True):
        total = total + shifted_faulhaber_poly(p)
    return total * RationalPolynomial.monomial(len(f.host.isolated()))


def count_strict_colorings_faulhaber(f: Orientation, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = strict_count_polynomial(f)(n)
    assert value.denominator == 1
    return int(value)


def count_compatible_colorings_faulhaber(f: Orientation, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = compatible_count_polynomial(f)(n)
    assert value.denominator == 1
    return int(value)


# -- the antipode through acyclic orientations -------------------------------


@dataclass(frozen=True)
class OrientationRow:
    orientation: Orientation
    image: Hypergraph
    components: int
    strict: RationalPolynomial
    compatible: RationalPolynomial


@lru_cache(maxsize=4096)
def _orientation_table(h: Hypergraph, budget: int) -> tuple[OrientationRow, ...]:
    rows = []
    for f in enumerate_acyclic(h, budget):
        im = image_hypergraph(f)
        rows.append(OrientationRow(f, im, cc(im), strict_count_polynomial(f), compatible_count_polynomial(f)))
    return tuple(rows)


def orientation_table(h: Hypergraph, budget: int | None = None) -> tuple[OrientationRow, ...]:
    """Acyclic orientations with images, component counts and count polynomials (cached)."""
    return _orientation_table(h, default_budget() if budget is None else budget)


def cancellation_free_antipode(h: Hypergraph, budget: int | None = None) -> FormalSum:
    """``sum_f (-1)**cc(f(h)) f(h)`` over acyclic orientations.

    Raises :class:`CollisionError` if two orientations share an image.
    """
    if len(h) == 0:
        return FormalSum({h: 1})
    terms: dict[Hypergraph, Fraction] = {}
    owner: dict[Hypergraph, Orientation] = {}
    for row in orientation_table(h, budget):
        if row.image in terms:
            raise CollisionError(f"orientations {owner[row.image]} and {row.orientation} share image {row.image}")
        owner[row.image] = row.orientation
        terms[row.image] = Fraction((-1) ** row.components)
    return FormalSum(terms)
