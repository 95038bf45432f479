"""Building sets, B-forests and their bijection with acyclic orientations."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from ..characters import Character
from ..errors import ValidationError
from ..hypergraph import Hypergraph, cc, edge_key
from ..orientations import Orientation, compatible_count_polynomial, strict_count_polynomial
from .simple import dom_character


@dataclass(frozen=True)
class BuildingSet:
    ground: frozenset[str]
    connected_sets: frozenset[frozenset[str]]

    def __init__(self, ground: Iterable, connected_sets: Iterable[Iterable]):
        ground = frozenset(str(v) for v in ground)
        sets = frozenset(frozenset(str(v) for v in s) for s in connected_sets)
        for s in sets:
            if not s or not s <= ground:
                raise ValidationError(f"connected set {sorted(s)} is empty or leaves the ground set")
        for v in ground:
            if frozenset({v}) not in sets:
                raise ValidationError(f"singleton {{{v}}} is missing")
        for a, b in itertools.combinations(sets, 2):
            if a & b and (a | b) not in sets:
                raise ValidationError(f"{sorted(a)} and {sorted(b)} meet but their union is missing")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "connected_sets", sets)

    @classmethod
    def closure(cls, ground: Iterable, generators: Iterable[Iterable]) -> "BuildingSet":
        """Smallest building set containing ``generators``."""
        ground = frozenset(str(v) for v in ground)
        sets = {frozenset(str(v) for v in s) for s in generators} | {frozenset({v}) for v in ground}
        changed = True
        while changed:
            changed = False
            for a, b in itertools.combinations(list(sets), 2):
                if a & b and (a | b) not in sets:
                    sets.add(a | b)
                    changed = True
        return cls(ground, sets)

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(sorted(self.ground), self.connected_sets)

    def within(self, W: frozenset[str]) -> "BuildingSet":
        """The building set associated to ``W``: members contained in ``W``."""
        return BuildingSet(W, [s for s in self.connected_sets if s <= W])

    def maximal_sets(self) -> list[frozenset[str]]:
        """Maximal members; they partition the ground set."""
        return sorted(
            (s for s in self.connected_sets if not any(s < t for t in self.connected_sets)),
            key=lambda s: min(s),
        )

    def maximal_avoiding(self, W: frozenset[str], r: frozenset[str]) -> list[frozenset[str]]:
        """Maximal members inside ``W`` disjoint from ``r``."""
        avoid = [s for s in self.connected_sets if s <= W and not s & r]
        return sorted((s for s in avoid if not any(s < t for t in avoid)), key=lambda s: min(s))


@dataclass(frozen=True)
class BForest:
    """A rooted forest whose nodes are the blocks of a partition of the ground set."""

    parent: tuple[tuple[frozenset[str], frozenset[str] | None], ...]

    def __init__(self, parent: Mapping):
        items = sorted(parent.items(), key=lambda kv: edge_key(kv[0]))
        object.__setattr__(self, "parent", tuple(items))

    @property
    def nodes(self) -> list[frozenset[str]]:
        return [p for p, _ in self.parent]

    def parent_of(self, p: frozenset[str]) -> frozenset[str] | None:
        return dict(self.parent)[p]

    def roots(self) -> list[frozenset[str]]:
        return [p for p, q in self.parent if q is None]

    def children(self, p: frozenset[str]) -> list[frozenset[str]]:
        return [c for c, q in self.parent if q == p]

    def below(self, p: frozenset[str]) -> frozenset[str]:
        """``F_{<= p}``: the union of ``p`` and its descendants."""
        out = set(p)
        for c in self.children(p):
            out |= self.below(c)
        return frozenset(out)

    def post_order(self) -> list[frozenset[str]]:
        """Nodes with every node after all its descendants."""
        out: list[frozenset[str]] = []

        def visit(p):
            for c in self.children(p):
                visit(c)
            out.append(p)

        for r in self.roots():
            visit(r)
        return out

    def comparable(self, p, q) -> bool:
        return p <= self.below(q) or q <= self.below(p)

    def to_json(self) -> list[dict]:
        return [{"node": sorted(p), "parent": None if q is None else sorted(q)} for p, q in self.parent]


def is_bforest(B: BuildingSet, F: BForest) -> bool:
    """Check the three defining conditions directly."""
    nodes = F.nodes
    if frozenset().union(*nodes) != B.ground or sum(len(p) for p in nodes) != len(B.ground):
        return False
    components = B.maximal_sets()
    for r in F.roots():
        if F.below(r) not in components:
            return False
    for p in nodes:
        if F.below(p) not in B.connected_sets:
            return False
    for k in range(2, len(nodes) + 1):
        for group in itertools.combinations(nodes, k):
            if all(not F.comparable(p, q) for p, q in itertools.combinations(group, 2)):
                if frozenset().union(*(F.below(p) for p in group)) in B.connected_sets:
                    return False
    return True


def _nonempty_subsets(W: frozenset[str]):
    items = sorted(W)
    for r in range(1, len(items) + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


def _trees(B: BuildingSet, W: frozenset[str]) -> list[dict]:
    """B-trees of the connected member ``W`` as parent maps; roots map to None."""
    if len(W) == 1:
        return [{W: None}]
    out = []
    for r in _nonempty_subsets(W):
        parts = B.maximal_avoiding(W, r)
        for choice in itertools.product(*(_trees(B, V) for V in parts)):
            tree = {r: None}
            for V, sub in zip(parts, choice):
                for node, par in sub.items():
                    tree[node] = r if par is None else par
            out.append(tree)
    return out


def enumerate_bforests(B: BuildingSet) -> list[BForest]:
    """All B-forests, one B-tree per maximal member, built recursively."""
    per_component = [_trees(B, W) for W in B.maximal_sets()]
    out = []
    for choice in itertools.product(*per_component):
        parent = {}
        for tree in choice:
            parent.update(tree)
        out.append(BForest(parent))
    return out


# -- bijection with acyclic orientations ------------------------------------------


def bforest_of_orientation(B: BuildingSet, f: Orientation) -> BForest:
    """``b(f)``: the root of each component is the head of the component."""
    head = dict(zip(f.host.edges, f.images))
    parent: dict = {}

    def build(W: frozenset[str], above):
        r = head[W]
        parent[r] = above
        for V in B.maximal_avoiding(W, r):
            build(V, r)

    for W in B.maximal_sets():
        build(W, None)
    return BForest(parent)


def orientation_of_bforest(B: BuildingSet, F: BForest) -> Orientation:
    """``b^{-1}(F)``: a member meeting node ``r`` first on the way down is sent to its trace on ``r``."""
    h = B.hypergraph()
    images = []
    for e in h.edges:
        node = next(r for r in F.roots() if e <= F.below(r))
        while not e & node:
            node = next(c for c in F.children(node) if e <= F.below(c))
        images.append(e & node)
    return Orientation(h, images)


def induced_building_set(B: BuildingSet, F: BForest) -> Hypergraph:
    """``B ∩ F`` computed as the image of ``B`` under ``b^{-1}(F)``, deduplicated."""
    f = orientation_of_bforest(B, F)
    return Hypergraph(f.host.ground, set(f.images))


# -- colorings of forests ----------------------------------------------------------


def forest_coloring_count(F: BForest, n: int, strict: bool) -> int:
    """Colorings constant on nodes and increasing toward the roots.

    Strict counts need a child's color below its parent's; weak ones allow equality.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    # ways[p][k]: colorings of the subtree at p with p colored k (1-based)
    ways: dict = {}
    for p in F.post_order():
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            value = 1
            for c in F.children(p):
                top = k - 1 if strict else k
                value *= sum(ways[c][1 : top + 1])
            row[k] = value
        ways[p] = row
    total = 1
    for r in F.roots():
        total *= sum(ways[r][1:])
    return total


def forest_coloring_count_brute(F: BForest, n: int, strict: bool) -> int:
    nodes = F.nodes
    total = 0
    for colors in itertools.product(range(1, n + 1), repeat=len(nodes)):
        c = dict(zip(nodes, colors))
        ok = True
        for p, q in F.parent:
            if q is not None and (c[p] >= c[q] if strict else c[p] > c[q]):
                ok = False
                break
        total += ok
    return total


def bs_chi(B: BuildingSet, zeta: Character, n: int) -> Fraction:
    """Sum over B-forests of ``zeta(B ∩ F)`` times forest coloring counts."""
    z = dom_character(zeta)
    total = Fraction(0)
    for F in enumerate_bforests(B):
        image = induced_building_set(B, F)
        value = z(image)
        if not value:
            continue
        if n >= 0:
            total += value * forest_coloring_count(F, n, strict=True)
        else:
            total += (-1) ** cc(image) * value * forest_coloring_count(F, -n, strict=False)
    return total


def orientation_count_polynomials(B: BuildingSet, F: BForest):
    """Strict and weak coloring-count polynomials of ``b^{-1}(F)``."""
    f = orientation_of_bforest(B, F)
    return strict_count_polynomial(f), compatible_count_polynomial(f)
