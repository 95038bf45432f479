"""Finite ground sets, decompositions, compositions, colorings and set partitions.

Every enumeration here is deterministic: atoms are strings and sets are always
walked in sorted order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


def _labels(elements: Iterable) -> tuple[str, ...]:
    labels = [str(x) for x in elements]
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate labels in {labels!r}")
    return tuple(sorted(labels))


@dataclass(frozen=True)
class GroundSet:
    elements: tuple[str, ...]

    def __init__(self, elements: Iterable = ()):
        object.__setattr__(self, "elements", _labels(elements))

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return str(x) in self.elements

    def as_set(self) -> frozenset[str]:
        return frozenset(self.elements)


def _ground(V) -> GroundSet:
    return V if isinstance(V, GroundSet) else GroundSet(V)


@dataclass(frozen=True)
class Decomposition:
    """An ordered sequence of pairwise disjoint subsets covering ``ground``.

    Empty parts are allowed.
    """

    ground: GroundSet
    parts: tuple[frozenset[str], ...]

    def __init__(self, ground, parts: Iterable[Iterable]):
        ground = _ground(ground)
        parts = tuple(frozenset(str(x) for x in p) for p in parts)
        seen: set[str] = set()
        for p in parts:
            if seen & p:
                raise ValueError("parts of a decomposition must be pairwise disjoint")
            seen |= p
        if seen != ground.as_set():
            raise ValueError("parts of a decomposition must cover the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def index(self, v) -> int:
        """1-based index of the part holding ``v``."""
        v = str(v)
        for i, p in enumerate(self.parts, start=1):
            if v in p:
                return i
        raise KeyError(v)

    def as_map(self) -> dict[str, int]:
        return {v: i for i, p in enumerate(self.parts, start=1) for v in p}

    def forget_empty(self) -> "Composition":
        return Composition(self.ground, [p for p in self.parts if p])


class Composition(Decomposition):
    def __init__(self, ground, parts: Iterable[Iterable]):
        super().__init__(ground, parts)
        if any(not p for p in self.parts):
            raise ValueError("a composition has no empty parts")


@dataclass(frozen=True)
class Coloring:
    ground: GroundSet
    assignment: tuple[tuple[str, int], ...]
    palette_size: int

    def __init__(self, ground, assignment: Mapping, palette_size: int):
        ground = _ground(ground)
        amap = {str(k): int(c) for k, c in assignment.items()}
        if set(amap) != ground.as_set():
            raise ValueError("coloring must assign every element of the ground set")
        if palette_size < 0 or any(not 1 <= c <= palette_size for c in amap.values()):
            raise ValueError(f"colors must lie in 1..{palette_size}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "assignment", tuple(sorted(amap.items())))
        object.__setattr__(self, "palette_size", int(palette_size))

    def __getitem__(self, v) -> int:
        return dict(self.assignment)[str(v)]

    def as_dict(self) -> dict[str, int]:
        return dict(self.assignment)


@dataclass(frozen=True)
class SetPartition:
    ground: GroundSet
    blocks: frozenset[frozenset[str]]

    def __init__(self, ground, blocks: Iterable[Iterable]):
        ground = _ground(ground)
        blocks = frozenset(frozenset(str(x) for x in b) for b in blocks)
        covered: set[str] = set()
        for b in blocks:
            if not b:
                raise ValueError("blocks of a set partition are nonempty")
            if covered & b:
                raise ValueError("blocks of a set partition are disjoint")
            covered |= b
        if covered != ground.as_set():
            raise ValueError("blocks must cover the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "blocks", blocks)

    def sorted_blocks(self) -> list[tuple[str, ...]]:
        return sorted(tuple(sorted(b)) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


# -- bijection between colorings and decompositions --------------------------


def coloring_to_decomposition(c: Coloring) -> Decomposition:
    amap = c.as_dict()
    parts = [[v for v in c.ground if amap[v] == i] for i in range(1, c.palette_size + 1)]
    return Decomposition(c.ground, parts)


def decomposition_to_coloring(D: Decomposition) -> Coloring:
    return Coloring(D.ground, D.as_map(), len(D))


def enumerate_colorings(V, n: int) -> Iterator[Coloring]:
    """All ``n**|V|`` colorings of ``V`` with ``[n]``, in lexicographic order."""
    V = _ground(V)
    if n < 0:
        raise ValueError("palette size must be nonnegative")
    for colors in itertools.product(range(1, n + 1), repeat=len(V)):
        yield Coloring(V, dict(zip(V.elements, colors)), n)


def color_tuples(V, n: int) -> Iterator[dict[str, int]]:
    """Lightweight variant of :func:`enumerate_colorings` yielding plain dicts."""
    elements = _ground(V).elements
    for colors in itertools.product(range(1, n + 1), repeat=len(elements)):
        yield dict(zip(elements, colors))


def enumerate_decompositions(V, n: int) -> Iterator[Decomposition]:
    V = _ground(V)
    for c in enumerate_colorings(V, n):
        yield coloring_to_decomposition(c)


def set_compositions(items: Sequence) -> Iterator[tuple[tuple, ...]]:
    """Ordered set partitions of ``items`` (as tuples of tuples), deterministic.

    The empty sequence has exactly one composition, the empty one.
    """
    items = list(items)
    k = len(items)
    if k == 0:
        yield ()
        return
    # surjections items -> [l], for l = 1..k
    for length in range(1, k + 1):
        for labels in itertools.product(range(length), repeat=k):
            if len(set(labels)) != length:
                continue
            yield tuple(
                tuple(x for x, lab in zip(items, labels) if lab == i) for i in range(length)
            )


def enumerate_compositions(V) -> Iterator[Composition]:
    V = _ground(V)
    for parts in set_compositions(V.elements):
        yield Composition(V, parts)


def set_partitions(items: Sequence) -> Iterator[list[tuple]]:
    """Unordered set partitions of ``items`` as lists of blocks (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        yield [(first,)] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [(first,) + smaller[i]] + smaller[i + 1 :]


def enumerate_set_partitions(V) -> Iterator[SetPartition]:
    V = _ground(V)
    for blocks in set_partitions(V.elements):
        yield SetPartition(V, blocks)


# -- refinement --------------------------------------------------------------


def refines(Q: Decomposition, P: Decomposition) -> bool:
    """True iff ``Q`` refines ``P``.

    Each part of ``P`` must be the union of a consecutive run of parts of ``Q``,
    the runs appearing in the order of ``P``. Parts inside a run may come in any
    order.
    """
    if Q.ground != P.ground:
        raise ValueError("refinement compares decompositions of the same ground set")
    q = [p for p in Q.parts if p]
    pos = 0
    for target in P.parts:
        if not target:
            continue
        acc: frozenset[str] = frozenset()
        while acc != target:
            if pos >= len(q) or not q[pos] <= target:
                return False
            acc |= q[pos]
            pos += 1
    return pos == len(q)


def refinements(P: Composition) -> Iterator[Composition]:
    """All compositions refining ``P``: each part is replaced by one of its compositions."""
    per_part = [list(set_compositions(sorted(p))) for p in P.parts]
    for choice in itertools.product(*per_part):
        parts = [blk for split in choice for blk in split]
        yield Composition(P.ground, parts)


def integer_composition_coarsenings(p: Sequence[int]) -> list[tuple[int, ...]]:
    """All ``q`` obtained from ``p`` by summing runs of consecutive entries.

    There are ``2**(len(p)-1)`` of them; ``p`` itself comes first.
    """
    p = tuple(int(x) for x in p)
    if not p:
        raise ValueError("p must be nonempty")
    out = []
    # a bit set means "cut after position i"
    t = len(p)
    for mask in range(2 ** (t - 1) - 1, -1, -1):
        q, acc = [], p[0]
        for i in range(1, t):
            if mask >> (i - 1) & 1:
                q.append(acc)
                acc = p[i]
            else:
                acc += p[i]
        q.append(acc)
        out.append(tuple(q))
    return out


def _has_cycle(nodes: Iterable, arcs: Iterable[tuple]) -> bool:
    succ: dict = {v: [] for v in nodes}
    for a, b in arcs:
        succ[a].append(b)
    state: dict = {}

    def visit(v) -> bool:
        state[v] = 1
        for w in succ[v]:
            s = state.get(w, 0)
            if s == 1 or (s == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state.get(v, 0) == 0 and visit(v) for v in succ)


def constrained_sign_sum(P: Composition, g: Iterable[tuple]) -> int:
    """Sum of ``(-1)**len(Q)`` over refinements ``Q`` of ``P`` with ``Q(v) < Q(w)`` for every arc.

    Computed by enumeration; the closed form is 0 when some arc runs backwards in
    ``P`` and ``(-1)**|ground|`` otherwise.
    """
    arcs = [(str(a), str(b)) for a, b in g]
    if _has_cycle(P.ground.elements, arcs):
        raise ValueError("constraint relation must be acyclic")
    total = 0
    for Q in refinements(P):
        pos = Q.as_map()
        if all(pos[a] < pos[b] for a, b in arcs):
            total += (-1) ** len(Q)
    return total


def shuffle_product(P: Composition, Q: Composition) -> list[Composition]:
    """Compositions of the disjoint union whose restrictions give back ``P`` and ``Q``."""
    if P.ground.as_set() & Q.ground.as_set():
        raise ValueError("shuffle needs disjoint ground sets")
    ground = GroundSet(P.ground.elements + Q.ground.elements)
    out = []
    lp, lq = len(P), len(Q)
    for length in range(max(lp, lq), lp + lq + 1):
        for slots_p in itertools.combinations(range(length), lp):
            free = [i for i in range(length) if i not in slots_p]
            for slots_q in itertools.combinations(range(length), lq):
                if not set(free) <= set(slots_q):
                    continue
                parts = [set() for _ in range(length)]
                for i, s in enumerate(slots_p):
                    parts[s] |= P.parts[i]
                for i, s in enumerate(slots_q):
                    parts[s] |= Q.parts[i]
                out.append(Composition(ground, parts))
    return out
