"""Simplicial complexes as simple hypergraphs, read through their 1-skeleton.

An acyclic orientation of a complex is fixed by what it does on the edges of size
two. On a larger face ``F`` the head is the set of vertices that no other vertex of
``F`` beats, ``{v in F : v in f({u, v}) for all u in F - {v}}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..characters import Character
from ..errors import DisagreementError, ValidationError
from ..hypergraph import Hypergraph
from ..orientations import Orientation, enumerate_acyclic, orientation_table
from .graphs import Graph
from .simple import SimpleHypergraph, dom_character


@dataclass(frozen=True)
class SimplicialComplex:
    hypergraph: Hypergraph

    def __init__(self, ground, faces: Iterable[Iterable]):
        h = SimpleHypergraph(ground, {frozenset(str(x) for x in F) for F in faces}).hypergraph
        faces_set = set(h.edges)
        for F in faces_set:
            for r in range(1, len(F)):
                for sub in itertools.combinations(sorted(F), r):
                    if frozenset(sub) not in faces_set:
                        raise ValidationError(f"face {sorted(F)} is missing its subface {list(sub)}")
        object.__setattr__(self, "hypergraph", h)

    @classmethod
    def generated_by(cls, ground, facets: Iterable[Iterable]) -> "SimplicialComplex":
        """The downward closure of ``facets``."""
        faces = set()
        for F in facets:
            F = sorted(str(x) for x in F)
            for r in range(1, len(F) + 1):
                faces.update(frozenset(s) for s in itertools.combinations(F, r))
        return cls(ground, faces)

    @property
    def ground(self):
        return self.hypergraph.ground

    @property
    def faces(self):
        return self.hypergraph.edges

    def skeleton(self) -> Graph:
        """The 1-skeleton: faces with two elements."""
        return Graph(self.ground, [F for F in self.faces if len(F) == 2])


def extend_orientation(C: SimplicialComplex, f: Orientation) -> Orientation:
    """Extend an orientation of the 1-skeleton to every face of ``C``."""
    head = dict(zip(f.host.edges, f.images))
    images = []
    for F in C.faces:
        if len(F) == 1:
            images.append(F)
            continue
        images.append([v for v in F if all(v in head[frozenset((u, v))] for u in F if u != v)])
    return Orientation(C.hypergraph, images)


def complex_orientations(C: SimplicialComplex, budget: int | None = None) -> list[Orientation]:
    g = C.skeleton()
    return [extend_orientation(C, f) for f in enumerate_acyclic(g.hypergraph, budget)]


def validate_extension(C: SimplicialComplex, budget: int | None = None) -> None:
    """Compare the extended skeleton orientations with direct enumeration on ``C``."""
    extended = set(complex_orientations(C, budget))
    direct = set(enumerate_acyclic(C.hypergraph, budget))
    if extended != direct:
        raise DisagreementError(
            f"{len(extended - direct)} extended orientations are not acyclic on the complex; "
            f"{len(direct - extended)} acyclic orientations were not produced by extension"
        )


def sc_chi(C: SimplicialComplex, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """Sum over acyclic orientations ``f`` of the skeleton of ``zeta(f(C))`` times coloring counts."""
    z = dom_character(zeta)
    total = Fraction(0)
    for row in orientation_table(C.skeleton().hypergraph, budget):
        value = z(Hypergraph(C.ground, extend_orientation(C, row.orientation).images))
        if not value:
            continue
        if n >= 0:
            total += value * row.strict(n)
        else:
            total += (-1) ** row.components * value * row.compatible(-n)
    return total
