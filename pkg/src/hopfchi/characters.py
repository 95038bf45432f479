"""Multiplicative characters on hypergraphs and the named registry.

A character is fixed by its value on connected hypergraphs; the value on any
hypergraph is the product over its connected components, and the empty
hypergraph gets 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .hypergraph import Hypergraph, component_sets, restrict


@dataclass(frozen=True)
class Character:
    name: str
    connected_value: Callable[[Hypergraph], Fraction] = field(compare=False)
    declared_odd: bool = False
    declared_characteristic: bool = True
    description: str = ""

    def __call__(self, h: Hypergraph) -> Fraction:
        return evaluate_character(self, h)

    def pulled_back(self, name: str, transform: Callable[[Hypergraph], Hypergraph], **kw) -> "Character":
        """``self o transform`` for a transform that commutes with disjoint union."""
        base = self

        def value(comp: Hypergraph) -> Fraction:
            return evaluate_character(base, transform(comp))

        return Character(
            name,
            value,
            kw.get("declared_odd", self.declared_odd),
            kw.get("declared_characteristic", self.declared_characteristic),
            kw.get("description", self.description),
        )


def evaluate_character(zeta: Character, h: Hypergraph) -> Fraction:
    result = Fraction(1)
    for comp in component_sets(h.vertices, h.edges):
        result *= Fraction(zeta.connected_value(restrict(h, comp)))
        if result == 0:
            break
    return result


def _isolated_vertex(comp: Hypergraph) -> bool:
    return len(comp) == 1 and not comp.edges


def _discrete(comp: Hypergraph) -> Fraction:
    # a one-vertex component carrying only singleton edges is still discrete
    return Fraction(int(len(comp) == 1))


def _graphic(comp: Hypergraph) -> Fraction:
    if _isolated_vertex(comp):
        return Fraction(1)
    return Fraction(int(all(len(e) == 2 for e in comp.edges)))


def _single_3_edge(comp: Hypergraph) -> Fraction:
    if _isolated_vertex(comp):
        return Fraction(1)
    return Fraction(int(len(comp) == 3 and len(comp.edges) == 1 and len(comp.edges[0]) == 3))


def _three_vertices(comp: Hypergraph) -> Fraction:
    return Fraction(int(_isolated_vertex(comp) or len(comp) == 3))


zeta1 = Character(
    "zeta1", _discrete, declared_odd=True,
    description="discrete hypergraphs: every edge is a singleton",
)
zeta_graphic = Character(
    "zeta_graphic", _graphic, declared_odd=False,
    description="every edge of size exactly 2 (graphic polytopes)",
)
zeta_e3 = Character(
    "zeta_e3", _single_3_edge, declared_odd=True,
    description="components are one edge of size 3 or an isolated vertex",
)
zeta_3 = Character(
    "zeta_3", _three_vertices, declared_odd=True,
    description="components on exactly 3 vertices or an isolated vertex",
)

REGISTRY: dict[str, Character] = {z.name: z for z in (zeta1, zeta_graphic, zeta_e3, zeta_3)}


def get_character(name: str) -> Character:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown character {name!r}; known: {', '.join(REGISTRY)}") from None
