"""Hypergraphic polytopes handled combinatorially through acyclic orientations.

The polytope of ``h`` is the Minkowski sum of the standard simplices on its edges.
Its faces correspond to acyclic orientations ``f``, the face being the polytope of
the image ``f(h)``. No coordinates are needed except for display.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .characters import Character
from .errors import BudgetExceeded, default_budget
from .hypergraph import Hypergraph, cc
from .orientations import Orientation, enumerate_acyclic, max_orientation, orientation_table
from .setcomb import color_tuples


@dataclass(frozen=True)
class HypergraphicPolytope:
    generator: Hypergraph

    @property
    def dimension_of_space(self) -> int:
        return len(self.generator)


@dataclass(frozen=True)
class Face:
    orientation: Orientation
    image: Hypergraph
    dimension: int

    @property
    def codimension_sign(self) -> int:
        """``(-1)**(|V| - dim)``, which equals ``(-1)**cc(image)``."""
        return (-1) ** (len(self.image) - self.dimension)

    def is_vertex(self) -> bool:
        return self.dimension == 0


def face_of(f: Orientation) -> Face:
    image = Hypergraph(f.host.ground, f.images)
    return Face(f, image, len(image) - cc(image))


def faces(P: HypergraphicPolytope, budget: int | None = None) -> list[Face]:
    return [Face(r.orientation, r.image, len(r.image) - r.components) for r in orientation_table(P.generator, budget)]


def maximal_face(P: HypergraphicPolytope, y: Mapping) -> Face:
    """The face on which the linear functional ``y`` is maximized."""
    return face_of(max_orientation(P.generator, y))


def vertex_coordinates(P: HypergraphicPolytope, budget: int | None = None) -> list[tuple[int, ...]]:
    """Coordinates of the vertices, in the order of the ground set (display only)."""
    ground = P.generator.vertices
    out = []
    for face in faces(P, budget):
        if face.is_vertex():
            point = [0] * len(ground)
            for im in face.orientation.images:
                (v,) = im
                point[ground.index(v)] += 1
            out.append(tuple(point))
    return sorted(out)


def euler_sum(P: HypergraphicPolytope, budget: int | None = None) -> int:
    """``sum_Q (-1)**dim Q`` over all nonempty faces; 1 for any nonempty polytope."""
    return sum((-1) ** face.dimension for face in faces(P, budget))


def chi_gp(P: HypergraphicPolytope, zeta: Character, n: int, budget: int | None = None) -> Fraction:
    """The polytope invariant at ``n``, as a sum over faces.

    ``zeta`` is evaluated on faces through their image hypergraphs. For ``n >= 0``
    each face is weighted by its strict normal-cone coloring count; for ``n = -m``
    by ``(-1)**(|V| - dim)`` times its weak count with ``m`` colors.
    """
    total = Fraction(0)
    rows = orientation_table(P.generator, budget)
    for row, face in zip(rows, faces(P, budget)):
        z = zeta(face.image)
        if not z:
            continue
        if n >= 0:
            total += z * row.strict(n)
        else:
            total += face.codimension_sign * z * row.compatible(-n)
    return total


def vertex_count_sum(P: HypergraphicPolytope, n: int, budget: int | None = None) -> int:
    """Sum over colorings ``c`` with ``n`` colors of the vertex count of the ``c``-maximal face."""
    if n < 1:
        raise ValueError("n must be positive")
    budget = default_budget() if budget is None else budget
    if n ** len(P.generator) > budget:
        raise BudgetExceeded(f"{n}**{len(P.generator)} colorings exceed the budget of {budget}")
    cache: dict[Hypergraph, int] = {}
    total = 0
    for c in color_tuples(P.generator.ground, n):
        image = maximal_face(P, c).image
        if image not in cache:
            cache[image] = sum(1 for g in enumerate_acyclic(image, budget) if g.is_discrete())
        total += cache[image]
    return total
