"""The thirteen acceptance criteria, one check each.

Every check prints a ``PASS``/``FAIL`` line. Run with ``pytest -s`` to see the lines
inline, or directly with ``python3 tests/test_acceptance.py`` for the bare report.
"""
from __future__ import annotations

import itertools
import random
import sys
import time
from fractions import Fraction as Fr
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from instances import (  # noqa: E402
    SEED,
    all_building_sets,
    complex_family,
    graph_family,
    hypergraph_family,
    random_hypergraph,
)

from hopfchi.axioms import coassociative_at, compatible_at  # noqa: E402
from hopfchi.characters import REGISTRY, zeta1, zeta_graphic  # noqa: E402
from hopfchi.derived.building_sets import (  # noqa: E402
    bforest_of_orientation,
    enumerate_bforests,
    forest_coloring_count,
    orientation_of_bforest,
)
from hopfchi.derived.complexes import SimplicialComplex, sc_chi, validate_extension  # noqa: E402
from hopfchi.derived.graphs import Graph, deletion_contraction_chromatic, graph_chi  # noqa: E402
from hopfchi.derived.partitions import partition_chi, partition_chi_oracle  # noqa: E402
from hopfchi.derived.paths import PathFamily, path_chi  # noqa: E402
from hopfchi.errors import CollisionError, DisagreementError  # noqa: E402
from hopfchi.hypergraph import Hypergraph, product, takeuchi_antipode  # noqa: E402
from hopfchi.invariants import (  # noqa: E402
    chi_negative_via_antipode,
    chi_oracle,
    chi_orientation,
    chi_polynomial,
)
from hopfchi.orientations import (  # noqa: E402
    cancellation_free_antipode,
    count_compatible_colorings,
    count_strict_colorings,
    enumerate_acyclic,
)
from hopfchi.polynomials import (  # noqa: E402
    RationalPolynomial,
    faulhaber_poly,
    faulhaber_reciprocity_rhs,
    faulhaber_value,
    lagrange_interpolate,
    partial_degrees,
)
from hopfchi.polytopes import HypergraphicPolytope, chi_gp, faces, vertex_count_sum  # noqa: E402
from hopfchi.setcomb import enumerate_set_partitions  # noqa: E402

# the full tetrahedron and the complete building set on 4 elements have about
# 2.6e7 admissible orientations before pruning
LARGE_BUDGET = 10**8

QUARTIC_H = Hypergraph("1234", [{"1", "2", "3"}, {"2", "3", "4"}])
QUARTIC = RationalPolynomial([0, Fr(-5, 6), Fr(5, 2), Fr(-8, 3), 1])


def _poly(*coeffs) -> RationalPolynomial:
    return RationalPolynomial([Fr(c) for c in coeffs])


def positive_indices(max_degree: int):
    """All sequences of positive integers with ``d_t <= max_degree``."""
    out = []

    def grow(prefix, room):
        if prefix:
            out.append(tuple(prefix))
        for x in range(1, room):
            grow(prefix + [x], room - x - 1)

    grow([], max_degree + 1)
    return out


def unsigned_stirling(n: int, k: int) -> int:
    """``c(n, k)``: permutations of n elements with k cycles."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for j in range(1, m + 1):
            table[m][j] = table[m - 1][j - 1] + (m - 1) * table[m - 1][j]
    return table[n][k] if 0 <= k <= n else 0


# -- criteria ----------------------------------------------------------------------


def criterion_1() -> bool:
    start = time.perf_counter()
    poly = chi_polynomial(QUARTIC_H, zeta1).polynomial
    elapsed = time.perf_counter() - start
    return poly == QUARTIC and poly(2) == 3 and elapsed < 1.0


def criterion_2() -> bool:
    poly = chi_polynomial(QUARTIC_H, zeta1).polynomial
    routes = (poly(-1), chi_orientation(QUARTIC_H, zeta1, -1), chi_negative_via_antipode(QUARTIC_H, zeta1, 1))
    mirrored = poly.compose_negate() * (-1) ** 4
    return routes == (7, 7, 7) and mirrored == RationalPolynomial([0, Fr(5, 6), Fr(5, 2), Fr(8, 3), 1])


def criterion_3() -> bool:
    P = HypergraphicPolytope(Hypergraph("1234", [{"1", "2", "3"}, {"1", "4"}]))
    zeta_faces = [F for F in faces(P) if zeta_graphic(F.image)]
    size_two = [F for F in faces(P) if all(len(e) == 2 for e in F.image.edges)]
    return (
        chi_gp(P, zeta_graphic, 2) == 3
        and chi_gp(P, zeta_graphic, -2) == 9
        and len(zeta_faces) == 3
        and set(zeta_faces) == set(size_two)
    )


def criterion_4() -> bool:
    letters = "abcde"
    values = [abs(path_chi(PathFamily(letters[:k], [letters[:k]]), zeta1, -1)) for k in range(2, 6)]
    return values == [2, 5, 14, 42]


def criterion_5() -> bool:
    family = hypergraph_family()
    mismatches = 0
    for h in family:
        for zeta in REGISTRY.values():
            for n in (1, 2, 3):
                mismatches += chi_oracle(h, zeta, n) != chi_orientation(h, zeta, n)
    return len(family) >= 200 and mismatches == 0


def criterion_6() -> bool:
    for h in hypergraph_family():
        try:
            if takeuchi_antipode(h) != cancellation_free_antipode(h):
                return False
        except CollisionError:
            return False
    return True


def criterion_7() -> bool:
    for p in positive_indices(8):
        dt = partial_degrees(p)[-1]
        interpolated = lagrange_interpolate([(n, faulhaber_value(p, n)) for n in range(dt + 1)])
        if faulhaber_poly(p) != interpolated:
            return False
        if any(faulhaber_poly(p)(-n) != faulhaber_reciprocity_rhs(p, n) for n in range(7)):
            return False
    # the remark's sum is the coefficient of x**(n-k) in the falling factorial, i.e. c(n, n-k)
    return all(
        faulhaber_value((1,) * k, n) == unsigned_stirling(n, n - k) for k in range(1, 6) for n in range(9)
    )


def criterion_8() -> bool:
    for g in graph_family():
        if graph_chi(g, zeta1).polynomial != deletion_contraction_chromatic(g):
            return False
    triangle = graph_chi(Graph("123", ["12", "13", "23"]), zeta1).polynomial
    return triangle == _poly(0, 2, -3, 1) and abs(triangle(-1)) == 6


def criterion_9() -> bool:
    simplex = SimplicialComplex.generated_by("123", ["123"])
    values = [sc_chi(simplex, zeta1, n) for n in range(4)]
    if lagrange_interpolate(list(enumerate(values))) != _poly(0, 2, -3, 1):
        return False
    try:
        for C in complex_family():
            validate_extension(C, budget=LARGE_BUDGET)
    except DisagreementError:
        return False
    return True


def criterion_10() -> bool:
    for B in all_building_sets(4):
        forests = enumerate_bforests(B)
        orientations = enumerate_acyclic(B.hypergraph(), LARGE_BUDGET)
        if len(forests) != len(orientations):
            return False
        for f in orientations:
            F = bforest_of_orientation(B, f)
            if orientation_of_bforest(B, F) != f:
                return False
            if forest_coloring_count(F, 2, strict=True) != count_strict_colorings(f, 2):
                return False
            if forest_coloring_count(F, 2, strict=False) != count_compatible_colorings(f, 2):
                return False
        for F in forests:
            if bforest_of_orientation(B, orientation_of_bforest(B, F)) != F:
                return False
    return True


def criterion_11() -> bool:
    for k in range(1, 5):
        for pi in enumerate_set_partitions("abcd"[:k]):
            for zeta in REGISTRY.values():
                for n in range(4):
                    if partition_chi(pi, zeta, n) != partition_chi_oracle(pi, zeta, n):
                        return False
    return True


def criterion_12() -> bool:
    rng = random.Random(SEED + 12)
    for _ in range(100):
        nv = rng.randint(1, 5)
        V = [str(i) for i in range(1, nv + 1)]
        h = random_hypergraph(rng, V)
        for labels in itertools.product(range(3), repeat=nv):
            S, T, U = ([v for v, x in zip(V, labels) if x == i] for i in range(3))
            if not coassociative_at(h, S, T, U):
                return False
        split = rng.randint(0, nv)
        h1 = random_hypergraph(rng, V[:split]) if split else Hypergraph([])
        h2 = random_hypergraph(rng, V[split:]) if split < nv else Hypergraph([])
        for r in range(nv + 1):
            for A in itertools.combinations(V, r):
                if not compatible_at(h1, h2, A):
                    return False
    for _ in range(50):
        nv = rng.randint(2, 5)
        split = rng.randint(1, nv - 1)
        V = [str(i) for i in range(1, nv + 1)]
        h1, h2 = random_hypergraph(rng, V[:split]), random_hypergraph(rng, V[split:])
        for zeta in REGISTRY.values():
            whole = chi_polynomial(product(h1, h2), zeta).polynomial
            if whole != chi_polynomial(h1, zeta).polynomial * chi_polynomial(h2, zeta).polynomial:
                return False
    return True


def criterion_13() -> bool:
    generators = [
        Hypergraph("12", ["12"]),
        Hypergraph("123", ["123"]),
        QUARTIC_H,
    ]
    for h in generators:
        poly = chi_polynomial(h, zeta1).polynomial
        for n in (1, 2):
            if vertex_count_sum(HypergraphicPolytope(h), n) != (-1) ** len(h) * poly(-n):
                return False
    return True


CRITERIA = {
    1: ("quartic chromatic polynomial", criterion_1),
    2: ("reciprocity at -1 by three routes", criterion_2),
    3: ("graphic-face polytope example", criterion_3),
    4: ("Catalan numbers from single paths", criterion_4),
    5: ("oracle equals orientation formula", criterion_5),
    6: ("antipode formulas agree without collisions", criterion_6),
    7: ("Faulhaber closed form, reciprocity, Stirling", criterion_7),
    8: ("graph invariant equals chromatic polynomial", criterion_8),
    9: ("simplicial complex invariant and extension rule", criterion_9),
    10: ("B-forests biject with acyclic orientations", criterion_10),
    11: ("partition closed form equals oracle", criterion_11),
    12: ("Hopf axioms and multiplicativity", criterion_12),
    13: ("vertex-count sums", criterion_13),
}


def run(number: int) -> bool:
    name, check = CRITERIA[number]
    start = time.perf_counter()
    ok = check()
    elapsed = time.perf_counter() - start
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {name} ({elapsed:.1f}s)", flush=True)
    return ok


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    with capsys.disabled():
        ok = run(number)
    assert ok


if __name__ == "__main__":
    results = [run(k) for k in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
