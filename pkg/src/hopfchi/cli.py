"""Command-line entry point: ``hopfchi {chi,antipode,orientations,verify} FILE``.

Reads one JSON object document (file path or ``-`` for stdin) and writes a JSON
report to stdout, or a plain table with ``--pretty``.

Exit status: 0 success, 2 invalid input, 3 budget exceeded, 4 two routes disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import __version__
from .characters import REGISTRY, Character, get_character, zeta1
from .derived.building_sets import (
    bforest_of_orientation,
    bs_chi,
    enumerate_bforests,
    forest_coloring_count,
    induced_building_set,
    orientation_of_bforest,
)
from .derived.complexes import sc_chi, validate_extension
from .derived.graphs import (
    deletion_contraction_chromatic,
    graph_chi,
    graph_chi_oracle,
    graph_chi_value,
    graph_chi_via_flats,
)
from .derived.partitions import partition_chi, partition_chi_oracle
from .derived.paths import path_catalan_check, path_chi, path_chi_oracle
from .derived.ripsew import (
    partitioning_forests,
    ripped_sewed,
    ripsew_chi,
    ripsew_chi_oracle,
    separated_coloring_count,
    tubes,
)
from .derived.simple import SimpleHypergraph, simple_chi, simple_chi_oracle
from .documents import ObjectDocument, loads
from .errors import (
    BudgetExceeded,
    CollisionError,
    DisagreementError,
    ValidationError,
    default_budget,
    set_default_budget,
)
from .hypergraph import FormalSum, Hypergraph, edge_key, fubini, takeuchi_antipode
from .invariants import chi_negative_via_antipode, chi_oracle, chi_orientation, chi_polynomial
from .orientations import (
    cancellation_free_antipode,
    count_compatible_colorings,
    count_strict_colorings,
    enumerate_admissible,
    orientation_table,
)
from .polynomials import RationalPolynomial, fraction_to_string, lagrange_interpolate
from .polytopes import chi_gp, euler_sum, faces, vertex_count_sum

EXIT_OK, EXIT_VALIDATION, EXIT_BUDGET, EXIT_DISAGREEMENT = 0, 2, 3, 4


@dataclass(frozen=True)
class KindOps:
    formula: Callable[[Any, Character, int], Fraction]
    oracle: Callable[[Any, Character, int], Fraction]
    size: Callable[[Any], int]
    hypergraph: Callable[[Any], Hypergraph] | None = None


def _as_simple(ground, sets) -> SimpleHypergraph:
    return SimpleHypergraph(sorted(ground), sets)


OPS: dict[str, KindOps] = {
    "hypergraph": KindOps(chi_orientation, chi_oracle, len, lambda h: h),
    "simple-hypergraph": KindOps(simple_chi, simple_chi_oracle, lambda h: len(h.ground), lambda h: h.hypergraph),
    "graph": KindOps(graph_chi_value, graph_chi_oracle, lambda g: len(g.vertices), lambda g: g.hypergraph),
    "graph-ripsew": KindOps(
        lambda g, z, n: ripsew_chi(g, z, n), ripsew_chi_oracle, lambda g: len(g.vertices),
        lambda g: tubes(g).hypergraph(),
    ),
    "simplicial-complex": KindOps(
        sc_chi,
        lambda C, z, n: simple_chi_oracle(_as_simple(C.ground, C.faces), z, n),
        lambda C: len(C.ground),
        lambda C: C.hypergraph,
    ),
    "building-set": KindOps(
        lambda B, z, n: bs_chi(B, z, n),
        lambda B, z, n: simple_chi_oracle(_as_simple(B.ground, B.connected_sets), z, n),
        lambda B: len(B.ground),
        lambda B: B.hypergraph(),
    ),
    "partition": KindOps(lambda p, z, n: partition_chi(p, z, n), partition_chi_oracle, lambda p: len(p.ground)),
    "paths": KindOps(lambda a, z, n: path_chi(a, z, n), path_chi_oracle, lambda a: len(a.ground)),
    "hypergraphic-polytope": KindOps(
        chi_gp, lambda P, z, n: chi_oracle(P.generator, z, n), lambda P: len(P.generator),
        lambda P: P.generator,
    ),
}


# -- serialization helpers ---------------------------------------------------------


def _q(x) -> str:
    return fraction_to_string(x)


def _poly(p: RationalPolynomial) -> list[str]:
    return p.to_strings()


def _edges(h: Hypergraph) -> list[list[str]]:
    return [list(edge_key(e)) for e in h.edges]


def _formal_sum(s: FormalSum) -> list[dict]:
    return [{"edges": _edges(h), "coefficient": _q(c)} for h, c in s.items()]


def _interpolate(fn: Callable[[int], Fraction], size: int) -> RationalPolynomial:
    return lagrange_interpolate([(n, fn(n)) for n in range(size + 1)])


# -- commands ------------------------------------------------------------------------


def _breakdown(doc: ObjectDocument, obj, zeta: Character) -> list[dict]:
    kind = doc.kind
    rows = []
    if kind == "hypergraph":
        for f, z, contribution in chi_polynomial(obj, zeta, verify=False).per_orientation_breakdown:
            rows.append({"orientation": f.to_json(), "zeta": _q(z), "contribution": _poly(contribution)})
    elif kind == "graph":
        for po, z, contribution in graph_chi(obj, zeta).breakdown:
            rows.append({
                "directed": [{"edge": sorted(e), "head": v} for e, v in po.directed],
                "zeta": _q(z),
                "contribution": _poly(contribution),
            })
    elif kind == "hypergraphic-polytope":
        for face in faces(obj):
            z = zeta(face.image)
            if z:
                rows.append({"image": _edges(face.image), "dimension": face.dimension, "zeta": _q(z)})
    elif kind == "building-set":
        for F in enumerate_bforests(obj):
            z = zeta(induced_building_set(obj, F))
            if z:
                rows.append({"forest": F.to_json(), "zeta": _q(z)})
    elif kind == "graph-ripsew":
        for F in partitioning_forests(obj):
            z = zeta(ripped_sewed(obj, F).hypergraph)
            if z:
                rows.append({"forest": F.to_json(), "zeta": _q(z)})
    return rows


def cmd_chi(doc: ObjectDocument, args) -> tuple[dict, int]:
    obj = doc.build()
    ops = OPS[doc.kind]
    zeta = get_character(args.character)
    size = ops.size(obj)
    jobs = max(1, args.jobs)

    def formula(n: int) -> Fraction:
        if doc.kind == "hypergraph":
            return chi_orientation(obj, zeta, n, jobs=jobs)
        return ops.formula(obj, zeta, n)

    certificate: dict[str, bool] = {}
    if args.method in ("orientation", "both"):
        poly = _interpolate(formula, size)
    if args.method in ("oracle", "both"):
        oracle_poly = _interpolate(lambda n: ops.oracle(obj, zeta, n), size)
        if args.method == "oracle":
            poly = oracle_poly
        else:
            certificate["oracle_matches_formula"] = oracle_poly == poly

    evaluations = []
    agree = True
    for n in args.eval or []:
        value = poly(n)
        if args.method != "oracle" or n < 0:
            direct = formula(n)
        else:
            direct = ops.oracle(obj, zeta, n)
        agree = agree and direct == value
        row = {"n": n, "value": _q(value)}
        if doc.kind == "hypergraph" and n < 0:
            via = chi_negative_via_antipode(obj, zeta, -n)
            row["antipode_route"] = _q(via)
            certificate["antipode_route_agrees"] = certificate.get("antipode_route_agrees", True) and via == value
        evaluations.append(row)
    if args.eval:
        certificate["evaluations_match_direct"] = agree

    report = {
        "command": "chi",
        "kind": doc.kind,
        "character": zeta.name,
        "method": args.method,
        "polynomial": _poly(poly),
        "polynomial_text": str(poly),
        "evaluations": evaluations,
        "breakdown": _breakdown(doc, obj, zeta),
        "certificate": certificate,
    }
    return report, EXIT_OK if all(certificate.values()) else EXIT_DISAGREEMENT


def cmd_antipode(doc: ObjectDocument, args) -> tuple[dict, int]:
    if doc.kind not in ("hypergraph", "hypergraphic-polytope"):
        raise ValidationError("the antipode is computed for hypergraph and hypergraphic-polytope documents")
    obj = doc.build()
    h = OPS[doc.kind].hypergraph(obj)
    report: dict[str, Any] = {"command": "antipode", "kind": doc.kind, "format": args.format}
    certificate = {}
    if args.format in ("cancellation-free", "both"):
        try:
            cf = cancellation_free_antipode(h)
            certificate["no_collisions"] = True
        except CollisionError:
            certificate["no_collisions"] = False
            cf = None
        if cf is not None:
            report["cancellation_free"] = _formal_sum(cf)
            report["term_count"] = len(cf)
    if args.format in ("takeuchi", "both"):
        tk = takeuchi_antipode(h, budget=default_budget())
        report["takeuchi"] = _formal_sum(tk)
        report["takeuchi_raw_terms"] = fubini(len(h))
        if args.format == "both":
            certificate["takeuchi_equals_cancellation_free"] = cf is not None and cf == tk
    report["certificate"] = certificate
    return report, EXIT_OK if all(certificate.values()) else EXIT_DISAGREEMENT


def cmd_orientations(doc: ObjectDocument, args) -> tuple[dict, int]:
    obj = doc.build()
    ops = OPS[doc.kind]
    if ops.hypergraph is None:
        raise ValidationError(f"{doc.kind} documents have no orientation model")
    h = ops.hypergraph(obj)
    n = args.count_colorings
    rows = []
    table = {r.orientation: r for r in orientation_table(h)}
    candidates = list(table) if args.acyclic_only else list(enumerate_admissible(h))
    for f in candidates:
        acyclic = f in table
        row: dict[str, Any] = {"orientation": f.to_json(), "acyclic": acyclic, "discrete": f.is_discrete()}
        if acyclic:
            r = table[f]
            row["image"] = _edges(r.image)
            row["components"] = r.components
            if n is not None:
                row["strict"] = _q(r.strict(n))
                row["compatible"] = _q(r.compatible(n))
        rows.append(row)
    report = {
        "command": "orientations",
        "kind": doc.kind,
        "hypergraph": _edges(h),
        "count_colorings": n,
        "rows": rows,
        "acyclic_count": sum(r["acyclic"] for r in rows),
        "discrete_acyclic_count": sum(r["acyclic"] and r["discrete"] for r in rows),
    }
    return report, EXIT_OK


def _verify_checks(doc: ObjectDocument, obj, level: str, characters: list[Character]):
    """Yield ``(name, thunk)`` pairs; each thunk returns True when the check passes."""
    ops = OPS[doc.kind]
    top = 2 if level == "quick" else 3
    size = ops.size(obj)
    for zeta in characters:
        for n in range(0, top + 1):
            yield f"oracle-vs-formula[{zeta.name}, n={n}]", (
                lambda z=zeta, n=n: ops.oracle(obj, z, n) == ops.formula(obj, z, n)
            )
        poly_cache: dict[str, RationalPolynomial] = {}

        def poly_for(z):
            if z.name not in poly_cache:
                poly_cache[z.name] = _interpolate(lambda n: ops.formula(obj, z, n), size)
            return poly_cache[z.name]

        for n in range(1, top + 1):
            yield f"polynomial-vs-formula[{zeta.name}, n=-{n}]", (
                lambda z=zeta, n=n: poly_for(z)(-n) == ops.formula(obj, z, -n)
            )
        if doc.kind in ("hypergraph", "hypergraphic-polytope"):
            h = ops.hypergraph(obj)
            for n in range(1, top + 1):
                yield f"antipode-route[{zeta.name}, n={n}]", (
                    lambda z=zeta, n=n: chi_negative_via_antipode(h, z, n) == chi_orientation(h, z, -n)
                )

    if ops.hypergraph is not None:
        h = ops.hypergraph(obj)

        def faulhaber_counts():
            for r in orientation_table(h):
                for n in range(0, top + 1):
                    if r.strict(n) != count_strict_colorings(r.orientation, n):
                        return False
                    if r.compatible(n) != count_compatible_colorings(r.orientation, n):
                        return False
            return True

        yield "faulhaber-vs-direct-counts", faulhaber_counts
        yield "strict-counts-partition-colorings", (
            lambda: all(sum(r.strict(n) for r in orientation_table(h)) == n ** len(h) for n in range(top + 1))
        )
    if doc.kind in ("hypergraph", "hypergraphic-polytope") and level == "full":
        h = ops.hypergraph(obj)
        yield "takeuchi-vs-cancellation-free", lambda: takeuchi_antipode(h) == cancellation_free_antipode(h)
    if doc.kind == "graph":
        yield "deletion-contraction", lambda: graph_chi(obj, zeta1).polynomial == deletion_contraction_chromatic(obj)
        for n in range(-top, top + 1):
            yield f"flats-route[n={n}]", (
                lambda n=n: graph_chi_via_flats(obj, zeta1, n) == graph_chi_value(obj, zeta1, n)
            )
    if doc.kind == "simplicial-complex":
        def extension():
            validate_extension(obj, budget=10**8)
            return True

        yield "extension-rule", extension
    if doc.kind == "building-set":
        yield "bforests-vs-acyclic", lambda: len(enumerate_bforests(obj)) == len(orientation_table(obj.hypergraph()))

        def bijection():
            for F in enumerate_bforests(obj):
                f = orientation_of_bforest(obj, F)
                if bforest_of_orientation(obj, f) != F:
                    return False
                r = next(r for r in orientation_table(obj.hypergraph()) if r.orientation == f)
                for n in range(top + 1):
                    if forest_coloring_count(F, n, True) != r.strict(n):
                        return False
                    if forest_coloring_count(F, n, False) != r.compatible(n):
                        return False
            return True

        yield "bforest-bijection", bijection
    if doc.kind == "graph-ripsew":
        yield "partitioning-forests-are-tube-forests", lambda: set(partitioning_forests(obj)) == set(
            enumerate_bforests(tubes(obj))
        )
        for n in range(top + 1):
            yield f"separated-colorings[n={n}]", (
                lambda n=n: separated_coloring_count(obj, n) == ripsew_chi(obj, zeta1, n)
            )
    if doc.kind == "paths":
        def catalan():
            path_catalan_check(obj)
            return True

        yield "catalan", catalan
    if doc.kind == "hypergraphic-polytope":
        if len(obj.generator) > 0:
            yield "euler-relation", lambda: euler_sum(obj) == 1
        for n in range(1, min(top, 2) + 1):
            yield f"vertex-sum[n={n}]", (
                lambda n=n: vertex_count_sum(obj, n) == (-1) ** len(obj.generator) * chi_orientation(obj.generator, zeta1, -n)
            )


def cmd_verify(doc: ObjectDocument, args) -> tuple[dict, int]:
    obj = doc.build()
    characters = [get_character(args.character)] if args.character else (
        [zeta1] if args.level == "quick" else list(REGISTRY.values())
    )
    results = []
    failed = None
    for name, check in _verify_checks(doc, obj, args.level, characters):
        try:
            ok = bool(check())
        except (DisagreementError, CollisionError) as exc:
            ok = False
            name = f"{name}: {exc}"
        results.append({"check": name, "passed": ok})
        if not ok and failed is None:
            failed = name
    report = {
        "command": "verify",
        "kind": doc.kind,
        "level": args.level,
        "checks": results,
        "passed": failed is None,
    }
    if failed is not None:
        print(f"verification failed: {failed}", file=sys.stderr)
    return report, EXIT_OK if failed is None else EXIT_DISAGREEMENT


# -- output ----------------------------------------------------------------------------


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_scalar(x)}" for k, x in v.items()) + "}"
    return "-" if v is None else str(v)


def render_pretty(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and all(isinstance(r, dict) for r in value):
            lines.append(f"{key}:")
            for row in value:
                lines.append("  " + "  ".join(f"{k}={_scalar(v)}" for k, v in row.items()))
        elif isinstance(value, dict) and value:
            lines.append(f"{key}:")
            for k, v in value.items():
                lines.append(f"  {k}: {_scalar(v)}")
        else:
            lines.append(f"{key}: {_scalar(value)}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfchi", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="JSON document path, or - for stdin")
    common.add_argument("--budget", type=int, default=None, help="enumeration bound (default 10^7 or $HOPFCHI_BUDGET)")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for per-orientation sums")
    common.add_argument("--pretty", action="store_true", help="plain-text table instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="polynomial invariant and evaluations")
    p.add_argument("--character", default="zeta1", help=f"one of: {', '.join(REGISTRY)}")
    p.add_argument("--eval", type=int, action="append", metavar="N", help="evaluate at N (repeatable, may be negative)")
    p.add_argument("--method", choices=("oracle", "orientation", "both"), default="orientation")
    p.set_defaults(handler=cmd_chi)

    p = sub.add_parser("antipode", parents=[common], help="antipode as a formal sum")
    p.add_argument("--format", choices=("takeuchi", "cancellation-free", "both"), default="cancellation-free")
    p.set_defaults(handler=cmd_antipode)

    p = sub.add_parser("orientations", parents=[common], help="admissible or acyclic orientations")
    p.add_argument("--acyclic-only", action="store_true")
    p.add_argument("--count-colorings", type=int, metavar="N", default=None)
    p.set_defaults(handler=cmd_orientations)

    p = sub.add_parser("verify", parents=[common], help="cross-check every available route")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--character", default=None)
    p.set_defaults(handler=cmd_verify)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is not None and args.budget < 0:
        print("error: --budget must be nonnegative", file=sys.stderr)
        return EXIT_VALIDATION
    set_default_budget(args.budget)
    try:
        doc = loads(_read(args.input))
        report, code = args.handler(doc, args)
    except (ValidationError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DisagreementError, CollisionError) as exc:
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    finally:
        set_default_budget(None)
    if args.pretty:
        print(render_pretty(report))
    else:
        print(json.dumps(report, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
