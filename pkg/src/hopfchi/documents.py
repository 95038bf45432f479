"""JSON object documents: one ``kind`` tag, a vertex list and a kind-specific body.

Example::

    {"kind": "hypergraph", "vertices": ["1", "2", "3", "4"],
     "edges": [["1", "2", "3"], ["2", "3", "4"]]}
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .derived.building_sets import BuildingSet
from .derived.complexes import SimplicialComplex
from .derived.graphs import Graph
from .derived.paths import PathFamily
from .derived.simple import SimpleHypergraph
from .errors import ValidationError
from .hypergraph import Hypergraph, edge_key
from .polytopes import HypergraphicPolytope
from .setcomb import SetPartition

BODY_KEY = {
    "hypergraph": "edges",
    "simple-hypergraph": "edges",
    "graph": "edges",
    "graph-ripsew": "edges",
    "hypergraphic-polytope": "edges",
    "simplicial-complex": "faces",
    "building-set": "connected-sets",
    "partition": "blocks",
    "paths": "words",
}
KINDS = tuple(BODY_KEY)


@dataclass(frozen=True)
class ObjectDocument:
    kind: str
    vertices: tuple[str, ...]
    body: tuple[tuple[str, ...], ...]

    @property
    def body_key(self) -> str:
        return BODY_KEY[self.kind]

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "vertices": list(self.vertices), self.body_key: [list(b) for b in self.body]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def build(self):
        """The domain object; raises :class:`ValidationError` with a diagnostic if invalid."""
        try:
            return _BUILDERS[self.kind](self.vertices, self.body)
        except ValidationError:
            raise
        except ValueError as exc:
            raise ValidationError(f"invalid {self.kind}: {exc}") from exc


_BUILDERS = {
    "hypergraph": lambda V, B: Hypergraph(V, B),
    "simple-hypergraph": lambda V, B: SimpleHypergraph(V, B),
    "graph": lambda V, B: Graph(V, B),
    "graph-ripsew": lambda V, B: Graph(V, B),
    "hypergraphic-polytope": lambda V, B: HypergraphicPolytope(Hypergraph(V, B)),
    "simplicial-complex": lambda V, B: SimplicialComplex(V, B),
    "building-set": lambda V, B: BuildingSet(V, B),
    "partition": lambda V, B: SetPartition(V, B),
    "paths": lambda V, B: PathFamily(V, B),
}


def _labels(x, what: str) -> list[str]:
    if not isinstance(x, list) or not all(isinstance(v, (str, int)) and not isinstance(v, bool) for v in x):
        raise ValidationError(f"{what} must be a list of vertex labels")
    return [str(v) for v in x]


def parse_document(data: Any) -> ObjectDocument:
    if not isinstance(data, dict):
        raise ValidationError("a document is a JSON object")
    kind = data.get("kind")
    if kind not in BODY_KEY:
        raise ValidationError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    vertices = _labels(data.get("vertices"), "vertices")
    if len(set(vertices)) != len(vertices):
        raise ValidationError("vertices must be distinct")
    key = BODY_KEY[kind]
    raw = data.get(key, [])
    if not isinstance(raw, list):
        raise ValidationError(f"{key} must be a list")
    parts = [_labels(b, key) for b in raw]
    known = set(vertices)
    for b in parts:
        if not set(b) <= known:
            raise ValidationError(f"{key} entry {b} uses labels outside the vertex list")
    if kind == "paths":
        body = tuple(tuple(b) for b in parts)
    else:
        if any(len(set(b)) != len(b) for b in parts):
            raise ValidationError(f"{key} entries must not repeat a label")
        # repeated entries are kept so that the kind's own validation sees them
        body = tuple(sorted(tuple(sorted(b)) for b in parts))
    doc = ObjectDocument(kind, tuple(vertices), body)
    doc.build()
    return doc


def loads(text: str) -> ObjectDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}") from exc
    return parse_document(data)


def document_for(kind: str, obj) -> ObjectDocument:
    """Serialize a domain object back into a document of the given kind."""
    if kind == "paths":
        return ObjectDocument(kind, tuple(sorted(obj.ground)), tuple(obj.paths))
    if kind == "partition":
        return ObjectDocument(kind, obj.ground.elements, tuple(tuple(b) for b in obj.sorted_blocks()))
    if kind == "building-set":
        return ObjectDocument(
            kind, tuple(sorted(obj.ground)), tuple(sorted(tuple(sorted(s)) for s in obj.connected_sets))
        )
    if kind == "hypergraphic-polytope":
        obj = obj.generator
    h = obj if isinstance(obj, Hypergraph) else obj.hypergraph
    return ObjectDocument(kind, h.vertices, tuple(edge_key(e) for e in h.edges))
