"""Poset documents and their JSON / DOT renderings.

A :class:`PosetDocument` is a plain, comparable snapshot of a complex, a
facial lattice, a congruence or a quotient.  Exact numbers never appear as
floats: they are written with :func:`coxlat.scalars.format_scalar`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import SchemaError
from .facial import CoxeterComplex, FacialLattice, format_coset
from .coxeter import CoxeterSystem, popcount
from .scalars import format_scalar

SCHEMA = "coxlat-poset/1"
FAN_SCHEMA = "coxlat-fan/1"
NODE_KINDS = ("coset", "class")


@dataclass
class Node:
    id: int
    label: str
    kind: str
    payload: dict = field(default_factory=dict)


@dataclass
class Edge:
    source: int
    target: int
    tag: Optional[int] = None


@dataclass
class PosetDocument:
    nodes: list[Node] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def validate(self) -> "PosetDocument":
        for k, node in enumerate(self.nodes):
            if node.id != k:
                raise SchemaError(f"node ids must be 0..{len(self.nodes) - 1}, found {node.id} at {k}")
            if node.kind not in NODE_KINDS:
                raise SchemaError(f"unknown node kind {node.kind!r}")
        n = len(self.nodes)
        for e in self.edges:
            if not (0 <= e.source < n and 0 <= e.target < n):
                raise SchemaError(f"edge {e.source}->{e.target} has a missing endpoint")
        return self


def system_metadata(system: CoxeterSystem) -> dict:
    return {
        "system": system.label,
        "generators": list(system.names),
        "matrix": system.matrix.to_text(),
    }


def _coset_node(k: int, cx: CoxeterComplex) -> Node:
    c = cx[k]
    S = cx.system
    return Node(
        k,
        format_coset(c),
        "coset",
        {
            "x": S.format_word(c.x.reduced_word()),
            "I": S.format_gens(c.I),
            "top": S.format_word(cx.tops[k].reduced_word()),
            "positive_roots": popcount(cx.root_sets[k] & S.positive_mask),
        },
    )


def complex_document(cx: CoxeterComplex) -> PosetDocument:
    meta = system_metadata(cx.system)
    meta.update({"structure": "complex", "cosets": len(cx), "group_order": cx.system.order})
    return PosetDocument([_coset_node(k, cx) for k in range(len(cx))], [], meta).validate()


def lattice_document(lat: FacialLattice) -> PosetDocument:
    cx = lat.complex
    meta = system_metadata(cx.system)
    edges = [Edge(a, b, t) for a, b, t in sorted(lat.edges)]
    meta.update({"structure": "facial_lattice", "cosets": len(cx), "covers": len(edges)})
    return PosetDocument([_coset_node(k, cx) for k in range(len(cx))], edges, meta).validate()


def _class_node(cid: int, fc) -> Node:
    cx = fc.complex
    members = fc.members[cid]
    return Node(
        cid,
        fc.describe(cid),
        "class",
        {
            "bottom": format_coset(cx[fc.bottoms[cid]]),
            "top": format_coset(cx[fc.tops[cid]]),
            "members": [format_coset(cx[k]) for k in members],
            "size": len(members),
        },
    )


def congruence_document(fc) -> PosetDocument:
    meta = system_metadata(fc.complex.system)
    meta.update({
        "structure": "facial_congruence",
        "congruence": fc.name,
        "classes": len(fc),
        "base_classes": len(fc.base),
        "singletons": len(fc.singletons_by_size()),
    })
    return PosetDocument([_class_node(c, fc) for c in range(len(fc))], [], meta).validate()


def quotient_document(q) -> PosetDocument:
    fc = q.fc
    doc = congruence_document(fc)
    doc.metadata["structure"] = "quotient"
    doc.edges = [Edge(a, b) for a, b in q.edges]
    doc.metadata["covers"] = len(doc.edges)
    return doc.validate()


# --------------------------------------------------------------------------
# JSON


def document_to_dict(doc: PosetDocument) -> dict:
    return {
        "schema": SCHEMA,
        "metadata": doc.metadata,
        "nodes": [{"id": n.id, "label": n.label, "kind": n.kind, "payload": n.payload} for n in doc.nodes],
        "edges": [
            {"source": e.source, "target": e.target, **({} if e.tag is None else {"tag": e.tag})}
            for e in doc.edges
        ],
    }


def export_json(doc: PosetDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def import_json(text: str) -> PosetDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SchemaError("document must be a JSON object")
    if data.get("schema") != SCHEMA:
        raise SchemaError(f"expected schema {SCHEMA!r}, got {data.get('schema')!r}")
    try:
        nodes = [Node(int(n["id"]), str(n["label"]), str(n["kind"]), dict(n.get("payload", {}))) for n in data["nodes"]]
        edges = [Edge(int(e["source"]), int(e["target"]), e.get("tag")) for e in data["edges"]]
        meta = dict(data["metadata"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed document: {exc!r}") from None
    return PosetDocument(nodes, edges, meta).validate()


# --------------------------------------------------------------------------
# DOT


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(doc: PosetDocument, name: str = "poset") -> str:
    """Hasse diagram with edges from the smaller to the larger element."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for key in sorted(doc.metadata):
        value = doc.metadata[key]
        if isinstance(value, (str, int)) and "\n" not in str(value):
            lines.append(f"  // {key}: {value}")
    for n in doc.nodes:
        label = n.label if n.kind == "coset" else n.payload.get("bottom", n.label)
        if n.kind == "class" and n.payload.get("size", 1) > 1:
            label = f"[{n.payload['bottom']}, {n.payload['top']}]"
        lines.append(f"  n{n.id} [label={_quote(label)}];")
    for e in sorted(doc.edges, key=lambda e: (e.source, e.target)):
        attr = f" [label={_quote(f'({e.tag})')}]" if e.tag is not None else ""
        lines.append(f"  n{e.source} -> n{e.target}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Fans


def fan_to_dict(fc, cones) -> dict:
    S = fc.complex.system
    return {
        "schema": FAN_SCHEMA,
        "metadata": {**system_metadata(S), "congruence": fc.name, "cones": len(cones)},
        "cones": [
            {
                "class": cone.class_id,
                "dim": cone.dim,
                "bottom": format_coset(fc.complex[fc.bottoms[cone.class_id]]),
                "generators": [[format_scalar(x) for x in g] for g in cone.generators],
            }
            for cone in cones
        ],
    }


def export_fan_json(fc, cones) -> str:
    return json.dumps(fan_to_dict(fc, cones), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def export_fan_text(fc, cones) -> str:
    """One block per class: its bottom coset then the generator matrix rows
    (fundamental-weight images in simple-root coordinates)."""
    out = []
    for cone in cones:
        out.append(f"cone {cone.class_id} dim {cone.dim} bottom {format_coset(fc.complex[fc.bottoms[cone.class_id]])}")
        for g in cone.generators:
            out.append("  " + " ".join(format_scalar(x) for x in g))
    return "\n".join(out) + "\n"
