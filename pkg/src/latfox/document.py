"""Diagram documents: the JSON form of a diagram state, plus DOT export.

The document is the unit of editing for the CLI and the service.  It
carries everything a client needs to draw and continue editing: node
geometry, labels, seeds, arrows and the state version.  The id
watermark is not stored; parsing resumes it past the largest id in the
file, which is unique enough because ids only have to be distinct
within one document lineage.

Node positions are derived data (seed sums), written out for the
convenience of dumb renderers and recomputed from the seeds on parse.
changeClass is presentation state for the most recent edit: "varied"
and "generated" mark the touched nodes, "old" the rest, null a node of
a freshly built document.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .bitset import BitVec
from .context import FormalContext
from .engine import ChangeSet, DiagramState
from .errors import DocumentError
from .layout import Vec2, position

CHANGE_CLASSES = ("old", "varied", "generated")


def change_class_of(change: ChangeSet | None, cid: int) -> str | None:
    """How the last edit treated the surviving concept cid."""
    if change is None:
        return None
    if change.direction == "insert" and cid in set(change.created.values()):
        return "generated"
    kind = change.pre_class.get(cid)
    if change.direction == "insert":
        return "varied" if kind == "varying" else "old"
    return "varied" if kind == "varied" else "old"


def export_document(state: DiagramState,
                    change: ChangeSet | None = None) -> dict[str, Any]:
    ctx = state.context
    order = ctx.attributes
    gamma_labels: dict[int, list[str]] = {cid: [] for cid in state.concepts}
    for g in ctx.objects:
        gamma_labels[state.gamma[g]].append(g)
    mu_labels: dict[int, list[str]] = {cid: [] for cid in state.concepts}
    for m in order:
        mu_labels[state.mu[m]].append(m)

    nodes = []
    for cid in sorted(state.concepts):
        c = state.concepts[cid]
        intent_names = ctx.attribute_names(c.intent)
        pos = position(order, set(intent_names), state.seeds)
        nodes.append({
            "id": cid,
            "extent": list(ctx.object_names(c.extent)),
            "intent": list(intent_names),
            "pos": [pos.x, pos.y],
            "objectLabels": gamma_labels[cid],
            "attributeLabels": mu_labels[cid],
            "changeClass": change_class_of(change, cid),
        })
    edges = sorted((low, up) for low, ups in state.upper.items() for up in ups)
    return {
        "version": state.version,
        "nodes": nodes,
        "edges": [list(e) for e in edges],
        "seeds": {m: [v.x, v.y] for m, v in sorted(state.seeds.items())},
        "upArrows": [list(p) for p in sorted(state.up_arrows)],
        "downArrows": [list(p) for p in sorted(state.down_arrows)],
    }


def export_json(state: DiagramState, change: ChangeSet | None = None) -> str:
    return json.dumps(export_document(state, change), indent=2) + "\n"


def _fail(why: str) -> DocumentError:
    return DocumentError(f"bad diagram document: {why}")


def _name_list(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or \
            not all(isinstance(x, str) for x in value):
        raise _fail(f"{what} must be a list of names")
    return value


def _vec(value: Any, what: str) -> Vec2:
    if not isinstance(value, list) or len(value) != 2 or \
            not all(isinstance(x, (int, float)) and not isinstance(x, bool)
                    for x in value):
        raise _fail(f"{what} must be a [x, y] pair")
    vec = Vec2(float(value[0]), float(value[1]))
    if not vec.is_finite():
        raise _fail(f"{what} must be finite")
    return vec


def parse_document(text: str | dict[str, Any]) -> DiagramState:
    """Rebuild a diagram state from its JSON form.

    The cross table is not stored explicitly: each object's row is the
    intent of the node carrying its label, so the table, the labels and
    the node contents all have to agree or parsing fails.
    """
    if isinstance(text, str):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise _fail(f"not JSON ({exc.msg} at line {exc.lineno})") from exc
    else:
        doc = text
    if not isinstance(doc, dict):
        raise _fail("top level must be an object")
    version = doc.get("version")
    if not isinstance(version, int) or isinstance(version, bool) or version < 0:
        raise _fail("version must be a non-negative integer")
    raw_nodes = doc.get("nodes")
    if not isinstance(raw_nodes, list) or not raw_nodes:
        raise _fail("nodes must be a non-empty list")

    ids = []
    for node in raw_nodes:
        if not isinstance(node, dict):
            raise _fail("every node must be an object")
        nid = node.get("id")
        if not isinstance(nid, int) or isinstance(nid, bool) or nid < 0:
            raise _fail("node ids must be non-negative integers")
        ids.append(nid)
    if len(set(ids)) != len(ids):
        raise _fail("node ids must be unique")

    # the top node spells out the object order, the bottom the attributes
    objects: list[str] = []
    attributes: list[str] = []
    for node in raw_nodes:
        extent = _name_list(node.get("extent"), "node extent")
        intent = _name_list(node.get("intent"), "node intent")
        if len(extent) > len(objects):
            objects = extent
        if len(intent) > len(attributes):
            attributes = intent
    if len(set(objects)) != len(objects) or \
            len(set(attributes)) != len(attributes):
        raise _fail("duplicate names in extent or intent")

    gamma: dict[str, int] = {}
    mu: dict[str, int] = {}
    for node in raw_nodes:
        for g in _name_list(node.get("objectLabels"), "objectLabels"):
            if g in gamma:
                raise _fail(f"object {g!r} is labelled twice")
            gamma[g] = node["id"]
        for m in _name_list(node.get("attributeLabels"), "attributeLabels"):
            if m in mu:
                raise _fail(f"attribute {m!r} is labelled twice")
            mu[m] = node["id"]
    if set(gamma) != set(objects) or set(mu) != set(attributes):
        raise _fail("labels must cover every object and attribute exactly once")

    intent_of = {node["id"]: node["intent"] for node in raw_nodes}
    unknown = {m for node in raw_nodes for m in node["intent"]} - set(attributes)
    if unknown or \
            {g for node in raw_nodes for g in node["extent"]} - set(objects):
        raise _fail("extent or intent mentions an unknown name")
    rows = []
    attr_rank = {m: j for j, m in enumerate(attributes)}
    for g in objects:
        mask = 0
        for m in intent_of[gamma[g]]:
            mask |= 1 << attr_rank[m]
        rows.append(mask)
    ctx = FormalContext(objects, attributes, rows)

    from .oracle import Concept
    concepts: dict[int, Concept] = {}
    for node in raw_nodes:
        extent = ctx.object_set(node["extent"])
        intent = ctx.attribute_set(node["intent"])
        if ctx.derive_objects(extent) != intent or \
                ctx.derive_attributes(intent) != extent:
            raise _fail(f"node {node['id']} is not a concept of its table")
        concepts[node["id"]] = Concept(node["id"], extent, intent)

    raw_edges = doc.get("edges")
    if not isinstance(raw_edges, list):
        raise _fail("edges must be a list")
    edges = set()
    for pair in raw_edges:
        if not isinstance(pair, list) or len(pair) != 2 or \
                not all(p in concepts for p in pair):
            raise _fail("every edge must be a [lowerId, upperId] pair")
        low, up = pair
        if not concepts[low].extent.ispropersubset(concepts[up].extent):
            raise _fail(f"edge [{low}, {up}] does not point upward")
        edges.add((low, up))
    upper: dict[int, set[int]] = {cid: set() for cid in concepts}
    lower: dict[int, set[int]] = {cid: set() for cid in concepts}
    for low, up in edges:
        upper[low].add(up)
        lower[up].add(low)

    raw_seeds = doc.get("seeds")
    if not isinstance(raw_seeds, dict):
        raise _fail("seeds must be a map")
    seeds = {}
    for m, value in raw_seeds.items():
        if m not in attr_rank:
            raise _fail(f"seed for unknown attribute {m!r}")
        seeds[m] = _vec(value, f"seed of {m!r}")
    irreducibles = frozenset(
        m for m in attributes if len(upper[mu[m]]) == 1)
    if set(seeds) != irreducibles:
        raise _fail("seed map must cover exactly the irreducible attributes")

    def arrow_pairs(key: str) -> frozenset[tuple[str, str]]:
        raw = doc.get(key)
        if not isinstance(raw, list):
            raise _fail(f"{key} must be a list")
        pairs = set()
        for pair in raw:
            if not isinstance(pair, list) or len(pair) != 2 or \
                    pair[0] not in gamma or pair[1] not in mu:
                raise _fail(f"every {key} entry must be [object, attribute]")
            g, m = pair
            if ctx.incident(ctx.object_index(g), ctx.attribute_index(m)):
                raise _fail(f"{key} entry [{g}, {m}] crosses the table")
            pairs.add((g, m))
        return frozenset(pairs)

    return DiagramState(
        context=ctx, concepts=concepts,
        upper={cid: frozenset(ups) for cid, ups in upper.items()},
        lower={cid: frozenset(lows) for cid, lows in lower.items()},
        gamma=gamma, mu=mu, irreducibles=irreducibles, seeds=seeds,
        up_arrows=arrow_pairs("upArrows"),
        down_arrows=arrow_pairs("downArrows"),
        version=version, next_id=max(concepts) + 1)


def changeset_to_json(change: ChangeSet) -> dict[str, Any]:
    """ChangeSet in the same naming style as the document itself."""
    return {
        "direction": change.direction,
        "columnName": change.column_name,
        "columnExtent": list(change.column_extent),
        "preClass": {str(cid): kind
                     for cid, kind in sorted(change.pre_class.items())},
        "created": {str(cid): nid
                    for cid, nid in sorted(change.created.items())},
        "retired": sorted(change.retired),
        "edgesAdded": [list(e) for e in sorted(change.edges_added)],
        "edgesRemoved": [list(e) for e in sorted(change.edges_removed)],
        "gammaMoves": {g: list(move)
                       for g, move in sorted(change.gamma_moves.items())},
        "muAdded": dict(sorted(change.mu_added.items())),
        "muRemoved": dict(sorted(change.mu_removed.items())),
        "seedsAdded": {m: [v.x, v.y]
                       for m, v in sorted(change.seeds_added.items())},
        "seedsRemoved": {m: [v.x, v.y]
                         for m, v in sorted(change.seeds_removed.items())},
        "upAdded": [list(p) for p in sorted(change.up_added)],
        "upRemoved": [list(p) for p in sorted(change.up_removed)],
        "downAdded": [list(p) for p in sorted(change.down_added)],
        "downRemoved": [list(p) for p in sorted(change.down_removed)],
        "redundant": change.redundant,
    }


def apply_changeset_to_document(doc: dict[str, Any],
                                change: dict[str, Any]) -> dict[str, Any]:
    """Replay a serialized changeset on a serialized document.

    This is the reference for what a thin client has to do with a
    mutation response if it skips the full document: the result must
    equal the document the server returned alongside it.
    """
    name = change["columnName"]
    inserting = change["direction"] == "insert"
    by_id = {node["id"]: dict(node) for node in doc["nodes"]}

    seeds = dict(doc["seeds"])
    for m in change["seedsRemoved"]:
        del seeds[m]
    seeds.update(change["seedsAdded"])

    if inserting:
        column = set(change["columnExtent"])
        for node in by_id.values():
            varied = change["preClass"].get(str(node["id"])) == "varying"
            if varied:
                node["intent"] = node["intent"] + [name]
            node["changeClass"] = "varied" if varied else "old"
        for gen_id, new_id in change["created"].items():
            gen = by_id[int(gen_id)]
            by_id[new_id] = {
                "id": new_id,
                "extent": [g for g in gen["extent"] if g in column],
                "intent": gen["intent"] + [name],
                "objectLabels": [],
                "attributeLabels": [],
                "changeClass": "generated",
            }
    else:
        for cid in change["retired"]:
            del by_id[cid]
        for node in by_id.values():
            varied = change["preClass"].get(str(node["id"])) == "varied"
            if varied:
                node["intent"] = [m for m in node["intent"] if m != name]
            node["changeClass"] = "varied" if varied else "old"

    # label sources may be retired nodes, in which case there is nothing
    # left to strip the label from
    for g, (src, dst) in change["gammaMoves"].items():
        if src in by_id:
            by_id[src]["objectLabels"] = [
                x for x in by_id[src]["objectLabels"] if x != g]
        by_id[dst]["objectLabels"] = by_id[dst]["objectLabels"] + [g]
    for m, cid in change["muRemoved"].items():
        if cid in by_id:
            by_id[cid]["attributeLabels"] = [
                x for x in by_id[cid]["attributeLabels"] if x != m]
    for m, cid in change["muAdded"].items():
        by_id[cid]["attributeLabels"] = by_id[cid]["attributeLabels"] + [m]

    edges = {tuple(e) for e in doc["edges"]}
    edges -= {tuple(e) for e in change["edgesRemoved"]}
    edges |= {tuple(e) for e in change["edgesAdded"]}

    def arrows(key: str, added: str, removed: str) -> list[list[str]]:
        pairs = {tuple(p) for p in doc[key]}
        pairs -= {tuple(p) for p in change[removed]}
        pairs |= {tuple(p) for p in change[added]}
        return [list(p) for p in sorted(pairs)]

    # attribute order: the new column goes last on insert, drops on remove
    order: list[str] = []
    for node in by_id.values():
        if len(node["intent"]) > len(order):
            order = node["intent"]
    rank = {m: j for j, m in enumerate(order)}
    for node in by_id.values():
        node["intent"] = sorted(node["intent"], key=rank.__getitem__)
        node["attributeLabels"] = sorted(node["attributeLabels"],
                                         key=rank.__getitem__)
        irr = [m for m in node["intent"] if m in seeds]
        node["pos"] = [float(sum(seeds[m][0] for m in irr)),
                       float(sum(seeds[m][1] for m in irr))]

    object_order: list[str] = []
    for node in by_id.values():
        if len(node["extent"]) > len(object_order):
            object_order = node["extent"]
    g_rank = {g: i for i, g in enumerate(object_order)}
    for node in by_id.values():
        node["objectLabels"] = sorted(node["objectLabels"],
                                      key=g_rank.__getitem__)

    return {
        "version": doc["version"] + 1,
        "nodes": [by_id[cid] for cid in sorted(by_id)],
        "edges": [list(e) for e in sorted(edges)],
        "seeds": {m: list(v) for m, v in sorted(seeds.items())},
        "upArrows": arrows("upArrows", "upAdded", "upRemoved"),
        "downArrows": arrows("downArrows", "downAdded", "downRemoved"),
    }


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(state: DiagramState) -> str:
    """Graphviz rendering: covering edges drawn bottom-up."""
    doc = export_document(state)
    lines = ["digraph diagram {", "  rankdir=BT;", "  node [shape=box];"]
    for node in doc["nodes"]:
        label = "{} / {}".format(",".join(node["attributeLabels"]),
                                 ",".join(node["objectLabels"]))
        lines.append(f"  c{node['id']} [label={_dot_quote(label)}];")
    for low, up in doc["edges"]:
        lines.append(f"  c{low} -> c{up};")
    lines.append("}")
    return "\n".join(lines) + "\n"
