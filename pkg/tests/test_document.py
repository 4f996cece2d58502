"""Diagram document serialization: JSON round trips, replay, DOT."""

import json
import random

import pytest

from latfox import document, engine
from latfox.errors import DocumentError

from fixtures import (fcd3_column_z, fcd3_old, k2, k2d, column_d,
                      random_column, random_context)


def test_k2_document_shape():
    doc = document.export_document(engine.build_state(k2()))
    assert doc["version"] == 0
    assert doc["edges"] == [[1, 0]]
    assert doc["seeds"] == {"a": [0.0, -1.0]}
    assert doc["upArrows"] == [["g2", "a"]] == doc["downArrows"]
    assert doc["nodes"] == [
        {"id": 0, "extent": ["g1", "g2"], "intent": ["b"], "pos": [0.0, 0.0],
         "objectLabels": ["g2"], "attributeLabels": ["b"], "changeClass": None},
        {"id": 1, "extent": ["g1"], "intent": ["a", "b"], "pos": [0.0, -1.0],
         "objectLabels": ["g1"], "attributeLabels": ["a"], "changeClass": None},
    ]


def test_document_json_is_valid_json():
    text = document.export_json(engine.build_state(k2d()))
    assert json.loads(text)["version"] == 0
    assert text.endswith("\n")


def test_insert_document_marks_change_classes():
    state = engine.build_state(fcd3_old())
    new, change = engine.insert_column(state, fcd3_column_z())
    doc = document.export_document(new, change)
    classes = {node["id"]: node["changeClass"] for node in doc["nodes"]}
    assert len(classes) == 19
    generated = {nid for nid, kind in classes.items() if kind == "generated"}
    assert generated == set(change.created.values())
    assert len(generated) == 5
    varied = {nid for nid, kind in classes.items() if kind == "varied"}
    assert varied == {cid for cid, kind in change.pre_class.items()
                      if kind == "varying"}
    assert all(kind in ("old", "varied", "generated")
               for kind in classes.values())


def test_parse_round_trip_random_states():
    rng = random.Random(41)
    for t in range(60):
        ctx = random_context(rng, rng.randint(0, 8), rng.randint(0, 6),
                             rng.choice([0.2, 0.5, 0.8]))
        state = engine.build_state(ctx)
        for step in range(rng.randint(0, 3)):  # gaps in the id sequence
            if state.context.attributes and rng.random() < 0.5:
                state, _ = engine.remove_column(
                    state, rng.choice(state.context.attributes))
            else:
                state, _ = engine.insert_column(
                    state, random_column(rng, state.context, rng.random(),
                                         name=f"x{t}_{step}"))
        back = document.parse_document(document.export_json(state))
        assert back.context == state.context
        assert back.concepts == state.concepts
        assert back.upper == state.upper and back.lower == state.lower
        assert back.gamma == state.gamma and back.mu == state.mu
        assert back.irreducibles == state.irreducibles
        assert back.seeds == state.seeds
        assert back.up_arrows == state.up_arrows
        assert back.down_arrows == state.down_arrows
        assert back.version == state.version
        assert back.next_id == max(state.concepts) + 1


def test_parse_rejects_garbage():
    with pytest.raises(DocumentError):
        document.parse_document("not json at all")
    with pytest.raises(DocumentError):
        document.parse_document("[1, 2, 3]")
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps({"version": -1, "nodes": []}))


def valid_doc():
    return document.export_document(engine.build_state(k2d()))


def test_parse_rejects_structural_damage():
    doc = valid_doc()
    doc["nodes"][0]["id"] = doc["nodes"][1]["id"]
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps(doc))

    doc = valid_doc()
    labelled = [n for n in doc["nodes"] if n["objectLabels"]]
    labelled[0]["objectLabels"] = \
        labelled[0]["objectLabels"] + labelled[1]["objectLabels"]
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps(doc))

    # an extent that is not closed in its own table
    doc = valid_doc()
    full = max(doc["nodes"], key=lambda n: len(n["extent"]))
    full["intent"] = list(doc["seeds"])[:1]
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps(doc))

    doc = valid_doc()
    doc["edges"][0] = list(reversed(doc["edges"][0]))
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps(doc))

    doc = valid_doc()
    doc["seeds"].pop(sorted(doc["seeds"])[0])
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps(doc))

    doc = valid_doc()
    doc["seeds"]["b"] = [0.0, -1.0]  # reducible in this table
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps(doc))

    doc = valid_doc()
    doc["upArrows"].append(["g1", "a"])  # incident pair
    with pytest.raises(DocumentError):
        document.parse_document(json.dumps(doc))


def test_changeset_json_k2_insert_d():
    state = engine.build_state(k2())
    _, change = engine.insert_column(state, column_d(k2()))
    assert document.changeset_to_json(change) == {
        "direction": "insert",
        "columnName": "d",
        "columnExtent": ["g2"],
        "preClass": {"0": "generating", "1": "generating"},
        "created": {"0": 2, "1": 3},
        "retired": [],
        "edgesAdded": [[2, 0], [3, 1], [3, 2]],
        "edgesRemoved": [],
        "gammaMoves": {"g2": [0, 2]},
        "muAdded": {"d": 2},
        "muRemoved": {},
        "seedsAdded": {"d": [1.0, -1.0]},
        "seedsRemoved": {},
        "upAdded": [["g1", "d"]],
        "upRemoved": [],
        "downAdded": [["g1", "d"]],
        "downRemoved": [],
        "redundant": False,
    }


def test_changeset_replay_reproduces_documents():
    rng = random.Random(42)
    for _ in range(80):
        ctx = random_context(rng, rng.randint(1, 8), rng.randint(1, 6), 0.4)
        state = engine.build_state(ctx)
        doc = json.loads(document.export_json(state))
        if rng.random() < 0.5:
            new, change = engine.insert_column(
                state, random_column(rng, ctx, rng.random()))
        else:
            new, change = engine.remove_column(state,
                                               rng.choice(ctx.attributes))
        served = json.loads(document.export_json(new, change))
        replayed = document.apply_changeset_to_document(
            doc, json.loads(json.dumps(document.changeset_to_json(change))))
        assert replayed == served


def test_dot_export_k2():
    assert document.export_dot(engine.build_state(k2())) == (
        "digraph diagram {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        '  c0 [label="b / g2"];\n'
        '  c1 [label="a / g1"];\n'
        "  c1 -> c0;\n"
        "}\n")


def test_dot_quotes_awkward_names():
    ctx_state = engine.build_state(
        type(k2()).from_strings(['ob "q"', "o2"], ["at\\t", "b"],
                                ["XX", ".X"]))
    text = document.export_dot(ctx_state)
    assert '\\"q\\"' in text
    assert "at\\\\t" in text
