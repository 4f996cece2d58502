"""CLI exit codes, in-place edits, and the stdout/stderr contract."""

import json

import pytest

from latfox import cli, verify
from latfox.cxt import write_cxt

from fixtures import fcd3_old, k2

K2_CXT = "B\n\n2\n2\n\ng1\ng2\na\nb\nXX\n.X\n"


@pytest.fixture
def k2_cxt(tmp_path):
    path = tmp_path / "k2.cxt"
    path.write_text(K2_CXT)
    return path


@pytest.fixture
def k2_doc(tmp_path, k2_cxt, capsys):
    path = tmp_path / "k2.json"
    assert cli.main(["build", str(k2_cxt), "-o", str(path)]) == 0
    capsys.readouterr()
    return path


def test_build_writes_document(k2_doc):
    doc = json.loads(k2_doc.read_text())
    assert len(doc["nodes"]) == 2
    assert doc["edges"] == [[1, 0]]


def test_build_to_stdout(k2_cxt, capsys):
    assert cli.main(["build", str(k2_cxt)]) == 0
    out = capsys.readouterr()
    assert len(json.loads(out.out)["nodes"]) == 2


def test_build_missing_file(capsys):
    assert cli.main(["build", "/no/such/file.cxt"]) == 2
    assert "error" in capsys.readouterr().err


def test_build_bad_cxt(tmp_path, capsys):
    bad = tmp_path / "bad.cxt"
    bad.write_text("B\n\n2\n")
    assert cli.main(["build", str(bad)]) == 2
    assert "line 4" in capsys.readouterr().err


def test_build_fcd3_matches_size(tmp_path, capsys):
    path = tmp_path / "fcd3.cxt"
    path.write_text(write_cxt(fcd3_old()))
    assert cli.main(["build", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["nodes"]) == 14


def test_insert_updates_in_place_and_prints_changeset(k2_doc, capsys):
    assert cli.main(["insert", str(k2_doc), "d", "g2"]) == 0
    change = json.loads(capsys.readouterr().out)
    assert change["created"] == {"0": 2, "1": 3}
    assert change["redundant"] is False
    doc = json.loads(k2_doc.read_text())
    assert len(doc["nodes"]) == 4
    assert doc["version"] == 1
    classes = {n["id"]: n["changeClass"] for n in doc["nodes"]}
    assert classes[2] == "generated" and classes[3] == "generated"


def test_insert_extent_from_file(k2_doc, tmp_path, capsys):
    listing = tmp_path / "objs.txt"
    listing.write_text("g1\ng2\n")
    assert cli.main(["insert", str(k2_doc), "e", f"@{listing}"]) == 0
    change = json.loads(capsys.readouterr().out)
    assert change["columnExtent"] == ["g1", "g2"]


def test_insert_empty_extent(k2_doc, capsys):
    assert cli.main(["insert", str(k2_doc), "e", ""]) == 0
    assert json.loads(capsys.readouterr().out)["columnExtent"] == []


def test_insert_name_collision_exits_3(k2_doc, capsys):
    assert cli.main(["insert", str(k2_doc), "a", "g1"]) == 3


def test_insert_unknown_object_exits_2(k2_doc, capsys):
    assert cli.main(["insert", str(k2_doc), "e", "gX"]) == 2


def test_remove_round_trips(k2_doc, capsys):
    before = json.loads(k2_doc.read_text())
    assert cli.main(["insert", str(k2_doc), "d", "g2"]) == 0
    assert cli.main(["remove", str(k2_doc), "d"]) == 0
    capsys.readouterr()
    after = json.loads(k2_doc.read_text())
    strip = lambda doc: [
        {k: v for k, v in node.items() if k != "changeClass"}
        for node in doc["nodes"]]
    assert strip(after) == strip(before)
    assert after["edges"] == before["edges"]
    assert after["seeds"] == before["seeds"]
    assert after["version"] == 2


def test_remove_unknown_exits_2(k2_doc, capsys):
    assert cli.main(["remove", str(k2_doc), "zzz"]) == 2


def test_export_dot(k2_doc, capsys):
    assert cli.main(["export", str(k2_doc), "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph diagram {")
    assert "c1 -> c0;" in out


def test_export_json_round_trip(k2_doc, capsys):
    assert cli.main(["export", str(k2_doc)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert json.loads(k2_doc.read_text()) == doc


def test_verify_clean(capsys):
    assert cli.main(["verify", "--trials", "20", "--seed", "7"]) == 0
    out = capsys.readouterr()
    report = json.loads(out.out)  # stdout must stay pure JSON
    assert report == {"trials": 20, "ok": True, "failures": []}
    assert len(out.err.splitlines()) == 20


def test_verify_zero_trials(capsys):
    assert cli.main(["verify", "--trials", "0"]) == 0
    assert json.loads(capsys.readouterr().out)["trials"] == 0


def test_verify_reports_failure_with_exit_1(monkeypatch, capsys):
    failing = verify.VerifyReport(trials=3, failures=[verify.TrialFailure(
        trial=2, operation="insert", objects=["g1"], attributes=["m1"],
        rows=["."], column_name="n", column_extent=["g1"],
        mismatches=["synthetic"])])
    monkeypatch.setattr(verify, "run_trials",
                        lambda *a, **kw: failing)
    assert cli.main(["verify", "--trials", "3"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is False
    assert report["failures"][0]["rows"] == ["."]


def test_verify_fixed_table(k2_cxt, capsys):
    assert cli.main(["verify", str(k2_cxt), "--random", "5",
                     "--seed", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["trials"] == 5


def test_verify_env_seed_default(monkeypatch, capsys):
    monkeypatch.setenv("LATFOX_SEED", "99")
    assert cli.main(["verify", "--trials", "8"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["verify", "--trials", "8", "--seed", "99"]) == 0
    assert capsys.readouterr().out == first


def test_verify_bad_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("LATFOX_SEED", "not-a-number")
    assert cli.main(["verify", "--trials", "1"]) == 2


def test_bench_json(capsys):
    assert cli.main(["bench", "--size", "10x6", "--ops", "5",
                     "--seed", "3", "--json"]) == 0
    out = capsys.readouterr()
    report = json.loads(out.out)
    assert report["ops"] == 5
    assert report["incremental"]["counters"]["full_enumerations"] == 0
    assert report["rebuild"]["counters"]["full_enumerations"] == 5
    assert len(report["incremental"]["perOp"]) == 5
    assert "speedup" in out.err


def test_bench_quiet_stdout_without_json(capsys):
    assert cli.main(["bench", "--size", "8x5", "--ops", "3",
                     "--seed", "3"]) == 0
    out = capsys.readouterr()
    assert out.out == ""
    assert "bench 8x5" in out.err
