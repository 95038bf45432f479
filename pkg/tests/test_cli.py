import json
import subprocess
import sys

import pytest

from hopfchi.cli import main
from hopfchi.derived.building_sets import BuildingSet
from hopfchi.derived.paths import PathFamily
from hopfchi.documents import KINDS, ObjectDocument, document_for, loads, parse_document
from hopfchi.errors import ValidationError
from hopfchi.hypergraph import Hypergraph

QUARTIC_DOC = {"kind": "hypergraph", "vertices": ["1", "2", "3", "4"], "edges": [["1", "2", "3"], ["2", "3", "4"]]}

SAMPLES = {
    "hypergraph": QUARTIC_DOC,
    "simple-hypergraph": {"kind": "simple-hypergraph", "vertices": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"]]},
    "graph": {"kind": "graph", "vertices": ["1", "2", "3"], "edges": [["1", "2"], ["1", "3"], ["2", "3"]]},
    "graph-ripsew": {"kind": "graph-ripsew", "vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]},
    "hypergraphic-polytope": {"kind": "hypergraphic-polytope", "vertices": ["1", "2", "3", "4"], "edges": [["1", "2", "3"], ["1", "4"]]},
    "simplicial-complex": {
        "kind": "simplicial-complex",
        "vertices": ["1", "2", "3"],
        "faces": [["1"], ["2"], ["3"], ["1", "2"], ["1", "3"], ["2", "3"], ["1", "2", "3"]],
    },
    "building-set": {"kind": "building-set", "vertices": ["1", "2"], "connected-sets": [["1"], ["2"], ["1", "2"]]},
    "partition": {"kind": "partition", "vertices": ["1", "2", "3"], "blocks": [["1", "2"], ["3"]]},
    "paths": {"kind": "paths", "vertices": ["a", "b", "c"], "words": [["a", "b", "c"]]},
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def doc_file(tmp_path):
    def write(data, name="doc.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data) if not isinstance(data, str) else data)
        return str(path)

    return write


# -- documents ---------------------------------------------------------------------


def test_every_kind_has_a_sample():
    assert set(SAMPLES) == set(KINDS)


@pytest.mark.parametrize("kind", sorted(SAMPLES))
def test_document_round_trip(kind):
    doc = parse_document(SAMPLES[kind])
    again = loads(doc.dumps())
    assert again == doc
    assert document_for(kind, doc.build()) == doc


def test_document_canonicalizes_order():
    doc = parse_document({"kind": "hypergraph", "vertices": ["2", "1"], "edges": [["2", "1"], ["1"]]})
    assert doc.body == (("1",), ("1", "2"))
    assert doc.build() == Hypergraph("12", ["1", "12"])
    paths = parse_document({"kind": "paths", "vertices": ["a", "b", "c"], "words": [["c", "a", "b"]]})
    assert paths.build() == PathFamily("abc", ["cab"])


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"kind": "nope", "vertices": []},
        {"kind": "hypergraph", "vertices": "12"},
        {"kind": "hypergraph", "vertices": ["1", "1"]},
        {"kind": "hypergraph", "vertices": ["1"], "edges": [["2"]]},
        {"kind": "hypergraph", "vertices": ["1"], "edges": [[]]},
        {"kind": "graph", "vertices": ["1", "2", "3"], "edges": [["1", "2", "3"]]},
        {"kind": "simplicial-complex", "vertices": ["1", "2"], "faces": [["1", "2"]]},
        {"kind": "building-set", "vertices": ["1", "2"], "connected-sets": [["1"]]},
        {"kind": "partition", "vertices": ["1", "2"], "blocks": [["1"]]},
        {"kind": "paths", "vertices": ["a", "b"], "words": [["a"]]},
    ],
)
def test_invalid_documents(data):
    with pytest.raises(ValidationError):
        parse_document(data)


def test_invalid_json():
    with pytest.raises(ValidationError):
        loads("{not json")


def test_document_for_building_set():
    B = BuildingSet("12", [["1"], ["2"], ["1", "2"]])
    assert document_for("building-set", B) == ObjectDocument("building-set", ("1", "2"), (("1",), ("1", "2"), ("2",)))


# -- chi -----------------------------------------------------------------------------


def test_chi_quartic(capsys, doc_file):
    code, out, _ = run(capsys, "chi", doc_file(QUARTIC_DOC), "--eval", "2", "--eval", "-1", "--method", "both")
    report = json.loads(out)
    assert code == 0
    assert report["polynomial"] == ["0", "-5/6", "5/2", "-8/3", "1"]
    values = {row["n"]: row for row in report["evaluations"]}
    assert values[2]["value"] == "3"
    assert values[-1]["value"] == "7" and values[-1]["antipode_route"] == "7"
    assert all(report["certificate"].values())


@pytest.mark.parametrize("kind", sorted(SAMPLES))
def test_chi_every_kind_both_methods(capsys, doc_file, kind):
    code, out, _ = run(capsys, "chi", doc_file(SAMPLES[kind]), "--method", "both", "--eval", "-1")
    assert code == 0
    assert json.loads(out)["certificate"]["oracle_matches_formula"]


def test_chi_graph_is_chromatic(capsys, doc_file):
    code, out, _ = run(capsys, "chi", doc_file(SAMPLES["graph"]))
    assert json.loads(out)["polynomial"] == ["0", "2", "-3", "1"]


def test_chi_is_deterministic(capsys, doc_file):
    path = doc_file(QUARTIC_DOC)
    first = run(capsys, "chi", path, "--eval", "-2", "--jobs", "3")[1]
    second = run(capsys, "chi", path, "--eval", "-2")[1]
    assert first == second


def test_chi_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "hopfchi.cli", "chi", "-", "--eval", "2"],
        input=json.dumps(QUARTIC_DOC),
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["evaluations"][0]["value"] == "3"


def test_pretty_output(capsys, doc_file):
    code, out, _ = run(capsys, "chi", doc_file(QUARTIC_DOC), "--pretty")
    assert code == 0
    assert "polynomial_text: n^4 - 8/3*n^3 + 5/2*n^2 - 5/6*n" in out


# -- antipode and orientations -----------------------------------------------------------


def test_antipode_both(capsys, doc_file):
    code, out, _ = run(capsys, "antipode", doc_file(QUARTIC_DOC), "--format", "both")
    report = json.loads(out)
    assert code == 0
    assert report["takeuchi_raw_terms"] == 75
    assert report["certificate"] == {"no_collisions": True, "takeuchi_equals_cancellation_free": True}
    assert report["takeuchi"] == report["cancellation_free"]


def test_antipode_rejects_other_kinds(capsys, doc_file):
    code, _, err = run(capsys, "antipode", doc_file(SAMPLES["graph"]))
    assert code == 2 and "antipode" in err


def test_orientations(capsys, doc_file):
    code, out, _ = run(capsys, "orientations", doc_file(QUARTIC_DOC), "--count-colorings", "2")
    report = json.loads(out)
    assert code == 0
    assert len(report["rows"]) == 49
    assert report["discrete_acyclic_count"] == 7
    only = json.loads(run(capsys, "orientations", doc_file(QUARTIC_DOC), "--acyclic-only")[1])
    assert len(only["rows"]) == report["acyclic_count"]
    strict_total = sum(int(r["strict"]) for r in report["rows"] if r["acyclic"])
    assert strict_total == 2**4


# -- verify and exit codes -----------------------------------------------------------------


@pytest.mark.parametrize("kind", sorted(SAMPLES))
def test_verify_quick_every_kind(capsys, doc_file, kind):
    code, out, _ = run(capsys, "verify", doc_file(SAMPLES[kind]))
    assert code == 0 and json.loads(out)["passed"]


def test_verify_full(capsys, doc_file):
    code, out, _ = run(capsys, "verify", doc_file(QUARTIC_DOC), "--level", "full")
    assert code == 0 and json.loads(out)["passed"]


def test_invalid_input_exit_code(capsys, doc_file):
    bad = {"kind": "building-set", "vertices": ["1", "2", "3"], "connected-sets": [["1"], ["2"], ["3"], ["1", "2"], ["2", "3"]]}
    code, _, err = run(capsys, "chi", doc_file(bad))
    assert code == 2 and "union" in err
    assert run(capsys, "chi", doc_file("{oops"))[0] == 2
    assert run(capsys, "chi", "/nonexistent/file.json")[0] == 2
    assert run(capsys, "chi", doc_file(QUARTIC_DOC), "--character", "zeta9")[0] == 2


def test_budget_exit_code(capsys, doc_file, monkeypatch):
    code, _, err = run(capsys, "chi", doc_file(QUARTIC_DOC), "--budget", "10")
    assert code == 3 and "budget" in err
    monkeypatch.setenv("HOPFCHI_BUDGET", "10")
    assert run(capsys, "orientations", doc_file(QUARTIC_DOC))[0] == 3


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "0.1.0" in capsys.readouterr().out


def test_disagreement_exit_code(capsys, doc_file, monkeypatch):
    import hopfchi.cli as cli
    from hopfchi.errors import DisagreementError

    def broken(*args, **kwargs):
        raise DisagreementError("routes differ")

    monkeypatch.setattr(cli, "takeuchi_antipode", broken)
    code, _, err = run(capsys, "antipode", doc_file(QUARTIC_DOC), "--format", "both")
    assert code == 4 and "disagreement" in err
