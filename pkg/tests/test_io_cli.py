import io as stdio
import json
import subprocess
import sys
from pathlib import Path

import pytest

from diptych import cli, corpus, io
from diptych import functor as fn
from diptych import groupoid as gpd
from diptych import morita

DATA = Path(__file__).resolve().parent.parent / "data"
FILES = sorted(DATA.glob("*.json"))


def run(*argv):
    out, err = stdio.StringIO(), stdio.StringIO()
    code = cli.run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def load_any(path):
    doc = io.load_json(path)
    if "K" in doc:
        return "fraction", io.fraction_from_json(doc, path.parent)
    if "object_map" in doc:
        return "functor", io.functor_from_json(doc, path.parent)
    return "groupoid", io.groupoid_from_json(doc, path.parent)


def test_data_matches_corpus(tmp_path):
    corpus.dump(tmp_path)
    fresh = sorted(p.name for p in tmp_path.glob("*.json"))
    assert fresh == [p.name for p in FILES]
    for name in fresh:
        assert (tmp_path / name).read_text() == (DATA / name).read_text(), name


@pytest.mark.parametrize("path", FILES, ids=lambda p: p.stem)
def test_round_trip(path):
    kind, obj = load_any(path)
    if kind == "groupoid":
        again = io.groupoid_from_json(json.loads(io.dumps(io.groupoid_to_json(obj))))
        assert again == obj
        assert io.groupoid_to_json(again) == io.groupoid_to_json(obj)
    elif kind == "functor":
        again = io.functor_from_json(json.loads(io.dumps(io.functor_to_json(obj))))
        assert again == obj
    else:
        again = io.fraction_from_json(json.loads(io.dumps(io.fraction_to_json(obj))))
        assert again.k == obj.k and again.p == obj.p and again.q == obj.q


def test_validate_output_reloads(tmp_path):
    for path in FILES:
        kind, _ = load_any(path)
        if kind != "groupoid":
            continue
        code, out, _ = run("--json", "validate", path)
        assert code == 0
        target = tmp_path / path.name
        target.write_text(io.dumps(json.loads(out)["groupoid"]))
        assert run("validate", target)[0] == 0
        assert io.groupoid_from_json(io.load_json(target)) == io.groupoid_from_json(io.load_json(path))


@pytest.mark.parametrize("argv", [
    ["classify", "z2.json"], ["orbits", "fix2.json"], ["nerve", "banal2.json", "--level", "2"],
    ["exactness", "z3.json", "--max", "3"], ["classify-functor", "functor_fold.json"],
    ["square-groupoid", "z2.json"], ["holograph", "functor_z2_to_point.json"],
    ["morita", "banal3.json", "point.json"], ["fraction", "validate", "fraction_identity_z2.json"],
])
def test_json_reports_are_byte_stable(argv):
    argv = [str(DATA / a) if a.endswith(".json") else a for a in argv]
    first = run(*argv, "--json")
    second = run("--json", *argv)
    assert first[0] == 0 and first == second
    assert first[1].endswith("\n")
    json.loads(first[1])


def test_classify_z2_flags():
    code, out, _ = run("--json", "classify", DATA / "z2.json")
    flags = json.loads(out)["flags"]
    assert code == 0
    assert flags["godement"] is False and flags["plurigroup"] is True
    assert flags["s_transitive"] is True


def test_morita_with_witness(tmp_path):
    target = tmp_path / "span.json"
    code, out, _ = run("morita", DATA / "banal3.json", DATA / "point.json", "--witness", target)
    assert code == 0 and "Morita equivalent" in out
    fr = io.fraction_from_json(io.load_json(target))
    assert morita.is_morita_fraction(fr)
    assert fr.source == io.groupoid_from_json(io.load_json(DATA / "banal3.json"))


def test_diptych_check_finset():
    code, out, _ = run("diptych-check", "--instance", "finset", "--cap", "3")
    assert code == 0 and out.strip().endswith("0 failures")


def test_fraction_pipeline(tmp_path):
    reduced = tmp_path / "red.json"
    code, out, _ = run("fraction", "reduce", DATA / "fraction_z2_to_point.json", "--out", reduced)
    assert code == 0 and "after 0 steps" in out
    composite = tmp_path / "comp.json"
    code, _, _ = run("fraction", "compose", DATA / "fraction_point_banal2.json",
                     DATA / "fraction_banal2_point.json", "--out", composite)
    assert code == 0
    fr = io.fraction_from_json(io.load_json(composite))
    assert morita.is_morita_fraction(fr)


def test_holograph_out(tmp_path):
    target = tmp_path / "hol.json"
    assert run("holograph", DATA / "functor_point_to_z2.json", "--out", target)[0] == 0
    fr = io.fraction_from_json(io.load_json(target))
    assert fr.q.source == fr.k and fr.is_irreducible
    assert fn.classify_functor(fr.q).is_s_equivalence


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def bad_functor(tmp_path):
    doc = io.load_json(DATA / "functor_z2_to_point.json")
    doc["source"], doc["target"] = str(DATA / "z3.json"), str(DATA / "z2.json")
    doc["object_map"], doc["arrow_map"] = {"*": "*"}, {"0": "e", "1": "s", "2": "s"}
    return write(tmp_path, "bad_functor.json", json.dumps(doc))


def test_exit_code_matrix(tmp_path):
    broken = write(tmp_path, "broken.json", "{not json")
    lacking = write(tmp_path, "lacking.json", json.dumps({"objects": ["a"]}))
    doc = io.groupoid_to_json(gpd.cyclic(3))
    doc["compose"] = [[r[0], r[1], doc["arrows"][0]["id"]] for r in doc["compose"]]
    axiom = write(tmp_path, "axiom.json", json.dumps(doc))
    matrix = [
        (["validate", DATA / "s3.json"], 0),
        (["morita", DATA / "z2.json", DATA / "z3.json"], 1),
        (["morita", DATA / "banal2.json", DATA / "point.json"], 0),
        (["exactness", DATA / "banal2.json", "--max", "3"], 0),
        (["validate", broken], 2),
        (["validate", lacking], 2),
        (["validate", axiom], 2),
        (["validate", tmp_path / "missing.json"], 2),
        (["classify-functor", bad_functor(tmp_path)], 2),
        (["nerve", DATA / "z2.json"], 2),
        (["frobnicate"], 2),
        (["fraction", "compose", DATA / "fraction_z2_to_point.json"], 2),
        (["diptych-check", "--instance", "finset", "--cap", "-1"], 2),
        (["fraction", "compose", DATA / "fraction_z2_to_point.json",
          DATA / "fraction_z2_to_point.json"], 2),
    ]
    for argv, expected in matrix:
        code, out, err = run(*argv)
        assert code == expected, (argv, err)
        if expected == 2:
            assert out == "" and err.count("\n") == 1 and err.startswith("error")


def test_internal_errors_exit_three(monkeypatch):
    def boom(g):
        raise AssertionError("classification disagrees with itself")
    monkeypatch.setattr(gpd, "classify", boom)
    code, out, err = run("classify", DATA / "z2.json")
    assert code == 3 and err.startswith("internal error")


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diptych.cli", "--json", "orbits",
                           str(DATA / "fix2.json")], capture_output=True, text=True)
    assert proc.returncode == 0
    orders = sorted(o["isotropy_order"] for o in json.loads(proc.stdout)["orbits"])
    assert orders == [1, 2]


def test_functor_file_references_are_relative(tmp_path):
    f = corpus.functors()["fold"]
    for name, g in (("src.json", f.source), ("tgt.json", f.target)):
        write(tmp_path, name, io.dumps(io.groupoid_to_json(g)))
    doc = io.functor_to_json(f)
    doc["source"], doc["target"] = "src.json", "tgt.json"
    path = write(tmp_path, "fold.json", json.dumps(doc))
    assert io.functor_from_json(io.load_json(path), tmp_path) == f
    code, out, _ = run("--json", "classify-functor", path)
    assert code == 0 and json.loads(out)["class"] == fn.classify_functor(f).to_json()
