import io
import json
import sys

import pytest

from irredundant.cli import GEN_KINDS, run
from irredundant.corpus import NAMED
from irredundant.dimacs import read_dimacs, write_dimacs
from irredundant.redundancy import (enumerate_ies, has_ies_of_size, is_clause_redundant,
                                    is_clause_useful, is_ies_ids)
from irredundant.conditional import is_clause_cond_redundant, is_formula_cond_redundant
from irredundant.varred import is_clause_var_redundant

COMMANDS = [["check"], ["classify"], ["ies", "--all"], ["unique"], ["minsize"],
            ["varred", "--vars", "1"], ["condred"]]


def call(argv):
    out, err = io.BytesIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def report(argv):
    code, out, err = call(argv + ["--json"])
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def corpus(tmp_path):
    paths = {}
    for name, f in NAMED.items():
        p = tmp_path / f"{name}.cnf"
        p.write_bytes(write_dimacs(f.with_universe(max(f.universe, 1))))
        paths[name] = str(p)
    return paths


def test_check_example1(corpus):
    r = report(["check", corpus["example1"]])
    assert r["result"]["redundant"] is True
    assert r["result"]["redundant_ids"] == [2, 3]
    assert [c["line"] for c in r["clauses"]] == [2, 3, 4, 5]


def test_unique_triple(corpus):
    r = report(["unique", corpus["triple"]])
    assert r["result"]["unique"] is True
    assert r["result"]["ies"] == [0, 1]


def test_ies_all_example1(corpus):
    r = report(["ies", "--all", corpus["example1"]])
    assert r["result"]["ies"] == [[0, 1, 2], [0, 1, 3]]


def test_greedy_order(corpus):
    r = report(["ies", corpus["example1"], "--order", "3,2,1,0"])
    assert r["result"]["ies"] == [[0, 1, 2]]
    assert report(["ies", corpus["example1"]])["result"]["ies"] == [[0, 1, 3]]


def test_classify_sorted_statuses(corpus):
    r = report(["classify", corpus["example1"]])
    assert [c["id"] for c in r["clauses"]] == [0, 1, 2, 3]
    assert [c["status"] for c in r["clauses"]] == ["necessary"] * 2 + ["useful_not_necessary"] * 2
    assert r["result"]["ies_count"] == 2


def test_single_clause_query(corpus):
    r = report(["check", corpus["example1"], "--clause", "2"])
    assert [c["id"] for c in r["clauses"]] == [2]
    assert r["clauses"][0]["redundant"] is True


def test_revise_pi4(corpus, tmp_path):
    g = tmp_path / "g.cnf"
    g.write_text("p cnf 3 1\n-1 0\n")
    r = report(["revise", corpus["pi4"], "--with", str(g)])
    # Π*¬a is equivalent to ¬a
    assert r["result"]["model_count"] == 4
    assert all(m[0] == -1 for m in r["result"]["models"])


def test_report_fields(corpus):
    r = report(["check", corpus["example1"]])
    assert r["schema_version"] == 1
    assert r["command"]["name"] == "check"
    assert len(r["input"]["sha256"]) == 64
    assert set(r) == {"schema_version", "command", "input", "clauses", "result", "timing"}


def test_text_output_is_derived(corpus):
    code, out, _ = call(["check", corpus["example1"]])
    assert code == 0
    text = out.decode()
    assert "redundant_ids: {2 3}" in text
    assert "clause 2 (line 4) {1 3}  redundant=true" in text


@pytest.mark.parametrize("argv", COMMANDS)
def test_deterministic(corpus, argv):
    for path in corpus.values():
        runs = []
        for _ in range(2):
            r = report(argv + [path])
            r.pop("timing")
            runs.append(json.dumps(r, sort_keys=True))
        assert runs[0] == runs[1]


@pytest.mark.parametrize("argv", COMMANDS)
def test_empty_formula(tmp_path, argv):
    p = tmp_path / "empty.cnf"
    p.write_text("p cnf 1 0\n")
    r = report(argv + [str(p)])
    assert r["input"]["clauses"] == 0 and r["clauses"] == []


def test_stdin(monkeypatch, corpus):
    data = open(corpus["example1"], "rb").read()
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(data)))
    r = report(["check", "-"])
    assert r["result"]["redundant_ids"] == [2, 3]


def test_exit_codes(corpus, tmp_path):
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 2 1\n1 -1 0\n")
    assert call(["check", str(bad)])[0] == 2
    assert call(["check", str(tmp_path / "missing.cnf")])[0] == 2
    assert call(["check", corpus["example1"], "--clause", "7"])[0] == 2
    assert call(["varred", corpus["example1"]])[0] == 2
    assert call(["frobnicate"])[0] == 2
    code, out, err = call(["ies", "--all", corpus["exp2"], "--cap", "3"])
    assert code == 3 and out == b"" and "cap" in err
    assert call(["varred", corpus["example1"], "--vars", "1,2", "--cap", "1"])[0] == 3


def test_verdicts_do_not_change_exit_code(corpus):
    assert call(["check", corpus["example1"]])[0] == 0
    assert call(["check", corpus["triple"]])[0] == 0


def _satisfies(model, lits):
    return any(l in model for l in lits)


def test_witnesses_reverify(corpus):
    for name, path in corpus.items():
        f = read_dimacs(path)
        r = report(["check", path, "--witness"])
        for row in r["clauses"]:
            if not row["redundant"]:
                m = set(row["counter_model"])
                assert not _satisfies(m, row["literals"])
                assert all(_satisfies(m, c.lits) for j, c in enumerate(f) if j != row["id"])
        r = report(["classify", path, "--witness"])
        for row in r["clauses"]:
            if "ies_witness" in row:
                assert row["id"] in row["ies_witness"] and is_ies_ids(f, row["ies_witness"])
        for s in report(["ies", "--all", path])["result"]["ies"]:
            assert is_ies_ids(f, s)
        r = report(["condred", path, "--witness"])
        for row in r["clauses"]:
            if "witness_pair" in row:
                w, w2 = (set(m) for m in row["witness_pair"])
                sat = [{j for j, c in enumerate(f) if _satisfies(m, c.lits)} for m in (w, w2)]
                assert sat[0] - sat[1] == {row["id"]}
        r = report(["unique", path, "--witness"])
        for s in r["result"].get("ies_witnesses", []):
            assert is_ies_ids(f, s)


@pytest.mark.parametrize("kind", GEN_KINDS)
def test_gen_manifest(tmp_path, kind):
    out = tmp_path / f"{kind}.cnf"
    r = report(["gen", kind, "--seed", "11", "--out", str(out)])
    man = json.loads((tmp_path / f"{kind}.cnf.json").read_text())
    assert {"fresh_vars", "distinguished", "params", "label", "oracle"} <= set(man)
    assert r["result"]["label"] == man["label"]
    f = read_dimacs(out)
    ids = man["distinguished"]
    label = man["label"]
    if kind == "sat":
        assert is_clause_redundant(f, ids[0]) == label["distinguished_redundant"]
    elif kind == "size":
        assert has_ies_of_size(f, man["params"]["k"]) == label["has_ies_of_size_k"]
    elif kind == "useful":
        assert is_clause_useful(f, ids[0]) == label["distinguished_useful"]
    elif kind == "var":
        assert is_clause_var_redundant(f, ids[0], man["scope"]) == label["distinguished_var_redundant"]
    elif kind == "condclause":
        assert is_clause_cond_redundant(f, ids[0]) == label["distinguished_cond_redundant"]
    elif kind == "condset":
        assert is_formula_cond_redundant(f) == label["formula_cond_redundant"]
    elif kind == "dp":
        assert is_ies_ids(f, [i for i in f.ids() if i not in ids]) == label["small_is_ies"]
    elif kind == "exp":
        assert len(enumerate_ies(f)) == label["ies_count"]
    else:
        assert not any(is_clause_redundant(f, i) for i in f.ids())


def test_gen_from_input_and_stdout(corpus):
    r = report(["gen", "sat", corpus["contradiction"]])
    assert r["result"]["label"] == {"distinguished_redundant": True}
    assert r["result"]["dimacs"].startswith("c generated")
    a = report(["gen", "size", "--seed", "4"])
    b = report(["gen", "size", "--seed", "4"])
    assert a["result"] == b["result"]
