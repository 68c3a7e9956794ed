import json
import os
import subprocess
import sys

import jsonschema
import pytest

from helpers import CORPUS_DIR, corpus_docs
from specchain.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_REFUTED,
    dumps,
    execute,
    exit_code,
    list_corpus,
    main,
    run_corpus,
)
from specchain.cli.problem import PROBLEM_SCHEMA, REPORT_SCHEMA, validate

CUSP_FILE = str(CORPUS_DIR / "cusp.json")


def _lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def _doc(commands, **extra):
    doc = {
        "schema": "specchain/1",
        "field": "QQ",
        "algebras": {
            "R": {"vars": ["a", "b"], "relations": ["b^2 - a^3"], "domain": True},
            "C": {"poly_ext": "R", "vars": ["x"]},
        },
        "primes": {"O": {"algebra": "R", "gens": ["a", "b"]}, "P": {"algebra": "C", "gens": ["a", "b", "x"]}},
        "commands": commands,
    }
    doc.update(extra)
    return doc


def test_cusp_edim_report(capsys):
    assert main(["run", CUSP_FILE]) == EXIT_OK
    reports = _lines(capsys.readouterr().out)
    edims = [r["data"] for r in reports if r["command"].startswith("edim")]
    assert {"edim": 2, "dim": 1, "cdim": 1}.items() <= edims[0].items()


def test_thm_p1_report():
    (rep,) = execute(_doc([{"op": "verify", "tag": "thm_p1", "algebra": "C", "prime": "P"}]))
    assert rep["status"] == "ok"
    assert rep["data"]["verdict"] == "confirmed"
    assert rep["data"]["lhs"] == 3 and rep["data"]["rhs"] == [2, 1]


def test_malformed_polynomial_exit_and_offset(tmp_path, capsys):
    doc = _doc([{"op": "dim", "algebra": "R"}])
    doc["algebras"]["R"]["relations"] = ["b^2 - a^^3"]
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(doc))
    assert main(["run", str(f)]) == EXIT_INPUT
    captured = capsys.readouterr()
    assert "offset" in captured.err
    (rep,) = _lines(captured.out)
    assert rep["status"] == "error" and "offset" in rep["error"]["message"]


def test_invalid_json_exit(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text('{"schema": "specchain/1",')
    assert main(["run", str(f)]) == EXIT_INPUT
    assert "offset" in capsys.readouterr().err


def test_schema_errors_are_path_addressed():
    doc = _doc([{"op": "verify", "tag": "no_such_tag", "algebra": "R", "prime": "O"}])
    msgs = validate(doc, PROBLEM_SCHEMA)
    assert msgs and any("commands/0/tag" in m for m in msgs)
    (rep,) = execute(doc)
    assert rep["status"] == "error"


def test_unknown_names_are_input_errors():
    (rep,) = execute(_doc([{"op": "edim", "algebra": "R", "prime": "missing"}]))
    assert rep["status"] == "error"
    assert exit_code([rep]) == EXIT_INPUT


def test_refuted_verdict_exit_code():
    fake = {"schema": "specchain/1", "command": "verify x", "status": "ok", "data": {"verdict": "refuted"}}
    assert exit_code([fake]) == EXIT_REFUTED


def test_step_budget_is_an_error(tmp_path, capsys):
    doc = _doc([{"op": "gb", "algebra": "C"}, {"op": "edim", "algebra": "C", "prime": "P"}])
    f = tmp_path / "tight.json"
    f.write_text(json.dumps(doc))
    assert main(["run", str(f), "--max-steps", "0"]) == EXIT_INPUT
    assert any(r["status"] == "error" for r in _lines(capsys.readouterr().out))


def test_gb_order_flag(tmp_path, capsys):
    doc = _doc([{"op": "gb", "algebra": "R"}])
    f = tmp_path / "gb.json"
    f.write_text(json.dumps(doc))
    main(["run", str(f), "--order", "lex"])
    (rep,) = _lines(capsys.readouterr().out)
    assert rep["data"]["order"] == "lex" and rep["data"]["self_certified"]


@pytest.mark.parametrize("name,doc", list(corpus_docs()), ids=lambda v: v if isinstance(v, str) else "")
def test_corpus_files_validate_and_reports_round_trip(name, doc):
    assert validate(doc, PROBLEM_SCHEMA) == []
    for rep in execute(doc):
        jsonschema.validate(rep, REPORT_SCHEMA)
        assert rep["status"] == "ok", rep
        assert json.loads(dumps(rep)) == rep


def test_list_corpus_contents():
    names = list_corpus()
    assert {"cusp", "cusp_tensor_cusp", "inseparable_char2"} <= set(names)


def test_empty_corpus_dir(tmp_path):
    res = run_corpus(tmp_path)
    assert res["instances"] == []
    assert res["summary"] == {"confirmed": 0, "hypothesis_not_met": 0, "refuted": 0, "errors": 0}


def test_corpus_summary_has_no_refutations():
    s = run_corpus()["summary"]
    assert s["refuted"] == 0 and s["errors"] == 0
    assert s["confirmed"] > 0 and s["hypothesis_not_met"] > 0


def test_corpus_deterministic_and_parallel_merge():
    a = dumps(run_corpus())
    assert dumps(run_corpus()) == a
    assert dumps(run_corpus(parallel=True)) == a


def test_no_floats_in_reports():
    def walk(v):
        assert not isinstance(v, float)
        if isinstance(v, dict):
            for x in v.values():
                walk(x)
        elif isinstance(v, list):
            for x in v:
                walk(x)

    walk(run_corpus())


def _cli(*args, env=None):
    return subprocess.run([sys.executable, "-m", "specchain.cli", *args], capture_output=True, text=True,
                          env={**os.environ, **(env or {})}, timeout=600)


def test_module_entry_point_and_pure_python_backend():
    compiled = _cli("corpus")
    pure = _cli("corpus", env={"SPECCHAIN_PURE_PYTHON": "1"})
    assert compiled.returncode == pure.returncode == EXIT_OK
    assert compiled.stdout == pure.stdout
    listed = _cli("corpus", "--list")
    assert "inseparable_char2" in json.loads(listed.stdout)
