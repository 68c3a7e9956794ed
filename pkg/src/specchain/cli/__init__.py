"""Command-line interface: ``specchain run FILE`` and ``specchain corpus``.

Reports are JSON lines, one object per command.  Exit status is 0 when
every command succeeds with no refuted verdict, 2 when some verdict is
refuted, and 1 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from ..errors import SpecchainError
from ..theorems import CONFIRMED, HYPOTHESIS_NOT_MET, REFUTED
from .problem import (
    PROBLEM_SCHEMA,
    REPORT_SCHEMA,
    SCHEMA_VERSION,
    InputError,
    Problem,
    execute,
    load_path,
    validate,
)

EXIT_OK, EXIT_INPUT, EXIT_REFUTED = 0, 1, 2


def _corpus_dir(directory=None) -> Path:
    if directory is not None:
        return Path(directory)
    return Path(str(resources.files("specchain").joinpath("corpus")))


def list_corpus(directory=None) -> list[str]:
    d = _corpus_dir(directory)
    return sorted(p.stem for p in d.glob("*.json"))


def _run_file(args) -> tuple[str, list[dict]]:
    path, seed = args
    try:
        doc = load_path(path)
    except (InputError, OSError) as exc:
        return Path(path).stem, [{"schema": SCHEMA_VERSION, "command": "load", "status": "error",
                                  "error": {"type": type(exc).__name__, "message": str(exc)}}]
    return Path(path).stem, execute(doc, seed=seed)


def summarize(reports) -> dict:
    counts = {CONFIRMED: 0, HYPOTHESIS_NOT_MET: 0, REFUTED: 0}
    errors = 0
    for r in reports:
        if r["status"] != "ok":
            errors += 1
        elif r["command"].startswith("verify "):
            counts[r["data"]["verdict"]] += 1
    return {
        "confirmed": counts[CONFIRMED],
        "hypothesis_not_met": counts[HYPOTHESIS_NOT_MET],
        "refuted": counts[REFUTED],
        "errors": errors,
    }


def run_corpus(directory=None, *, seed: int = 0, parallel: bool = False) -> dict:
    """Run every bundled problem file; results are ordered by file name."""
    names = list_corpus(directory)
    d = _corpus_dir(directory)
    jobs = [(str(d / f"{n}.json"), seed) for n in names]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_file, jobs))
    else:
        results = [_run_file(j) for j in jobs]
    results.sort(key=lambda t: t[0])
    instances = [{"name": n, "reports": reps} for n, reps in results]
    summary = summarize(r for _, reps in results for r in reps)
    return {"schema": SCHEMA_VERSION, "summary": summary, "instances": instances}


def dumps(obj, indent: int | None = None) -> str:
    return json.dumps(obj, sort_keys=True, indent=indent, ensure_ascii=False)


def exit_code(reports) -> int:
    s = summarize(reports)
    if s["refuted"]:
        return EXIT_REFUTED
    if s["errors"]:
        return EXIT_INPUT
    return EXIT_OK


def _cmd_run(ns) -> int:
    try:
        doc = load_path(ns.file)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    reports = execute(doc, seed=ns.seed, order=ns.order, max_steps=ns.max_steps)
    for r in reports:
        print(dumps(r, ns.json_indent))
        if r["status"] == "error":
            print(f"error: {r['command']}: {r['error']['message']}", file=sys.stderr)
    return exit_code(reports)


def _cmd_corpus(ns) -> int:
    if ns.list:
        print(dumps(list_corpus(ns.dir), ns.json_indent))
        return EXIT_OK
    result = run_corpus(ns.dir, seed=ns.seed, parallel=ns.parallel)
    print(dumps(result, ns.json_indent))
    s = result["summary"]
    if s["refuted"]:
        return EXIT_REFUTED
    return EXIT_INPUT if s["errors"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="specchain", description="Local invariants and chain formulas for affine algebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for primality sanity sampling")
    common.add_argument("--json-indent", type=int, default=None)
    sub = ap.add_subparsers(dest="cmd", required=True)
    run = sub.add_parser("run", parents=[common], help="run the commands of a problem file")
    run.add_argument("file")
    run.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")
    run.add_argument("--max-steps", type=int, default=None, help="Groebner step budget; exceeding it is an error")
    run.set_defaults(func=_cmd_run)
    corpus = sub.add_parser("corpus", parents=[common], help="run or list the bundled corpus")
    corpus.add_argument("--list", action="store_true")
    corpus.add_argument("--dir", default=None, help="use another corpus directory")
    corpus.add_argument("--parallel", action="store_true")
    corpus.set_defaults(func=_cmd_corpus)
    return ap


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    return ns.func(ns)


__all__ = [
    "main",
    "run_corpus",
    "list_corpus",
    "summarize",
    "execute",
    "validate",
    "Problem",
    "PROBLEM_SCHEMA",
    "REPORT_SCHEMA",
    "SpecchainError",
]
