"""Acceptance suite.

Each test prints one ``PASS`` or ``FAIL`` line for its criterion and the
lines are repeated in the terminal summary.  Run it alone with

    pytest tests/test_acceptance.py -v

or as a script: ``python tests/test_acceptance.py``.
"""

import json
import random
import sys
import time

import pytest

from helpers import corpus_docs
from specchain.algebra import poly_extension, present
from specchain.cli import dumps, run_corpus
from specchain.cli.problem import Problem
from specchain.corearith import QQ
from specchain.gb import buchberger
from specchain.localinv import (
    MAXIMAL_PATH,
    SYZYGY_PATH,
    cdim_local,
    edim_local,
    krull_dim,
    local_dim,
    mu_image_rank,
)
from specchain.theorems import (
    CONFIRMED,
    HYPOTHESIS_NOT_MET,
    check_inequalities,
    verify_cor_r2,
    verify_cor_s2,
    verify_lemma_s11,
    verify_prop_f1,
    verify_thm_p1,
    verify_thm_r1,
    verify_thm_s1,
)

RESULTS: list[str] = []


def record(n: int, title: str, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _problems():
    out = {}
    for name, doc in corpus_docs():
        out[name] = (doc, Problem(doc, seed=0))
    return out


PROBLEMS = _problems()


def _primes_of(provenances=None):
    for name, (doc, prob) in PROBLEMS.items():
        for pname, P in prob.primes.items():
            A = prob.algebras[doc["primes"][pname]["algebra"]]
            if provenances is None or A.provenance in provenances:
                yield f"{name}:{pname}", A, P


# 1 ---------------------------------------------------------------------------


def test_criterion_1_gb_self_certification():
    ideals = []
    for name, (doc, prob) in PROBLEMS.items():
        for aname, A in prob.algebras.items():
            if not A.relations.is_zero():
                ideals.append((f"{name}:{aname}", A.ring, list(A.relations.gens)))
        for pname, P in prob.primes.items():
            ideals.append((f"{name}:{pname}", P.ring, list(P.gens)))
    fields = {ring.field.describe() for _, ring, _ in ideals}
    t0 = time.perf_counter()
    bad = [label for label, ring, gens in ideals if not buchberger(gens, ring=ring).self_certify()]
    elapsed = time.perf_counter() - t0
    kinds = {"QQ": any(f == "QQ" for f in fields),
             "GF(p)": any(f.startswith("GF(") and "(t)" not in f for f in fields),
             "GF(2)(t)": any("GF(2)(t)" in f for f in fields),
             "extension": any("/" in f or "[" in f for f in fields)}
    ok = not bad and len(ideals) >= 12 and all(kinds.values()) and elapsed < 5.0
    record(1, "Groebner self-certification", ok,
           f"{len(ideals)} ideals, fields {sorted(fields)}, failures {bad}, {elapsed:.2f}s < 5s")


# 2 ---------------------------------------------------------------------------


def test_criterion_2_cusp_invariants():
    A = present(QQ, ["x", "y"], ["y^2 - x^3"], domain=True)
    got = []
    for gens in (["x", "y"], ["x - 1", "y - 1"]):
        P = A.prime(gens)
        got.append((local_dim(A, P), edim_local(A, P), cdim_local(A, P)))
    record(2, "cusp invariants", got == [(1, 2, 1), (1, 1, 0)], f"origin and smooth point (dim, edim, cdim) = {got}")


# 3 ---------------------------------------------------------------------------

BASES = {
    "cusp": (["b^2 - a^3"], lambda s: (s * s, s ** 3)),
    "node": (["b^2 - a^2*(a + 1)"], lambda s: (s * s - 1, s ** 3 - s)),
    "plane": ([], None),
}


def _random_p1_instances(seed: int, count: int):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        base = rng.choice(sorted(BASES))
        rels, param = BASES[base]
        R = present(QQ, ["a", "b"], rels, domain=True, name=base)
        C = poly_extension(R, ["x"])
        if param is None:
            a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        else:
            a, b = param(rng.randint(-2, 2))
        gens = [f"a - ({a})", f"b - ({b})"]
        top = rng.choice(["none", "linear", "quadratic"])
        if top == "linear":
            gens.append(f"x - ({rng.randint(-2, 2)})")
        elif top == "quadratic":
            gens.append(f"x^2 - {rng.choice([2, 3, 5])}")
        out.append((f"{base}{gens}", C, C.prime(gens)))
    return out


def test_criterion_3_thm_p1():
    instances = list(_primes_of(("poly-ext",)))
    instances += _random_p1_instances(seed=20240601, count=20)
    t0 = time.perf_counter()
    bad = []
    for label, C, P in instances:
        rep = verify_thm_p1(C, P)
        if rep.verdict != CONFIRMED or rep.lhs != rep.rhs_total:
            bad.append((label, rep.lhs, rep.rhs_total))
    elapsed = time.perf_counter() - t0
    ok = not bad and len(instances) >= 20 and elapsed < 60.0
    record(3, "polynomial special chain for edim", ok,
           f"{len(instances)} instances, mismatches {bad}, {elapsed:.2f}s < 60s")


# 4 ---------------------------------------------------------------------------


def test_criterion_4_tensor_corpus():
    names = ("tensor_corpus", "cusp_tensor_cusp")
    inst = [t for t in _primes_of(("tensor",)) if t[0].split(":")[0] in names]
    bad = []
    for label, C, P in inst:
        f1, s11 = verify_prop_f1(C, P), verify_lemma_s11(C, P)
        agree = (f1.lhs, f1.rhs_total) == (s11.lhs, s11.rhs_total)
        if f1.verdict != CONFIRMED or s11.verdict != CONFIRMED or not agree:
            bad.append((label, f1.verdict, s11.verdict, agree))
    has_cc = any(label == "cusp_tensor_cusp:origin_pair" for label, _, _ in inst)
    record(4, "fibre formula and fibre-sum lemma on the tensor corpus", not bad and len(inst) >= 8 and has_cc,
           f"{len(inst)} instances, problems {bad}")


# 5 ---------------------------------------------------------------------------


def test_criterion_5_scalar_extensions():
    sep = [t for t in _primes_of(("scalar_extension",)) if t[0].startswith("separable_extensions")]
    bad = []
    for label, C, P in sep:
        for rep in (verify_thm_s1(C, P), verify_cor_s2(C, P)):
            if rep.verdict != CONFIRMED:
                bad.append((label, rep.tag, rep.verdict))
    doc, prob = PROBLEMS["inseparable_char2"]
    C, P = prob.algebras["KA"], prob.primes["P"]
    s1, s2 = verify_thm_s1(C, P), verify_cor_s2(C, P)
    char2 = (s1.verdict, s1.defect, s2.verdict, s2.lhs, s2.rhs_total)
    ok = not bad and len(sep) >= 2 and char2 == (HYPOTHESIS_NOT_MET, 1, HYPOTHESIS_NOT_MET, 1, 0)
    record(5, "separable scalar extensions and the char-2 counterexample", ok,
           f"{len(sep)} separable instances, problems {bad}; char 2: s1 {s1.verdict} defect {s1.defect}, "
           f"cdim {s2.lhs} vs {s2.rhs_total}")


# 6 ---------------------------------------------------------------------------


def test_criterion_6_residually_separable_tensors():
    doc, prob = PROBLEMS["cusp_tensor_cusp"]
    cc, P = prob.algebras["cc"], prob.primes["origin_pair"]
    cs, Q = prob.algebras["cs"], prob.primes["cs_origin"]
    r1 = verify_thm_r1(cc, P)
    r2 = verify_cor_r2(cc, P)
    r2s = verify_cor_r2(cs, Q)
    got = [(r.lhs, [v for _, v in r.rhs_components], r.verdict) for r in (r1, r2, r2s)]
    want = [(4, [2, 2, 0], CONFIRMED), (2, [1, 1], CONFIRMED), (1, [1, 0], CONFIRMED)]
    record(6, "tensor edim and cdim additivity", got == want, f"{got}")


# 7 ---------------------------------------------------------------------------


def test_criterion_7_mu_paths():
    cases = [(label, A, P) for label, A, P in _primes_of() if krull_dim(P) == 0]
    bad = []
    for label, A, P in cases:
        fast = mu_image_rank(A.relations, P, MAXIMAL_PATH)
        slow = mu_image_rank(A.relations, P, SYZYGY_PATH)
        if fast != slow:
            bad.append((label, fast, slow))
    record(7, "mu path agreement", not bad and len(cases) >= 10, f"{len(cases)} maximal primes, disagreements {bad}")


# 8 ---------------------------------------------------------------------------


def test_criterion_8_inequalities():
    inst = list(_primes_of(("tensor", "scalar_extension")))
    bad = []
    for label, C, P in inst:
        rep = check_inequalities(C, P)
        if rep.verdict != CONFIRMED:
            bad.append((label, [n for n, ok in rep.checks if not ok]))
    record(8, "inequality suite", not bad and bool(inst), f"{len(inst)} instances, violations {bad}")


# 9 ---------------------------------------------------------------------------


def test_criterion_9_determinism():
    a = dumps(run_corpus())
    b = dumps(run_corpus())
    summary = json.loads(a)["summary"]
    record(9, "deterministic corpus run", a == b, f"{len(a)} bytes, summary {summary}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
