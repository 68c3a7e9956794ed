"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both modules directly in one process.  End-to-end
Groebner timings run in subprocesses because the backend is chosen at
import time (``SPECCHAIN_PURE_PYTHON=1`` forces the fallback).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from specchain import _kernels_py
from specchain.corearith import GREVLEX

try:
    from specchain import _kernels
except ImportError:
    _kernels = None

P = 32003
SYSTEMS = {
    "cyclic4": ["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"],
    "katsura3": ["a + 2*b + 2*c + 2*d - 1", "a^2 + 2*b^2 + 2*c^2 + 2*d^2 - a",
                 "2*a*b + 2*b*c + 2*c*d - b", "b^2 + 2*a*c + 2*b*d - c"],
    "twisted_cubic_lex": ["b - a^2", "c - a^3", "d - a*b"],
}


def _random_poly(rng, n=4, terms=12, deg=4):
    return {tuple(rng.randint(0, deg) for _ in range(n)): rng.randint(1, P - 1) for _ in range(terms)}


def _kernel_cases(seed=1):
    rng = random.Random(seed)
    a, b = _random_poly(rng), _random_poly(rng)
    basis = []
    for _ in range(4):
        d = _random_poly(rng, terms=5, deg=2)
        lm = max(d, key=GREVLEX.key)
        inv = pow(d[lm], -1, P)
        basis.append((lm, {m: v * inv % P for m, v in d.items() if m != lm}))
    f = _random_poly(rng, terms=30, deg=6)
    return {
        "poly_mul": lambda K: K.poly_mul(a, b, P),
        "poly_add": lambda K: K.poly_add(a, b, P),
        "normal_form": lambda K: K.normal_form(f, basis, GREVLEX.negkey, P, False),
    }


def bench_kernels(repeat: int) -> list[dict]:
    rows = []
    for name, fn in _kernel_cases().items():
        row = {"case": name}
        for label, K in (("python", _kernels_py), ("cython", _kernels)):
            if K is None:
                row[label] = None
                continue
            t = min(timeit.repeat(lambda: fn(K), number=50, repeat=repeat)) / 50
            row[label] = t
        rows.append(row)
    return rows


def _inner(repeat: int) -> dict:
    from specchain import BACKEND, PolyRing, PrimeField, QQ, buchberger
    from specchain.corearith import LEX

    out = {"backend": BACKEND}
    for fname, F in (("QQ", QQ), ("GF32003", PrimeField(P))):
        for name, gens in SYSTEMS.items():
            order = LEX if name.endswith("_lex") else GREVLEX
            R = PolyRing(F, ["a", "b", "c", "d"], order)
            polys = [R(g) for g in gens]
            t = min(timeit.repeat(lambda: buchberger(polys, order), number=1, repeat=repeat))
            out[f"{name}/{fname}"] = t
    return out


def bench_end_to_end(repeat: int) -> dict:
    res = {}
    for label, env in (("cython", {}), ("python", {"SPECCHAIN_PURE_PYTHON": "1"})):
        proc = subprocess.run([sys.executable, __file__, "--inner", "--repeat", str(repeat)],
                              capture_output=True, text=True, env={**os.environ, **env}, check=True)
        res[label] = json.loads(proc.stdout)
    return res


def _fmt(t):
    return "      n/a" if t is None else f"{t * 1e3:9.3f}"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--inner", action="store_true", help=argparse.SUPPRESS)
    ns = ap.parse_args(argv)
    if ns.inner:
        print(json.dumps(_inner(ns.repeat)))
        return
    print(f"{'kernel':<28}{'python ms':>10}{'cython ms':>10}{'speedup':>9}")
    for row in bench_kernels(ns.repeat):
        sp = f"{row['python'] / row['cython']:8.1f}x" if row["cython"] else "      n/a"
        print(f"{row['case']:<28}{_fmt(row['python'])} {_fmt(row['cython'])}{sp}")
    e2e = bench_end_to_end(ns.repeat)
    if e2e["cython"]["backend"] != "cython":
        print("compiled extension not available; end-to-end numbers below are both pure Python")
    print(f"\n{'groebner basis':<28}{'python ms':>10}{'cython ms':>10}{'speedup':>9}")
    for key in sorted(k for k in e2e["python"] if k != "backend"):
        tp, tc = e2e["python"][key], e2e["cython"][key]
        print(f"{key:<28}{_fmt(tp)} {_fmt(tc)}{tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
