"""Strategies and independent oracles shared by the test modules."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from hypothesis import strategies as st

from specchain.corearith import QQ, ExtensionField, PolyRing, PrimeField, RationalFunctionField

GF7 = PrimeField(7)
GF2T = RationalFunctionField(PrimeField(2), "t")
QI = ExtensionField(QQ, "i", [1, 0, 1])

CORPUS_DIR = Path(str(resources.files("specchain").joinpath("corpus")))


def corpus_docs():
    for path in sorted(CORPUS_DIR.glob("*.json")):
        yield path.stem, json.loads(path.read_text())


def small_ints(lo=-4, hi=4):
    return st.integers(min_value=lo, max_value=hi)


@st.composite
def polynomials(draw, ring: PolyRing, max_terms=4, max_deg=3):
    n = ring.n
    terms = draw(
        st.lists(
            st.tuples(st.tuples(*[st.integers(0, max_deg)] * n), small_ints()),
            max_size=max_terms,
        )
    )
    f = ring.zero()
    F = ring.field
    for mono, c in terms:
        f = f + ring.monomial(list(mono), F.from_int(c))
    return f


# ---------------------------------------------------------------------------
# sympy-based oracles; they share no code with the package


def sympy_groebner(polys, names, order="grevlex", modulus=None):
    import sympy

    gens = sympy.symbols(names)
    exprs = [sympy.sympify(str(f).replace("^", "**"), locals=dict(zip(names, gens))) for f in polys]
    kw = {"modulus": modulus} if modulus else {}
    G = sympy.groebner(exprs, *gens, order=order, **kw)
    return G, gens


def jacobian_edim(relations, names, point, modulus=None) -> int:
    """n - rank of the Jacobian at a rational point: edim of k[X]/I there."""
    import sympy

    gens = sympy.symbols(names)
    loc = dict(zip(names, gens))
    exprs = [sympy.sympify(str(f).replace("^", "**"), locals=loc) for f in relations]
    sub = dict(zip(gens, point))
    rows = [[sympy.diff(e, g).subs(sub) for g in gens] for e in exprs]
    if not rows:
        return len(names)
    if modulus:
        rows = [[int(v) % modulus for v in r] for r in rows]
        return len(names) - _rank_mod(rows, modulus)
    return len(names) - sympy.Matrix(rows).rank()


def _rank_mod(rows, p) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def fraction_rank(rows) -> int:
    rows = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
