"""The compiled and pure-Python kernels must agree on every input."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specchain import _kernels_py as py
from specchain.corearith import GREVLEX, LEX

cy = pytest.importorskip("specchain._kernels")

P = 32003
N = 3

monos = st.tuples(*[st.integers(0, 3)] * N)


def polys(p):
    coeff = st.integers(1, p - 1) if p else st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)
    return st.dictionaries(monos, coeff, max_size=6)


def test_backends_are_distinct():
    assert py.BACKEND == "python"
    assert cy.BACKEND == "cython"


@pytest.mark.parametrize("p", [0, P])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_arith_agrees(p, data):
    a = data.draw(polys(p))
    b = data.draw(polys(p))
    m = data.draw(monos)
    for name in ("poly_add", "poly_sub", "poly_mul"):
        assert getattr(py, name)(a, b, p) == getattr(cy, name)(a, b, p)
    assert py.poly_neg(a, p) == cy.poly_neg(a, p)
    c = 3 if p else Fraction(3, 2)
    assert py.poly_mul_term(a, m, c, p) == cy.poly_mul_term(a, m, c, p)
    assert py.poly_shift(a, m) == cy.poly_shift(a, m)
    assert py.mono_lcm(m, m) == cy.mono_lcm(m, m)


def _monic_basis(p, raw, order):
    out = []
    for d in raw:
        if not d:
            continue
        lm = max(d, key=order.key)
        c = d[lm]
        inv = pow(c, -1, p) if p else 1 / c
        tail = {m: (v * inv) % p if p else v * inv for m, v in d.items() if m != lm}
        out.append((lm, tail))
    return out


@pytest.mark.parametrize("p", [0, P])
@pytest.mark.parametrize("order", [LEX, GREVLEX], ids=repr)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_normal_form_agrees(p, order, data):
    f = data.draw(polys(p))
    basis = _monic_basis(p, data.draw(st.lists(polys(p), min_size=1, max_size=3)), order)
    r1, q1 = py.normal_form(f, basis, order.negkey, p, True)
    r2, q2 = cy.normal_form(f, basis, order.negkey, p, True)
    assert r1 == r2
    assert q1 == q2
    # no remainder term is divisible by a leading monomial
    for m in r1:
        assert not any(py.mono_divides(lm, m) for lm, _ in basis)


@pytest.mark.parametrize("p", [0, P])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_s_poly_agrees(p, data):
    f, g = (data.draw(polys(p)) for _ in range(2))
    basis = _monic_basis(p, [f, g], GREVLEX)
    if len(basis) < 2:
        return
    (lf, tf), (lg, tg) = basis
    assert py.s_poly(lf, tf, lg, tg, p) == cy.s_poly(lf, tf, lg, tg, p)
