"""Pure-Python hot kernels.

Polynomials here are plain dicts ``{exponent tuple: coefficient}`` with no
zero coefficients.  ``p > 0`` means coefficients are ints reduced mod p;
``p == 0`` means coefficients are field objects supporting ``+ - *``,
unary minus and truthiness.  ``_kernels.pyx`` mirrors this module exactly.
"""

from heapq import heapify, heappop, heappush
from operator import le

BACKEND = "python"


def mono_mul(a, b):
    return tuple([x + y for x, y in zip(a, b)])


def mono_div(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_divides(a, b):
    return all(map(le, a, b))


def mono_coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def mono_degree(a):
    return sum(a)


def poly_add(a, b, p):
    out = dict(a)
    if p:
        for m, c in b.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    else:
        for m, c in b.items():
            if m in out:
                v = out[m] + c
                if v:
                    out[m] = v
                else:
                    del out[m]
            else:
                out[m] = c
    return out


def poly_neg(a, p):
    if p:
        return {m: (p - c) % p for m, c in a.items()}
    return {m: -c for m, c in a.items()}


def poly_sub(a, b, p):
    return poly_add(a, poly_neg(b, p), p)


def poly_scale(a, c, p):
    if p:
        c %= p
        if not c:
            return {}
        return {m: (v * c) % p for m, v in a.items()}
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def poly_mul_term(a, mono, c, p):
    if p:
        c %= p
        if not c:
            return {}
        return {tuple([x + y for x, y in zip(m, mono)]): (v * c) % p for m, v in a.items()}
    if not c:
        return {}
    return {tuple([x + y for x, y in zip(m, mono)]): v * c for m, v in a.items()}


def poly_shift(a, mono):
    return {tuple([x + y for x, y in zip(m, mono)]): v for m, v in a.items()}


def poly_mul(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = tuple([x + y for x, y in zip(ma, mb)])
            if m in out:
                v = out[m] + ca * cb
                if p:
                    v %= p
                if v:
                    out[m] = v
                else:
                    del out[m]
            else:
                v = ca * cb
                if p:
                    v %= p
                if v:
                    out[m] = v
    return out


def s_poly(lm_f, tail_f, lm_g, tail_g, p):
    """S-polynomial of two monic polynomials given as (leading monomial, tail)."""
    lcm = mono_lcm(lm_f, lm_g)
    a = poly_shift(tail_f, mono_div(lcm, lm_f))
    b = poly_shift(tail_g, mono_div(lcm, lm_g))
    return poly_sub(a, b, p)


def normal_form(terms, basis, negkey, p, track):
    """Fully reduce ``terms`` by ``basis``.

    ``basis`` is a list of ``(lm, tail)`` pairs of monic polynomials.
    ``negkey`` maps a monomial to a tuple whose ascending order is the
    descending monomial order.  Returns ``(remainder, quotients)``;
    ``quotients`` is None unless ``track`` is true.
    """
    work = dict(terms)
    heap = [(negkey(m), m) for m in work]
    heapify(heap)
    rem = {}
    quots = [{} for _ in basis] if track else None
    nb = len(basis)
    while heap:
        _, m = heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        i = 0
        while i < nb:
            if all(map(le, basis[i][0], m)):
                break
            i += 1
        if i == nb:
            rem[m] = c
            continue
        lm, tail = basis[i]
        q = tuple([x - y for x, y in zip(m, lm)])
        if track:
            qd = quots[i]
            if q in qd:
                v = qd[q] + c
                if p:
                    v %= p
                if v:
                    qd[q] = v
                else:
                    del qd[q]
            else:
                qd[q] = c
        for mt, ct in tail.items():
            mm = tuple([x + y for x, y in zip(mt, q)])
            d = c * ct
            if mm in work:
                v = work[mm] - d
                if p:
                    v %= p
                if v:
                    work[mm] = v
                else:
                    del work[mm]
            else:
                v = (-d) % p if p else -d
                if v:
                    work[mm] = v
                    heappush(heap, (negkey(mm), mm))
    return rem, quots
