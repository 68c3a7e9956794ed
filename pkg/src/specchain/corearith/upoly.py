"""Dense univariate polynomials over a field descriptor.

A polynomial is a tuple of raw coefficients, lowest degree first, with no
trailing zeros.  The empty tuple is the zero polynomial.  Every helper takes
the coefficient field ``F`` explicitly so the same code serves every level of
a field tower.
"""

from __future__ import annotations


def trim(F, a) -> tuple:
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return tuple(a)


def degree(a) -> int:
    return len(a) - 1


def add(F, a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def neg(F, a) -> tuple:
    return tuple(F.neg(c) for c in a)


def sub(F, a, b) -> tuple:
    return add(F, a, neg(F, b))


def scale(F, a, c) -> tuple:
    if F.is_zero(c):
        return ()
    return trim(F, [F.mul(x, c) for x in a])


def mul(F, a, b) -> tuple:
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def divmod_(F, a, b) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = F.inv(b[-1])
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return (), tuple(a)
    q = [F.zero] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv)
        q[k - db] = c
        for j, y in enumerate(b):
            r[k - db + j] = F.sub(r[k - db + j], F.mul(c, y))
    return trim(F, q), trim(F, r[:db])


def rem(F, a, b) -> tuple:
    return divmod_(F, a, b)[1]


def monic(F, a) -> tuple:
    if not a:
        return ()
    inv = F.inv(a[-1])
    return tuple(F.mul(c, inv) for c in a)


def gcd(F, a, b) -> tuple:
    a, b = trim(F, a), trim(F, b)
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def xgcd(F, a, b) -> tuple[tuple, tuple, tuple]:
    """Return (g, s, t) with s*a + t*b = g and g monic."""
    r0, r1 = trim(F, a), trim(F, b)
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return (), (), ()
    inv = F.inv(r0[-1])
    return scale(F, r0, inv), scale(F, s0, inv), scale(F, t0, inv)


def deriv(F, a) -> tuple:
    return trim(F, [F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def evaluate(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def fmt(F, a, var: str) -> str:
    """Render in the polynomial grammar, highest degree first."""
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if F.is_zero(c):
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        parts.append(F.format_term(c, mono))
    return join_terms(parts)


def join_terms(parts: list[str]) -> str:
    """Join signed term strings such as '-2*x' into one expression."""
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        if p.startswith("-"):
            out += " - " + p[1:]
        else:
            out += " + " + p
    return out
