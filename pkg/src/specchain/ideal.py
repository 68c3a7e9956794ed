"""Ideals of polynomial rings and the operations built on Groebner bases."""

from __future__ import annotations

import random

from .corearith.poly import GREVLEX, MonomialOrder, PolyRing, Polynomial
from .errors import ContainmentError, ContextMismatchError, NotPrimeError, NotProperError
from .gb import GroebnerBasis, buchberger, normal_form


def fresh_name(ring: PolyRing, stem: str = "aux") -> str:
    taken = set(ring.names) | set(ring.field.symbols())
    i = 0
    while f"{stem}{i}" in taken:
        i += 1
    return f"{stem}{i}"


class IdealHandle:
    """An ideal given by generators, with reduced Groebner bases cached per order."""

    def __init__(self, ring: PolyRing, gens=()):
        out = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            else:
                g = ring.coerce(g)
            if not g.is_zero():
                out.append(g)
        self.ring = ring
        self.gens: tuple[Polynomial, ...] = tuple(out)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or GREVLEX
        G = self._gb.get(order)
        if G is None:
            G = buchberger(self.gens, order, ring=self.ring)
            self._gb[order] = G
        return G

    def contains(self, f) -> bool:
        if isinstance(f, IdealHandle):
            return all(self.contains(g) for g in f.gens)
        f = self.ring(f) if isinstance(f, str) else self.ring.coerce(f)
        return self.gb().contains(f)

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.gb().reduce(f)

    def is_proper(self) -> bool:
        return not self.gb().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def _check(self, other: IdealHandle):
        if self.ring != other.ring:
            raise ContextMismatchError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        return self.ring == other.ring and self.gb().polys == other.gb().polys

    def __hash__(self):
        return hash((self.ring, tuple(self.gb().polys)))

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, e: int):
        return ideal_power(self, e)

    def __repr__(self):
        return f"Ideal({self.ring!r}, [{', '.join(str(g) for g in self.gens)}])"

    def transport(self, target: PolyRing, rename: dict | None = None) -> IdealHandle:
        return IdealHandle(target, [g.transport(target, rename) for g in self.gens])

    def canonical_gens(self) -> list[Polynomial]:
        """Reduced grevlex basis, the canonical generator list."""
        return list(self.gb().polys)


def ideal(ring: PolyRing, gens) -> IdealHandle:
    return IdealHandle(ring, gens)


def _as_ideal(I):
    if isinstance(I, PrimeSpec):
        return I.ideal
    return I


def ideal_sum(I, J) -> IdealHandle:
    I, J = _as_ideal(I), _as_ideal(J)
    I._check(J)
    return IdealHandle(I.ring, I.gens + J.gens)


def ideal_product(I, J) -> IdealHandle:
    I, J = _as_ideal(I), _as_ideal(J)
    I._check(J)
    return IdealHandle(I.ring, [f * g for f in I.gens for g in J.gens])


def ideal_power(I, e: int) -> IdealHandle:
    I = _as_ideal(I)
    if e < 1:
        raise ValueError("ideal power needs e >= 1")
    out = I
    for _ in range(e - 1):
        out = IdealHandle(I.ring, [f * g for f in out.canonical_gens() for g in I.gens])
    return out


def elimination_order(ring: PolyRing, names) -> MonomialOrder:
    idx = []
    for nm in names:
        if nm not in ring.index:
            raise ContextMismatchError(f"unknown variable {nm!r} in {ring!r}")
        idx.append(ring.index[nm])
    return MonomialOrder.block(idx, GREVLEX, GREVLEX)


def eliminate(I, names) -> IdealHandle:
    """I intersected with the subring on the remaining variables (same ambient ring)."""
    I = _as_ideal(I)
    names = list(names)
    if not names:
        return IdealHandle(I.ring, I.gens)
    order = elimination_order(I.ring, names)
    idx = [I.ring.index[nm] for nm in names]
    G = I.gb(order)
    keep = [g for g in G if all(m[i] == 0 for m in g.terms for i in idx)]
    return IdealHandle(I.ring, keep)


def _with_aux(ring: PolyRing):
    t = fresh_name(ring)
    return ring.extend([t], front=True), t


def intersect(I, J) -> IdealHandle:
    I, J = _as_ideal(I), _as_ideal(J)
    I._check(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return IdealHandle(ring, [])
    T, t = _with_aux(ring)
    tv = T.var(t)
    gens = [tv * f.transport(T) for f in I.gens] + [(1 - tv) * g.transport(T) for g in J.gens]
    E = eliminate(IdealHandle(T, gens), [t])
    return IdealHandle(ring, [g.transport(ring) for g in E.gens])


def _exact_div(g: Polynomial, h: Polynomial) -> Polynomial:
    rem, (q,) = normal_form(g, [h])
    if not rem.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return q


def quotient(I, J) -> IdealHandle:
    """(I : J) = {f : f J in I}."""
    I, J = _as_ideal(I), _as_ideal(J)
    I._check(J)
    ring = I.ring
    out = None
    for h in J.gens:
        part = IdealHandle(ring, [_exact_div(g, h) for g in intersect(I, IdealHandle(ring, [h])).gens])
        out = part if out is None else intersect(out, part)
    if out is None:
        # J = (0): every f qualifies
        return IdealHandle(ring, [ring.one()])
    return IdealHandle(ring, out.canonical_gens())


def saturation(I, J) -> IdealHandle:
    """(I : J^infinity) by iterating ideal quotients to a fixed point."""
    I, J = _as_ideal(I), _as_ideal(J)
    cur = IdealHandle(I.ring, I.canonical_gens())
    while True:
        nxt = quotient(cur, J)
        if nxt == cur:
            return cur
        cur = nxt


def contains(I, f) -> bool:
    return _as_ideal(I).contains(f)


def ideal_equal(I, J) -> bool:
    I, J = _as_ideal(I), _as_ideal(J)
    I._check(J)
    return I.contains(J) and J.contains(I)


def is_proper(I) -> bool:
    return _as_ideal(I).is_proper()


def radical_membership(f: Polynomial, I) -> bool:
    """Rabinowitsch: f in rad(I) iff 1 in I + (1 - t f)."""
    I = _as_ideal(I)
    ring = I.ring
    f = ring.coerce(f)
    T, t = _with_aux(ring)
    gens = [g.transport(T) for g in I.gens] + [1 - T.var(t) * f.transport(T)]
    return IdealHandle(T, gens).gb().is_unit()


def localization_equal_at(Q, P) -> bool:
    """Whether Q and P agree after localizing at the prime P.

    Decided by the annihilator test (Q : P) not contained in P.
    """
    Q, Pi = _as_ideal(Q), _as_ideal(P)
    Q._check(Pi)
    if not Pi.contains(Q):
        raise ContainmentError("containment violated")
    colon = quotient(Q, Pi)
    return any(not Pi.contains(g) for g in colon.gens)


class PrimeSpec:
    """An ideal asserted to be prime, with a seeded randomized sanity check.

    The check multiplies random pairs of elements outside the ideal and
    requires their products to stay outside.  Passing it is evidence,
    not proof.
    """

    def __init__(
        self,
        ideal: IdealHandle,
        asserted: bool = True,
        equidimensional: bool = False,
        seed: int = 0,
        samples: int = 32,
        check: bool = True,
    ):
        if not isinstance(ideal, IdealHandle):
            raise TypeError("PrimeSpec wraps an IdealHandle")
        self.ideal = ideal
        self.asserted = asserted
        self.equidimensional = equidimensional or asserted
        self.seed = seed
        self.samples = samples
        if not ideal.is_proper():
            raise NotProperError("prime must be a proper ideal")
        if asserted and check:
            self.sanity_check()

    @classmethod
    def from_gens(cls, ring: PolyRing, gens, **kw) -> PrimeSpec:
        return cls(IdealHandle(ring, gens), **kw)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    @property
    def gens(self):
        return self.ideal.gens

    def gb(self, order=None) -> GroebnerBasis:
        return self.ideal.gb(order)

    def contains(self, f) -> bool:
        return self.ideal.contains(f)

    def __eq__(self, other):
        if isinstance(other, PrimeSpec):
            return self.ideal == other.ideal
        if isinstance(other, IdealHandle):
            return self.ideal == other
        return NotImplemented

    def __hash__(self):
        return hash(self.ideal)

    def __repr__(self):
        return f"PrimeSpec({self.ideal!r})"

    def _candidates(self, rng: random.Random) -> Polynomial:
        ring = self.ring
        F = ring.field
        pf = F.prime_field()
        n = ring.n
        f = ring.zero()
        for _ in range(rng.randint(1, 3)):
            e = [0] * n
            for _ in range(rng.randint(0, 2)):
                if n:
                    e[rng.randrange(n)] += 1
            c = F.lift(pf.from_int(rng.randint(1, 5) * rng.choice((1, -1))), pf)
            f = f + ring.monomial(e, c)
        return f

    def sanity_check(self) -> None:
        rng = random.Random(self.seed)
        G = self.gb()
        ring = self.ring
        pool = [v + c for v in ring.gens for c in (0, 1, -1, 2, -2)]
        pool = [v for v in pool if not G.reduce(v).is_zero()]
        # cheap deterministic pass over linear pairs before random sampling
        for k, (f, g) in enumerate((a, b) for i, a in enumerate(pool) for b in pool[i:]):
            if k >= 4 * self.samples:
                break
            if G.reduce(f * g).is_zero():
                self.asserted = False
                raise NotPrimeError(f"primality assertion revoked: ({f})*({g}) lies in the ideal")
        done = 0
        attempts = 0
        while done < self.samples and attempts < 8 * self.samples:
            attempts += 1
            if pool and rng.random() < 0.25:
                f = rng.choice(pool)
            else:
                f = self._candidates(rng)
            if pool and rng.random() < 0.25:
                g = rng.choice(pool)
            else:
                g = self._candidates(rng)
            f, g = G.reduce(f), G.reduce(g)
            if f.is_zero() or g.is_zero():
                continue
            done += 1
            if G.reduce(f * g).is_zero():
                self.asserted = False
                raise NotPrimeError(f"primality assertion revoked: ({f})*({g}) lies in the ideal")


def independent_set(I) -> tuple[str, ...]:
    """A largest variable subset U with LT(I) free of monomials supported in U."""
    I = _as_ideal(I)
    G = I.gb(GREVLEX)
    if G.is_unit():
        raise NotProperError("the unit ideal has no dimension")
    n = I.ring.n
    supports = []
    for lm in G.leading_monomials():
        supports.append(frozenset(i for i, e in enumerate(lm) if e))
    from itertools import combinations

    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            Us = set(U)
            if not any(s <= Us for s in supports):
                return tuple(I.ring.names[i] for i in U)
    return ()


def dimension(I) -> int:
    """Krull dimension of k[X]/I from the leading-term ideal."""
    return len(independent_set(I))
