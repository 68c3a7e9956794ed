"""Groebner bases: normal forms, Buchberger, cofactors, module bases, syzygies."""

from __future__ import annotations

import contextlib
import contextvars
import heapq
import itertools

from . import kernels as K
from .corearith.poly import MonomialOrder, PolyRing, Polynomial
from .errors import ContextMismatchError, StepLimitError

_STEP_LIMIT: contextvars.ContextVar[int | None] = contextvars.ContextVar("gb_step_limit", default=None)


@contextlib.contextmanager
def step_limit(n: int | None):
    """Bound the number of S-pair reductions in every GB computed inside the block."""
    tok = _STEP_LIMIT.set(n)
    try:
        yield
    finally:
        _STEP_LIMIT.reset(tok)


def _check_same_ring(polys, ring=None) -> PolyRing:
    for f in polys:
        if not isinstance(f, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(f).__name__}")
        if ring is None:
            ring = f.ring
        elif f.ring != ring:
            raise ContextMismatchError(f"ring mismatch: {f.ring!r} vs {ring!r}")
    return ring


class GroebnerBasis:
    """A Groebner basis of an ideal for a fixed monomial order.

    ``polys`` is sorted by leading monomial, largest first.  When
    ``reduced`` is set the basis is the unique monic reduced basis.
    """

    def __init__(self, ring: PolyRing, order: MonomialOrder, polys, reduced: bool = True):
        self.ring = ring
        self.order = order
        self.polys = list(polys)
        self.reduced = reduced
        self._kb = []
        for g in self.polys:
            g = g.monic(order)
            lm = g.lm(order)
            tail = dict(g.terms)
            del tail[lm]
            self._kb.append((lm, tail))
        self._lc_inv = [g.ring.field.inv(g.lc(order)) for g in self.polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.polys == other.polys
        )

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(str(g) for g in self.polys)}], {self.order!r})"

    def leading_monomials(self) -> list[tuple]:
        return [lm for lm, _ in self._kb]

    def is_unit(self) -> bool:
        return any(not any(lm) for lm in self.leading_monomials())

    def is_zero_ideal(self) -> bool:
        return not self.polys

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ContextMismatchError(f"ring mismatch: {f.ring!r} vs {self.ring!r}")
        rem, _ = K.normal_form(f.terms, self._kb, self.order.negkey, self.ring.p, False)
        return Polynomial(self.ring, rem)

    def reduce_with_quotients(self, f: Polynomial) -> tuple[Polynomial, list[Polynomial]]:
        if f.ring != self.ring:
            raise ContextMismatchError(f"ring mismatch: {f.ring!r} vs {self.ring!r}")
        rem, quots = K.normal_form(f.terms, self._kb, self.order.negkey, self.ring.p, True)
        out = []
        for q, inv in zip(quots, self._lc_inv):
            out.append(Polynomial(self.ring, K.poly_scale(q, inv, self.ring.p)))
        return Polynomial(self.ring, rem), out

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def self_certify(self) -> bool:
        """True iff every S-polynomial of the basis reduces to zero."""
        p = self.ring.p
        kb = self._kb
        for i, j in itertools.combinations(range(len(kb)), 2):
            s = K.s_poly(kb[i][0], kb[i][1], kb[j][0], kb[j][1], p)
            rem, _ = K.normal_form(s, kb, self.order.negkey, p, False)
            if rem:
                return False
        return True

    def is_reduced(self) -> bool:
        lms = self.leading_monomials()
        for i, g in enumerate(self.polys):
            if not self.ring.field.is_one(g.lc(self.order)):
                return False
            for m in g.terms:
                for j, lm in enumerate(lms):
                    if j != i and K.mono_divides(lm, m):
                        return False
        return True

    def standard_monomials(self, limit: int = 100000) -> list[tuple] | None:
        """Monomials outside the leading-term ideal, or None if there are infinitely many."""
        n = self.ring.n
        lms = self.leading_monomials()
        if self.is_unit():
            return []
        # finite iff every variable has a pure power among the leading monomials
        bounds = []
        for i in range(n):
            pure = [lm[i] for lm in lms if lm[i] and sum(lm) == lm[i]]
            if not pure:
                return None
            bounds.append(min(pure))
        out = []
        for m in itertools.product(*[range(b) for b in bounds]):
            if not any(K.mono_divides(lm, m) for lm in lms):
                out.append(m)
                if len(out) > limit:
                    raise ValueError("too many standard monomials")
        return out


def _as_kernel_basis(G, order):
    if isinstance(G, GroebnerBasis):
        if order is not None and order != G.order:
            raise ContextMismatchError("order mismatch between call and basis")
        return G
    polys = [g for g in G if not g.is_zero()]
    if not polys:
        raise ValueError("cannot infer a ring from an empty divisor list")
    ring = _check_same_ring(polys)
    return GroebnerBasis(ring, order or ring.order, polys, reduced=False)


def normal_form(f: Polynomial, G, order: MonomialOrder | None = None):
    """Divide ``f`` by ``G`` (a GroebnerBasis or a list of polynomials).

    Returns ``(remainder, quotients)`` with ``f = sum(q*g) + remainder``.
    """
    if not isinstance(G, GroebnerBasis) and not [g for g in G if not g.is_zero()]:
        return f, [f.ring.zero() for _ in G]
    B = _as_kernel_basis(G, order)
    if f.ring != B.ring:
        raise ContextMismatchError(f"ring mismatch: {f.ring!r} vs {B.ring!r}")
    rem, quots = B.reduce_with_quotients(f)
    if isinstance(G, GroebnerBasis):
        return rem, quots
    # realign quotients with the caller's list, zeros included
    it = iter(quots)
    return rem, [f.ring.zero() if g.is_zero() else next(it) for g in G]


# ---------------------------------------------------------------------------
# Buchberger core with optional cofactor tracking


def _cof_comb(terms_list, p):
    """Sum of (mono, coeff, cofactor) contributions."""
    out = None
    for mono, c, cof in terms_list:
        part = [K.poly_mul_term(x, mono, c, p) for x in cof]
        out = part if out is None else [K.poly_add(a, b, p) for a, b in zip(out, part)]
    return out


def _cof_minus_quots(cof, quots, cofs, p):
    out = list(cof)
    for q, ck in zip(quots, cofs):
        if not q:
            continue
        for j in range(len(out)):
            if ck[j]:
                out[j] = K.poly_sub(out[j], K.poly_mul(q, ck[j], p), p)
    return out


def _gb_core(ring: PolyRing, order: MonomialOrder, inputs: list[dict], track: bool, max_steps):
    p = ring.p
    F = ring.field
    key = order.key
    negkey = order.negkey
    m_in = len(inputs)
    if max_steps is None:
        max_steps = _STEP_LIMIT.get()

    lms: list[tuple] = []
    tails: list[dict] = []
    cofs: list[list] = []
    active: list[int] = []
    live: dict[tuple, tuple] = {}
    heap: list = []
    steps = 0

    def kernel_basis():
        return [(lms[i], tails[i]) for i in active]

    def add_element(terms, cof):
        lm = max(terms, key=key)
        inv = F.inv(terms[lm])
        terms = K.poly_scale(terms, inv, p)
        if track:
            cof = [K.poly_scale(x, inv, p) for x in cof]
        del terms[lm]
        h = len(lms)
        lms.append(lm)
        tails.append(terms)
        cofs.append(cof)
        update(h)

    def update(h):
        lh = lms[h]
        cand = [(g, K.mono_lcm(lh, lms[g])) for g in active]
        D = []
        for k, (g1, l1) in enumerate(cand):
            if K.mono_coprime(lh, lms[g1]):
                D.append((g1, l1, True))
                continue
            dominated = any(K.mono_divides(l2, l1) for _, l2 in cand[k + 1 :]) or any(
                K.mono_divides(l2, l1) for _, l2, _ in D
            )
            if not dominated:
                D.append((g1, l1, False))
        # chain criterion on existing pairs
        for pair, lcm in list(live.items()):
            g1, g2 = pair
            if (
                K.mono_divides(lh, lcm)
                and K.mono_lcm(lms[g1], lh) != lcm
                and K.mono_lcm(lh, lms[g2]) != lcm
            ):
                del live[pair]
        for g, l, coprime in D:
            if coprime:
                continue
            pair = (g, h)
            live[pair] = l
            heapq.heappush(heap, (sum(l), key(l), g, h))
        active[:] = [g for g in active if not K.mono_divides(lh, lms[g])] + [h]

    for idx, t in enumerate(inputs):
        if not t:
            continue
        cof = None
        if track:
            cof = [{} for _ in range(m_in)]
            cof[idx] = {(0,) * ring.n: F.one}
        kb = kernel_basis()
        rem, quots = K.normal_form(t, kb, negkey, p, track)
        if rem:
            if track:
                cof = _cof_minus_quots(cof, quots, [cofs[i] for i in active], p)
            add_element(rem, cof)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in live:
            continue
        lcm = live.pop((i, j))
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise StepLimitError(f"Groebner basis step budget of {max_steps} S-pair reductions exceeded")
        s = K.s_poly(lms[i], tails[i], lms[j], tails[j], p)
        kb = kernel_basis()
        rem, quots = K.normal_form(s, kb, negkey, p, track)
        if rem:
            cof = None
            if track:
                ci = K.mono_div(lcm, lms[i])
                cj = K.mono_div(lcm, lms[j])
                cof = _cof_comb([(ci, F.one, cofs[i]), (cj, F.neg(F.one), cofs[j])], p)
                cof = _cof_minus_quots(cof, quots, [cofs[k] for k in active], p)
            add_element(rem, cof)

    # interreduce the minimal basis
    final = sorted(active, key=lambda i: key(lms[i]), reverse=True)
    polys = []
    fcofs = []
    for i in final:
        others = [k for k in final if k != i]
        kb = [(lms[k], tails[k]) for k in others]
        rem, quots = K.normal_form(tails[i], kb, negkey, p, track)
        terms = dict(rem)
        terms[lms[i]] = F.one
        polys.append(Polynomial(ring, terms))
        if track:
            fcofs.append(_cof_minus_quots(cofs[i], quots, [cofs[k] for k in others], p))
    return polys, fcofs, steps


def buchberger(gens, order: MonomialOrder | None = None, max_steps: int | None = None, ring=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    ring = _check_same_ring(gens, ring)
    if ring is None:
        raise ValueError("cannot infer a ring from an empty generator list")
    order = order or ring.order
    polys, _, _ = _gb_core(ring, order, [g.terms for g in gens], False, max_steps)
    return GroebnerBasis(ring, order, polys, reduced=True)


def groebner_with_cofactors(gens, order: MonomialOrder | None = None, max_steps: int | None = None, ring=None):
    """Reduced basis G together with C such that G[j] = sum(C[j][i] * gens[i])."""
    gens = list(gens)
    ring = _check_same_ring(gens, ring)
    if ring is None:
        raise ValueError("cannot infer a ring from an empty generator list")
    order = order or ring.order
    polys, cofs, _ = _gb_core(ring, order, [g.terms for g in gens], True, max_steps)
    C = [[Polynomial(ring, c) for c in row] for row in cofs]
    return GroebnerBasis(ring, order, polys, reduced=True), C


# ---------------------------------------------------------------------------
# Modules over the polynomial ring, position-over-term


class ModuleVector:
    """Element of a free module R^r; positions with smaller index rank higher."""

    __slots__ = ("ring", "coords", "order_tag")

    def __init__(self, ring: PolyRing, coords, order_tag: str = "pot"):
        coords = tuple(ring.coerce(c) for c in coords)
        self.ring = ring
        self.coords = coords
        self.order_tag = order_tag

    @property
    def arity(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def lead(self, order: MonomialOrder):
        for i, c in enumerate(self.coords):
            if not c.is_zero():
                return i, c.lm(order)
        return None

    def __add__(self, o):
        return ModuleVector(self.ring, [a + b for a, b in zip(self.coords, o.coords)])

    def __sub__(self, o):
        return ModuleVector(self.ring, [a - b for a, b in zip(self.coords, o.coords)])

    def scale(self, f: Polynomial) -> ModuleVector:
        return ModuleVector(self.ring, [f * c for c in self.coords])

    def dot(self, row) -> Polynomial:
        acc = self.ring.zero()
        for a, g in zip(self.coords, row):
            acc = acc + a * g
        return acc

    def __eq__(self, o):
        return isinstance(o, ModuleVector) and self.ring == o.ring and self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _check_arity(vectors) -> tuple[PolyRing, int]:
    if not vectors:
        raise ValueError("empty vector list")
    ring = vectors[0].ring
    r = vectors[0].arity
    for v in vectors:
        if v.arity != r:
            raise ContextMismatchError(f"arity mismatch: {v.arity} vs {r}")
        if v.ring != ring:
            raise ContextMismatchError("ring mismatch among module vectors")
    return ring, r


def _vec_monic(v: ModuleVector, order) -> ModuleVector:
    pos, _ = v.lead(order)
    inv = v.ring.field.inv(v.coords[pos].lc(order))
    return ModuleVector(v.ring, [c.scale(inv) for c in v.coords])


def module_normal_form(v: ModuleVector, basis: list[ModuleVector], order: MonomialOrder) -> ModuleVector:
    """Full reduction of ``v`` by monic module elements, position by position."""
    ring = v.ring
    coords = list(v.coords)
    by_pos: dict[int, list[ModuleVector]] = {}
    for b in basis:
        pos, _ = b.lead(order)
        by_pos.setdefault(pos, []).append(b)
    for pos in range(len(coords)):
        bs = by_pos.get(pos)
        if not bs or coords[pos].is_zero():
            continue
        kb = []
        for b in bs:
            lm = b.coords[pos].lm(order)
            tail = dict(b.coords[pos].terms)
            del tail[lm]
            kb.append((lm, tail))
        rem, quots = K.normal_form(coords[pos].terms, kb, order.negkey, ring.p, True)
        coords[pos] = Polynomial(ring, rem)
        for q, b in zip(quots, bs):
            if not q:
                continue
            qp = Polynomial(ring, q)
            for j in range(pos + 1, len(coords)):
                if not b.coords[j].is_zero():
                    coords[j] = coords[j] - qp * b.coords[j]
    return ModuleVector(ring, coords)


def _s_vector(a: ModuleVector, b: ModuleVector, order) -> ModuleVector | None:
    pa, ma = a.lead(order)
    pb, mb = b.lead(order)
    if pa != pb:
        return None
    lcm = K.mono_lcm(ma, mb)
    ring = a.ring
    one = ring.field.one
    ta = K.mono_div(lcm, ma)
    tb = K.mono_div(lcm, mb)
    return ModuleVector(ring, [x.mul_term(ta, one) - y.mul_term(tb, one) for x, y in zip(a.coords, b.coords)])


def module_buchberger(vectors, order: MonomialOrder | None = None, max_steps: int | None = None) -> list[ModuleVector]:
    """Reduced Groebner basis of a submodule of R^r under position-over-term."""
    vectors = list(vectors)
    ring, r = _check_arity(vectors)
    order = order or ring.order
    if max_steps is None:
        max_steps = _STEP_LIMIT.get()
    basis: list[ModuleVector] = []
    pairs: list[tuple[int, int]] = []
    for v in vectors:
        v = module_normal_form(v, basis, order)
        if not v.is_zero():
            v = _vec_monic(v, order)
            pairs.extend((i, len(basis)) for i in range(len(basis)))
            basis.append(v)
    steps = 0
    while pairs:
        i, j = pairs.pop(0)
        s = _s_vector(basis[i], basis[j], order)
        if s is None:
            continue
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise StepLimitError(f"module basis step budget of {max_steps} exceeded")
        s = module_normal_form(s, basis, order)
        if not s.is_zero():
            s = _vec_monic(s, order)
            pairs.extend((k, len(basis)) for k in range(len(basis)))
            basis.append(s)
    # minimalize and interreduce
    keep = []
    for i, b in enumerate(basis):
        pi, mi = b.lead(order)
        dominated = False
        for j, c in enumerate(basis):
            if j == i:
                continue
            pj, mj = c.lead(order)
            if pj == pi and K.mono_divides(mj, mi) and (mj != mi or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(b)
    out = []
    for i, b in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        pos, lm = b.lead(order)
        head = ModuleVector(ring, [ring.monomial(lm) if k == pos else ring.zero() for k in range(r)])
        out.append(head + module_normal_form(b - head, others, order))
    out.sort(key=lambda v: _pot_key(v, order), reverse=True)
    return out


def _pot_key(v: ModuleVector, order):
    pos, m = v.lead(order)
    return (-pos, order.key(m))


def module_self_certify(basis: list[ModuleVector], order: MonomialOrder) -> bool:
    for a, b in itertools.combinations(basis, 2):
        s = _s_vector(a, b, order)
        if s is not None and not module_normal_form(s, basis, order).is_zero():
            return False
    return True


def module_contains(basis: list[ModuleVector], v: ModuleVector, order: MonomialOrder) -> bool:
    return module_normal_form(v, basis, order).is_zero()


# ---------------------------------------------------------------------------
# Syzygies


def syzygies(gens, certify: bool = False, ring=None) -> list[ModuleVector]:
    """Generators of the syzygy module of ``gens`` via Schreyer's construction.

    With ``certify`` the result is compared against the elimination route
    (a position-over-term module basis of the vectors (g_i | e_i)) and an
    AssertionError is raised if the two modules differ.
    """
    gens = list(gens)
    ring = _check_same_ring(gens, ring)
    m = len(gens)
    if m == 0:
        return []
    zero = ring.zero()
    out: list[ModuleVector] = []
    nz = [i for i, g in enumerate(gens) if not g.is_zero()]
    for i in range(m):
        if gens[i].is_zero():
            out.append(ModuleVector(ring, [ring.one() if k == i else zero for k in range(m)]))
    if nz:
        sub = [gens[i] for i in nz]
        G, C = groebner_with_cofactors(sub, ring.order, ring=ring)
        t = len(G)
        order = G.order

        def lift(gcoords):
            # G-coordinates -> coordinates on the nonzero gens -> full arity
            acc = [zero] * len(sub)
            for j, a in enumerate(gcoords):
                if a.is_zero():
                    continue
                for i in range(len(sub)):
                    if not C[j][i].is_zero():
                        acc[i] = acc[i] + a * C[j][i]
            full = [zero] * m
            for i, v in zip(nz, acc):
                full[i] = v
            return full

        # S-pair relations among the basis elements
        kb = G._kb
        for a, b in itertools.combinations(range(t), 2):
            la, lb = kb[a][0], kb[b][0]
            lcm = K.mono_lcm(la, lb)
            ta, tb = K.mono_div(lcm, la), K.mono_div(lcm, lb)
            s = G[a].mul_term(ta, ring.field.one) - G[b].mul_term(tb, ring.field.one)
            rem, quots = G.reduce_with_quotients(s)
            assert rem.is_zero()
            coords = [-q for q in quots]
            coords[a] = coords[a] + ring.monomial(ta)
            coords[b] = coords[b] - ring.monomial(tb)
            v = ModuleVector(ring, lift(coords))
            if not v.is_zero():
                out.append(v)
        # e_i - D_i * C where gens[i] = sum D_ij G_j
        for ii, i in enumerate(nz):
            rem, D = G.reduce_with_quotients(gens[i])
            assert rem.is_zero()
            full = lift(D)
            full[i] = full[i] - ring.one()
            v = ModuleVector(ring, [-c for c in full])
            if not v.is_zero():
                out.append(v)
    # dedupe while preserving order
    seen = set()
    uniq = []
    for v in out:
        if v.coords not in seen:
            seen.add(v.coords)
            uniq.append(v)
    for v in uniq:
        if not v.dot(gens).is_zero():
            raise AssertionError("emitted vector is not a syzygy")
    if certify:
        other = syzygies_by_elimination(gens, ring=ring)
        order = ring.order
        if uniq:
            B1 = module_buchberger(uniq, order)
        else:
            B1 = []
        for v in other:
            if not module_contains(B1, v, order):
                raise AssertionError("Schreyer syzygies miss an elimination syzygy")
        B2 = module_buchberger(other, order) if other else []
        for v in uniq:
            if not module_contains(B2, v, order):
                raise AssertionError("Schreyer syzygy not found by elimination")
    return uniq


def syzygies_by_elimination(gens, ring=None) -> list[ModuleVector]:
    """Syzygies from a module basis of (g_i | e_i) with the first slot eliminated."""
    gens = list(gens)
    ring = _check_same_ring(gens, ring)
    m = len(gens)
    zero, one = ring.zero(), ring.one()
    vecs = [ModuleVector(ring, [g] + [one if k == i else zero for k in range(m)]) for i, g in enumerate(gens)]
    basis = module_buchberger(vecs, ring.order)
    return [ModuleVector(ring, v.coords[1:]) for v in basis if v.coords[0].is_zero()]
