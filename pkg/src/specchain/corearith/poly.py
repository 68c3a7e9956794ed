"""Sparse multivariate polynomials and monomial orders."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .. import kernels as K
from ..errors import ContextMismatchError, FieldError
from .fields import Field, FieldElement
from . import upoly

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class MonomialOrder:
    """A monomial order given by a sort key on exponent tuples.

    ``key(m1) < key(m2)`` iff ``m1 < m2``.  Block orders compare the
    exponents at ``front`` first (by ``front_order``) and break ties on the
    remaining positions (by ``back_order``).
    """

    def __init__(self, kind: str, front: tuple = (), front_order=None, back_order=None):
        self.kind = kind
        self.front = tuple(sorted(front))
        self.front_order = front_order
        self.back_order = back_order
        if kind == "lex":
            self.key = _lex_key
        elif kind == "grevlex":
            self.key = _grevlex_key
        elif kind == "block":
            if front_order is None or back_order is None:
                raise ValueError("block order needs front and back orders")
            self.key = self._block_key
            self._back_cache: dict[int, tuple] = {}
        else:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.negkey = lru_cache(maxsize=1 << 18)(self._negkey)

    @classmethod
    def block(cls, front, front_order=None, back_order=None) -> MonomialOrder:
        return cls("block", tuple(front), front_order or GREVLEX, back_order or GREVLEX)

    def _back(self, n: int) -> tuple:
        b = self._back_cache.get(n)
        if b is None:
            fs = set(self.front)
            b = self._back_cache[n] = tuple(i for i in range(n) if i not in fs)
        return b

    def _block_key(self, m):
        f = self.front_order.key(tuple([m[i] for i in self.front]))
        b = self.back_order.key(tuple([m[i] for i in self._back(len(m))]))
        return f + b

    def _negkey(self, m):
        return tuple([-x for x in self.key(m)])

    def _ident(self):
        if self.kind == "block":
            return ("block", self.front, self.front_order._ident(), self.back_order._ident())
        return (self.kind,)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        if self.kind == "block":
            return f"block({list(self.front)}, {self.front_order!r}, {self.back_order!r})"
        return self.kind

    @staticmethod
    def named(name: str) -> MonomialOrder:
        if name == "lex":
            return LEX
        if name == "grevlex":
            return GREVLEX
        raise ValueError(f"unknown monomial order {name!r}")


def _lex_key(m):
    return m


def _grevlex_key(m):
    return (sum(m),) + tuple([-e for e in reversed(m)])


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


class PolyRing:
    """k[x_1, ..., x_n] with named variables and a default monomial order."""

    def __init__(self, field: Field, names, order: MonomialOrder = GREVLEX):
        names = tuple(names)
        for nm in names:
            if not isinstance(nm, str) or not _NAME.match(nm):
                raise ValueError(f"invalid variable name {nm!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        clash = set(names) & set(field.symbols())
        if clash:
            raise ValueError(f"variable names {sorted(clash)} clash with field symbols")
        self.field = field
        self.names = names
        self.n = len(names)
        self.order = order
        self.index = {nm: i for i, nm in enumerate(names)}
        self.p = field.kernel_modulus
        self._zero_mono = (0,) * self.n

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.field == other.field and self.names == other.names

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field.describe()}[{', '.join(self.names)}]"

    def with_order(self, order: MonomialOrder) -> PolyRing:
        return PolyRing(self.field, self.names, order)

    def extend(self, names, front: bool = False) -> PolyRing:
        names = tuple(names)
        return PolyRing(self.field, names + self.names if front else self.names + names, self.order)

    # constructors
    def _make(self, terms: dict) -> Polynomial:
        return Polynomial(self, terms)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {self._zero_mono: c})

    def monomial(self, exps, c=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {exps: c})

    def var(self, name: str) -> Polynomial:
        if name not in self.index:
            raise ContextMismatchError(f"unknown variable {name!r} in {self!r}")
        e = [0] * self.n
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    @property
    def gens(self) -> list[Polynomial]:
        return [self.var(nm) for nm in self.names]

    def from_dict(self, terms: dict) -> Polynomial:
        F = self.field
        out = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.n:
                raise ValueError(f"exponent vector {m} has wrong length")
            c = F.coerce(c)
            if not F.is_zero(c):
                out[m] = c
        return Polynomial(self, out)

    def coerce(self, x) -> Polynomial:
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            if not x.ring.names and self.field.contains_field(x.ring.field):
                return self.const(FieldElement(x.ring.field, x.constant_coeff()))
            raise ContextMismatchError(f"polynomial from {x.ring!r} used in {self!r}")
        return self.const(x)

    def parse(self, text: str) -> Polynomial:
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def __call__(self, x) -> Polynomial:
        if isinstance(x, str):
            return self.parse(x)
        return self.coerce(x)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to raw coefficients."""

    __slots__ = ("ring", "terms", "_hash", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None
        self._lead = None

    # basic structure
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_mono in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_mono, self.ring.field.zero)

    def coeff(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree(self, var: str) -> int:
        i = self._var_index(var)
        return max((m[i] for m in self.terms), default=-1)

    def support(self) -> set[str]:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.names[i])
        return used

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[tuple]:
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def _leading(self, order):
        order = order or self.ring.order
        if self._lead is not None and self._lead[0] == order:
            return self._lead[1]
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        self._lead = (order, m)
        return m

    def lm(self, order: MonomialOrder | None = None) -> tuple:
        return self._leading(order)

    def lc(self, order: MonomialOrder | None = None):
        return self.terms[self._leading(order)]

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self.terms:
            return self
        c = self.lc(order)
        F = self.ring.field
        if F.is_one(c):
            return self
        return Polynomial(self.ring, K.poly_scale(self.terms, F.inv(c), self.ring.p))

    # arithmetic
    def _coerce(self, o):
        if isinstance(o, Polynomial):
            if o.ring != self.ring:
                return self.ring.coerce(o)
            return o
        if isinstance(o, (int, Fraction, FieldElement)):
            return self.ring.const(o)
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return Polynomial(self.ring, K.poly_add(self.terms, o.terms, self.ring.p))

    __radd__ = __add__

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return Polynomial(self.ring, K.poly_sub(self.terms, o.terms, self.ring.p))

    def __rsub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial(self.ring, K.poly_neg(self.terms, self.ring.p))

    def __mul__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        if o.is_constant():
            return self.scale(o.constant_coeff())
        return Polynomial(self.ring, K.poly_mul(self.terms, o.terms, self.ring.p))

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        c = self.ring.field.coerce(c)
        return Polynomial(self.ring, K.poly_scale(self.terms, c, self.ring.p))

    def mul_term(self, mono, c) -> Polynomial:
        return Polynomial(self.ring, K.poly_mul_term(self.terms, tuple(mono), c, self.ring.p))

    def __truediv__(self, o):
        """Division by a nonzero constant."""
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        if not o.is_constant() or o.is_zero():
            raise FieldError("zero divisor in field" if o.is_zero() else "division by a non-constant")
        return self.scale(self.ring.field.inv(o.constant_coeff()))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, o):
        if isinstance(o, Polynomial):
            return self.ring == o.ring and self.terms == o.terms
        if isinstance(o, (int, Fraction, FieldElement)) and not isinstance(o, bool):
            try:
                return self.terms == self.ring.const(o).terms
            except (FieldError, ContextMismatchError):
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution
    def _var_index(self, var) -> int:
        if isinstance(var, int):
            if not 0 <= var < self.ring.n:
                raise ContextMismatchError(f"variable index {var} out of range")
            return var
        if var not in self.ring.index:
            raise ContextMismatchError(f"unknown variable {var!r} in {self.ring!r}")
        return self.ring.index[var]

    def derivative(self, var) -> Polynomial:
        i = self._var_index(var)
        F = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if not e:
                continue
            v = F.mul(c, F.from_int(e))
            if F.is_zero(v):
                continue
            mm = list(m)
            mm[i] = e - 1
            out[tuple(mm)] = v
        return Polynomial(self.ring, out)

    def homomorphism(self, target: PolyRing, images, coeff_map=None) -> Polynomial:
        """Evaluate at ``images`` (one target polynomial per variable).

        ``coeff_map`` sends raw coefficients into ``target.field``; by
        default coefficients are lifted along the field tower.
        """
        src_field = self.ring.field
        if coeff_map is None:
            coeff_map = lambda c: target.field.lift(c, src_field)  # noqa: E731
        images = [target.coerce(g) for g in images]
        powers: list[dict] = [{0: target.one()} for _ in images]

        def pw(i, e):
            d = powers[i]
            if e not in d:
                d[e] = pw(i, e - 1) * images[i]
            return d[e]

        acc: dict = {}
        p = target.p
        for m, c in self.terms.items():
            t = target.const(coeff_map(c))
            for i, e in enumerate(m):
                if e:
                    t = t * pw(i, e)
            acc = K.poly_add(acc, t.terms, p)
        return Polynomial(target, acc)

    def subs(self, values: dict) -> Polynomial:
        """Substitute polynomials (or constants) of the same ring for variables."""
        images = []
        for nm in self.ring.names:
            images.append(values[nm] if nm in values else self.ring.var(nm))
        return self.homomorphism(self.ring, images)

    def transport(self, target: PolyRing, rename: dict | None = None) -> Polynomial:
        """Move into ``target`` by variable name, after applying ``rename``."""
        rename = rename or {}
        idx = []
        for nm in self.ring.names:
            tn = rename.get(nm, nm)
            idx.append(target.index.get(tn))
        F, T = self.ring.field, target.field
        out = {}
        for m, c in self.terms.items():
            e = [0] * target.n
            for i, x in enumerate(m):
                if x:
                    j = idx[i]
                    if j is None:
                        raise ContextMismatchError(
                            f"variable {self.ring.names[i]!r} has no image in {target!r}"
                        )
                    e[j] = x
            out[tuple(e)] = T.lift(c, F) if F != T else c
        return Polynomial(target, out)

    def univariate_coeffs(self, var) -> tuple:
        """Dense coefficient tuple (lowest first) when ``self`` involves only ``var``."""
        i = self._var_index(var)
        F = self.ring.field
        d = self.degree(i) if self.terms else -1
        out = [F.zero] * (d + 1)
        for m, c in self.terms.items():
            if any(e for j, e in enumerate(m) if j != i):
                raise ValueError("polynomial is not univariate in " + self.ring.names[i])
            out[m[i]] = c
        return upoly.trim(F, out)

    # printing
    def _mono_str(self, m) -> str:
        parts = []
        for nm, e in zip(self.ring.names, m):
            if e == 1:
                parts.append(nm)
            elif e:
                parts.append(f"{nm}^{e}")
        return "*".join(parts)

    def format(self, order: MonomialOrder | None = None) -> str:
        F = self.ring.field
        parts = [F.format_term(c, self._mono_str(m)) for m, c in self.sorted_terms(order)]
        return upoly.join_terms(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.ring!r}, {self})"


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if not isinstance(f, Polynomial) or not isinstance(g, Polynomial):
        raise TypeError("poly_arith expects Polynomial operands")
    if f.ring != g.ring:
        raise ContextMismatchError(f"ring mismatch: {f.ring!r} vs {g.ring!r}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def partial_derivative(f: Polynomial, var) -> Polynomial:
    return f.derivative(var)
