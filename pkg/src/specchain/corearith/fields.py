"""Exact coefficient fields.

Four descriptor kinds are supported: the rationals, prime fields GF(p),
rational function fields F(t) and simple algebraic extensions F[z]/(f).
The last two may be stacked to any finite depth.

Descriptors operate on *raw* values (``Fraction`` for the rationals, ``int``
for GF(p), element objects for the other two kinds).  Raw values are what the
polynomial layer stores.  ``FieldElement`` wraps a raw value together with its
descriptor for callers that want checked, self-describing arithmetic.
"""

from __future__ import annotations

import operator
import random
import re
from fractions import Fraction

from ..errors import ContextMismatchError, FieldError
from . import upoly


_ATOM = re.compile(r"[A-Za-z0-9_^]+\Z")


def _wrap(s: str) -> str:
    return s if _ATOM.match(s) else f"({s})"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of all field descriptors."""

    kind = "abstract"
    char = 0
    base: Field | None = None
    #: modulus for the kernel fast path; 0 selects generic object arithmetic
    kernel_modulus = 0

    # structural identity
    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<Field {self.describe()}>"

    # raw arithmetic, overridden where faster
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return not a

    def is_one(self, a) -> bool:
        return a == self.one

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    # tower navigation
    def prime_field(self) -> Field:
        f = self
        while f.base is not None:
            f = f.base
        return f

    def tower(self) -> list[Field]:
        """Fields from the prime field up to ``self``."""
        out, f = [], self
        while f is not None:
            out.append(f)
            f = f.base
        return out[::-1]

    def contains_field(self, other: Field) -> bool:
        return any(f == other for f in self.tower())

    def lift(self, raw, source: Field):
        """Map a raw value of a subfield in this tower into ``self``."""
        if source == self:
            return raw
        if self.base is None:
            raise ContextMismatchError(f"{source.describe()} is not a subfield of {self.describe()}")
        return self.embed(self.base.lift(raw, source))

    def embed(self, raw_base):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        num = self.from_int(q.numerator)
        if q.denominator == 1:
            return num
        den = self.from_int(q.denominator)
        if self.is_zero(den):
            raise FieldError("zero divisor in field")
        return self.div(num, den)

    def coerce(self, x):
        """Accept ints, Fractions, FieldElements of subfields and raw values."""
        if isinstance(x, FieldElement):
            return self.lift(x.raw, x.field)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        return x

    def symbols(self) -> dict:
        """Named generators of the tower, as raw values of ``self``."""
        if self.base is None:
            return {}
        out = {k: self.embed(v) for k, v in self.base.symbols().items()}
        out.update(self._own_symbols())
        return out

    def _own_symbols(self) -> dict:
        return {}

    def element(self, x) -> FieldElement:
        return FieldElement(self, self.coerce(x))

    # prime subfield detection, used for compact printing
    def as_prime(self, a):
        """Return ``a`` as a prime-field raw value if it lies there, else None."""
        return None

    def format_term(self, c, mono: str) -> str:
        pc = self.as_prime(c)
        if pc is not None:
            return self.prime_field().format_term(pc, mono)
        s = _wrap(self.format(c))
        return s + "*" + mono if mono else s


class Rationals(Field):
    kind = "rationals"
    char = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.add = operator.add
        self.sub = operator.sub
        self.mul = operator.mul
        self.neg = operator.neg

    def _key(self):
        return ("QQ",)

    def describe(self) -> str:
        return "QQ"

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def inv(self, a):
        if not a:
            raise FieldError("zero divisor in field")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise FieldError("zero divisor in field")
        return a / b

    def as_prime(self, a):
        return a

    def format(self, a) -> str:
        return str(a)

    def format_term(self, c, mono: str) -> str:
        if not mono:
            return str(c)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"

    def random_element(self, rng: random.Random):
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if p >= 1 << 31:
            # the compiled kernels multiply residues in 64-bit integers
            raise FieldError("prime fields are limited to p < 2^31")
        self.p = self.char = self.kernel_modulus = p
        self.zero = 0
        self.one = 1 % p

    def _key(self):
        return ("GF", self.p)

    def describe(self) -> str:
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def from_int(self, n: int):
        return n % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldError("zero divisor in field")
        return pow(a, -1, self.p)

    def as_prime(self, a):
        return a

    def format(self, a) -> str:
        return str(a)

    def format_term(self, c, mono: str) -> str:
        if not mono:
            return str(c)
        return mono if c == 1 else f"{c}*{mono}"

    def random_element(self, rng: random.Random):
        return rng.randrange(self.p)


class _TowerElement:
    """Shared operator plumbing for tower-field raw values."""

    __slots__ = ()

    def _c(self, o):
        return self.field.from_int(o) if isinstance(o, int) else o

    def __add__(self, o):
        return self.field.add(self, self._c(o))

    def __sub__(self, o):
        return self.field.sub(self, self._c(o))

    def __mul__(self, o):
        return self.field.mul(self, self._c(o))

    def __neg__(self):
        return self.field.neg(self)

    def __truediv__(self, o):
        return self.field.div(self, self._c(o))

    def __repr__(self):
        return self.field.format(self)


class RFElem(_TowerElement):
    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, o):
        return isinstance(o, RFElem) and self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("rf", self.num, self.den))
        return self._hash


class RationalFunctionField(Field):
    kind = "rational-function"

    def __init__(self, base: Field, name: str):
        self.base = base
        self.name = name
        self.char = base.char
        B = base
        self.zero = RFElem(self, (), (B.one,))
        self.one = RFElem(self, (B.one,), (B.one,))

    def _key(self):
        return ("RF", self.base._key(), self.name)

    def describe(self) -> str:
        return f"{self.base.describe()}({self.name})"

    def _make(self, num, den) -> RFElem:
        B = self.base
        num = upoly.trim(B, num)
        if not num:
            return self.zero
        g = upoly.gcd(B, num, den)
        if len(g) > 1:
            num = upoly.divmod_(B, num, g)[0]
            den = upoly.divmod_(B, den, g)[0]
        lc = den[-1]
        if not B.is_one(lc):
            inv = B.inv(lc)
            num = upoly.scale(B, num, inv)
            den = upoly.scale(B, den, inv)
        return RFElem(self, tuple(num), tuple(den))

    def add(self, a, b):
        B = self.base
        if a.den == b.den:
            return self._make(upoly.add(B, a.num, b.num), a.den)
        return self._make(
            upoly.add(B, upoly.mul(B, a.num, b.den), upoly.mul(B, b.num, a.den)),
            upoly.mul(B, a.den, b.den),
        )

    def neg(self, a):
        return RFElem(self, upoly.neg(self.base, a.num), a.den)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        B = self.base
        if not a.num or not b.num:
            return self.zero
        return self._make(upoly.mul(B, a.num, b.num), upoly.mul(B, a.den, b.den))

    def inv(self, a):
        if not a.num:
            raise FieldError("zero divisor in field")
        return self._make(a.den, a.num)

    def is_one(self, a):
        return a == self.one

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def embed(self, b):
        if self.base.is_zero(b):
            return self.zero
        return RFElem(self, (b,), (self.base.one,))

    def _own_symbols(self):
        B = self.base
        return {self.name: RFElem(self, (B.zero, B.one), (B.one,))}

    def as_prime(self, a):
        if len(a.num) == 1 and len(a.den) == 1:
            return self.base.as_prime(a.num[0])
        return None

    def format(self, a) -> str:
        B = self.base
        n = upoly.fmt(B, a.num, self.name)
        if len(a.den) == 1:
            return n
        return f"{_wrap(n)}/{_wrap(upoly.fmt(B, a.den, self.name))}"

    def random_element(self, rng: random.Random):
        B = self.base
        num = [B.random_element(rng) for _ in range(rng.randint(1, 3))]
        den = [B.random_element(rng) for _ in range(rng.randint(0, 1))] + [B.one]
        return self._make(num, den)


class ExtElem(_TowerElement):
    __slots__ = ("field", "c", "_hash")

    def __init__(self, field, c):
        self.field = field
        self.c = c
        self._hash = None

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, o):
        return isinstance(o, ExtElem) and self.c == o.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("ext", self.c))
        return self._hash


class ExtensionField(Field):
    """Simple extension base[name]/(minpoly).

    Irreducibility of ``minpoly`` is the caller's assertion.  Construction
    rejects polynomials that share a nontrivial factor with their derivative;
    a vanishing derivative is allowed and marks the extension inseparable.
    """

    kind = "extension"

    def __init__(self, base: Field, name: str, minpoly, irreducible_asserted: bool = True):
        B = base
        f = upoly.trim(B, [B.coerce(c) for c in minpoly])
        if len(f) < 2:
            raise FieldError("minimal polynomial must have degree at least 1")
        if not B.is_one(f[-1]):
            raise FieldError("minimal polynomial must be monic")
        df = upoly.deriv(B, f)
        if df:
            g = upoly.gcd(B, f, df)
            if len(g) > 1:
                raise FieldError(
                    f"minimal polynomial of {name} is not squarefree; it cannot be irreducible"
                )
            self.separable = True
        else:
            self.separable = False
        self.base = base
        self.name = name
        self.minpoly = f
        self.degree = len(f) - 1
        self.irreducible_asserted = irreducible_asserted
        self.char = base.char
        self.zero = ExtElem(self, ())
        self.one = ExtElem(self, (B.one,))

    def _key(self):
        return ("EXT", self.base._key(), self.name, self.minpoly)

    def describe(self) -> str:
        return f"{self.base.describe()}[{self.name}]/({upoly.fmt(self.base, self.minpoly, self.name)})"

    def _red(self, c) -> ExtElem:
        B = self.base
        c = upoly.trim(B, c)
        if len(c) > self.degree:
            c = upoly.rem(B, c, self.minpoly)
        return ExtElem(self, c)

    def add(self, a, b):
        return ExtElem(self, upoly.add(self.base, a.c, b.c))

    def sub(self, a, b):
        return ExtElem(self, upoly.sub(self.base, a.c, b.c))

    def neg(self, a):
        return ExtElem(self, upoly.neg(self.base, a.c))

    def mul(self, a, b):
        if not a.c or not b.c:
            return self.zero
        return self._red(upoly.mul(self.base, a.c, b.c))

    def inv(self, a):
        if not a.c:
            raise FieldError("zero divisor in field")
        g, s, _ = upoly.xgcd(self.base, a.c, self.minpoly)
        if len(g) != 1:
            raise FieldError("zero divisor in field")
        return self._red(s)

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def embed(self, b):
        return ExtElem(self, upoly.trim(self.base, (b,)))

    def _own_symbols(self):
        B = self.base
        return {self.name: self._red((B.zero, B.one))}

    def as_prime(self, a):
        if len(a.c) == 0:
            return self.prime_field().zero
        if len(a.c) == 1:
            return self.base.as_prime(a.c[0])
        return None

    def format(self, a) -> str:
        return upoly.fmt(self.base, a.c, self.name)

    def random_element(self, rng: random.Random):
        return self._red([self.base.random_element(rng) for _ in range(self.degree)])

    def from_base_poly(self, coeffs) -> ExtElem:
        """Reduce a base-field polynomial in the generator."""
        return self._red(coeffs)


QQ = Rationals()


class FieldElement:
    """A raw value bound to its descriptor, with checked arithmetic."""

    __slots__ = ("field", "raw")

    def __init__(self, field: Field, raw):
        self.field = field
        self.raw = raw

    def _other(self, o):
        if isinstance(o, FieldElement):
            if o.field != self.field:
                if self.field.contains_field(o.field):
                    return self.field.lift(o.raw, o.field)
                raise ContextMismatchError(
                    f"field mismatch: {self.field.describe()} vs {o.field.describe()}"
                )
            return o.raw
        if isinstance(o, (int, Fraction)):
            return self.field.coerce(o)
        return NotImplemented

    def _wrap(self, raw):
        return FieldElement(self.field, raw)

    def __add__(self, o):
        r = self._other(o)
        return NotImplemented if r is NotImplemented else self._wrap(self.field.add(self.raw, r))

    __radd__ = __add__

    def __mul__(self, o):
        r = self._other(o)
        return NotImplemented if r is NotImplemented else self._wrap(self.field.mul(self.raw, r))

    __rmul__ = __mul__

    def __sub__(self, o):
        r = self._other(o)
        return NotImplemented if r is NotImplemented else self._wrap(self.field.sub(self.raw, r))

    def __rsub__(self, o):
        r = self._other(o)
        return NotImplemented if r is NotImplemented else self._wrap(self.field.sub(r, self.raw))

    def __truediv__(self, o):
        r = self._other(o)
        if r is NotImplemented:
            return r
        return self._wrap(self.field.mul(self.raw, self.field.inv(r)))

    def __rtruediv__(self, o):
        r = self._other(o)
        if r is NotImplemented:
            return r
        return self._wrap(self.field.mul(r, self.field.inv(self.raw)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.raw))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.raw, e))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.raw))

    def __bool__(self):
        return not self.field.is_zero(self.raw)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)) and not isinstance(o, bool):
            try:
                return self.raw == self.field.coerce(o)
            except FieldError:
                return False
        if not isinstance(o, FieldElement):
            return NotImplemented
        return self.field == o.field and self.raw == o.raw

    def __hash__(self):
        return hash((self.field, self.raw))

    def __str__(self):
        return self.field.format(self.raw)

    def __repr__(self):
        return f"FieldElement({self.field.describe()}, {self})"


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if not isinstance(a, FieldElement) or not isinstance(b, FieldElement):
        raise TypeError("field_arith expects FieldElement operands")
    if a.field != b.field:
        raise ContextMismatchError(f"field mismatch: {a.field.describe()} vs {b.field.describe()}")
    F = a.field
    if op == "add":
        return FieldElement(F, F.add(a.raw, b.raw))
    if op == "sub":
        return FieldElement(F, F.sub(a.raw, b.raw))
    if op == "mul":
        return FieldElement(F, F.mul(a.raw, b.raw))
    if op == "div":
        return FieldElement(F, F.mul(a.raw, F.inv(b.raw)))
    raise ValueError(f"unknown field operation {op!r}")


def field_inverse(a: FieldElement) -> FieldElement:
    return a.inverse()
