"""Finitely presented algebras, their constructions, and residue-field arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .corearith import upoly
from .corearith.fields import ExtensionField, Field, RationalFunctionField
from .corearith.poly import GREVLEX, LEX, PolyRing, Polynomial
from .errors import (
    ContainmentError,
    ContextMismatchError,
    FieldError,
    NotAlgebraicError,
    NotInvertibleError,
    NotMaximalError,
    NotPrimeError,
    ProvenanceError,
    ZeroRingError,
)
from .gb import groebner_with_cofactors
from .ideal import IdealHandle, PrimeSpec, dimension, eliminate, elimination_order

RIGHT_SUFFIX = "_r"


class PresentedAlgebra:
    """A = k[X]/I with named variables and a record of how it was built.

    ``provenance`` is one of ``base``, ``tensor``, ``poly-ext``,
    ``scalar_extension`` or ``quotient``.  ``domain`` asserts that I is
    prime; ``equidimensional`` asserts that all minimal primes of I have
    the same dimension.
    """

    def __init__(
        self,
        ring: PolyRing,
        relations: IdealHandle,
        provenance: str = "base",
        *,
        left: PresentedAlgebra | None = None,
        right: PresentedAlgebra | None = None,
        rename: dict | None = None,
        base: PresentedAlgebra | None = None,
        new_vars: tuple = (),
        domain: bool = False,
        equidimensional: bool = False,
        extension_field: Field | None = None,
        name: str | None = None,
    ):
        if relations.ring != ring:
            raise ContextMismatchError("relations live in a different ring")
        if not relations.is_proper():
            raise ZeroRingError("presents the zero ring")
        self.ring = ring
        self.field = ring.field
        self.relations = relations
        self.provenance = provenance
        self.left = left
        self.right = right
        self.rename = dict(rename or {})
        self.base = base
        self.new_vars = tuple(new_vars)
        if relations.is_zero():
            domain = True
        self.domain = domain
        self.equidimensional = equidimensional or domain
        self.extension_field = extension_field
        self.name = name

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names

    def __repr__(self):
        rel = ", ".join(str(g) for g in self.relations.gens)
        return f"{self.field.describe()}[{', '.join(self.names)}]/({rel})"

    def describe(self) -> str:
        return self.name or repr(self)

    # variable bookkeeping for the canonical maps
    def side_names(self, side: str) -> tuple[str, ...]:
        """Names in this ring of the variables coming from ``side``."""
        if self.provenance in ("tensor", "scalar_extension"):
            if side == "left":
                return self.left.names
            if side == "right":
                return tuple(self.rename.get(nm, nm) for nm in self.right.names)
        elif self.provenance == "poly-ext":
            if side == "base":
                return self.base.names
            if side == "new":
                return self.new_vars
        if side == "self":
            return self.names
        raise ProvenanceError(f"side {side!r} is not defined for a {self.provenance} algebra")

    def side_algebra(self, side: str) -> PresentedAlgebra:
        if self.provenance in ("tensor", "scalar_extension") and side in ("left", "right"):
            return self.left if side == "left" else self.right
        if self.provenance == "poly-ext" and side == "base":
            return self.base
        if side == "self":
            return self
        raise ProvenanceError(f"no factor algebra on side {side!r} of a {self.provenance} algebra")

    def side_rename(self, side: str) -> dict:
        """Map from the factor's own variable names to names in this ring."""
        if side == "right":
            return dict(self.rename)
        return {}

    def other_side(self, side: str) -> str:
        return {"left": "right", "right": "left", "base": "new", "new": "base"}.get(side, side)

    def embed(self, f: Polynomial, side: str) -> Polynomial:
        """Image of a factor element under the canonical map into this algebra."""
        return f.transport(self.ring, self.side_rename(side))

    def embed_ideal(self, I: IdealHandle, side: str) -> IdealHandle:
        return IdealHandle(self.ring, [self.embed(g, side) for g in I.gens])

    def parse(self, text: str) -> Polynomial:
        return self.ring.parse(text)

    def prime(self, gens, **kw) -> PrimeSpec:
        """A prime of the ambient ring containing the relations."""
        I = IdealHandle(self.ring, [self.ring(g) if isinstance(g, str) else g for g in gens])
        I = IdealHandle(self.ring, list(I.gens) + list(self.relations.gens))
        return PrimeSpec(I, **kw)


def present(k: Field, names, relations=(), *, domain: bool = False, equidimensional: bool = False,
            name: str | None = None, check_domain: bool = True) -> PresentedAlgebra:
    ring = PolyRing(k, names)
    rel = IdealHandle(ring, relations)
    if not rel.is_proper():
        raise ZeroRingError("presents the zero ring")
    if domain and check_domain and not rel.is_zero():
        PrimeSpec(rel)
    return PresentedAlgebra(ring, rel, "base", domain=domain, equidimensional=equidimensional, name=name)


def _rename_for(taken: set, names) -> dict:
    out = {}
    for nm in names:
        new = nm
        while new in taken:
            new = new + RIGHT_SUFFIX
        if new != nm:
            out[nm] = new
        taken.add(new)
    return out


def tensor(A: PresentedAlgebra, B: PresentedAlgebra, *, provenance: str = "tensor",
           extension_field: Field | None = None, name: str | None = None) -> PresentedAlgebra:
    if A.field != B.field:
        raise ContextMismatchError(
            f"base-field mismatch: {A.field.describe()} vs {B.field.describe()}"
        )
    taken = set(A.names) | set(A.field.symbols())
    rename = _rename_for(taken, B.names)
    names = A.names + tuple(rename.get(nm, nm) for nm in B.names)
    ring = PolyRing(A.field, names)
    rel = [g.transport(ring) for g in A.relations.gens]
    rel += [g.transport(ring, rename) for g in B.relations.gens]
    domain = (A.domain and B.relations.is_zero()) or (B.domain and A.relations.is_zero())
    # tensor products of equidimensional affine algebras are equidimensional
    equi = A.equidimensional and B.equidimensional
    return PresentedAlgebra(
        ring,
        IdealHandle(ring, rel),
        provenance,
        left=A,
        right=B,
        rename=rename,
        domain=domain,
        equidimensional=equi,
        extension_field=extension_field,
        name=name,
    )


def poly_extension(R: PresentedAlgebra, new_vars, *, name: str | None = None) -> PresentedAlgebra:
    new_vars = tuple(new_vars)
    if not new_vars:
        return R
    clash = (set(new_vars) & set(R.names)) | (set(new_vars) & set(R.field.symbols()))
    if clash or len(set(new_vars)) != len(new_vars):
        raise ProvenanceError(f"variable name collision: {sorted(clash) or list(new_vars)}")
    ring = PolyRing(R.field, R.names + new_vars)
    rel = IdealHandle(ring, [g.transport(ring) for g in R.relations.gens])
    return PresentedAlgebra(
        ring, rel, "poly-ext", base=R, new_vars=new_vars,
        domain=R.domain, equidimensional=R.equidimensional, name=name,
    )


def quotient_algebra(A: PresentedAlgebra, I: IdealHandle, *, domain: bool = False,
                     equidimensional: bool = False) -> PresentedAlgebra:
    """A/I, presented on the same variables."""
    if I.ring != A.ring:
        raise ContextMismatchError("ideal lives in a different ring")
    rel = IdealHandle(A.ring, list(A.relations.gens) + list(I.gens))
    return PresentedAlgebra(A.ring, rel, "quotient", base=A, domain=domain,
                            equidimensional=equidimensional)


def _tower_to_k(K: Field, k: Field) -> list[ExtensionField]:
    levels = []
    f = K
    while f != k:
        if f.base is None:
            raise ContextMismatchError(f"{k.describe()} is not a subfield of {K.describe()}")
        if isinstance(f, RationalFunctionField):
            raise NotAlgebraicError("not algebraic: a rational function level is transcendental")
        levels.append(f)
        f = f.base
    return levels[::-1]


def field_algebra(K: Field, k: Field) -> PresentedAlgebra:
    """K presented as a k-algebra k[z_1..z_r]/(tower relations)."""
    levels = _tower_to_k(K, k)
    names = tuple(L.name for L in levels)
    ring = PolyRing(k, names)

    def raw_to_poly(level: int, raw) -> Polynomial:
        # raw is an element of levels[level-1] (or of k when level == 0)
        if level == 0:
            return ring.const(raw)
        L = levels[level - 1]
        z = ring.var(L.name)
        acc = ring.zero()
        for c in reversed(raw.c):
            acc = acc * z + raw_to_poly(level - 1, c)
        return acc

    rels = []
    for i, L in enumerate(levels):
        z = ring.var(L.name)
        acc = ring.zero()
        for c in reversed(L.minpoly):
            acc = acc * z + raw_to_poly(i, c)
        rels.append(acc)
    return present(k, names, rels, domain=True, check_domain=False, name=K.describe())


def scalar_extension(K: Field, A: PresentedAlgebra, *, name: str | None = None) -> PresentedAlgebra:
    """K (x)_k A for a finite extension K of k presented by a tower of minimal polynomials."""
    FA = field_algebra(K, A.field)
    return tensor(FA, A, provenance="scalar_extension", extension_field=K, name=name)


def contract_prime(C: PresentedAlgebra, P: PrimeSpec, target: str, *, check: bool = True) -> PrimeSpec:
    """P intersected with the factor on ``target``, as a prime of that factor's ring."""
    if P.ring != C.ring:
        raise ContextMismatchError("prime lives in a different ring")
    if not P.ideal.contains(C.relations):
        raise ContainmentError("containment violated")
    keep = C.side_names(target)
    drop = [nm for nm in C.names if nm not in keep]
    E = eliminate(P.ideal, drop)
    if target == "self":
        return P
    A = C.side_algebra(target)
    inv = {v: k for k, v in C.side_rename(target).items()}
    gens = [g.transport(A.ring, inv) for g in E.gens]
    return PrimeSpec(IdealHandle(A.ring, gens), seed=P.seed, samples=P.samples, check=check)


def extend_ideal(C: PresentedAlgebra, I: IdealHandle, side: str) -> IdealHandle:
    """I.C + relations of C, for an ideal I of the factor on ``side``."""
    gens = [C.embed(g, side) for g in I.gens]
    return IdealHandle(C.ring, gens + list(C.relations.gens))


@dataclass
class MultiplicativeSetDescriptor:
    """Multiplicative sets of R[X]: Nagata, Serre, or complement of a union of primes."""

    kind: str
    primes: list = dc_field(default_factory=list)

    def __post_init__(self):
        if self.kind not in ("nagata", "serre", "explicit"):
            raise ValueError(f"unknown multiplicative set kind {self.kind!r}")
        for P in self.primes:
            if not P.ideal.is_proper():
                raise ValueError("explicit avoidance primes must be proper")


# ---------------------------------------------------------------------------
# residue fields


class ResidueContext:
    """Arithmetic in the residue field at a prime P of a polynomial ring.

    Zero tests are normal forms modulo P.  When P is maximal the quotient
    ring is already the residue field and inverses come from cofactors of
    a basis of P + (f).  For non-maximal P only zero tests are available
    and ranks are computed fraction-free in the domain k[X]/P.
    """

    def __init__(self, P: PrimeSpec):
        if isinstance(P, IdealHandle):
            P = PrimeSpec(P)
        self.P = P
        self.ring = P.ring
        self.G = P.gb()
        self._inv: dict[Polynomial, Polynomial] = {}
        self._dim: int | None = None

    @property
    def dim(self) -> int:
        if self._dim is None:
            self._dim = dimension(self.P.ideal)
        return self._dim

    @property
    def is_maximal(self) -> bool:
        return self.dim == 0

    def degree(self) -> int:
        """[kappa(P) : k] for maximal P."""
        if not self.is_maximal:
            raise NotMaximalError("residue field not finite over k")
        return len(self.G.standard_monomials())

    def nf(self, f: Polynomial) -> Polynomial:
        return self.G.reduce(self.ring.coerce(f))

    def is_zero(self, f) -> bool:
        return self.nf(f).is_zero()

    def inverse(self, f) -> Polynomial:
        f = self.nf(f)
        if f.is_zero():
            raise NotInvertibleError("not invertible in residue field")
        hit = self._inv.get(f)
        if hit is not None:
            return hit
        gens = list(self.G.polys) + [f]
        B, C = groebner_with_cofactors(gens, GREVLEX, ring=self.ring)
        if not B.is_unit():
            raise NotInvertibleError(
                "not invertible in residue field: the quotient by a non-maximal prime is not a field"
            )
        lead = C[0]
        # 1 = c * B[0] with B[0] = 1 after normalization
        g = self.nf(lead[-1])
        self._inv.setdefault(f, g)
        return self._inv[f]


def residue_zero_test(ctx: ResidueContext, f) -> bool:
    return ctx.is_zero(f)


def residue_inverse(ctx: ResidueContext, f) -> Polynomial:
    return ctx.inverse(f)


def kappa_rank(ctx: ResidueContext, M) -> int:
    """Rank over the residue field kappa(P) of a matrix of polynomials."""
    rows = [[ctx.nf(ctx.ring.coerce(x)) for x in row] for row in M]
    if not rows:
        return 0
    ncols = max(len(r) for r in rows)
    rows = [r + [ctx.ring.zero()] * (ncols - len(r)) for r in rows]
    maximal = ctx.is_maximal
    rank = 0
    top = 0
    while top < len(rows):
        pivot = None
        for i in range(top, len(rows)):
            for j in range(ncols):
                if not rows[i][j].is_zero():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        rows[top], rows[i] = rows[i], rows[top]
        prow = rows[top]
        if maximal:
            inv = ctx.inverse(prow[j])
            prow = [ctx.nf(x * inv) for x in prow]
            rows[top] = prow
            for r in range(top + 1, len(rows)):
                a = rows[r][j]
                if not a.is_zero():
                    rows[r] = [ctx.nf(x - a * y) for x, y in zip(rows[r], prow)]
        else:
            piv = prow[j]
            for r in range(top + 1, len(rows)):
                a = rows[r][j]
                if not a.is_zero():
                    rows[r] = [ctx.nf(piv * x - a * y) for x, y in zip(rows[r], prow)]
        rank += 1
        top += 1
    return rank


def minimal_polynomial(ctx: ResidueContext, elem, new_var: str = "T") -> Polynomial:
    """Monic generator of the kernel of k[T] -> kappa(P), T -> elem."""
    ring = ctx.ring
    elem = ring.coerce(elem)
    if new_var in ring.names or new_var in ring.field.symbols():
        raise ValueError(f"variable {new_var!r} already in use")
    T = ring.extend([new_var])
    t = T.var(new_var)
    gens = [g.transport(T) for g in ctx.G.polys] + [t - elem.transport(T)]
    E = eliminate(IdealHandle(T, gens), ring.names)
    U = PolyRing(ring.field, [new_var])
    polys = [g.transport(U) for g in E.gens]
    if not polys:
        raise NotAlgebraicError("not algebraic")
    polys.sort(key=lambda g: g.total_degree())
    return polys[0].monic()


def _univariate_separable(f: Polynomial) -> bool:
    F = f.ring.field
    var = f.ring.names[0]
    c = f.univariate_coeffs(var)
    d = upoly.deriv(F, c)
    if not d:
        return False
    return len(upoly.gcd(F, c, d)) == 1


def is_separable_extension(ctx: ResidueContext) -> bool:
    if not ctx.is_maximal:
        raise NotMaximalError("residue field not finite over k")
    tname = "T"
    while tname in ctx.ring.names or tname in ctx.ring.field.symbols():
        tname += "_"
    for v in ctx.ring.gens:
        if not _univariate_separable(minimal_polynomial(ctx, v, tname)):
            return False
    return True


def residue_field_tower(ctx: ResidueContext, names=None):
    """Present kappa(P) for maximal P as a tower of simple extensions.

    Uses the triangular shape of the reduced lex basis of a maximal
    ideal.  ``names`` restricts attention to a subset of variables when P
    is the extension of a maximal ideal of a subring; by default all.
    Returns ``(K, images)`` where ``images[name]`` is the residue of that
    variable as a raw element of ``K``.
    """
    if not ctx.is_maximal:
        raise NotMaximalError("residue field not finite over k")
    ring = ctx.ring
    k = ring.field
    G = ctx.P.ideal.gb(LEX)
    by_var: dict[int, Polynomial] = {}
    for g in G:
        lm = g.lm(LEX)
        support = [i for i, e in enumerate(lm) if e]
        if len(support) != 1:
            raise NotMaximalError("lex basis is not triangular")
        i = support[0]
        if i in by_var or any(m[j] for m in g.terms for j in range(i)):
            raise NotMaximalError("lex basis is not triangular")
        by_var[i] = g
    if len(by_var) != ring.n:
        raise NotMaximalError("lex basis is not triangular")
    K: Field = k
    images: dict[str, object] = {}

    def evaluate(poly_terms, K):
        acc = K.zero
        for m, c in poly_terms.items():
            t = K.lift(c, k)
            for j, e in enumerate(m):
                if e:
                    t = K.mul(t, K.pow(images[ring.names[j]], e))
            acc = K.add(acc, t)
        return acc

    for i in range(ring.n - 1, -1, -1):
        g = by_var[i]
        d = g.lm(LEX)[i]
        # coefficients of g as a polynomial in x_i over the current tower
        coeffs: dict[int, dict] = {}
        for m, c in g.terms.items():
            mm = list(m)
            e = mm[i]
            mm[i] = 0
            coeffs.setdefault(e, {})[tuple(mm)] = c
        dense = [evaluate(coeffs.get(e, {}), K) for e in range(d + 1)]
        name = ring.names[i]
        if d == 1:
            images[name] = K.neg(dense[0])
            continue
        try:
            K = ExtensionField(K, name, dense)
        except FieldError as exc:
            raise NotPrimeError(f"residue tower failed at {name}: {exc}") from None
        for nm in list(images):
            images[nm] = K.embed(images[nm])
        images[name] = K.symbols()[name]
    return K, images


def fibre_algebra(C: PresentedAlgebra, P: PrimeSpec, side: str, route: str = "ambient"):
    """The fibre ring at the contraction p of P to ``side``, with the image of P.

    ``ambient`` presents (C / pC) over the original field; it is valid for
    every p.  ``explicit`` presents kappa(p) (x) (other factor) over the
    residue field tower of p and needs p maximal.
    """
    p = contract_prime(C, P, side, check=False)
    other = C.other_side(side)
    try:
        other_alg = C.side_algebra(other)
        other_equi = other_alg.equidimensional
    except ProvenanceError:
        other_alg = None
        other_equi = True  # polynomial variables
    if route == "ambient":
        J = extend_ideal(C, p.ideal, side)
        F = PresentedAlgebra(C.ring, J, "quotient", base=C, equidimensional=other_equi)
        return F, P, p
    if route != "explicit":
        raise ValueError(f"unknown fibre route {route!r}")
    pctx = ResidueContext(p)
    if not pctx.is_maximal:
        raise NotMaximalError("residue field not finite over k")
    K, images = residue_field_tower(pctx)
    side_names = C.side_names(side)
    rename_fwd = C.side_rename(side)
    other_names = tuple(nm for nm in C.names if nm not in side_names)
    ring = PolyRing(K, other_names)
    factor_ring = C.side_algebra(side).ring
    img = []
    for nm in C.names:
        if nm in side_names:
            src = next(a for a in factor_ring.names if rename_fwd.get(a, a) == nm)
            img.append(ring.const(images[src]))
        else:
            img.append(ring.var(nm))
    base_field = C.field
    cm = lambda c: K.lift(c, base_field)  # noqa: E731
    rels = [g.homomorphism(ring, img, cm) for g in C.relations.gens]
    Pimg = [g.homomorphism(ring, img, cm) for g in P.gens]
    F = PresentedAlgebra(ring, IdealHandle(ring, rels), "base", equidimensional=other_equi)
    FP = PrimeSpec(IdealHandle(ring, Pimg + rels), check=False)
    return F, FP, p
