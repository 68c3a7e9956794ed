"""Local invariants of A = k[X]/I at a prime P: dim, height, mu, edim, cdim.

Everything is computed in the ambient polynomial ring k[X], which is
regular, so that edim((k[X]/I)_P) = ht(P) - mu(I, P) where mu(I, P) is the
dimension over kappa(P) of the image of I in P/P^2 localized at P.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .algebra import PresentedAlgebra, ResidueContext, kappa_rank
from .errors import ContainmentError, EquidimensionalityError, NotProperError
from .gb import syzygies
from .ideal import IdealHandle, PrimeSpec, dimension, ideal_power, ideal_sum

MAXIMAL_PATH = "maximal-fast-path"
SYZYGY_PATH = "general-syzygy-path"


def _ideal(I):
    return I.ideal if isinstance(I, PrimeSpec) else I


def krull_dim(I) -> int:
    I = _ideal(I)
    if not I.is_proper():
        raise NotProperError("krull_dim of the unit ideal")
    return dimension(I)


def height(P: PrimeSpec) -> int:
    if not isinstance(P, PrimeSpec) or not P.asserted:
        raise NotProperError("height needs an asserted prime")
    return P.ring.n - krull_dim(P)


def _relations(A) -> IdealHandle:
    return A.relations if isinstance(A, PresentedAlgebra) else _ideal(A)


def _check_contained(I: IdealHandle, P: PrimeSpec):
    if I.ring != P.ring:
        raise ContainmentError("containment violated: different rings")
    if not P.ideal.contains(I):
        raise ContainmentError("containment violated")


def local_dim(A: PresentedAlgebra, P: PrimeSpec) -> int:
    """dim(A_P) = dim(k[X]/I_A) - dim(k[X]/P) for equidimensional I_A."""
    _check_contained(A.relations, P)
    if not (A.domain or A.equidimensional):
        raise EquidimensionalityError("dimension formula requires equidimensional relations")
    return krull_dim(A.relations) - krull_dim(P)


def _mu_maximal(I: IdealHandle, P: PrimeSpec, ctx: ResidueContext) -> int:
    P2 = ideal_power(P.ideal, 2)
    s_p2 = P2.gb().standard_monomials()
    s_ip2 = ideal_sum(I, P2).gb().standard_monomials()
    deg = ctx.degree()
    num = len(s_p2) - len(s_ip2)
    if num % deg:
        raise ArithmeticError("k-dimension of (I+P^2)/P^2 is not a multiple of [kappa(P):k]")
    return num // deg


def _mu_syzygy(I: IdealHandle, P: PrimeSpec, ctx: ResidueContext) -> int:
    q = list(I.gens)
    m = len(q)
    if m == 0:
        return 0
    P2 = ideal_power(P.ideal, 2).canonical_gens()
    syz = syzygies(q + P2, ring=I.ring)
    rows = [list(v.coords[:m]) for v in syz]
    return m - kappa_rank(ctx, rows)


def mu_image_rank(I, P: PrimeSpec, path: str = "auto", ctx: ResidueContext | None = None) -> int:
    """dim over kappa(P) of (I + P^2)/P^2 localized at P."""
    I = _ideal(I)
    _check_contained(I, P)
    ctx = ctx or ResidueContext(P)
    if path == "auto":
        path = MAXIMAL_PATH if ctx.is_maximal else SYZYGY_PATH
    if path == MAXIMAL_PATH:
        return _mu_maximal(I, P, ctx)
    if path == SYZYGY_PATH:
        return _mu_syzygy(I, P, ctx)
    raise ValueError(f"unknown mu path {path!r}")


def mu_path(P: PrimeSpec) -> str:
    return MAXIMAL_PATH if krull_dim(P) == 0 else SYZYGY_PATH


def edim_local(A, P: PrimeSpec, path: str = "auto") -> int:
    I = _relations(A)
    _check_contained(I, P)
    return height(P) - mu_image_rank(I, P, path)


def mu_relative(C: PresentedAlgebra, P: PrimeSpec, I, path: str = "auto") -> int:
    """mu of the extended ideal I.C in the local ring C_P.

    Computed as mu(I.C + I_C, P) - mu(I_C, P): the image of I in
    m/m^2 where m = P/I_C.
    """
    I = _ideal(I)
    if I.ring != C.ring:
        raise ContainmentError("containment violated: transport the ideal into the algebra first")
    J = ideal_sum(I, C.relations)
    _check_contained(J, P)
    ctx = ResidueContext(P)
    return mu_image_rank(J, P, path, ctx) - mu_image_rank(C.relations, P, path, ctx)


def cdim_local(A: PresentedAlgebra, P: PrimeSpec) -> int:
    return edim_local(A, P) - local_dim(A, P)


def is_regular_local(A: PresentedAlgebra, P: PrimeSpec) -> bool:
    return cdim_local(A, P) == 0


def edim_direct(A, P: PrimeSpec) -> int:
    """edim by counting m/m^2 directly; P must be maximal.

    dim_k of (P + I)/(P^2 + I) divided by [kappa(P) : k].  This shares no
    code with the ht - mu route and serves as a cross-check.
    """
    I = _relations(A)
    ctx = ResidueContext(P)
    P2I = ideal_sum(ideal_power(P.ideal, 2), I)
    a = P2I.gb().standard_monomials()
    b = ideal_sum(P.ideal, I).gb().standard_monomials()
    return (len(a) - len(b)) // ctx.degree()


@dataclass
class LocalReport:
    algebra: str
    prime: list
    dim_ambient_quotient: int
    ht: int
    dim_local: int
    mu: int
    edim: int
    cdim: int
    path: str
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def local_report(A: PresentedAlgebra, P: PrimeSpec) -> LocalReport:
    ht = height(P)
    path = mu_path(P)
    mu = mu_image_rank(A.relations, P, path)
    edim = ht - mu
    dl = local_dim(A, P)
    rep = LocalReport(
        algebra=A.describe(),
        prime=[str(g) for g in P.ideal.canonical_gens()],
        dim_ambient_quotient=krull_dim(A.relations),
        ht=ht,
        dim_local=dl,
        mu=mu,
        edim=edim,
        cdim=edim - dl,
        path=path,
    )
    if rep.edim < rep.dim_local:
        raise ArithmeticError("edim below local dimension: kernel inconsistency")
    return rep
