import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import GF2T, corpus_docs, polynomials
from specchain.algebra import (
    ResidueContext,
    contract_prime,
    extend_ideal,
    fibre_algebra,
    is_separable_extension,
    kappa_rank,
    minimal_polynomial,
    poly_extension,
    present,
    residue_field_tower,
    residue_inverse,
    residue_zero_test,
    scalar_extension,
    tensor,
)
from specchain.cli.problem import Problem
from specchain.corearith import QQ, ExtensionField, PolyRing, PrimeField
from specchain.errors import ContextMismatchError, NotInvertibleError, NotMaximalError, ProvenanceError, ZeroRingError
from specchain.ideal import IdealHandle, PrimeSpec


def cusp(names=("x", "y")):
    x, y = names
    return present(QQ, names, [f"{y}^2 - {x}^3"], domain=True)


def sqrt2_ctx():
    R = PolyRing(QQ, ["x"])
    return ResidueContext(PrimeSpec.from_gens(R, [R("x^2 - 2")])), R


def test_present_and_zero_ring():
    A = cusp()
    assert A.provenance == "base"
    assert present(QQ, ["x"]).relations.is_zero()
    with pytest.raises(ZeroRingError):
        present(QQ, ["x"], ["x", "x - 1"])


def test_tensor_construction_and_renaming():
    C = tensor(cusp(), cusp())
    assert C.names == ("x", "y", "x_r", "y_r")
    assert C.relations == IdealHandle(C.ring, [C.parse("y^2 - x^3"), C.parse("y_r^2 - x_r^3")])
    assert C.side_rename("right") == {"x": "x_r", "y": "y_r"}
    with pytest.raises(ContextMismatchError):
        tensor(cusp(), present(PrimeField(5), ["u"]))


def test_poly_extension():
    R = cusp(("a", "b"))
    E = poly_extension(R, ["x"])
    assert E.names == ("a", "b", "x")
    assert E.relations == IdealHandle(E.ring, [E.parse("b^2 - a^3")])
    assert poly_extension(present(QQ, ["x"]), []).names == ("x",)
    with pytest.raises(ValueError):
        poly_extension(present(QQ, ["x"]), ["x"])


def test_contract_prime_examples():
    C = tensor(cusp(), cusp(("u", "v")))
    P = C.prime(["x", "y", "u", "v"])
    p = contract_prime(C, P, "left")
    assert p.ideal == IdealHandle(p.ring, [p.ring("x"), p.ring("y")])
    D = tensor(present(QQ, ["x"]), present(QQ, ["y"], ["y^2 - 2"]))
    q = contract_prime(D, D.prime(["x"]), "right")
    assert q.ideal == IdealHandle(q.ring, [q.ring("y^2 - 2")])
    with pytest.raises(ProvenanceError):
        contract_prime(D, D.prime(["x"]), "base")


def test_residue_inverse_and_zero_test():
    ctx, R = sqrt2_ctx()
    assert residue_inverse(ctx, R("x")) == R("x/2")
    assert residue_inverse(ctx, R("1")) == R("1")
    assert residue_zero_test(ctx, R("x^2 - 2"))
    with pytest.raises(NotInvertibleError):
        residue_inverse(ctx, R("x^2 - 2"))


def test_kappa_rank_examples():
    ctx, R = sqrt2_ctx()
    assert kappa_rank(ctx, [[R("x"), R("2")], [R("1"), R("x")]]) == 1
    assert kappa_rank(ctx, [[R("1"), R("0")], [R("0"), R("1")]]) == 2
    assert kappa_rank(ctx, [[R("0"), R("0")]]) == 0


def test_minimal_polynomial_examples():
    ctx, R = sqrt2_ctx()
    assert str(minimal_polynomial(ctx, R("x"))) == "T^2 - 2"
    assert str(minimal_polynomial(ctx, R("x + 1"))) == "T^2 - 2*T - 1"
    assert str(minimal_polynomial(ctx, R("3"))) == "T - 3"


def test_separability_examples():
    ctx, _ = sqrt2_ctx()
    assert is_separable_extension(ctx)
    S = PolyRing(GF2T, ["z"])
    assert not is_separable_extension(ResidueContext(PrimeSpec.from_gens(S, [S("z^2 + t")])))
    F = PolyRing(PrimeField(5), ["z"])
    assert is_separable_extension(ResidueContext(PrimeSpec.from_gens(F, [F("z^2 - 2")])))
    Q = PolyRing(QQ, ["x", "y"])
    with pytest.raises(NotMaximalError):
        is_separable_extension(ResidueContext(PrimeSpec.from_gens(Q, [Q("y^2 - x^3")])))


def test_residue_tower_degree():
    R = PolyRing(QQ, ["x", "y"])
    ctx = ResidueContext(PrimeSpec.from_gens(R, [R("x^2 - 2"), R("y^2 - 3")]))
    K, images = residue_field_tower(ctx)
    assert K.degree * K.base.degree == 4
    assert K.mul(images["x"], images["x"]) == K.from_int(2)


def test_scalar_extension_structure():
    QI = ExtensionField(QQ, "i", [1, 0, 1])
    C = scalar_extension(QI, cusp())
    assert C.provenance == "scalar_extension"
    assert C.extension_field is QI
    assert C.right.names == ("x", "y")


def test_fibre_routes_agree_on_relations():
    C = tensor(cusp(), present(QQ, ["u"], ["u^2 - 2"]))
    P = C.prime(["x", "y"])
    F, FP, p = fibre_algebra(C, P, "left")
    assert p.ideal == IdealHandle(p.ring, [p.ring("x"), p.ring("y")])
    assert F.relations.contains(C.parse("x")) and F.relations.contains(C.parse("u^2 - 2"))
    G, GP, _ = fibre_algebra(C, P, "left", route="explicit")
    assert G.names == ("u",)
    assert G.relations.contains(G.parse("u^2 - 2"))


# property tests


def _corpus_tensor_primes():
    out = []
    for name, doc in corpus_docs():
        prob = Problem(doc, seed=0)
        for pname, P in prob.primes.items():
            alg = doc["primes"][pname]["algebra"]
            if prob.algebras[alg].provenance in ("tensor", "poly-ext", "scalar_extension"):
                out.append((f"{name}:{pname}", prob.algebras[alg], P))
    return out


CORPUS_PRIMES = _corpus_tensor_primes()


@pytest.mark.parametrize("label,C,P", CORPUS_PRIMES, ids=[c[0] for c in CORPUS_PRIMES])
def test_contract_extend_round_trip(label, C, P):
    sides = ("base",) if C.provenance == "poly-ext" else ("left", "right")
    for side in sides:
        p = contract_prime(C, P, side, check=False)
        assert P.ideal.contains(extend_ideal(C, p.ideal, side))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_residue_inverse_property(data):
    ctx, R = sqrt2_ctx()
    f = data.draw(polynomials(R))
    if residue_zero_test(ctx, f):
        return
    assert ctx.nf(f * residue_inverse(ctx, f)) == R.one()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_minimal_polynomial_vanishes(data):
    R = PolyRing(QQ, ["x", "y"])
    ctx = ResidueContext(PrimeSpec.from_gens(R, [R("x^2 - 2"), R("y - x - 1")]))
    f = data.draw(polynomials(R, max_terms=3, max_deg=2))
    m = minimal_polynomial(ctx, f)
    assert m.total_degree() <= 2
    val = R.zero()
    for e, c in enumerate(m.univariate_coeffs("T")):
        val = val + R.const(c) * f ** e
    assert residue_zero_test(ctx, val)


matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda c: st.lists(st.lists(polynomials(PolyRing(QQ, ["x"]), max_terms=2, max_deg=2), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=40, deadline=None)
@given(matrices, st.integers(-3, 3))
def test_kappa_rank_invariances(M, lam):
    sympy = pytest.importorskip("sympy")
    ctx, R = sqrt2_ctx()
    M = [[R.coerce(v) for v in row] for row in M]
    r = kappa_rank(ctx, M)
    assert r == kappa_rank(ctx, [list(col) for col in zip(*M)])
    if len(M) >= 2:
        N = [list(row) for row in M]
        N[1] = [a + lam * b for a, b in zip(N[1], N[0])]
        assert kappa_rank(ctx, N) == r
    # oracle: substitute sqrt(2) and take the rank over the reals
    x = sympy.Symbol("x")
    S = sympy.Matrix([[sympy.sympify(str(v).replace("^", "**"), locals={"x": x}).subs(x, sympy.sqrt(2)) for v in row]
                      for row in M])
    assert r == S.rank(simplify=True)


@pytest.mark.parametrize("name,doc", [(n, d) for n, d in corpus_docs() if d.get("field", "QQ") == "QQ"],
                         ids=lambda v: v if isinstance(v, str) else "")
def test_char_zero_always_separable(name, doc):
    prob = Problem(doc, seed=0)
    for P in prob.primes.values():
        ctx = ResidueContext(P)
        if ctx.is_maximal:
            assert is_separable_extension(ctx)
