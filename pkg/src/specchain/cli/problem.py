"""Problem-file loading and command execution."""

from __future__ import annotations

import json
from importlib import resources

from jsonschema import Draft202012Validator

from ..algebra import (
    MultiplicativeSetDescriptor,
    PresentedAlgebra,
    poly_extension,
    present,
    scalar_extension,
    tensor,
)
from ..corearith import QQ, ExtensionField, PolyRing, PrimeField, RationalFunctionField
from ..corearith.poly import GREVLEX, LEX
from ..errors import SpecchainError
from ..gb import step_limit
from ..ideal import IdealHandle, PrimeSpec
from ..localinv import (
    MAXIMAL_PATH,
    SYZYGY_PATH,
    edim_local,
    height,
    krull_dim,
    local_dim,
    mu_image_rank,
    mu_path,
)
from .. import theorems as th

SCHEMA_VERSION = "specchain/1"


class InputError(SpecchainError):
    """A problem file that does not validate or does not resolve."""


def _load_schema(name: str) -> dict:
    return json.loads(resources.files(__package__).joinpath(name).read_text())


PROBLEM_SCHEMA = _load_schema("problem.schema.json")
REPORT_SCHEMA = _load_schema("report.schema.json")


def _where(err) -> str:
    return "/" + "/".join(str(p) for p in err.absolute_path)


def validate(doc, schema: dict) -> list[str]:
    v = Draft202012Validator(schema)
    errs = sorted(v.iter_errors(doc), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    return [f"{_where(e)}: {e.message}" for e in errs]


def build_field(desc, default_base=None):
    if desc == "QQ":
        return QQ
    kind = desc["kind"]
    if kind == "QQ":
        return QQ
    if kind == "GF":
        if "p" not in desc:
            raise InputError("GF field needs 'p'")
        return PrimeField(desc["p"])
    base = build_field(desc["base"]) if "base" in desc else default_base
    if base is None:
        raise InputError(f"{kind} field needs a 'base'")
    if "var" not in desc:
        raise InputError(f"{kind} field needs 'var'")
    if kind == "RF":
        return RationalFunctionField(base, desc["var"])
    if "minpoly" not in desc:
        raise InputError("ext field needs 'minpoly'")
    var = desc["var"]
    f = PolyRing(base, [var]).parse(desc["minpoly"])
    coeffs = f.univariate_coeffs(var)
    return ExtensionField(base, var, coeffs, desc.get("irreducible_asserted", True))


class Problem:
    """A validated problem file with its algebras and primes resolved."""

    def __init__(self, doc: dict, *, seed: int = 0, order: str = "grevlex", max_steps: int | None = None):
        errs = validate(doc, PROBLEM_SCHEMA)
        if errs:
            raise InputError("schema violation: " + "; ".join(errs))
        self.doc = doc
        self.seed = seed
        self.order = order
        self.max_steps = max_steps
        self.field = build_field(doc["field"])
        self.algebras: dict[str, PresentedAlgebra] = {}
        self.primes: dict[str, PrimeSpec] = {}
        with step_limit(max_steps):
            for name, spec in doc["algebras"].items():
                self.algebras[name] = self._algebra(name, spec)
            for name, spec in doc.get("primes", {}).items():
                A = self.algebra(spec["algebra"])
                self.primes[name] = A.prime(spec["gens"], seed=seed, check=spec.get("check", True))

    def algebra(self, name: str) -> PresentedAlgebra:
        if name not in self.algebras:
            raise InputError(f"unknown algebra {name!r}")
        return self.algebras[name]

    def prime(self, name: str) -> PrimeSpec:
        if name not in self.primes:
            raise InputError(f"unknown prime {name!r}")
        return self.primes[name]

    def _algebra(self, name: str, spec: dict) -> PresentedAlgebra:
        label = spec.get("name", name)
        if "tensor" in spec:
            a, b = spec["tensor"]
            return tensor(self.algebra(a), self.algebra(b), name=label)
        if "poly_ext" in spec:
            return poly_extension(self.algebra(spec["poly_ext"]), spec.get("vars", []), name=label)
        if "scalar_extension" in spec:
            if "field" not in spec:
                raise InputError(f"algebra {name!r}: scalar_extension needs 'field'")
            K = build_field(spec["field"], default_base=self.field)
            return scalar_extension(K, self.algebra(spec["scalar_extension"]), name=label)
        if "vars" not in spec:
            raise InputError(f"algebra {name!r} needs 'vars' or a construction")
        return present(
            self.field, spec["vars"], spec.get("relations", []),
            domain=spec.get("domain", False),
            equidimensional=spec.get("equidimensional", False),
            name=label,
        )

    # commands ---------------------------------------------------------------

    def run_command(self, cmd: dict) -> dict:
        op = cmd["op"]
        with step_limit(self.max_steps):
            if op == "verify":
                return self._verify(cmd).to_dict()
            return getattr(self, "_op_" + op)(cmd)

    def _need(self, cmd, key):
        if key not in cmd:
            raise InputError(f"command {cmd['op']!r} needs {key!r}")
        return cmd[key]

    def _op_gb(self, cmd):
        A = self.algebra(self._need(cmd, "algebra"))
        gens = [A.ring.parse(s) for s in cmd["ideal"]] if "ideal" in cmd else list(A.relations.gens)
        order = LEX if cmd.get("order", self.order) == "lex" else GREVLEX
        G = IdealHandle(A.ring, gens).gb(order)
        return {
            "order": repr(order),
            "basis": [str(g) for g in G],
            "self_certified": G.self_certify(),
        }

    def _op_dim(self, cmd):
        A = self.algebra(self._need(cmd, "algebra"))
        if "prime" in cmd:
            return {"dim": local_dim(A, self.prime(cmd["prime"]))}
        return {"dim": krull_dim(A.relations)}

    def _op_height(self, cmd):
        return {"height": height(self.prime(self._need(cmd, "prime")))}

    def _local(self, cmd):
        A = self.algebra(self._need(cmd, "algebra"))
        P = self.prime(self._need(cmd, "prime"))
        e = edim_local(A, P)
        d = local_dim(A, P)
        return {"edim": e, "dim": d, "cdim": e - d}

    _op_edim = _local
    _op_cdim = _local

    def _op_mu(self, cmd):
        A = self.algebra(self._need(cmd, "algebra"))
        P = self.prime(self._need(cmd, "prime"))
        I = IdealHandle(A.ring, [A.ring.parse(s) for s in cmd["ideal"]] + list(A.relations.gens)) \
            if "ideal" in cmd else A.relations
        path = cmd.get("path", "auto")
        if path == "auto":
            path = mu_path(P)
        out = {"mu": mu_image_rank(I, P, path), "path": path}
        if path == MAXIMAL_PATH:
            other = mu_image_rank(I, P, SYZYGY_PATH)
            out["mu_other_path"] = other
            out["paths_agree"] = other == out["mu"]
        return out

    def _verify(self, cmd):
        tag = self._need(cmd, "tag")
        C = self.algebra(self._need(cmd, "algebra"))
        if tag == "localized_regularity":
            sdesc = self._need(cmd, "set")
            S = MultiplicativeSetDescriptor(sdesc["kind"], [self.prime(n) for n in sdesc.get("primes", [])])
            return th.check_localized_regularity(C, S, [self.prime(n) for n in cmd.get("primes", [])])
        P = self.prime(self._need(cmd, "prime"))
        side = cmd.get("side")
        if tag == "prop_n1":
            m = th.local_map(C, P, side or "self", cmd.get("flat"))
            I = IdealHandle(m.source.ring, [m.source.ring.parse(s) for s in self._need(cmd, "ideal")])
            return th.verify_prop_n1(m, I)
        if tag == "gd_corollaries":
            default = "base" if C.provenance == "poly-ext" else "left"
            return th.verify_gd_corollaries(th.local_map(C, P, side or default, cmd.get("flat")))
        if tag == "special_chain_dim":
            return th.verify_special_chain_dim(self._need(cmd, "kind"), C, P, side)
        if tag == "prop_f1":
            return th.verify_prop_f1(C, P, side or "left")
        if tag in ("thm_r1", "cor_r2"):
            asserted = cmd.get("assert_separable", False)
            if tag == "thm_r1":
                return th.verify_thm_r1(C, P, asserted)
            return th.verify_cor_r2(C, P, cmd.get("profile", "r2"), asserted)
        simple = {
            "thm_p1": th.verify_thm_p1,
            "cor_p2": th.verify_cor_p2,
            "lemma_s11": th.verify_lemma_s11,
            "thm_s1": th.verify_thm_s1,
            "cor_s2": th.verify_cor_s2,
            "inequalities": th.check_inequalities,
        }
        return simple[tag](C, P)


def command_label(cmd: dict) -> str:
    if cmd.get("op") == "verify":
        return f"verify {cmd.get('tag', '?')}"
    return str(cmd.get("op", "?"))


def report(cmd: dict, *, data=None, error: Exception | None = None) -> dict:
    out = {"schema": SCHEMA_VERSION, "command": command_label(cmd)}
    if "id" in cmd:
        out["id"] = cmd["id"]
    if error is None:
        out["status"] = "ok"
        out["data"] = data
    else:
        out["status"] = "error"
        out["error"] = {"type": type(error).__name__, "message": str(error)}
    return out


def execute(doc: dict, *, seed: int = 0, order: str = "grevlex", max_steps: int | None = None) -> list[dict]:
    """Run every command of a problem document; one report per command.

    A document that fails to load yields a single ``load`` error report.
    """
    try:
        prob = Problem(doc, seed=seed, order=order, max_steps=max_steps)
    except (SpecchainError, ValueError, KeyError, TypeError) as exc:
        return [report({"op": "load"}, error=exc)]
    out = []
    for cmd in doc["commands"]:
        try:
            out.append(report(cmd, data=prob.run_command(cmd)))
        except (SpecchainError, ValueError, ArithmeticError) as exc:
            out.append(report(cmd, error=exc))
    return out


def load_path(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON at offset {exc.pos}: {exc.msg}") from None
