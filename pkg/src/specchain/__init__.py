"""Exact commutative algebra kernel."""

from .corearith import (
    GREVLEX,
    LEX,
    QQ,
    ExtensionField,
    MonomialOrder,
    PolyRing,
    Polynomial,
    PrimeField,
    RationalFunctionField,
)
from .gb import GroebnerBasis, buchberger, step_limit, syzygies
from .ideal import IdealHandle, PrimeSpec, dimension, eliminate, intersect, quotient, saturation
from .algebra import (
    PresentedAlgebra,
    ResidueContext,
    contract_prime,
    poly_extension,
    present,
    scalar_extension,
    tensor,
)
from .localinv import cdim_local, edim_local, height, krull_dim, local_dim, local_report, mu_image_rank
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GREVLEX",
    "LEX",
    "QQ",
    "ExtensionField",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "RationalFunctionField",
    "GroebnerBasis",
    "buchberger",
    "step_limit",
    "syzygies",
    "IdealHandle",
    "PrimeSpec",
    "dimension",
    "eliminate",
    "intersect",
    "quotient",
    "saturation",
    "PresentedAlgebra",
    "ResidueContext",
    "contract_prime",
    "poly_extension",
    "present",
    "scalar_extension",
    "tensor",
    "cdim_local",
    "edim_local",
    "height",
    "krull_dim",
    "local_dim",
    "local_report",
    "mu_image_rank",
]
