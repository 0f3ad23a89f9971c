"""Restricted Lie algebra cohomology of sl3 over small prime fields."""

__version__ = "0.1.0"

from .complex import CochainComplex, CohomologyResult, duality_check, euler_audit
from .lie import LieAlgebra, Weight, build_sl3, quotient_by_center, verify_structure
from .linalg import GF
from .modules import (
    GModule,
    adjoint_module,
    baby_verma,
    dual_module,
    quotient_module_center,
    simple_module,
    trivial_module,
)

__all__ = [
    "GF",
    "CochainComplex",
    "CohomologyResult",
    "GModule",
    "LieAlgebra",
    "Weight",
    "adjoint_module",
    "baby_verma",
    "build_sl3",
    "dual_module",
    "duality_check",
    "euler_audit",
    "quotient_by_center",
    "quotient_module_center",
    "simple_module",
    "trivial_module",
    "verify_structure",
]
