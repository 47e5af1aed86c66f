"""Exact decision procedures for taming symplectic forms and SKT metrics on Lie algebras."""
from .exterior import Form, GaussianRational
from .liecore import JacobiViolation, LieAlgebra, LieError, Subspace
from .cxstruct import ComplexStructure, is_integrable
from .decide import Exists, NotExists, Unknown, decide_skt, decide_taming
from .catalog import build

__version__ = "0.1.0"

__all__ = [
    "Form", "GaussianRational", "LieAlgebra", "LieError", "JacobiViolation", "Subspace",
    "ComplexStructure", "is_integrable", "Exists", "NotExists", "Unknown", "decide_taming",
    "decide_skt", "build",
]
