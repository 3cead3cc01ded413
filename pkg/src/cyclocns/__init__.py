"""Canonical number systems with bases -m + zeta_k and their multiplicative independence."""
from .bigpoly import IntPoly, QuotientRing, Residue
from .cns import encode, decode, exhaustive_verify, petho_check, theorem1_sweep
from .cyclotomic import CnsBasis, base_polynomial, cyclotomic, euler_phi
from .multind import independence_verdict, theorem2_sweep

__all__ = [
    "IntPoly",
    "QuotientRing",
    "Residue",
    "CnsBasis",
    "base_polynomial",
    "cyclotomic",
    "euler_phi",
    "petho_check",
    "encode",
    "decode",
    "exhaustive_verify",
    "theorem1_sweep",
    "independence_verdict",
    "theorem2_sweep",
]
