"""Gröbner bases and ideal membership for symmetric ideals of K[x1, x2, ...]."""

from .engine import (
    BasisSet,
    GBConfig,
    GBReport,
    MaxOrderExceeded,
    interreduce_minimize,
    is_member,
    monomial_orbit_gb,
    symmetric_gb,
    truncated_gb,
)
from .fields import QQ, PrimeField, RationalField
from .io import format_polynomial, parse_polynomial
from .monomial import Monomial, lex_compare
from .order import Witness, brute_force_sym_compare, sym_compare, upward_shift_between, validate_witness
from .permutation import Permutation
from .polynomial import Polynomial, Term
from .reduction import Certificate, certificate_check, reduce_by_orbit, reduce_full, sg_step

__version__ = "0.1.0"

__all__ = [
    "BasisSet", "Certificate", "GBConfig", "GBReport", "MaxOrderExceeded", "Monomial",
    "Permutation", "Polynomial", "PrimeField", "QQ", "RationalField", "Term", "Witness",
    "brute_force_sym_compare", "certificate_check", "format_polynomial", "interreduce_minimize",
    "is_member", "lex_compare", "monomial_orbit_gb", "parse_polynomial", "reduce_by_orbit",
    "reduce_full", "sg_step", "sym_compare", "symmetric_gb", "truncated_gb",
    "upward_shift_between", "validate_witness",
]
