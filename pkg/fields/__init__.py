"""
Finite fields GF(p^m) with discrete-log tables, and the algebraic torus
(F_q*)^r on which toric codes are evaluated.
"""

from .galois_field import FieldElement, GaloisField, field_new, parse_field_spec, split_prime_power
from .torus import TorusPoint, eval_monomial, monomial_row, torus_log_matrix, torus_points, torus_size

__all__ = [
    "FieldElement",
    "GaloisField",
    "TorusPoint",
    "eval_monomial",
    "field_new",
    "monomial_row",
    "parse_field_spec",
    "split_prime_power",
    "torus_log_matrix",
    "torus_points",
    "torus_size",
]
