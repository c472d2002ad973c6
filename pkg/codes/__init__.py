"""
Toric code construction: reduced exponents, generator matrices, kernels of
the evaluation map, structural checks and the generator matrix file format.
"""

from .linear_algebra import combine, matrix_rank, row_reduce
from .matrix_io import format_generator, parse_generator, write_generator
from .toric_code import (
    KernelBasis,
    ReducedExponent,
    ToricCode,
    build_code,
    classify_exponents,
    injectivity_check,
    kernel_basis,
    kernel_pairs,
    multicyclic_check,
    reduce_exponent,
    reduced_set,
    same_code,
)

__all__ = [
    "KernelBasis",
    "ReducedExponent",
    "ToricCode",
    "build_code",
    "classify_exponents",
    "combine",
    "format_generator",
    "injectivity_check",
    "kernel_basis",
    "kernel_pairs",
    "matrix_rank",
    "multicyclic_check",
    "parse_generator",
    "reduce_exponent",
    "reduced_set",
    "row_reduce",
    "same_code",
    "write_generator",
]
