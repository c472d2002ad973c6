"""
Linear algebra over GF(q) on encoded numpy matrices, using the field's
add/mul/neg/inverse tables.
"""

from typing import List, Tuple

import numpy as np

from fields import GaloisField


def row_reduce(matrix: np.ndarray, field: GaloisField) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form over the field.

    Returns:
        (reduced matrix with zero rows dropped, pivot columns)
    """
    M = np.array(matrix, dtype=np.int64, copy=True)
    rows, cols = M.shape
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.nonzero(M[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            M[[row, pivot]] = M[[pivot, row]]
        M[row] = field.mul_table[field.inv_table[M[row, col]], M[row]]
        factors = M[:, col].copy()
        factors[row] = 0
        hit = np.nonzero(factors)[0]
        if len(hit):
            scaled = field.mul_table[factors[hit][:, None], M[row][None, :]]
            M[hit] = field.add_table[M[hit], field.neg_table[scaled]]
        pivots.append(col)
        row += 1
    return M[:row], pivots


def matrix_rank(matrix: np.ndarray, field: GaloisField) -> int:
    if matrix.size == 0:
        return 0
    return len(row_reduce(matrix, field)[1])


def combine(message: np.ndarray, generator: np.ndarray, field: GaloisField) -> np.ndarray:
    """message . generator over the field."""
    word = np.zeros(generator.shape[1], dtype=np.int64)
    for coeff, row in zip(message, generator):
        if coeff:
            word = field.add_table[word, field.mul_table[coeff, row]]
    return word
