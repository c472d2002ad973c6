"""
Exact Linear Algebra

Small dense linear algebra over the rationals (fractions.Fraction) and
vectorized exact integer determinants on numpy arrays. Nothing here touches
floating point.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

import numpy as np

Number = int | Fraction

# Above this coordinate magnitude the integer kernels switch to Python ints.
_INT64_SAFE = 1 << 12


def to_fraction_rows(rows: Sequence[Sequence[Number]]) -> List[List[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(rows: Sequence[Sequence[Number]]) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Reduced row echelon form over Q.

    Returns:
        (reduced rows, pivot column indices)
    """
    m = to_fraction_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m[:row], pivots


def rank(rows: Sequence[Sequence[Number]]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence[Number]], ncols: int) -> List[Tuple[int, ...]]:
    """Integer basis of {x : rows . x = 0}, each vector primitive."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    reduced, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(primitive(vec))
    return basis


def solve(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> Optional[Tuple[Fraction, ...]]:
    """Unique solution of a square system, or None when singular."""
    n = len(matrix)
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = row_echelon(augmented)
    if pivots != list(range(n)):
        return None
    return tuple(reduced[i][n] for i in range(n))


def primitive(vec: Sequence[Number]) -> Tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on the same ray."""
    fracs = [Fraction(x) for x in vec]
    denom = reduce(lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * denom) for f in fracs]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def common_denominator(points: Sequence[Sequence[Number]]) -> int:
    return reduce(lcm, (Fraction(x).denominator for p in points for x in p), 1)


def det(matrix: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant by fraction elimination."""
    m = to_fraction_rows(matrix)
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        result *= m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                factor = m[i][col] / m[col][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[col])]
    return result


def integer_array(points: Sequence[Sequence[int]]) -> np.ndarray:
    """numpy array of integer points; object dtype when int64 could overflow."""
    biggest = max((abs(int(x)) for p in points for x in p), default=0)
    if biggest < _INT64_SAFE:
        return np.array(points, dtype=np.int64)
    return np.array([[int(x) for x in p] for p in points], dtype=object)


def batched_det(arr: np.ndarray) -> np.ndarray:
    """
    Exact determinants of a stack of small integer matrices, shape (..., k, k).

    Laplace expansion along the first row; k is at most 4 here.
    """
    k = arr.shape[-1]
    if k == 0:
        return np.ones(arr.shape[:-2], dtype=arr.dtype)
    if k == 1:
        return arr[..., 0, 0]
    if k == 2:
        return arr[..., 0, 0] * arr[..., 1, 1] - arr[..., 0, 1] * arr[..., 1, 0]
    total = None
    for j in range(k):
        minor = np.delete(np.delete(arr, 0, axis=-2), j, axis=-1)
        term = arr[..., 0, j] * batched_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def batched_normals(diffs: np.ndarray) -> np.ndarray:
    """
    Generalized cross products of stacked (r-1) x r difference matrices.

    The result is orthogonal to every row; it is zero when the rows are
    linearly dependent.
    """
    r = diffs.shape[-1]
    cols = []
    for j in range(r):
        minor = np.delete(diffs, j, axis=-1)
        value = batched_det(minor)
        cols.append(value if j % 2 == 0 else -value)
    return np.stack(cols, axis=-1)


def row_gcd(arr: np.ndarray) -> np.ndarray:
    """gcd of the absolute values along the last axis."""
    if arr.dtype == object:
        return np.array([reduce(gcd, (abs(int(x)) for x in row), 0) for row in arr], dtype=object)
    return np.gcd.reduce(np.abs(arr), axis=-1)
