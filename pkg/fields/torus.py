"""
Algebraic Torus

Points of T = (F_q*)^r stored as discrete-log vectors, in lexicographic log
order. That order is the coordinate order of every codeword.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import DimensionMismatchError, GuardExceededError, InputError

from .galois_field import FieldElement, GaloisField


@dataclass(frozen=True)
class TorusPoint:
    """t = (g^logs[0], ..., g^logs[r-1])"""

    logs: Tuple[int, ...]

    def coordinates(self, field: GaloisField) -> Tuple[FieldElement, ...]:
        return tuple(field.exp(e) for e in self.logs)


def torus_size(field: GaloisField, r: int) -> int:
    return field.order ** r


def _check_torus(field: GaloisField, r: int, guards: Guards) -> None:
    if r < 1:
        raise InputError(f"torus dimension must be at least 1, got {r}")
    n = torus_size(field, r)
    if n > guards.max_torus:
        raise GuardExceededError("max_torus", n, guards.max_torus)


def torus_points(field: GaloisField, r: int, guards: Guards = DEFAULT_GUARDS) -> Iterator[TorusPoint]:
    """All (q-1)^r torus points, lexicographic by log vector."""
    _check_torus(field, r, guards)
    for logs in itertools.product(range(field.order), repeat=r):
        yield TorusPoint(logs)


def torus_log_matrix(field: GaloisField, r: int, guards: Guards = DEFAULT_GUARDS) -> np.ndarray:
    """(q-1)^r x r array of torus logs in canonical order."""
    _check_torus(field, r, guards)
    return np.indices((field.order,) * r).reshape(r, -1).T.astype(np.int64)


def eval_monomial(field: GaloisField, u: Sequence[int], t: TorusPoint) -> FieldElement:
    """chi^u(t); exponents are reduced mod q - 1, so negative u is fine."""
    if len(u) != len(t.logs):
        raise DimensionMismatchError(f"exponent of dimension {len(u)} at a point of dimension {len(t.logs)}")
    return field.exp(sum(a * e for a, e in zip(u, t.logs)))


def monomial_row(field: GaloisField, u: Sequence[int], logs: np.ndarray) -> np.ndarray:
    """Encodings of chi^u at every row of a torus log matrix."""
    if len(u) != logs.shape[1]:
        raise DimensionMismatchError(f"exponent of dimension {len(u)} on a torus of dimension {logs.shape[1]}")
    reduced = np.array([x % field.order for x in u], dtype=np.int64)
    return field.exp_table[logs.dot(reduced) % field.order]
