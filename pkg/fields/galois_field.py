"""
Galois Field Arithmetic

GF(p^m) with a deterministic representation: elements are integers whose
base-p digits are polynomial coefficients (least significant digit = constant
term), reduced modulo the lexicographically smallest monic irreducible
polynomial of degree m. The multiplicative generator is the smallest encoding
of order q - 1. Arithmetic runs on precomputed numpy tables.
"""

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import galois
import numpy as np

from utils.config import DEFAULT_GUARDS, Guards
from utils.errors import FieldError, GuardExceededError
from utils.observability import get_logger

logger = get_logger("fields")


# ---------------------------------------------------------------------------
# Polynomials over GF(p), coefficient lists low degree first
# ---------------------------------------------------------------------------

def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: List[int], b: List[int], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial b."""
    a = _trim(list(a))
    db = len(b) - 1
    while len(a) - 1 >= db:
        factor = a[-1]
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _monic_polys(p: int, degree: int):
    """Monic polynomials of a degree, in lexicographic order of (c0, c1, ...)."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly: List[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree at most deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for divisor in _monic_polys(p, d):
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    for poly in _monic_polys(p, m):
        if is_irreducible(poly, p):
            return tuple(poly)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------
# Field
# ---------------------------------------------------------------------------

class GaloisField:
    """
    GF(p^m) with generator and log/exp tables.

    Attributes:
        p, m, q: characteristic, degree, order
        modulus: coefficients c0..cm of the defining polynomial (cm = 1)
        generator: encoding of the fixed primitive element g
        exp_table: exp_table[e] = g^e for 0 <= e < q - 1
        log_table: inverse of exp_table on nonzero encodings (entry 0 unused)
    """

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = smallest_irreducible(p, m)

        q, order = self.q, self.q - 1
        digits = np.array([[(x // p ** i) % p for i in range(m)] for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        self.add_table = ((digits[:, None, :] + digits[None, :, :]) % p).dot(weights)
        self.neg_table = ((-digits) % p).dot(weights)

        self.generator = next(g for g in range(1, q) if self._order(g) == order)
        exp = [1]
        for _ in range(order - 1):
            exp.append(self._poly_mul(exp[-1], self.generator))
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.zeros(q, dtype=np.int64)
        self.log_table[self.exp_table] = np.arange(order)

        nonzero = np.arange(1, q)
        self.mul_table = np.zeros((q, q), dtype=np.int64)
        logs = self.log_table[nonzero]
        self.mul_table[1:, 1:] = self.exp_table[(logs[:, None] + logs[None, :]) % order]
        self.inv_table = np.zeros(q, dtype=np.int64)
        self.inv_table[nonzero] = self.exp_table[(-logs) % order]

        for table in (self.add_table, self.neg_table, self.exp_table, self.log_table, self.mul_table, self.inv_table):
            table.setflags(write=False)

        logger.debug("Field constructed", q=q, modulus=list(self.modulus), generator=self.generator)

    def _poly_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = [(a // p ** i) % p for i in range(m)]
        db = [(b // p ** i) % p for i in range(m)]
        product = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    product[i + j] = (product[i + j] + x * y) % p
        reduced = _poly_mod(product, list(self.modulus), p)
        return sum(c * p ** i for i, c in enumerate(reduced))

    def _order(self, g: int) -> int:
        x, k = g, 1
        while x != 1:
            x = self._poly_mul(x, g)
            k += 1
        return k

    @property
    def order(self) -> int:
        """Size of the multiplicative group."""
        return self.q - 1

    def __call__(self, encoding: int) -> "FieldElement":
        return FieldElement(self, encoding)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, x) for x in range(self.q)]

    def exp(self, e: int) -> "FieldElement":
        return FieldElement(self, int(self.exp_table[e % self.order]))

    def log(self, x: "FieldElement") -> int:
        if x.encoding == 0:
            raise FieldError("zero has no discrete logarithm")
        return int(self.log_table[x.encoding])

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisField) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a GaloisField, stored by its integer encoding."""

    field: GaloisField
    encoding: int

    def __post_init__(self):
        if not 0 <= self.encoding < self.field.q:
            raise FieldError(f"encoding {self.encoding} outside [0, {self.field.q})")
        object.__setattr__(self, "encoding", int(self.encoding))

    def _peer(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise FieldError(f"cannot combine a field element with {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(f"cannot combine elements of {self.field} and {other.field}")
        return other.encoding

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, int(self.field.add_table[self.encoding, self._peer(other)]))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, int(self.field.neg_table[self.encoding]))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, int(self.field.mul_table[self.encoding, self._peer(other)]))

    def inverse(self) -> "FieldElement":
        if self.encoding == 0:
            raise FieldError("zero is not invertible")
        return FieldElement(self.field, int(self.field.inv_table[self.encoding]))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._peer(other)
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if self.encoding == 0:
            if exponent < 0:
                raise FieldError("zero is not invertible")
            return self.field.one if exponent == 0 else self.field.zero
        return self.field.exp(self.field.log(self) * exponent)

    def __int__(self) -> int:
        return self.encoding

    def __repr__(self) -> str:
        return f"{self.encoding}"


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int) -> GaloisField:
    return GaloisField(p, m)


def field_new(p: int, m: int = 1, guards: Guards = DEFAULT_GUARDS) -> GaloisField:
    """
    Deterministic GF(p^m).

    Raises:
        FieldError: p is not prime or m < 1
        GuardExceededError: p^m exceeds guards.max_field
    """
    if m < 1:
        raise FieldError(f"extension degree must be at least 1, got {m}")
    if p < 2 or not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    q = p ** m
    if q > guards.max_field:
        raise GuardExceededError("max_field", q, guards.max_field)
    return _cached_field(p, m)


_Q_SPEC = re.compile(r"^\s*q\s*=\s*(\d+)\s*$")
_PM_SPEC = re.compile(r"^\s*p\s*=\s*(\d+)\s*,\s*m\s*=\s*(\d+)\s*$")


def parse_field_spec(spec: str) -> Tuple[int, int]:
    """
    Parse "q=<int>" or "p=<int>,m=<int>" into (p, m).

    Raises:
        FieldError: malformed spec or q not a prime power
    """
    match = _Q_SPEC.match(spec)
    if match:
        return split_prime_power(int(match.group(1)))
    match = _PM_SPEC.match(spec)
    if match:
        return int(match.group(1)), int(match.group(2))
    raise FieldError(f"field spec '{spec}' is not 'q=<int>' or 'p=<int>,m=<int>'")


def split_prime_power(q: int) -> Tuple[int, int]:
    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"q = {q} is not a prime power")
    primes, exponents = galois.factors(q)
    return int(primes[0]), int(exponents[0])
