"""
Exhaustive Minimum Distance

Scans every nonzero message. The first s generator rows form an inner block
(all q^s combinations, built once per worker); the remaining rows are walked
in q-ary reflected Gray order so each outer step changes one coefficient and
costs a single row update. Outer ranges are split across worker processes.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from codes import ToricCode, combine
from fields import GaloisField
from tools.parallel_search import map_ranges
from utils.config import DEFAULT_GUARDS, Guards, default_jobs
from utils.errors import GuardExceededError, InternalInvariantError
from utils.observability import get_logger, track_operation

logger = get_logger("distance")

# Upper limit on q^s * n entries of the inner block
INNER_BLOCK_BUDGET = 1 << 22


@dataclass(frozen=True)
class ExactResult:
    """Minimum weight and one message (field encodings) attaining it."""

    distance: int
    message: Tuple[int, ...]


def message_count(q: int, k: int) -> int:
    return q ** k - 1


def gray_digits(index: int, q: int, length: int) -> List[int]:
    """
    Digits of the index-th word of the q-ary reflected Gray code.

    Returned least significant first; consecutive indices differ in one
    digit by exactly one.
    """
    raw = []
    for _ in range(length):
        index, d = divmod(index, q)
        raw.append(d)
    digits = [0] * length
    flip = False
    for pos in reversed(range(length)):
        d = q - 1 - raw[pos] if flip else raw[pos]
        digits[pos] = d
        if d % 2:
            flip = not flip
    return digits


def inner_rows(q: int, k: int, n: int) -> int:
    s = 0
    while s < k and q ** (s + 1) * n <= INNER_BLOCK_BUDGET:
        s += 1
    return s


def _inner_block(generator: np.ndarray, field: GaloisField, s: int) -> np.ndarray:
    """Row i holds sum_j c_j g_j with c_j = (i // q^j) % q."""
    block = np.zeros((1, generator.shape[1]), dtype=np.int64)
    for j in range(s):
        parts = [field.add_table[field.mul_table[c, generator[j]][None, :], block] for c in range(field.q)]
        block = np.vstack(parts)
    return block


def _inner_message(index: int, q: int, s: int) -> List[int]:
    return [(index // q ** j) % q for j in range(s)]


def _scan(payload: Tuple[np.ndarray, GaloisField, int], start: int, stop: int) -> Optional[ExactResult]:
    """Minimum weight over outer Gray indices [start, stop)."""
    generator, field, s = payload
    q = field.q
    k, n = generator.shape
    block = _inner_block(generator, field, s)
    block_weights_zero = np.count_nonzero(block, axis=1)
    outer = generator[s:]
    length = k - s

    digits = gray_digits(start, q, length)
    word = np.zeros(n, dtype=np.int64)
    for coeff, row in zip(digits, outer):
        if coeff:
            word = field.add_table[word, field.mul_table[coeff, row]]

    best: Optional[ExactResult] = None
    for index in range(start, stop):
        if index > start:
            new = gray_digits(index, q, length)
            pos = next(i for i in range(length) if new[i] != digits[i])
            delta = field.add_table[new[pos], field.neg_table[digits[pos]]]
            word = field.add_table[word, field.mul_table[delta, outer[pos]]]
            digits = new

        if any(digits):
            weights = np.count_nonzero(field.add_table[block, word[None, :]], axis=1)
        else:
            weights = block_weights_zero.copy()
            weights[0] = n + 1
        i = int(np.argmin(weights))
        weight = int(weights[i])
        if weight <= n and (best is None or weight < best.distance):
            best = ExactResult(weight, tuple(_inner_message(i, q, s) + list(digits)))

    logger.debug("Range scanned", start=start, stop=stop, best=None if best is None else best.distance)
    return best


def exact_min_distance(
    code: ToricCode,
    limit: Optional[int] = None,
    jobs: Optional[int] = None,
    guards: Guards = DEFAULT_GUARDS
) -> ExactResult:
    """
    Minimum Hamming weight over all nonzero codewords.

    Args:
        code: built toric code
        limit: maximum number of messages (defaults to guards.message_limit)
        jobs: worker processes (defaults to TORIC_JOBS or the CPU count)

    Raises:
        GuardExceededError: q^k - 1 exceeds the limit
    """
    limit = guards.message_limit if limit is None else limit
    jobs = default_jobs() if jobs is None else jobs
    field = code.field
    total = message_count(field.q, code.k)
    if total > limit:
        raise GuardExceededError("message_limit", total, limit)

    s = inner_rows(field.q, code.k, code.n)
    outer_total = field.q ** (code.k - s)
    payload = (np.asarray(code.generator), field, s)

    with track_operation("distance", "exact_min_distance", {"q": field.q, "k": code.k, "n": code.n, "jobs": jobs}):
        results = map_ranges(_scan, payload, outer_total, jobs)
        found = [r for r in results if r is not None]
        best = min(found, key=lambda r: r.distance)
        weight = int(np.count_nonzero(combine(np.array(best.message), code.generator, field)))
        if weight != best.distance:
            raise InternalInvariantError(f"witness message has weight {weight}, search reported {best.distance}")
    return best
