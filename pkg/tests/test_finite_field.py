"""
Test Suite for Finite Field Arithmetic

Checks the deterministic GF(p^m) construction against the galois package:
modulus irreducibility, generator primitivity, multiplication tables and
ranks of random matrices.
"""

import itertools
import sys
from pathlib import Path

import galois
import numpy as np
import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from codes import matrix_rank, row_reduce
from fields import (
    TorusPoint,
    eval_monomial,
    field_new,
    monomial_row,
    parse_field_spec,
    split_prime_power,
    torus_log_matrix,
    torus_points,
    torus_size,
)
from fields.galois_field import is_irreducible, smallest_irreducible
from utils.config import Guards
from utils.errors import DimensionMismatchError, FieldError, GuardExceededError

FIELD_SIZES = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4)]


def get_galois_oracle(F):
    """The same field as a galois.GF class, element integers unchanged"""
    if F.m == 1:
        return galois.GF(F.p)
    return galois.GF(F.q, irreducible_poly=galois.Poly(list(reversed(F.modulus)), field=galois.GF(F.p)))


# ============================================================================
# CONSTRUCTION
# ============================================================================

def test_prime_field_generator():
    F = field_new(5)
    assert F.generator == 2, f"Smallest generator of GF(5)* is 2, got {F.generator}"
    assert list(F.exp_table) == [1, 2, 4, 3]
    assert F.modulus == (0, 1)


def test_gf8_modulus():
    """Smallest monic irreducible cubic over GF(2) in (c0, c1, c2) order is x^3 + x^2 + 1"""
    F = field_new(2, 3)
    assert F.modulus == (1, 0, 1, 1), f"Got modulus {F.modulus}"
    assert F.generator == 2


def test_is_irreducible_matches_galois():
    for p, degree in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        GFp = galois.GF(p)
        for low in itertools.product(range(p), repeat=degree):
            poly = list(low) + [1]
            expected = galois.Poly(list(reversed(poly)), field=GFp).is_irreducible()
            assert is_irreducible(poly, p) == expected, f"Disagreement on {poly} over GF({p})"


@pytest.mark.parametrize("p,m", FIELD_SIZES)
def test_modulus_and_generator_against_galois(p, m):
    F = field_new(p, m)
    assert F.modulus == smallest_irreducible(p, m)
    oracle = get_galois_oracle(F)
    assert oracle.order == F.q
    g = oracle(F.generator)
    assert int(g.multiplicative_order()) == F.q - 1, "Generator must be primitive"
    smaller = [x for x in range(1, F.generator) if int(oracle(x).multiplicative_order()) == F.q - 1]
    assert not smaller, f"{smaller} are primitive and smaller than {F.generator}"


@pytest.mark.parametrize("p,m", FIELD_SIZES)
def test_tables_against_galois(p, m):
    F = field_new(p, m)
    oracle = get_galois_oracle(F)
    elements = oracle(np.arange(F.q))
    assert np.array_equal(np.array(elements[:, None] * elements[None, :]), F.mul_table)
    assert np.array_equal(np.array(elements[:, None] + elements[None, :]), F.add_table)
    assert np.array_equal(np.array(-elements), F.neg_table)
    nonzero = oracle(np.arange(1, F.q))
    assert np.array_equal(np.array(nonzero ** -1), F.inv_table[1:])


def test_field_axioms_gf9():
    F = field_new(3, 2)
    elements = F.elements()
    for a, b, c in itertools.product(elements, repeat=3):
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
    for a in elements[1:]:
        assert a * a.inverse() == F.one
        assert a / a == F.one
        assert F.exp(F.log(a)) == a
        assert a ** (F.q - 1) == F.one


def test_field_errors():
    F = field_new(7)
    with pytest.raises(FieldError):
        F.zero.inverse()
    with pytest.raises(FieldError):
        F(3) + field_new(5)(3)
    with pytest.raises(FieldError):
        F.log(F.zero)
    with pytest.raises(FieldError):
        F(7)
    with pytest.raises(FieldError):
        field_new(6)
    with pytest.raises(FieldError):
        field_new(2, 0)
    with pytest.raises(GuardExceededError):
        field_new(2, 9, Guards(max_field=256))


def test_field_instances_are_cached():
    assert field_new(3, 2) is field_new(3, 2)
    assert field_new(3, 2) == field_new(3, 2)
    assert repr(field_new(3, 2)) == "GF(3^2)"


def test_parse_field_spec():
    assert parse_field_spec("q=8") == (2, 3)
    assert parse_field_spec("q=7") == (7, 1)
    assert parse_field_spec("p=3,m=2") == (3, 2)
    assert split_prime_power(49) == (7, 2)
    for bad in ("q=6", "q=1", "8", "p=2"):
        with pytest.raises(FieldError):
            parse_field_spec(bad)


# ============================================================================
# LINEAR ALGEBRA OVER GF(q)
# ============================================================================

def test_rank_against_galois():
    """100 random matrices over GF(5), GF(8) and GF(9)"""
    rng = np.random.default_rng(1234)
    for trial in range(100):
        p, m = [(5, 1), (2, 3), (3, 2)][trial % 3]
        F = field_new(p, m)
        rows, cols = rng.integers(1, 7, size=2)
        M = rng.integers(0, F.q, size=(rows, cols))
        if trial % 4 == 0:
            M[-1] = M[0]
        expected = int(np.linalg.matrix_rank(get_galois_oracle(F)(M)))
        assert matrix_rank(M, F) == expected, f"Rank mismatch on {M.tolist()} over GF({F.q})"


def test_row_reduce_pivots():
    F = field_new(3)
    reduced, pivots = row_reduce(np.array([[0, 1, 2], [0, 2, 1], [1, 1, 1]]), F)
    assert pivots == [0, 1]
    assert reduced.tolist() == [[1, 0, 2], [0, 1, 2]]


# ============================================================================
# TORUS
# ============================================================================

def test_torus_order():
    F = field_new(3)
    logs = torus_log_matrix(F, 2)
    assert logs.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert [t.logs for t in torus_points(F, 2)] == [tuple(row) for row in logs.tolist()]
    assert torus_size(F, 3) == 8


def test_monomial_row_matches_pointwise_evaluation():
    F = field_new(2, 3)
    logs = torus_log_matrix(F, 2)
    for u in [(0, 0), (1, 0), (2, 3), (-1, 9)]:
        row = monomial_row(F, u, logs)
        expected = [eval_monomial(F, u, TorusPoint(tuple(t))).encoding for t in logs.tolist()]
        assert row.tolist() == expected


def test_torus_guards():
    F = field_new(5)
    with pytest.raises(GuardExceededError):
        list(torus_points(F, 3, Guards(max_torus=50)))
    with pytest.raises(DimensionMismatchError):
        monomial_row(F, (1, 2, 3), torus_log_matrix(F, 2))
