import pytest
from hypothesis import given, strategies as st

from kleshchev.laurent import (
    ONE,
    ZERO,
    InexactDivisionError,
    LaurentPoly,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
)

v = LaurentPoly.v()

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_arith_examples():
    assert (v + 1) + (v ** -1 - 1) == v + v ** -1
    assert (v - v ** -1) * 0 == ZERO
    assert (v + v ** -1) ** 2 == v ** 2 + 2 + v ** -2
    assert (v ** 2 - 3 * v ** -1).bar() == v ** -2 - 3 * v
    assert (v + v ** -1).bar() == v + v ** -1


def test_canonical_form_drops_zeros():
    p = LaurentPoly({3: 0, 1: 2})
    assert p.to_pairs() == [[1, 2]]
    assert LaurentPoly({0: 0}) == ZERO
    assert hash(v - v) == hash(ZERO)


def test_printing():
    assert str(v ** -1 + 2 + v) == "v^-1 + 2 + v"
    assert str(ZERO) == "0"
    assert str(v ** 2 - 1) == "-1 + v^2"


def test_quantum_numbers():
    assert quantum_integer(2) == v + v ** -1
    assert quantum_integer(0) == ZERO
    assert quantum_integer(1) == ONE
    assert quantum_integer(-2) == -(v + v ** -1)
    assert quantum_factorial(2) == v + v ** -1
    assert quantum_binomial(4, 2) == v ** 4 + v ** 2 + 2 + v ** -2 + v ** -4


def test_predicates():
    assert (v + v ** 2).in_positive_v_span()
    assert not (1 + v).in_positive_v_span()
    assert (v + v ** -1).is_bar_symmetric()
    assert (v + v ** -1).evaluate_at_one() == 2
    assert ZERO.in_positive_v_span()


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys, polys)
def test_bar_is_ring_involution(p, q):
    assert p.bar().bar() == p
    assert (p * q).bar() == p.bar() * q.bar()
    assert (p + q).bar() == p.bar() + q.bar()
    assert p.evaluate_at_one() == p.bar().evaluate_at_one()


@given(polys)
def test_bar_symmetric_correction(p):
    c = p.bar_symmetric_correction()
    assert c.is_bar_symmetric()
    assert (p - c).in_positive_v_span()


@given(polys, polys.filter(bool))
def test_exact_division_roundtrip(p, q):
    assert (p * q).exact_div(q) == p


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (v + 2).exact_div(v + v ** -1)


@given(st.integers(-12, 12))
def test_quantum_integer_properties(n):
    q = quantum_integer(n)
    assert q.is_bar_symmetric()
    assert q.evaluate_at_one() == n
    assert q * (v - v ** -1) == v ** n - v ** -n


@given(st.integers(0, 8), st.integers(0, 8))
def test_binomial_is_polynomial_ratio(n, k):
    if k > n:
        return
    b = quantum_binomial(n, k)
    assert b * quantum_factorial(k) * quantum_factorial(n - k) == quantum_factorial(n)
