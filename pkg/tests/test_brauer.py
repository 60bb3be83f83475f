import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Rational

from fusiondescent.brauer import (CyclicSymbol, Place, QuaternionSymbol,
                                  brauer_classes_equal, br_n, candidate_places,
                                  division_quaternion, generic_symbols,
                                  hilbert_symbol, local_invariant,
                                  quasi_trivial_forms_group, quaternion_is_division,
                                  ramified_places, splits_over, square_free_part)
from fusiondescent.errors import InputError, UnsupportedFieldError
from fusiondescent.fields import FieldClass

from conftest import primes_up_to

nonzero = st.integers(min_value=-50, max_value=50).filter(bool)

DIVISION_FIXTURE = list(itertools.product([-1, 2, -3, 5, 7, -6], repeat=2))


def has_small_zero(a, b, height=200):
    """A non-trivial integer zero of a x^2 + b y^2 - z^2 with |x|, |y| <= height."""
    for x in range(height + 1):
        for y in range(height + 1):
            if not x and not y:
                continue
            value = a * x * x + b * y * y
            if value >= 0 and math.isqrt(value) ** 2 == value:
                return True
    return False


@pytest.mark.parametrize("a, b, place, expected", [
    (-1, -1, Place.real(), -1),
    (-1, -1, Place.finite(2), -1),
    (2, 5, Place.finite(5), -1),
    (1, 7, Place.finite(7), 1),
    (-1, 3, Place.finite(3), -1),
    (Rational(1, 2), 3, Place.finite(3), -1),
    (-1, 5, Place.real(), 1),
])
def test_hilbert_symbol_values(a, b, place, expected):
    assert hilbert_symbol(a, b, place) == expected


def test_zero_is_rejected():
    with pytest.raises(InputError):
        hilbert_symbol(0, 3, Place.real())
    with pytest.raises(InputError):
        QuaternionSymbol(0, 1)


@settings(max_examples=200)
@given(nonzero, nonzero)
def test_product_formula(a, b):
    product = 1
    for v in candidate_places(a, b):
        product *= hilbert_symbol(a, b, v)
    assert product == 1
    ramified = {v.prime for v in candidate_places(a, b)}
    for p in primes_up_to(60):
        if p not in ramified:
            assert hilbert_symbol(a, b, Place.finite(p)) == 1


@given(nonzero, nonzero, st.integers(min_value=1, max_value=30),
       st.sampled_from([0, 2, 3, 5, 7]))
def test_square_classes_and_symmetry(a, b, c, p):
    v = Place(p)
    assert hilbert_symbol(a * c * c, b, v) == hilbert_symbol(a, b, v)
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    assert hilbert_symbol(a, -a, v) == 1


@settings(max_examples=100)
@given(nonzero, nonzero)
def test_ramification_sets_are_even(a, b):
    assert len(ramified_places(QuaternionSymbol(a, b))) % 2 == 0


@pytest.mark.parametrize("a, b", DIVISION_FIXTURE)
def test_division_matches_small_search(a, b):
    assert quaternion_is_division(QuaternionSymbol(a, b)) != has_small_zero(a, b)


def test_hamilton_quaternions():
    H = QuaternionSymbol(-1, -1)
    assert ramified_places(H) == (Place.real(), Place.finite(2))
    assert quaternion_is_division(H)
    assert local_invariant(H, Place.real()) == Rational(1, 2)
    assert local_invariant(H, Place.finite(3)) == 0
    assert not quaternion_is_division(QuaternionSymbol(1, 7))
    assert brauer_classes_equal(QuaternionSymbol(-1, -5), H)
    assert not brauer_classes_equal(QuaternionSymbol(-1, 3), H)


@pytest.mark.parametrize("x, expected", [(12, 3), (-18, -2), (Rational(3, 4), 3),
                                         (Rational(1, 2), 2), (1, 1)])
def test_square_free_part(x, expected):
    assert square_free_part(x) == expected


@pytest.mark.parametrize("K, n, expected", [
    (FieldClass.real(), 2, (2,)),
    (FieldClass.real(), 3, ()),
    (FieldClass.padic(5), 4, (4,)),
    (FieldClass.finite(9), 2, ()),
    (FieldClass.algebraically_closed(), 6, ()),
])
def test_br_n(K, n, expected):
    group = br_n(K, n)
    assert group.is_finite
    assert group.invariant_factors == expected


def test_br_n_over_Q_is_infinite():
    group = br_n(FieldClass.rational(), 2)
    assert not group.is_finite
    assert group.order is None
    assert group.to_json()["finite"] is False


def test_br_n_over_function_fields_is_unsupported():
    with pytest.raises(UnsupportedFieldError):
        br_n(FieldClass.function_field(2), 2)


@pytest.mark.parametrize("orders, K, expected", [
    ([2], FieldClass.real(), (2,)),
    ([3, 5], FieldClass.real(), ()),
    ([2, 4], FieldClass.padic(3), (2, 4)),
    ([2, 2, 3], FieldClass.padic(7), (2, 6)),
])
def test_quasi_trivial_forms_group(orders, K, expected):
    assert quasi_trivial_forms_group(orders, K).invariant_factors == expected


def test_quasi_trivial_forms_over_Q_are_described():
    group = quasi_trivial_forms_group([2, 3], FieldClass.rational())
    assert not group.is_finite
    assert "Br_2(K) + Br_3(K)" in str(group)


@pytest.mark.parametrize("K", [FieldClass.real(), FieldClass.padic(2)]
                         + [FieldClass.padic(p) for p in primes_up_to(40)[1:]])
def test_division_quaternion_does_not_split(K):
    assert not splits_over(division_quaternion(K), K)


def test_division_quaternion_over_Q():
    assert quaternion_is_division(division_quaternion(FieldClass.rational()))
    with pytest.raises(UnsupportedFieldError):
        division_quaternion(FieldClass.finite(5))


def test_hamilton_quaternions_split_away_from_two():
    assert splits_over(QuaternionSymbol(-1, -1), FieldClass.padic(3))


def test_places():
    assert Place.parse("real").is_real
    assert Place.parse("7") == Place.finite(7)
    assert Place.from_json({"p": 3}).to_json() == {"p": 3}
    assert Place.from_json("real").to_json() == "real"
    with pytest.raises(InputError):
        Place.parse("x")
    with pytest.raises(InputError):
        Place.finite(4)


@pytest.mark.parametrize("token", ["real", "inf", "R", " inf "])
def test_real_place_tokens(token):
    assert Place.parse(token) == Place.real()


@pytest.mark.parametrize("text", ["0", "1", "-3", "6", "infinity", ""])
def test_finite_places_need_a_prime(text):
    with pytest.raises(InputError):
        Place.parse(text)


@pytest.mark.parametrize("payload", [{"p": 0}, {"p": 1}, {"p": "real"}, 0, 9,
                                     {"p": 5, "q": 7}, None])
def test_place_payloads_need_a_prime(payload):
    with pytest.raises(InputError):
        Place.from_json(payload)


def test_zero_is_not_the_real_place():
    with pytest.raises(InputError):
        hilbert_symbol(2, 5, Place.parse("0"))
    with pytest.raises(InputError):
        Place.finite(0)
    assert Place.from_json(5) == Place.parse("5") == Place.finite(5)


def test_symbolic_algebras():
    first, second = generic_symbols(2)
    assert not first.is_rational
    assert first.to_json() == {"type": "quaternion", "a": "a1", "b": "b1"}
    with pytest.raises(InputError):
        ramified_places(second)
    cyclic, = generic_symbols(1, p=3)
    assert cyclic.to_json() == {"type": "cyclic", "a": "a1", "b": "b1", "p": 3}
    with pytest.raises(InputError):
        CyclicSymbol(2, 3, 2)
