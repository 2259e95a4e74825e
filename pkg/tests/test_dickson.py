"""Tests for reversed Dickson polynomials of the (k+1)-th kind."""

from math import comb

import numpy as np
import pytest
from sympy import Rational, binomial

from src.algebra.dickson import (
    DicksonParams, _binomial_rows, binomial_mod_p, coefficients_mod_p, dickson_eval, dickson_poly,
    dickson_recurrence, integer_coefficient, result1_closed_form,
)
from src.algebra.galois_field import build_field, enumerate_elements
from src.algebra.polynomial import Poly, evaluate_all
from src.utils.errors import DomainError, FieldMismatchError


def test_integer_identity_exhaustive():
    for n in range(1, 31):
        for i in range(n // 2 + 1):
            for k in range(13):
                lhs = (n - k * i) * comb(n - i, i)
                assert lhs == (n - i) * integer_coefficient(n, k, i), (n, k, i)


def test_fraction_form_matches_integer_form():
    for n in range(1, 31):
        for i in range(n // 2 + 1):
            for k in range(13):
                fraction = Rational(n - k * i, n - i) * binomial(n - i, i)
                assert fraction == integer_coefficient(n, k, i)


def test_n4_k1_coefficients_are_plain_binomials():
    assert [integer_coefficient(4, 1, i) for i in range(3)] == [1, 3, 1]


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_binomial_mod_p_matches_exact(p):
    m, j = np.meshgrid(np.arange(60), np.arange(-1, 40), indexing="ij")
    got = binomial_mod_p(m.ravel(), j.ravel(), p)
    expected = [comb(a, b) % p if 0 <= b <= a else 0 for a, b in zip(m.ravel(), j.ravel())]
    assert got.tolist() == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_lucas_path_agrees_with_exact_path(p):
    for n in list(range(1, 80)) + [p ** 3 + 2, p ** 3 + 1]:
        for k in range(p):
            exact = coefficients_mod_p(n, k, p, exact_limit=10 ** 6)
            lucas = coefficients_mod_p(n, k, p, exact_limit=0)
            assert np.array_equal(exact, lucas), (n, k)


def test_binomial_rows_shared_across_k(gf7):
    n = 7 ** 3 + 2
    _binomial_rows.cache_clear()
    for k in range(7):
        c = coefficients_mod_p(n, k, 7)
        assert [int(v) for v in c[:20]] == [integer_coefficient(n, k, i) % 7 for i in range(20)]
        c[0] = 99     # callers get their own copy
    info = _binomial_rows.cache_info()
    assert (info.misses, info.hits) == (1, 6)
    assert coefficients_mod_p(n, 1, 7)[0] == 1
    dickson_poly(DicksonParams(n, 3), gf7, reduce=True)
    assert _binomial_rows.cache_info().misses == 1


def test_large_index_uses_lucas_consistently():
    F = build_field(5, 1)
    params = DicksonParams(5 ** 4 + 2, 3)
    assert dickson_poly(params, F, reduce=True) == dickson_poly(params, F, reduce=True, exact_limit=0)


def test_small_examples(gf5, gf7):
    assert dickson_poly(DicksonParams(0, 2), gf5).is_zero
    assert dickson_poly(DicksonParams(0, 3), gf5) == Poly.constant(gf5, 4)
    for k in range(5):
        assert dickson_poly(DicksonParams(1, k), gf5) == Poly.constant(gf5, 1)
    # D_{3,2}(1, x) = 1 - x
    assert dickson_poly(DicksonParams(3, 2), gf5) == Poly(gf5, [1, 4])
    # D_{4,1}(1, x) = 1 - 3x + x^2
    assert dickson_poly(DicksonParams(4, 1), gf7) == Poly(gf7, [1, 4, 1])


def test_unreduced_degree_is_half_n(gf7):
    f = dickson_poly(DicksonParams(20, 1), gf7)
    assert f.degree == 10


def test_eval_examples(gf7):
    for k in range(7):
        for x in enumerate_elements(gf7):
            assert dickson_eval(DicksonParams(0, k), gf7, x) == gf7.scalar(2 - k)
        for n in range(1, 15):
            assert dickson_eval(DicksonParams(n, k), gf7, gf7.zero) == gf7.one


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)])
def test_formula_matches_recurrence(p, e):
    F = build_field(p, e)
    a_values = [None, F.element(2), F.zero, F.element(F.q - 1)]
    for a in a_values:
        for k in range(p):
            for n in range(26):
                direct = dickson_poly(DicksonParams(n, k, a), F)
                assert direct == dickson_recurrence(n, k, F, a), (n, k, a)


def test_k_outside_range_is_rejected(gf5):
    with pytest.raises(DomainError):
        dickson_poly(DicksonParams(4, 5), gf5)
    with pytest.raises(DomainError):
        dickson_poly(DicksonParams(-1, 1), gf5)
    with pytest.raises(DomainError):
        dickson_recurrence(4, -1, gf5)


def test_parameter_a_must_share_field(gf5, gf25):
    with pytest.raises(FieldMismatchError):
        dickson_poly(DicksonParams(4, 1, gf25.one), gf5)


@pytest.mark.parametrize("p,e", [(5, 1), (7, 1), (11, 1), (13, 1), (5, 2), (7, 2), (3, 2)])
def test_closed_form_matches_dickson_q_plus_2(p, e):
    F = build_field(p, e)
    dickson = dickson_poly(DicksonParams(F.q + 2, 0), F, reduce=True)
    assert np.array_equal(evaluate_all(dickson), evaluate_all(result1_closed_form(F)))
