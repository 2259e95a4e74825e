"""Tests for dense polynomials over GF(q)."""

import pytest
from sympy import Poly as SymPoly
from sympy import symbols

from src.algebra.galois_field import build_field, enumerate_elements
from src.algebra.polynomial import (
    Poly, degree, evaluate, evaluate_all, evaluate_monomials, fold_exponent, format_poly,
    mul, parse_poly, pow_mod, reduce_mod_qx, scale,
)
from src.utils.errors import DomainError, FieldMismatchError, ParseError

X = symbols("x")


def _random_poly(F, rng, max_degree):
    return Poly(F, rng.integers(0, F.q, size=max_degree + 1))


def test_trailing_zeros_are_stripped(gf5):
    f = Poly(gf5, [1, 2, 0, 0])
    assert f.coeffs == (1, 2)
    assert degree(f) == 1


def test_degree_examples(gf5):
    assert degree(Poly(gf5, [1, 0, 0, 1])) == 3
    assert degree(Poly.constant(gf5, 5)) is None
    assert Poly.constant(gf5, 5).is_zero
    assert degree(Poly(gf5, [0, 2])) == 1


def test_codes_are_read_only(gf5):
    f = Poly(gf5, [1, 2, 3])
    with pytest.raises(ValueError):
        f.codes[0] = 4


def test_rejects_out_of_range_codes(gf5):
    with pytest.raises(DomainError):
        Poly(gf5, [0, 5])


def test_element_coefficients_must_share_field(gf5, gf25):
    with pytest.raises(FieldMismatchError):
        Poly(gf5, [gf25.one])
    assert Poly(gf25, [gf25.one, gf25.element(7)]).coeffs == (1, 7)


def test_ring_examples(gf3, gf5):
    x = Poly.x(gf5)
    assert (x + 1) * (x - 1) == Poly(gf5, [4, 0, 1])
    assert (x * Poly.zero(gf5)).is_zero
    assert scale(gf3.element(2), Poly(gf3, [0, 1, 1])) == Poly(gf3, [0, 2, 2])


@pytest.mark.parametrize("p", [3, 5, 7, 13])
def test_mul_matches_sympy(p, rng):
    F = build_field(p, 1)
    for _ in range(30):
        f = _random_poly(F, rng, int(rng.integers(0, 12)))
        g = _random_poly(F, rng, int(rng.integers(0, 12)))
        expected = SymPoly(list(reversed(f.coeffs)) or [0], X, modulus=p) * \
            SymPoly(list(reversed(g.coeffs)) or [0], X, modulus=p)
        coeffs = [int(c) % p for c in reversed(expected.all_coeffs())] if not expected.is_zero else []
        assert mul(f, g).coeffs == tuple(coeffs)


def test_add_sub_neg(gf25, rng):
    for _ in range(20):
        f = _random_poly(gf25, rng, 6)
        g = _random_poly(gf25, rng, 9)
        assert (f + g) - g == f
        assert (f - f).is_zero
        assert -(-f) == f


def test_fold_exponent():
    assert fold_exponent(0, 9) == 0
    assert fold_exponent(9, 9) == 1
    assert fold_exponent(8, 9) == 8
    assert fold_exponent(17, 9) == 1
    assert fold_exponent(4, 3) == 2


def test_reduce_examples(gf3, gf9):
    assert reduce_mod_qx(Poly.monomial(gf9, 9)) == Poly.x(gf9)
    assert reduce_mod_qx(Poly.monomial(gf3, 4)) == Poly.monomial(gf3, 2)


@pytest.mark.parametrize("e,m", [(1, 0), (1, 2), (2, 0), (2, 2), (3, 2)])
def test_reduce_binomial_exponent_for_even_m(e, m):
    F = build_field(3, e)
    l = m * e + 1
    f = Poly.from_terms(F, {(3 ** l - 1) // 2: 1})
    assert f == Poly.x(F)


@pytest.mark.parametrize("p,e", [(5, 1), (3, 2), (5, 2)])
def test_reduce_preserves_the_induced_map(p, e, rng):
    F = build_field(p, e)
    for _ in range(25):
        f = _random_poly(F, rng, 3 * F.q)
        g = reduce_mod_qx(f)
        assert degree(g) is None or degree(g) <= F.q - 1
        for x in enumerate_elements(F):
            assert evaluate(g, x) == _horner_unreduced(f, x)


def _horner_unreduced(f, x):
    acc = x.field.zero
    for c in reversed(f.elements):
        acc = acc * x + c
    return acc


def test_from_terms_folds_huge_exponents(gf5):
    f = Poly.from_terms(gf5, {5 ** 7: 1, 1: 1})
    assert f == Poly(gf5, [0, 2])


def test_from_terms_sums_colliding_exponents(gf5):
    f = Poly.from_terms(gf5, {1: 3, 5: 2})
    assert f == Poly.constant(gf5, 0)


def test_pow_mod_examples(gf5):
    x2 = Poly.monomial(gf5, 2)
    assert pow_mod(x2, 0) == Poly.constant(gf5, 1)
    assert pow_mod(x2, 2) == Poly.monomial(gf5, 4)
    assert pow_mod(x2, 3) == Poly.monomial(gf5, 2)
    with pytest.raises(DomainError):
        pow_mod(x2, -1)


def test_pow_mod_matches_repeated_multiplication(gf9, rng):
    f = _random_poly(gf9, rng, 5)
    acc = Poly.constant(gf9, 1)
    for s in range(1, 12):
        acc = reduce_mod_qx(mul(acc, f))
        assert pow_mod(f, s) == acc


def test_evaluate_examples(gf3, gf5):
    assert evaluate(Poly(gf3, [1, 1]), gf3.element(2)) == gf3.zero
    assert evaluate(Poly(gf5, [0, 1, 1, 3]), gf5.one) == gf5.zero
    gf7 = build_field(7, 1)
    assert evaluate(Poly(gf7, [0, 6, 0, 3, 1]), gf7.element(4)).code == 3


def test_evaluate_all_matches_pointwise(gf25, rng):
    f = _random_poly(gf25, rng, 40)
    values = evaluate_all(f)
    assert [int(v) for v in values] == [evaluate(f, x).code for x in enumerate_elements(gf25)]


def test_evaluate_monomials_zero_to_zero(gf9):
    assert evaluate_monomials(gf9, 0).tolist() == [1] * 9
    assert evaluate_monomials(gf9, 1).tolist() == list(range(9))


def test_evaluate_rejects_foreign_point(gf5, gf25):
    with pytest.raises(FieldMismatchError):
        evaluate(Poly.x(gf5), gf25.one)


def test_text_format(gf5):
    f = parse_poly(gf5, "0,1,1,3")
    assert f.coeffs == (0, 1, 1, 3)
    assert format_poly(f) == "0,1,1,3"
    assert format_poly(Poly.zero(gf5)) == "0"
    assert parse_poly(gf5, "0").is_zero


@pytest.mark.parametrize("text", ["0,5", "1,-1", "1,x", "1,,2"])
def test_parse_poly_rejects_malformed(gf5, text):
    with pytest.raises(ParseError):
        parse_poly(gf5, text)
