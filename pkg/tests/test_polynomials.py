from fractions import Fraction as Fr

import pytest

from hopfchi.polynomials import (
    RationalPolynomial,
    bernoulli,
    binomial_poly,
    faulhaber_direct,
    faulhaber_poly,
    faulhaber_poly_interpolated,
    faulhaber_reciprocity_rhs,
    faulhaber_value,
    fraction_to_string,
    lagrange_interpolate,
    parse_fraction,
    partial_degrees,
    shifted_faulhaber_poly,
)


def P(*c):
    return RationalPolynomial(c)


def test_arithmetic():
    x = P(0, 1)
    assert (x + 1) * (x - 1) == P(-1, 0, 1)
    assert (x + 1) ** 3 == P(1, 3, 3, 1)
    assert P(1, 2, 0, 0).degree == 1
    assert P().degree == -1 and P().is_zero()
    assert P(1, 2, 3).compose_negate() == P(1, -2, 3)
    assert P(0, 0, 1).shift(1) == P(1, 2, 1)
    assert P(Fr(1, 2), 1)(Fr(1, 2)) == 1
    assert 3 - P(1) == 2


def test_string_forms():
    assert str(P(0, Fr(-5, 6), Fr(5, 2), Fr(-8, 3), 1)) == "n^4 - 8/3*n^3 + 5/2*n^2 - 5/6*n"
    assert P(0, Fr(1, 2)).to_strings() == ["0", "1/2"]
    assert P().to_strings() == ["0"]
    assert fraction_to_string(Fr(4, 2)) == "2"
    assert parse_fraction("-3/9") == Fr(-1, 3)
    with pytest.raises(ValueError):
        parse_fraction("one")


@pytest.mark.parametrize("j,value", [(0, 1), (1, Fr(-1, 2)), (2, Fr(1, 6)), (3, 0), (4, Fr(-1, 30)), (6, Fr(1, 42))])
def test_bernoulli(j, value):
    assert bernoulli(j) == value


def test_bernoulli_recurrence():
    from math import comb

    for m in range(1, 15):
        assert sum(comb(m + 1, k) * bernoulli(k) for k in range(m + 1)) == 0


def test_lagrange_examples():
    assert lagrange_interpolate([(0, 0), (1, 1), (2, 4)]) == P(0, 0, 1)
    assert lagrange_interpolate([(1, 5)]) == P(5)
    assert lagrange_interpolate([(0, 0), (1, 0), (2, 2), (3, 6)]) == P(0, -1, 1)
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 1), (1, 2)])


def test_faulhaber_examples():
    assert faulhaber_value((1,), 4) == 6
    assert faulhaber_value((1, 1), 4) == 11
    assert faulhaber_value((2, 1), 1) == 0
    assert faulhaber_poly((1,)) == P(0, Fr(-1, 2), Fr(1, 2))
    assert faulhaber_poly((2, 3)).degree == 7
    assert partial_degrees((2, 3)) == [3, 7]


def test_faulhaber_direct_against_nested_loops():
    import itertools

    for p in [(1,), (2,), (1, 2), (2, 1, 1), (0, 1), (1, 0)]:
        for n in range(7):
            brute = 0
            for ks in itertools.combinations(range(n), len(p)):
                term = 1
                for k, e in zip(ks, p):
                    term *= k**e
                brute += term
            assert faulhaber_direct(p, n) == brute


def test_closed_form_matches_interpolation_with_zero_exponents():
    # zero exponents are used internally by coloring counts
    for p in [(0,), (0, 0), (0, 2), (1, 0, 1), (0, 0, 0)]:
        assert faulhaber_poly(p) == faulhaber_poly_interpolated(p)


def test_constant_term_is_zero_and_negative_values_use_the_polynomial():
    for p in [(1,), (3,), (1, 2), (2, 1, 1)]:
        assert faulhaber_poly(p).coefficients[0] == 0
        assert faulhaber_value(p, -3) == faulhaber_poly(p)(-3)


def test_reciprocity_examples():
    assert faulhaber_reciprocity_rhs((1,), 2) == 3 == faulhaber_poly((1,))(-2)
    assert faulhaber_reciprocity_rhs((1, 1), 0) == 0 == faulhaber_poly((1, 1))(0)
    assert faulhaber_reciprocity_rhs((2,), 1) == -1 == faulhaber_poly((2,))(-1)
    with pytest.raises(ValueError):
        faulhaber_reciprocity_rhs((1,), -1)


def test_reciprocity_needs_positive_exponents():
    # with a zero exponent the identity breaks already at n = 0
    assert faulhaber_poly((0,))(0) != faulhaber_reciprocity_rhs((0,), 0)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        faulhaber_poly((1, -1))


def test_shifted_faulhaber_counts_from_one():
    import itertools

    for p in [(0,), (1,), (0, 1), (0, 0), (2, 0), (1, 1)]:
        for n in range(6):
            brute = 0
            for ks in itertools.combinations(range(1, n + 1), len(p)):
                term = 1
                for k, e in zip(ks, p):
                    term *= k**e
                brute += term
            assert shifted_faulhaber_poly(p)(n) == brute


def test_binomial_poly():
    from math import comb

    for k in range(5):
        for n in range(8):
            assert binomial_poly(k)(n) == comb(n, k)
