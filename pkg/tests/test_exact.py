from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tnbraid.exact import (
    Polynomial,
    RationalFunction,
    eval_poly,
    format_scalar,
    interpolate,
    normalize_ratfn,
    parse_scalar,
    poly_gcd,
)

MU = RationalFunction.mu()


def P(*coeffs):
    return Polynomial(coeffs)


small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(st.integers(-6, 6), min_size=0, max_size=4).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfns = st.builds(lambda n, d: RationalFunction(n, d), polys, nonzero_polys)
nonzero_ratfns = ratfns.filter(bool)


class TestNormalize:
    def test_common_factor_cancels(self):
        r = normalize_ratfn(P(-1, 0, 1), P(-1, 1))
        assert r.num == P(1, 1) and r.den == P(1)

    def test_zero(self):
        r = normalize_ratfn(P(), P(3, 1))
        assert r.num.is_zero() and r.den == P(1)

    def test_monic_denominator(self):
        r = normalize_ratfn(P(0, 2), P(2))
        assert r.num == P(0, 1) and r.den == P(1)

    def test_sign_goes_to_numerator(self):
        r = normalize_ratfn(P(1), P(-1, -1))
        assert r.num == P(-1) and r.den == P(1, 1)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            normalize_ratfn(P(1), P())


class TestGcd:
    def test_shared_root(self):
        assert poly_gcd(P(-1, 0, 1), P(1, -2, 1)) == P(-1, 1)

    def test_with_zero(self):
        assert poly_gcd(P(2, 4), P()) == P(Fraction(1, 2), 1)
        assert poly_gcd(P(), P()).is_zero()

    def test_coprime(self):
        # mu^2 + 1 = (mu + 2)(mu - 2) + 5
        assert poly_gcd(P(1, 0, 1), P(2, 1)) == P(1)


class TestEval:
    def test_examples(self):
        assert eval_poly(P(1, 0, 1), Fraction(2)) == 5
        assert eval_poly(P(), Fraction(7, 3)) == 0
        assert eval_poly(P(1, 1), Fraction(-1)) == 0

    def test_ratfn_pole(self):
        with pytest.raises(ZeroDivisionError):
            (1 / (MU + 1)).at(Fraction(-1))


def test_divmod_reconstructs():
    a, b = P(3, -1, 0, 2, 5), P(1, 0, 2)
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < b.degree


def test_polynomial_with_ratfn_coefficients():
    lam_minus_mu = Polynomial((-MU, 1))
    sq = lam_minus_mu * lam_minus_mu
    assert sq[0] == MU * MU and sq[1] == -2 * MU and sq[2] == 1
    assert sq.exact_div(lam_minus_mu) == lam_minus_mu


def test_interpolate_recovers_polynomial():
    p = P(Fraction(1, 3), -2, 0, 5)
    xs = [Fraction(k) for k in range(1, 6)]
    assert interpolate(xs, [p(x) for x in xs]) == p


def test_format_parse_round_trip():
    for v in (Fraction(-3, 4), Fraction(5), MU * MU / (MU + 1), MU * 0):
        assert parse_scalar(format_scalar(v)) == v
    assert format_scalar(Fraction(5)) == "5"
    assert format_scalar(Fraction(-3, 4)) == "-3/4"


@given(ratfns, ratfns, ratfns)
@settings(max_examples=60, deadline=None)
def test_ratfn_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(nonzero_ratfns)
@settings(max_examples=60, deadline=None)
def test_ratfn_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1


@given(small_fracs, small_fracs, small_fracs)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


@given(polys, nonzero_polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_representation_independence(p, q, r):
    lhs = RationalFunction(p * r, q * r)
    rhs = RationalFunction(p, q)
    assert lhs == rhs
    again = RationalFunction(lhs.num, lhs.den)
    assert again.num == lhs.num and again.den == lhs.den


@given(ratfns, ratfns, small_fracs)
@settings(max_examples=60, deadline=None)
def test_eval_commutes_with_arithmetic(f, g, x):
    assume(eval_poly(f.den, x) != 0 and eval_poly(g.den, x) != 0)
    assert (f + g).at(x) == f.at(x) + g.at(x)
    assert (f * g).at(x) == f.at(x) * g.at(x)
    if g != 0 and g.at(x) != 0:
        assert (f / g).at(x) == f.at(x) / g.at(x)


@given(polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()
    assert g.lead() == 1
