import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tnbraid.algebra import (
    UNIT,
    BasisIndex,
    DegenerateParameterError,
    ParamSet,
    TnAlgebra,
    TnElement,
    basis,
    constrained_params,
    random_params,
)
from tnbraid.exact import RationalFunction

F = Fraction


def two_params(c11=3, c12=1, c22=5, alpha=(1, 2), beta=(1, 2)):
    return ParamSet(2, ((c11, c12), (c12, c22)), alpha, beta)


def test_basis_order():
    assert basis(2) == [UNIT, (1, 1), (1, 2), (2, 1), (2, 2)]
    assert [BasisIndex(2, 1).position(3)] == [4]
    assert str(BasisIndex(1, 2)) == "f12"


class TestMultiplication:
    def test_square_of_f11_plus_one(self):
        alg = TnAlgebra(two_params())
        x = alg.f(1, 1) + 1
        y = alg.f(1, 1) - 1
        # f11^2 - 1 = c11 f11 - 1
        assert alg.mul(x, y) == alg.f(1, 1).scale(3) - 1

    def test_basis_rule(self):
        alg = TnAlgebra(two_params())
        assert alg.mul(alg.f(1, 2), alg.f(2, 1)) == alg.f(1, 1).scale(5)
        assert alg.mul(alg.f(2, 1), alg.f(1, 2)) == alg.f(2, 2).scale(3)
        assert alg.mul(alg.f(1, 2), alg.f(1, 2)) == alg.f(1, 2).scale(1)

    def test_y_product_expansion(self):
        p = two_params()
        alg = TnAlgebra(p)
        y1y2 = alg.mul(alg.y_element(1), alg.y_element(2))
        # (a1 f11 + b1)(a2 f22 + b2) = a1 a2 c12 f12 + a1 b2 f11 + b1 a2 f22 + b1 b2
        want = (alg.f(1, 2).scale(1 * 2 * 1) + alg.f(1, 1).scale(1 * 2)
                + alg.f(2, 2).scale(1 * 2) + 1 * 2)
        assert y1y2 == want

    def test_unit_is_identity(self):
        alg = TnAlgebra(two_params())
        x = alg.f(2, 1).scale(F(3, 7)) + F(-2)
        assert alg.mul(alg.one(), x) == x == alg.mul(x, alg.one())

    def test_mul_basis_agrees_with_mul(self):
        p = random_params(3, random.Random(1), symmetric=False)
        alg = TnAlgebra(p)
        for a, b in itertools.product(alg.basis(), repeat=2):
            assert alg.mul_basis(a, b) == alg.mul(alg.element(a), alg.element(b))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_associativity_exhaustive(n):
    p = random_params(n, random.Random(n), symmetric=False)
    alg = TnAlgebra(p)
    els = {b: alg.element(b) for b in alg.basis()}
    prods = {(a, b): alg.mul(els[a], els[b]) for a in els for b in els}
    for a, b, c in itertools.product(els, repeat=3):
        assert alg.mul(prods[a, b], els[c]) == alg.mul(els[a], prods[b, c])


@given(st.integers(0, 10_000), st.integers(1, 4))
@settings(max_examples=30, deadline=None)
def test_associativity_random_elements(seed, n):
    rng = random.Random(seed)
    alg = TnAlgebra(random_params(n, rng, symmetric=False, bound=9))

    def rand_el():
        return TnElement(n, tuple(F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(alg.dim)))

    x, y, z = rand_el(), rand_el(), rand_el()
    assert alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))


class TestInverses:
    def test_quadratic_relation(self):
        rng = random.Random(3)
        for _ in range(20):
            p = random_params(3, rng)
            alg = TnAlgebra(p)
            for i in (1, 2, 3):
                y = alg.y_element(i)
                a, b, c = p.alpha[i - 1], p.beta[i - 1], p.c[i - 1][i - 1]
                # Y^2 = (a c + 2 b) Y - b (a c + b)
                assert alg.mul(y, y) == y.scale(a * c + 2 * b) - b * (a * c + b)

    def test_closed_form_matches_linear_solve(self):
        rng = random.Random(4)
        for _ in range(20):
            alg = TnAlgebra(random_params(3, rng))
            for i in (1, 2, 3):
                inv = alg.y_inverse(i)
                assert alg.invert(alg.y_element(i)) == inv
                assert alg.mul(alg.y_element(i), inv) == alg.one() == alg.mul(inv, alg.y_element(i))

    def test_symbolic_inverse(self):
        mu = RationalFunction.mu()
        alg = TnAlgebra(ParamSet.canonical(3, 1, mu, 1))
        assert alg.mul(alg.y_element(2), alg.y_inverse(2)) == alg.one()

    def test_non_unit_returns_none(self):
        alg = TnAlgebra(two_params())
        assert alg.invert(alg.f(1, 1)) is None
        assert alg.invert(TnElement.zero(2)) is None

    def test_scalar_inverse(self):
        alg = TnAlgebra(two_params())
        assert alg.invert(alg.one().scale(4)) == alg.one().scale(F(1, 4))

    def test_degenerate_pole_named(self):
        # alpha_1 c_11 + beta_1 = 0 is rejected up front with the quantity named
        with pytest.raises(DegenerateParameterError) as exc:
            two_params(c11=1, alpha=(-1, 2), beta=(1, 2))
        assert "alpha[1]*c[1,1]+beta[1]" in exc.value.quantity


class TestParamSet:
    def test_constraints(self):
        assert ParamSet.canonical(3, 2, F(1, 3), 5).constraint_violations() == []
        p = two_params()
        assert p.constraint_violations() == ["C1", "C2", "C3"]

    def test_canonical_mode_rejects_violations(self):
        with pytest.raises(ValueError):
            ParamSet(2, ((1, 1), (1, 1)), (1, 2), (1, 1), mode="canonical")

    def test_zero_rejected(self):
        with pytest.raises(DegenerateParameterError):
            ParamSet(2, ((1, 0), (0, 1)), (1, 1), (1, 1))

    def test_asymmetric_needs_flag(self):
        with pytest.raises(ValueError):
            ParamSet(2, ((1, 2), (3, 1)), (1, 1), (1, 1))
        ParamSet(2, ((1, 2), (3, 1)), (1, 1), (1, 1), symmetric=False)

    def test_round_trip(self):
        mu = RationalFunction.mu()
        for p in (two_params(), ParamSet.canonical(3, 1, mu / (mu + 1), 1)):
            assert ParamSet.from_dict(p.to_dict()) == p

    def test_effective_mu(self):
        p = ParamSet.canonical(2, 2, 3, 4)
        assert p.effective_mu() == F(3, 2)
        assert p.c2_alpha_mu() == 3

    def test_constrained_sampler(self):
        rng = random.Random(0)
        for n in (2, 3, 4):
            assert constrained_params(n, rng).constraint_violations() == []


def test_element_round_trip():
    mu = RationalFunction.mu()
    x = TnElement.f(2, 1, 2).scale(mu) + F(3, 4)
    assert TnElement.from_dict(x.to_dict()) == x
