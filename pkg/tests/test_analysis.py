import random
from fractions import Fraction

import pytest

from tnbraid.analysis import (
    block_decompositions,
    center_dim,
    centralizer_dim,
    char_poly,
    char_poly_interpolated,
    conjecture_check,
    conjectured_charpoly,
    det,
    dimension_report,
    dimension_sample,
    flip_sign,
    published_block_hypothesis_check,
    sample_mu,
    span_closure_dim,
    trace_form_rank,
    trial_factor,
)
from tnbraid.braid import BraidAction, canonical_params
from tnbraid.exact import Polynomial, RationalFunction
from tnbraid.matrix import EndoMatrix

F = Fraction
MU = RationalFunction.mu()
E = EndoMatrix.unit


@pytest.fixture(scope="module")
def action3():
    return BraidAction(canonical_params(3))


class TestCharPoly:
    def test_n2_full_matches_as_stated(self):
        r = conjecture_check(2, "full", 1)
        assert r.verdicts == {"as-stated": True, "sign-flipped": False}
        assert r.determinant == 1

    def test_n2_subspace_one_fewer_unit_root(self):
        full = conjecture_check(2, "full", 1)
        sub = conjecture_check(2, "subspace", 1)
        assert sub.matching_variants == []
        m_full = full.factorization["multiplicities"]
        m_sub = sub.factorization["multiplicities"]
        assert m_full["1"] - m_sub["1"] == 1
        assert m_sub["-(1+mu)"] == 1 and m_sub["-1/(1+mu)"] == 1
        # dividing off one (lambda - 1) turns the full-basis polynomial into the subspace one
        assert full.char_poly.exact_div(Polynomial((-1, 1))) == sub.char_poly

    def test_conjecture_degree(self):
        for n in (2, 3, 4):
            assert conjectured_charpoly(n).degree == n * n + 1

    def test_methods_agree_on_generator(self, action3):
        m = action3.generator(1).subspace()
        h = char_poly(m)
        assert h == char_poly(m, "bareiss") == char_poly(m, "faddeev")

    @pytest.mark.parametrize("n", [2, 3])
    def test_interpolation_matches_symbolic(self, n):
        m = BraidAction(canonical_params(n)).generator(1)
        res = char_poly_interpolated(m)
        assert res.checks_passed
        assert res.poly == char_poly(m)

    def test_unit_determinants(self, action3):
        b1, b2 = action3.generator(1).subspace(), action3.generator(2).subspace()
        assert det(b1) == det(b2) == det(b1 @ b2) == 1

    def test_flip_sign(self):
        p = Polynomial((2, 0, 1))
        assert flip_sign(p, 3) == p * (-1)
        assert flip_sign(p, 2) == p

    def test_trial_factor_counts(self):
        one = RationalFunction.coerce(1)
        lin = Polynomial((-one, one))
        p = lin * lin * Polynomial((MU + 1, one))
        res = trial_factor(p)
        assert res["multiplicities"]["1"] == 2
        assert res["multiplicities"]["-(1+mu)"] == 1
        assert res["cofactor"] == ["1"]


class TestDimensionTools:
    def test_closure_full_matrix_algebra(self):
        dim, _ = span_closure_dim([E(2, 0, 1), E(2, 1, 0)], include_inverses=False)
        assert dim == 4

    def test_closure_of_identity(self):
        dim, _ = span_closure_dim([EndoMatrix.identity(3)])
        assert dim == 1

    def test_centralizer(self):
        assert centralizer_dim([], 9) == 81
        assert centralizer_dim([E(2, 0, 1), E(2, 1, 0)]) == 1
        assert centralizer_dim([EndoMatrix([[1, 0], [0, 2]])]) == 2

    def test_center(self):
        full = [E(2, r, c) for r in range(2) for c in range(2)]
        assert center_dim(full) == 1
        assert center_dim([E(2, 0, 0), E(2, 1, 1)]) == 2

    def test_trace_form(self):
        full = [E(2, r, c) for r in range(2) for c in range(2)]
        assert trace_form_rank(full) == 4
        assert trace_form_rank([EndoMatrix.identity(2), E(2, 0, 1)]) == 1

    def test_block_arithmetic(self):
        sols = block_decompositions(18, 4, 7, 9)
        assert [(3, 1), (2, 1), (2, 1), (1, 2)] in sols
        # four 2-blocks and three 1-blocks admit no multiplicities on a 9-space with centralizer 7
        assert published_block_hypothesis_check(9, 7)["multiplicity_solutions"] == []

    def test_sample_mu(self):
        mus = sample_mu(random.Random(0), 5)
        assert len(set(mus)) == 5 and all(x > 0 for x in mus)


def test_n2_subspace_dimensions():
    s = dimension_sample(2, F(3, 7))
    assert (s.algebra_dim, s.centralizer_dim) == (3, 6)
    assert s.trace_form_rank == 3 and s.bicommutant_dim == 3


@pytest.mark.slow
def test_n3_dimensions_are_stable():
    rep = dimension_report(3, [F(2, 3), F(17, 5)])
    assert rep.stable
    assert rep.centralizer_dim == 7
    assert rep.trace_form_rank == rep.algebra_dim
    assert rep.block_consistency()["double_centralizer_holds"]
