import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tnbraid.braid import BraidAction, BraidWord, canonical_params
from tnbraid.free_group import (
    FreeWord,
    artin_apply,
    artin_word,
    compatibility_check,
    evaluate_in_tn,
    verify_artin_inverses,
    verify_artin_relations,
)

words = st.lists(st.sampled_from([1, 2, 3, 4, -1, -2, -3, -4]), max_size=20).map(FreeWord)


def test_parse_and_reduce():
    assert FreeWord.parse("t1 t2 t2^-1 t1^-1") == FreeWord()
    assert FreeWord.parse("t1^2 t3^-1") == FreeWord((1, 1, -3))
    assert str(FreeWord((2, -1))) == "t2 t1^-1"
    with pytest.raises(ValueError):
        FreeWord.parse("x1")


def test_generator_images():
    assert artin_apply(1, 1, (1,)) == FreeWord((1, 2, -1))
    assert artin_apply(1, 1, (2,)) == FreeWord((1,))
    assert artin_apply(1, 1, (3,)) == FreeWord((3,))
    assert artin_apply(1, -1, (1,)) == FreeWord((2,))
    assert artin_apply(1, -1, (2,)) == FreeWord((-2, 1, 2))


def test_product_is_fixed():
    # X_i fixes t_1 t_2 ... t_n
    w = FreeWord((1, 2, 3))
    for i in (1, 2):
        assert artin_apply(i, 1, w) == w


def test_word_action_order():
    w = BraidWord.parse(3, "1 2")
    assert artin_word(w, (3,)) == artin_apply(1, 1, artin_apply(2, 1, (3,)))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_relations(n):
    assert verify_artin_relations(n).passed


def test_inverses_random():
    assert verify_artin_inverses(5, random.Random(0), 200).passed


@given(words, words, st.integers(1, 3), st.sampled_from([1, -1]))
@settings(max_examples=100, deadline=None)
def test_action_is_homomorphism(u, v, i, s):
    assert artin_apply(i, s, u * v) == artin_apply(i, s, u) * artin_apply(i, s, v)
    assert artin_apply(i, -s, artin_apply(i, s, u)) == u


@given(words)
def test_inverse_word(u):
    assert u * u.inverse() == FreeWord()


def test_evaluation_in_tn():
    alg = BraidAction(canonical_params(3)).algebra
    assert evaluate_in_tn(FreeWord((1, -1)), alg) == alg.one()
    assert evaluate_in_tn(FreeWord((2,)), alg) == alg.y_element(2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_compatibility(n):
    assert compatibility_check(n, BraidAction(canonical_params(n))).passed
