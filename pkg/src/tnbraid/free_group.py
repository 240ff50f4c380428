"""Reduced words in the free group F_n and Artin's action of B_n on them.

Letters are signed integers: ``k`` is t_k and ``-k`` is t_k^-1. The Artin
automorphism of X_i sends t_i -> t_i t_{i+1} t_i^-1, t_{i+1} -> t_i and
fixes every other generator.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

from .algebra import TnAlgebra, TnElement
from .braid import BraidAction, BraidWord, relation_pairs
from .report import Report


class FreeWord(tuple):
    """Freely reduced word; construct through :func:`reduce` or :meth:`parse`."""

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, _reduce(letters))

    @classmethod
    def generator(cls, k: int) -> "FreeWord":
        return cls((k,))

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        """Parse ``"t1 t2 t1^-1"``; the empty string is the identity."""
        letters = []
        for tok in text.split():
            base, _, exp = tok.partition("^")
            if not base.startswith("t"):
                raise ValueError(f"bad letter {tok!r}")
            k = int(base[1:])
            e = int(exp) if exp else 1
            letters.extend([k if e > 0 else -k] * abs(e))
        return cls(letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(-a for a in reversed(self))

    def __mul__(self, other: "FreeWord") -> "FreeWord":  # type: ignore[override]
        return FreeWord(tuple(self) + tuple(other))

    def __str__(self) -> str:
        return " ".join(f"t{a}" if a > 0 else f"t{-a}^-1" for a in self)

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r})"


def _reduce(letters: Iterable[int]) -> tuple:
    out: list[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("letter 0 is not a generator")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def reduce(letters: Iterable[int]) -> FreeWord:
    return FreeWord(letters)


def _image(i: int, sign: int, k: int) -> tuple:
    """Image of the generator t_k under X_i^sign."""
    if sign == 1:
        if k == i:
            return (i, i + 1, -i)
        if k == i + 1:
            return (i,)
    else:
        if k == i:
            return (i + 1,)
        if k == i + 1:
            return (-(i + 1), i, i + 1)
    return (k,)


def artin_apply(i: int, sign: int, w: Sequence[int]) -> FreeWord:
    out: list[int] = []
    for a in w:
        img = _image(i, sign, abs(a))
        if a < 0:
            img = tuple(-x for x in reversed(img))
        out.extend(img)
    return FreeWord(out)


def artin_word(word: BraidWord, v: Sequence[int]) -> FreeWord:
    """Apply ``word`` with the matrix convention: the last letter acts first."""
    out = FreeWord(v)
    for i, s in reversed(word.letters):
        out = artin_apply(i, s, out)
    return out


def random_word(rng: random.Random, n: int, max_length: int = 32) -> FreeWord:
    letters = [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(0, max_length))]
    return FreeWord(letters)


def verify_artin_relations(n: int) -> Report:
    """Both relation families of B_n, compared on every generator t_1..t_n."""
    report = Report()
    for lhs, rhs in relation_pairs(n):
        bad = None
        for k in range(1, n + 1):
            a, b = artin_word(lhs, (k,)), artin_word(rhs, (k,))
            if a != b:
                bad = {"generator": f"t{k}", "left": str(a), "right": str(b)}
                break
        report.add("artin_relation", f"n={n} {lhs} = {rhs}", bad is None, bad)
    return report


def verify_artin_inverses(n: int, rng: random.Random, words: int = 1000, max_length: int = 32) -> Report:
    """X_i X_i^-1 and X_i^-1 X_i act trivially on random words."""
    report = Report()
    failures = []
    for _ in range(words):
        w = random_word(rng, n, max_length)
        for i in range(1, n):
            if artin_apply(i, 1, artin_apply(i, -1, w)) != w or artin_apply(i, -1, artin_apply(i, 1, w)) != w:
                failures.append({"word": str(w), "generator": i})
    report.add("artin_inverse", f"n={n} words={words}", not failures, failures[:1] or None)
    return report


def evaluate_in_tn(w: Sequence[int], alg: TnAlgebra) -> TnElement:
    """Substitute t_k -> Y_k and multiply out in T_n."""
    acc = alg.one()
    for a in w:
        acc = alg.mul(acc, alg.y_element(a) if a > 0 else alg.y_inverse(-a))
    return acc


def compatibility_check(n: int, action: BraidAction) -> Report:
    """X_i(Y_j) in T_n against the Artin image of t_j evaluated at t_k -> Y_k."""
    alg = action.algebra
    report = Report()
    for i in range(1, n):
        m = action.generator(i)
        for j in range(1, n + 1):
            lhs = action.apply(m, alg.y_element(j))
            word = artin_apply(i, 1, (j,))
            rhs = evaluate_in_tn(word, alg)
            cert: Optional[dict] = None
            if lhs != rhs:
                cert = {"algebra_side": lhs.to_dict(), "word_side": rhs.to_dict(), "word": str(word)}
            report.add("artin_compatibility", f"X{i} on Y{j}", lhs == rhs, cert)
    return report
