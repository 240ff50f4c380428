"""The published 9x9 matrices B(1), B(2) for n=3 on the f-subspace, as functions of mu.

Tokens: p = 1+mu, q = mu/(1+mu), r = 1/(1+mu), s = mu^2/(1+mu).
"""

from __future__ import annotations

from .exact import RationalFunction
from .matrix import EndoMatrix

_B1 = """
 -s  q  0 -mu  1  0   0  0  0
 mu  0  0  p   0  0   0  0  0
  0  0  q  0   0  1   0  0  0
 -q  r  0  0   0  0   0  0  0
  1  0  0  0   0  0   0  0  0
  0  0  r  0   0  0   0  0  0
  0  0  0  0   0  0 -mu  1  0
  0  0  0  0   0  0   p  0  0
  0  0  0  0   0  0   0  0  1
"""

_B2 = """
  1  0  0  0   0  0   0  0  0
  0 -mu 1  0   0  0   0  0  0
  0  p  0  0   0  0   0  0  0
  0  0  0  q   0  0   1  0  0
  0  0  0  0  -s  q   0 -mu 1
  0  0  0  0  mu  0   0  p  0
  0  0  0  r   0  0   0  0  0
  0  0  0  0  -q  r   0  0  0
  0  0  0  0   1  0   0  0  0
"""


def _tokens() -> dict:
    mu = RationalFunction.mu()
    p = mu + 1
    q = mu / p
    r = 1 / p
    s = mu * mu / p
    table = {"0": mu * 0, "1": mu * 0 + 1, "mu": mu, "p": p, "q": q, "r": r, "s": s}
    table.update({"-" + k: -v for k, v in list(table.items())})
    return table


def _parse(text: str) -> EndoMatrix:
    tok = _tokens()
    rows = [[tok[t] for t in line.split()] for line in text.strip().splitlines()]
    return EndoMatrix(rows, 3, "subspace")


def golden_matrices() -> dict[int, EndoMatrix]:
    """``{1: B(1), 2: B(2)}`` over Q(mu), subspace basis f11, f12, ..., f33."""
    return {1: _parse(_B1), 2: _parse(_B2)}
