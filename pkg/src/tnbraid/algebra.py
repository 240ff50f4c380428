"""The algebra T_n: basis {1} and f_{i,j}, with f_{i,j} f_{k,l} = c_{j,k} f_{i,l}."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, NamedTuple, Optional

from .exact import ExactScalar, as_scalar, format_scalar, parse_scalar
from .matrix import ZERO, row_reduce

__all__ = [
    "BasisIndex",
    "DegenerateParameterError",
    "ParamSet",
    "TnAlgebra",
    "TnElement",
    "UNIT",
    "basis",
    "constrained_params",
    "random_params",
    "random_rational",
]


class DegenerateParameterError(ValueError):
    """A quantity that must be invertible vanished; ``quantity`` names it."""

    def __init__(self, quantity: str, detail: str = ""):
        self.quantity = quantity
        super().__init__(f"degenerate parameters: {quantity} = 0" + (f" ({detail})" if detail else ""))


class BasisIndex(NamedTuple):
    """Unit is ``(0, 0)``; f_{i,j} is ``(i, j)`` with 1-based i, j."""

    i: int
    j: int

    @property
    def is_unit(self) -> bool:
        return self.i == 0

    def position(self, n: int) -> int:
        if self.is_unit:
            return 0
        if not (1 <= self.i <= n and 1 <= self.j <= n):
            raise IndexError(f"basis index {tuple(self)} out of range for n={n}")
        return 1 + (self.i - 1) * n + (self.j - 1)

    def __str__(self) -> str:
        return "1" if self.is_unit else f"f{self.i}{self.j}"


UNIT = BasisIndex(0, 0)


def basis(n: int) -> list[BasisIndex]:
    """Unit, then f_{1,1}, ..., f_{1,n}, f_{2,1}, ..., f_{n,n}."""
    return [UNIT] + [BasisIndex(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def _check_nonzero(value: ExactScalar, name: str) -> None:
    if value == 0:
        raise DegenerateParameterError(name)


@dataclass(frozen=True)
class ParamSet:
    """Parameters c_{i,j}, alpha_i, beta_i of T_n (stored 0-based)."""

    n: int
    c: tuple
    alpha: tuple
    beta: tuple
    mode: str = "generic"
    symmetric: bool = True

    def __post_init__(self):
        n = self.n
        if n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "c", tuple(tuple(as_scalar(v) for v in row) for row in self.c))
        object.__setattr__(self, "alpha", tuple(as_scalar(v) for v in self.alpha))
        object.__setattr__(self, "beta", tuple(as_scalar(v) for v in self.beta))
        if len(self.c) != n or any(len(row) != n for row in self.c):
            raise ValueError("c must be an n x n array")
        if len(self.alpha) != n or len(self.beta) != n:
            raise ValueError("alpha and beta must have length n")
        if self.mode not in ("generic", "canonical"):
            raise ValueError(f"unknown mode {self.mode!r}")
        for i in range(n):
            for j in range(n):
                _check_nonzero(self.c[i][j], f"c[{i + 1},{j + 1}]")
            _check_nonzero(self.alpha[i], f"alpha[{i + 1}]")
            _check_nonzero(self.beta[i], f"beta[{i + 1}]")
            _check_nonzero(self.alpha[i] * self.c[i][i] + self.beta[i],
                           f"alpha[{i + 1}]*c[{i + 1},{i + 1}]+beta[{i + 1}]")
        if self.symmetric and any(self.c[i][j] != self.c[j][i] for i in range(n) for j in range(n)):
            raise ValueError("c is not symmetric; pass symmetric=False to allow this")
        if self.mode == "canonical":
            bad = self.constraint_violations()
            if bad:
                raise ValueError(f"canonical parameters violate {', '.join(bad)}")

    @classmethod
    def canonical(cls, n: int, c: Any = 1, alpha: Any = 1, beta: Any = 1) -> "ParamSet":
        """All c_{i,j} = c, all alpha_i = alpha, all beta_i = beta."""
        c, alpha, beta = as_scalar(c), as_scalar(alpha), as_scalar(beta)
        return cls(n, tuple((c,) * n for _ in range(n)), (alpha,) * n, (beta,) * n, mode="canonical")

    def constraint_violations(self) -> list[str]:
        """Names of the equal-beta (C1), alpha-recursion (C2) and equal-c (C3) constraints that fail."""
        n = self.n
        bad = []
        if any(b != self.beta[0] for b in self.beta):
            bad.append("C1")
        if any(self.alpha[i] * self.c[i][i] != self.c[i - 1][i - 1] * self.alpha[i - 1] for i in range(1, n)):
            bad.append("C2")
        if any(v != self.c[0][0] for row in self.c for v in row):
            bad.append("C3")
        return bad

    def effective_mu(self) -> ExactScalar:
        """alpha_1 c / beta: the single quantity the subspace matrices depend on."""
        return self.alpha[0] * self.c[0][0] / self.beta[0]

    def c2_alpha_mu(self) -> ExactScalar:
        """c^2 alpha_1 / beta, the alternative formula for the single parameter."""
        c = self.c[0][0]
        return c * c * self.alpha[0] / self.beta[0]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "c": [[format_scalar(v) for v in row] for row in self.c],
            "alpha": [format_scalar(v) for v in self.alpha],
            "beta": [format_scalar(v) for v in self.beta],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ParamSet":
        n = int(data["n"])
        return cls(
            n,
            tuple(tuple(parse_scalar(v) for v in row) for row in data["c"]),
            tuple(parse_scalar(v) for v in data["alpha"]),
            tuple(parse_scalar(v) for v in data["beta"]),
            mode=data.get("mode", "generic"),
            symmetric=data.get("symmetric", True),
        )


@dataclass(frozen=True)
class TnElement:
    """Dense coefficient vector over :func:`basis` (length n^2+1)."""

    n: int
    coeffs: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.coeffs) != self.n * self.n + 1:
            raise ValueError("coefficient vector has wrong length")

    @classmethod
    def zero(cls, n: int) -> "TnElement":
        return cls(n, (ZERO,) * (n * n + 1))

    @classmethod
    def basis_element(cls, n: int, b: BasisIndex, coeff: Any = 1) -> "TnElement":
        v = [ZERO] * (n * n + 1)
        v[b.position(n)] = as_scalar(coeff)
        return cls(n, tuple(v))

    @classmethod
    def one(cls, n: int) -> "TnElement":
        return cls.basis_element(n, UNIT)

    @classmethod
    def f(cls, n: int, i: int, j: int) -> "TnElement":
        return cls.basis_element(n, BasisIndex(i, j))

    def __getitem__(self, b: BasisIndex) -> ExactScalar:
        return self.coeffs[b.position(self.n)]

    @property
    def unit(self) -> ExactScalar:
        return self.coeffs[0]

    def f_coeff(self, i: int, j: int) -> ExactScalar:
        return self.coeffs[1 + (i - 1) * self.n + (j - 1)]

    def items(self) -> Iterator[tuple[BasisIndex, ExactScalar]]:
        for b, v in zip(basis(self.n), self.coeffs):
            if v != 0:
                yield b, v

    def __add__(self, other: Any) -> "TnElement":
        if isinstance(other, TnElement):
            return TnElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return self + TnElement.basis_element(self.n, UNIT, other)

    __radd__ = __add__

    def __neg__(self) -> "TnElement":
        return TnElement(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Any) -> "TnElement":
        return self + (-other)

    def __rsub__(self, other: Any) -> "TnElement":
        return (-self) + other

    def scale(self, s: Any) -> "TnElement":
        return TnElement(self.n, tuple(a * s if a != 0 else ZERO for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def __str__(self) -> str:
        terms = [f"({v})*{b}" if not b.is_unit else f"({v})" for b, v in self.items()]
        return " + ".join(terms) or "0"

    def to_dict(self) -> dict:
        n = self.n
        return {
            "unit": format_scalar(self.coeffs[0]),
            "f": [[format_scalar(self.f_coeff(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TnElement":
        f = data["f"]
        return cls(len(f), (parse_scalar(data["unit"]),) + tuple(parse_scalar(v) for row in f for v in row))


class TnAlgebra:
    """Multiplication, the elements Y_i and inversion in T_n for fixed parameters."""

    def __init__(self, params: ParamSet):
        self.params = params
        self.n = params.n
        self.dim = self.n * self.n + 1
        self._y_inv: dict[int, TnElement] = {}

    def one(self) -> TnElement:
        return TnElement.one(self.n)

    def f(self, i: int, j: int) -> TnElement:
        return TnElement.f(self.n, i, j)

    def element(self, b: BasisIndex, coeff: Any = 1) -> TnElement:
        return TnElement.basis_element(self.n, b, coeff)

    def basis(self) -> list[BasisIndex]:
        return basis(self.n)

    def mul_basis(self, a: BasisIndex, b: BasisIndex) -> TnElement:
        if a.is_unit:
            return self.element(b)
        if b.is_unit:
            return self.element(a)
        return self.element(BasisIndex(a.i, b.j), self.params.c[a.j - 1][b.i - 1])

    def mul(self, x: TnElement, y: TnElement) -> TnElement:
        n, c = self.n, self.params.c
        x0, y0 = x.coeffs[0], y.coeffs[0]
        out: list = [ZERO] * self.dim
        out[0] = x0 * y0
        for p in range(1, self.dim):
            acc = ZERO
            if x0 != 0 and y.coeffs[p] != 0:
                acc = acc + x0 * y.coeffs[p]
            if y0 != 0 and x.coeffs[p] != 0:
                acc = acc + y0 * x.coeffs[p]
            out[p] = acc
        # f-part: sum_{j,k} x_{ij} c_{jk} y_{kl} f_{il}
        for i in range(n):
            for j in range(n):
                xij = x.coeffs[1 + i * n + j]
                if xij == 0:
                    continue
                for k in range(n):
                    cjk = c[j][k]
                    for l in range(n):
                        ykl = y.coeffs[1 + k * n + l]
                        if ykl == 0:
                            continue
                        out[1 + i * n + l] = out[1 + i * n + l] + xij * cjk * ykl
        return TnElement(n, tuple(out))

    def product(self, *factors: TnElement) -> TnElement:
        acc = self.one()
        for x in factors:
            acc = self.mul(acc, x)
        return acc

    def y_element(self, i: int) -> TnElement:
        """Y_i = alpha_i f_{i,i} + beta_i."""
        p = self.params
        return self.element(BasisIndex(i, i), p.alpha[i - 1]) + p.beta[i - 1]

    def y_inverse(self, i: int) -> TnElement:
        """Closed form ((alpha c + 2 beta) - Y_i) / (beta (alpha c + beta)) from the quadratic relation."""
        if i not in self._y_inv:
            p = self.params
            a, b, cii = p.alpha[i - 1], p.beta[i - 1], p.c[i - 1][i - 1]
            _check_nonzero(b, f"beta[{i}]")
            _check_nonzero(a * cii + b, f"alpha[{i}]*c[{i},{i}]+beta[{i}]")
            d = b * (a * cii + b)
            self._y_inv[i] = (-self.y_element(i) + (a * cii + 2 * b)).scale(1 / d)
        return self._y_inv[i]

    def left_mult_matrix(self, x: TnElement) -> list[list]:
        """Rows of the matrix of z -> x z (columns are images of basis vectors)."""
        cols = [self.mul(x, self.element(b)).coeffs for b in self.basis()]
        return [list(r) for r in zip(*cols)]

    def invert(self, x: TnElement) -> Optional[TnElement]:
        """Two-sided inverse of ``x`` by solving x z = 1, or ``None`` when x is not a unit."""
        rows = self.left_mult_matrix(x)
        rhs = self.one().coeffs
        aug = [row + [r] for row, r in zip(rows, rhs)]
        red, pivots = row_reduce(aug)
        if self.dim in pivots or len(pivots) < self.dim:
            return None
        z = TnElement(self.n, tuple(red[k][self.dim] for k in range(self.dim)))
        if self.mul(z, x) != self.one():
            raise ArithmeticError("one-sided inverse in T_n; multiplication is inconsistent")
        return z


def random_rational(rng: random.Random, bound: int = 99, nonzero: bool = True) -> Fraction:
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v != 0 or not nonzero:
            return v


def random_params(n: int, rng: random.Random, *, c1: bool = False, c2: bool = False,
                  c3: bool = False, symmetric: bool = True, bound: int = 99) -> ParamSet:
    """Random generic rational parameters, optionally imposing C1/C2/C3.

    Samples with a vanishing alpha_i c_{i,i} + beta_i are redrawn.
    """
    while True:
        if c3:
            cv = random_rational(rng, bound)
            c = [[cv] * n for _ in range(n)]
        else:
            c = [[random_rational(rng, bound) for _ in range(n)] for _ in range(n)]
            if symmetric:
                for i in range(n):
                    for j in range(i):
                        c[i][j] = c[j][i]
        if c1:
            beta = [random_rational(rng, bound)] * n
        else:
            beta = [random_rational(rng, bound) for _ in range(n)]
        alpha = [random_rational(rng, bound)]
        for i in range(1, n):
            alpha.append(c[i - 1][i - 1] * alpha[i - 1] / c[i][i] if c2 else random_rational(rng, bound))
        try:
            return ParamSet(n, tuple(map(tuple, c)), tuple(alpha), tuple(beta), symmetric=symmetric)
        except DegenerateParameterError:
            continue


def constrained_params(n: int, rng: random.Random, bound: int = 99) -> ParamSet:
    """Random canonical parameters (C1-C3 hold) with independent c, alpha, beta."""
    while True:
        try:
            return ParamSet.canonical(n, random_rational(rng, bound), random_rational(rng, bound),
                                      random_rational(rng, bound))
        except DegenerateParameterError:
            continue

