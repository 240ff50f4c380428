"""Exact scalars: rationals, univariate polynomials and rational functions in mu.

Rationals are plain :class:`fractions.Fraction` values. :class:`Polynomial`
is generic over its coefficient field (``Fraction`` by default, but
:class:`RationalFunction` coefficients are used for characteristic
polynomials over Q(mu)). :class:`RationalFunction` is always kept in
canonical form: gcd-reduced with a monic denominator, so ``==`` is
structural.

Both scalar kinds support the usual arithmetic operators and mix with
``int``/``Fraction``, which is the whole "field abstraction" the rest of the
package relies on.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

__all__ = [
    "ExactScalar",
    "Polynomial",
    "RationalFunction",
    "as_scalar",
    "eval_poly",
    "format_scalar",
    "is_zero",
    "normalize_ratfn",
    "parse_scalar",
    "poly_gcd",
    "scalar_at",
]


def _strip(coeffs: Iterable[Any]) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _to_coeff(c: Any) -> Any:
    if isinstance(c, (int, str)):
        return Fraction(c)
    return c


class Polynomial:
    """Univariate polynomial, coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        self.coeffs = _strip(_to_coeff(c) for c in coeffs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Any) -> "Polynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Any:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x: Any) -> Any:
        return eval_poly(self, x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((Fraction(other),))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "mu") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            cs = str(c)
            if k == 0:
                terms.append(cs if not isinstance(c, RationalFunction) else f"({cs})")
                continue
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            elif isinstance(c, Fraction) and c.denominator == 1:
                terms.append(f"{cs}*{mono}")
            else:
                terms.append(f"({cs})*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial((other,))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: Any) -> "Polynomial":
        if not isinstance(other, (Polynomial, int, Fraction, RationalFunction)):
            return NotImplemented
        o = self._coerce(other).coeffs
        a = self.coeffs
        if len(a) < len(o):
            a, o = o, a
        return Polynomial(tuple(x + y for x, y in zip(a, o)) + a[len(o):])

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Polynomial":
        if not isinstance(other, (Polynomial, int, Fraction, RationalFunction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Polynomial()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x == 0:
                    continue
                for j, y in enumerate(b):
                    if y == 0:
                        continue
                    out[i + j] = out[i + j] + x * y
            return Polynomial(out)
        if isinstance(other, (int, Fraction, RationalFunction)):
            return Polynomial(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = 1 / other.lead() if not isinstance(other.lead(), RationalFunction) else other.lead().inverse()
        if len(rem) - 1 < db:
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] * lead_inv
            quot[k] = q
            if q == 0:
                continue
            for j, bc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * bc
        return Polynomial(quot), Polynomial(rem[:db])

    def __floordiv__(self, other: Any) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: Any) -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: Any) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.lead()
        if lead == 1:
            return self
        inv = lead.inverse() if isinstance(lead, RationalFunction) else 1 / lead
        return Polynomial(c * inv for c in self.coeffs)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; ``poly_gcd(0, 0)`` is zero."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def eval_poly(p: Polynomial, x: Any) -> Any:
    acc: Any = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


_ONE = Polynomial((1,))


class RationalFunction:
    """Element of Q(mu), stored as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Any, den: Any = None, _reduced: bool = False):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,))
        if den is None:
            den = _ONE
        elif not isinstance(den, Polynomial):
            den = Polynomial((den,))
        if _reduced:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, _ONE
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.lead()
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def mu(cls) -> "RationalFunction":
        return cls(Polynomial.x(), _ONE, _reduced=True)

    @classmethod
    def coerce(cls, value: Any) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value, _ONE, _reduced=True)
        return cls(Polynomial((Fraction(value),)), _ONE, _reduced=True)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0]

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self.den.degree == 0:
            return self.num.to_string()
        n = self.num.to_string()
        if len(self.num.coeffs) > 1:
            n = f"({n})"
        return f"{n}/({self.den.to_string()})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.num[0])
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __add__(self, other: Any) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self
            return RationalFunction(self.num + self.den * other, self.den, _reduced=True)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.degree == 0:
                return RationalFunction(self.num + other.num, _ONE, _reduced=True)
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RationalFunction":
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other: Any) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction(Polynomial(), _ONE, _reduced=True)
            return RationalFunction(self.num * other, self.den, _reduced=True)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction(Polynomial(), _ONE, _reduced=True)
        if self.den.degree == 0 and other.den.degree == 0:
            return RationalFunction(self.num * other.num, _ONE, _reduced=True)
        # cross-cancel keeps the result reduced without a gcd of the products
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = self.num.exact_div(g1) * other.num.exact_div(g2)
        den = self.den.exact_div(g2) * other.den.exact_div(g1)
        return RationalFunction(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        lead = self.num.lead()
        return RationalFunction(self.den * (1 / lead), self.num * (1 / lead), _reduced=True)

    def __truediv__(self, other: Any) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction(self.num * (1 / Fraction(other)), self.den, _reduced=True)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        return self.inverse() * other

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num**k, self.den**k, _reduced=True)

    def at(self, x: Any) -> Fraction:
        d = eval_poly(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at mu={x}")
        return eval_poly(self.num, x) / d


ExactScalar = Union[Fraction, RationalFunction]


def normalize_ratfn(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def is_zero(x: Any) -> bool:
    return x == 0


def as_scalar(value: Any) -> ExactScalar:
    """Coerce ints/strings/polynomials to an exact scalar."""
    if isinstance(value, (Fraction, RationalFunction)):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction.coerce(value)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact scalar")


def scalar_at(value: ExactScalar, mu: Any) -> Fraction:
    """Specialize a scalar at a rational value of mu (rationals pass through)."""
    if isinstance(value, RationalFunction):
        return value.at(mu)
    return Fraction(value)


def format_scalar(value: ExactScalar) -> Any:
    """Rationals (and constant rational functions) as "p/q"; others as coefficient records."""
    if isinstance(value, RationalFunction) and value.is_constant():
        return str(value.constant_value())
    if isinstance(value, RationalFunction):
        return {
            "num": [str(c) for c in value.num.coeffs],
            "den": [str(c) for c in value.den.coeffs],
        }
    return str(Fraction(value))


def parse_scalar(data: Any) -> ExactScalar:
    if isinstance(data, dict):
        return RationalFunction(
            Polynomial(Fraction(c) for c in data["num"]),
            Polynomial(Fraction(c) for c in data["den"]),
        )
    if isinstance(data, (int, str)):
        return Fraction(data)
    if isinstance(data, Fraction):
        return data
    raise ValueError(f"unrecognised scalar encoding: {data!r}")


def interpolate(xs: Sequence[Fraction], ys: Sequence[Any]) -> Polynomial:
    """Exact interpolating polynomial through ``(xs[k], ys[k])`` (Newton form)."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coef = list(ys)
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = Polynomial()
    for i in range(m - 1, -1, -1):
        poly = poly * Polynomial((-xs[i], 1)) + coef[i]
    return poly
