"""Dense exact matrices and the elimination routines built on them.

Entries are exact scalars (``Fraction`` or ``RationalFunction``), or
polynomials in lambda for the fraction-free determinant. Matrices follow the
columns-are-images convention: ``m[r][c]`` is the coefficient of basis
vector ``r`` in the image of basis vector ``c``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence

from gmpy2 import mpq

from .exact import Polynomial, RationalFunction, format_scalar, parse_scalar, scalar_at

ZERO = Fraction(0)
ONE = Fraction(1)


class EndoMatrix:
    """Square matrix of a linear operator on T_n (or any square matrix).

    ``basis`` is ``"full"`` (dimension n^2+1, Unit first), ``"subspace"``
    (dimension n^2, the span of the f_{i,j}) or ``None`` for anonymous
    matrices used in tests and closure computations.
    """

    __slots__ = ("rows", "n", "basis")

    def __init__(self, rows: Iterable[Iterable[Any]], n: Optional[int] = None,
                 basis: Optional[str] = None):
        self.rows = [list(r) for r in rows]
        self.n = n
        self.basis = basis
        d = len(self.rows)
        if any(len(r) != d for r in self.rows):
            raise ValueError("EndoMatrix must be square")

    @classmethod
    def identity(cls, dim: int, n: Optional[int] = None, basis: Optional[str] = None) -> "EndoMatrix":
        return cls(([ONE if r == c else ZERO for c in range(dim)] for r in range(dim)), n, basis)

    @classmethod
    def zeros(cls, dim: int) -> "EndoMatrix":
        return cls([ZERO] * dim for _ in range(dim))

    @classmethod
    def unit(cls, dim: int, r: int, c: int) -> "EndoMatrix":
        m = cls.zeros(dim)
        m.rows[r][c] = ONE
        return m

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc: tuple[int, int]) -> Any:
        r, c = rc
        return self.rows[r][c]

    def column(self, c: int) -> list:
        return [row[c] for row in self.rows]

    def __repr__(self) -> str:
        return f"EndoMatrix(dim={self.dim}, basis={self.basis!r})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def _with(self, rows: list) -> "EndoMatrix":
        return EndoMatrix(rows, self.n, self.basis)

    def __matmul__(self, other: "EndoMatrix") -> "EndoMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        sparse_b = [[(j, v) for j, v in enumerate(row) if v != 0] for row in other.rows]
        out = []
        for row in self.rows:
            acc: list = [ZERO] * self.dim
            for k, a in enumerate(row):
                if a == 0:
                    continue
                for j, b in sparse_b[k]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        return self._with(out)

    def __add__(self, other: "EndoMatrix") -> "EndoMatrix":
        return self._with([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "EndoMatrix") -> "EndoMatrix":
        return self._with([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, s: Any) -> "EndoMatrix":
        return self._with([[s * a for a in r] for r in self.rows])

    def transpose(self) -> "EndoMatrix":
        return self._with([list(col) for col in zip(*self.rows)])

    def trace(self) -> Any:
        acc: Any = ZERO
        for k in range(self.dim):
            acc = acc + self.rows[k][k]
        return acc

    def is_identity(self) -> bool:
        return all(
            (v == 1) if r == c else (v == 0)
            for r, row in enumerate(self.rows) for c, v in enumerate(row)
        )

    def subspace(self) -> "EndoMatrix":
        """Drop the Unit row and column of a full-basis matrix."""
        if self.basis != "full":
            raise ValueError("subspace() needs a full-basis matrix")
        return EndoMatrix((row[1:] for row in self.rows[1:]), self.n, "subspace")

    def at(self, mu: Any) -> "EndoMatrix":
        """Specialize rational-function entries at a rational mu."""
        return self._with([[scalar_at(v, mu) for v in row] for row in self.rows])

    def flat(self) -> list:
        return [v for row in self.rows for v in row]

    def first_difference(self, other: "EndoMatrix") -> Optional[dict]:
        """Exact certificate for the first entry (row-major) where two matrices differ."""
        for r, (row, orow) in enumerate(zip(self.rows, other.rows)):
            for c, (a, b) in enumerate(zip(row, orow)):
                if a != b:
                    return {"row": r, "col": c, "left": format_scalar(a), "right": format_scalar(b)}
        return None

    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "entries": [[format_scalar(v) for v in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EndoMatrix":
        return cls(
            ([parse_scalar(v) for v in row] for row in data["entries"]),
            data.get("n"),
            data.get("basis"),
        )


def _inv(x: Any) -> Any:
    if isinstance(x, RationalFunction):
        return x.inverse()
    return 1 / x


def _all_rational(rows: Sequence[Sequence[Any]]) -> bool:
    return all(isinstance(v, (Fraction, int)) for r in rows for v in r)


def _to_mpq(rows: Sequence[Sequence[Any]]) -> list[list]:
    return [[mpq(v.numerator, v.denominator) for v in r] for r in rows]


def _from_mpq(v: Any) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def row_reduce(rows: Sequence[Sequence[Any]]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field. Returns (rref rows, pivot columns).

    Purely rational input is eliminated with gmpy2 ``mpq`` and converted back.
    """
    if rows and _all_rational(rows):
        red, pivots = _row_reduce(_to_mpq(rows))
        return [[_from_mpq(v) for v in r] for r in red], pivots
    return _row_reduce(rows)


def _row_reduce(rows: Sequence[Sequence[Any]]) -> tuple[list[list], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = _inv(m[r][c])
        m[r] = [v * inv if v != 0 else ZERO for v in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b if b != 0 else a for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Any]]) -> int:
    """Rank by forward elimination, one row at a time."""
    if not rows:
        return 0
    if _all_rational(rows):
        rows = _to_mpq(rows)
    echelon: list[tuple[int, list]] = []
    ncols = len(rows[0])
    for row in rows:
        v = list(row)
        for piv, e in echelon:
            f = v[piv]
            if f != 0:
                v = [a - f * b if b != 0 else a for a, b in zip(v, e)]
        piv = next((k for k, x in enumerate(v) if x != 0), None)
        if piv is None:
            continue
        inv = _inv(v[piv])
        echelon.append((piv, [x * inv if x != 0 else x for x in v]))
        if len(echelon) == ncols:
            break
    return len(echelon)


def nullspace(rows: Sequence[Sequence[Any]], ncols: Optional[int] = None) -> list[list]:
    """Basis of {x : A x = 0} for the matrix given by ``rows``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v: list = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def inverse(m: EndoMatrix) -> EndoMatrix:
    """Gauss-Jordan inverse; raises ``ZeroDivisionError`` when singular."""
    d = m.dim
    aug = [row + [ONE if r == c else ZERO for c in range(d)] for r, row in enumerate(m.rows)]
    red, pivots = row_reduce(aug)
    if pivots[:d] != list(range(d)) or len(red) < d:
        raise ZeroDivisionError("matrix is singular")
    return m._with([row[d:] for row in red])


def _exact_div(a: Any, b: Any) -> Any:
    if isinstance(a, Polynomial):
        return a.exact_div(b)
    return a / b


def det_bareiss(rows: Sequence[Sequence[Any]], one: Any = ONE) -> Any:
    """Fraction-free (Bareiss) determinant over an integral domain with exact division."""
    a = [list(r) for r in rows]
    d = len(a)
    if d == 0:
        return one
    sign = 1
    prev = one
    for k in range(d - 1):
        if a[k][k] == 0:
            p = next((r for r in range(k + 1, d) if a[r][k] != 0), None)
            if p is None:
                return one * 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, d):
            aik = a[i][k]
            for j in range(k + 1, d):
                if aik == 0:
                    num = akk * a[i][j]
                else:
                    num = akk * a[i][j] - aik * a[k][j]
                a[i][j] = _exact_div(num, prev)
        prev = akk
    result = a[d - 1][d - 1]
    return -result if sign < 0 else result


def det(m: EndoMatrix) -> Any:
    return det_bareiss(m.rows)


def charpoly_bareiss(m: EndoMatrix) -> Polynomial:
    """det(lambda*I - m) by Bareiss elimination over the polynomial ring in lambda."""
    rows = [
        [Polynomial((-v, ONE)) if r == c else Polynomial((-v,)) for c, v in enumerate(row)]
        for r, row in enumerate(m.rows)
    ]
    return det_bareiss(rows, one=Polynomial((ONE,)))


def charpoly_hessenberg(m: EndoMatrix) -> Polynomial:
    """det(lambda*I - m) via reduction to upper Hessenberg form (field operations only)."""
    a = [list(r) for r in m.rows]
    d = len(a)
    for k in range(d - 2):
        p = next((r for r in range(k + 1, d) if a[r][k] != 0), None)
        if p is None:
            continue
        if p != k + 1:
            a[k + 1], a[p] = a[p], a[k + 1]
            for row in a:
                row[k + 1], row[p] = row[p], row[k + 1]
        inv = _inv(a[k + 1][k])
        for r in range(k + 2, d):
            if a[r][k] == 0:
                continue
            f = a[r][k] * inv
            a[r] = [x - f * y if y != 0 else x for x, y in zip(a[r], a[k + 1])]
            for row in a:
                if row[r] != 0:
                    row[k + 1] = row[k + 1] + f * row[r]
    # p_k(lambda) = char poly of the leading k x k block
    lam = Polynomial((ZERO, ONE))
    polys = [Polynomial((ONE,))]
    for k in range(d):
        pk = (lam - a[k][k]) * polys[k]
        prod: Any = ONE
        for i in range(k - 1, -1, -1):
            prod = prod * a[i + 1][i]
            if prod == 0:
                break
            if a[i][k] != 0:
                pk = pk - polys[i] * (a[i][k] * prod)
        polys.append(pk)
    return polys[d]


def charpoly_faddeev(m: EndoMatrix) -> Polynomial:
    """det(lambda*I - m) by the Faddeev-LeVerrier recursion (characteristic zero)."""
    d = m.dim
    coeffs: list = [ZERO] * (d + 1)
    coeffs[d] = ONE
    mk = EndoMatrix.zeros(d)
    ident = EndoMatrix.identity(d)
    for k in range(1, d + 1):
        mk = m @ (mk + ident.scale(coeffs[d - k + 1]))
        coeffs[d - k] = mk.trace() * Fraction(-1, k)
    return Polynomial(coeffs)


def commutant_rows(gens: Sequence[EndoMatrix]) -> list[list]:
    """Linear equations (in the d^2 entries of X, row-major) for X g = g X, all g."""
    if not gens:
        return []
    d = gens[0].dim
    eqs = []
    for g in gens:
        for r in range(d):
            for c in range(d):
                # (X g - g X)[r][c] = sum_k X[r][k] g[k][c] - g[r][k] X[k][c]
                row: list = [ZERO] * (d * d)
                for k in range(d):
                    if g.rows[k][c] != 0:
                        row[r * d + k] = row[r * d + k] + g.rows[k][c]
                    if g.rows[r][k] != 0:
                        row[k * d + c] = row[k * d + c] - g.rows[r][k]
                if any(v != 0 for v in row):
                    eqs.append(row)
    return eqs


def apply_entrywise(m: EndoMatrix, fn: Callable[[Any], Any]) -> EndoMatrix:
    return m._with([[fn(v) for v in row] for row in m.rows])
