"""Spectral and dimension analysis of the braid representation.

Characteristic polynomials are computed exactly, either directly over Q(mu)
or by evaluating at rational mu and interpolating; the two routes are
cross-checked. Dimensions (generated algebra, commutant, centre, trace-form
rank) are computed at sampled rational mu.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

from gmpy2 import mpq

from .braid import BraidAction, canonical_params
from .exact import ExactScalar, Polynomial, RationalFunction, format_scalar, interpolate, poly_gcd
from .matrix import (
    ONE,
    ZERO,
    EndoMatrix,
    charpoly_bareiss,
    charpoly_faddeev,
    charpoly_hessenberg,
    commutant_rows,
    det_bareiss,
    inverse,
    nullspace,
    rank,
)

VARIANTS = ("as-stated", "sign-flipped")


def char_poly(m: EndoMatrix, method: str = "hessenberg") -> Polynomial:
    """det(lambda I - m) as a polynomial in lambda over the entries' field."""
    if method == "hessenberg":
        return charpoly_hessenberg(m)
    if method == "bareiss":
        return charpoly_bareiss(m)
    if method == "faddeev":
        return charpoly_faddeev(m)
    raise ValueError(f"unknown method {method!r}")


def det(m: EndoMatrix) -> ExactScalar:
    return det_bareiss(m.rows)


def flip_sign(p: Polynomial, dim: int) -> Polynomial:
    """det(m - lambda I) = (-1)^dim det(lambda I - m)."""
    return p * (-1) if dim % 2 else p


def _mu() -> RationalFunction:
    return RationalFunction.mu()


def conjecture_factors(n: int, variant: str, mu: Any = None) -> dict[str, tuple[Polynomial, int]]:
    """The conjectured linear factors (in lambda) and their exponents."""
    mu = _mu() if mu is None else mu
    one_plus = mu + 1
    inv = 1 / one_plus
    sign = 1 if variant == "as-stated" else -1
    return {
        "lambda-1": (Polynomial((-ONE, ONE)), 2 + (n - 1) ** 2),
        "lambda+sign(1+mu)": (Polynomial((one_plus * sign, ONE)), n - 1),
        "lambda+sign/(1+mu)": (Polynomial((inv * sign, ONE)), n - 1),
    }


def conjectured_charpoly(n: int, variant: str = "as-stated", mu: Any = None) -> Polynomial:
    """(l-1)^(2+(n-1)^2) (l+1+mu)^(n-1) (l+1/(1+mu))^(n-1), or with the signs of the mu roots flipped."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    result = Polynomial((ONE,))
    for poly, e in conjecture_factors(n, variant, mu).values():
        result = result * poly**e
    return result


def trial_factor(p: Polynomial, mu: Any = None) -> dict:
    """Multiplicities of the candidate eigenvalue factors, and the leftover cofactor."""
    mu = _mu() if mu is None else mu
    cands = {
        "1": Fraction(1),
        "1+mu": mu + 1,
        "-(1+mu)": -(mu + 1),
        "1/(1+mu)": 1 / (mu + 1),
        "-1/(1+mu)": -1 / (mu + 1),
    }
    mult = {}
    rest = p
    for name, root in cands.items():
        lin = Polynomial((-root, ONE))
        k = 0
        while rest.degree > 0:
            q, r = divmod(rest, lin)
            if not r.is_zero():
                break
            rest, k = q, k + 1
        mult[name] = k
    return {"multiplicities": mult, "cofactor": [format_scalar(c) for c in rest.coeffs]}


def compare_polys(got: Polynomial, want: Polynomial) -> Optional[dict]:
    """None when equal, else the first differing coefficient as an exact certificate."""
    if got == want:
        return None
    if got.degree != want.degree:
        return {"reason": "degree", "got": got.degree, "expected": want.degree}
    for k in range(got.degree + 1):
        if got[k] != want[k]:
            return {"reason": "coefficient", "power": k,
                    "got": format_scalar(got[k]), "expected": format_scalar(want[k])}
    return None


# --------------------------------------------------------------------------
# evaluation / interpolation route

def _column_bounds(m: EndoMatrix) -> tuple[Polynomial, int]:
    """A denominator D(mu) and degree bound N with D * coeff a polynomial of degree <= N."""
    denom = Polynomial((ONE,))
    total = 0
    for c in range(m.dim):
        lcm = Polynomial((ONE,))
        for v in m.column(c):
            if isinstance(v, RationalFunction) and v.den.degree > 0:
                g = poly_gcd(lcm, v.den)
                lcm = (lcm * v.den).exact_div(g)
        deg = lcm.degree
        for v in m.column(c):
            if isinstance(v, RationalFunction) and v != 0:
                deg = max(deg, v.num.degree + lcm.degree - v.den.degree)
        denom = denom * lcm
        total += deg
    return denom, total


def interpolation_nodes(count: int, avoid: Polynomial) -> list[Fraction]:
    """``count`` distinct small integers mu, skipping 0, -1 and roots of ``avoid``."""
    nodes: list[Fraction] = []
    k = 1
    while len(nodes) < count:
        for x in (Fraction(k), Fraction(-k - 1)):
            if len(nodes) < count and avoid(x) != 0 and x not in (0, -1):
                nodes.append(x)
        k += 1
    return nodes


@dataclass
class InterpolatedCharPoly:
    poly: Polynomial
    nodes: list[Fraction]
    check_nodes: list[Fraction]
    checks_passed: bool


def char_poly_interpolated(m: EndoMatrix, extra_checks: int = 2) -> InterpolatedCharPoly:
    """Characteristic polynomial over Q(mu) from values at rational mu.

    ``extra_checks`` additional nodes are not used for fitting; the fitted
    polynomial must reproduce the direct rational computation there.
    """
    denom, bound = _column_bounds(m)
    nodes = interpolation_nodes(bound + 1 + extra_checks, denom)
    fit, check = nodes[: bound + 1], nodes[bound + 1:]
    values = [char_poly(m.at(x)) for x in fit]
    d = m.dim
    coeffs = []
    for k in range(d + 1):
        ys = [values[j][k] * denom(x) for j, x in enumerate(fit)]
        coeffs.append(RationalFunction(interpolate(fit, ys), denom))
    poly = Polynomial(coeffs)
    ok = True
    for x in check:
        direct = char_poly(m.at(x))
        evald = Polynomial(c.at(x) for c in poly.coeffs)
        ok = ok and direct == evald
    return InterpolatedCharPoly(poly, fit, check, ok)


# --------------------------------------------------------------------------
# conjecture check

@dataclass
class CharPolyReport:
    n: int
    basis_tag: str
    generator: int
    method: str
    char_poly: Polynomial
    conjectured: dict[str, Polynomial]
    verdicts: dict[str, bool]
    certificates: dict[str, Optional[dict]]
    factorization: dict
    determinant: ExactScalar
    cross_check: Optional[bool] = None

    @property
    def matching_variants(self) -> list[str]:
        return [v for v, ok in self.verdicts.items() if ok]

    def to_dict(self) -> dict:
        dim = self.char_poly.degree
        return {
            "n": self.n,
            "basis": self.basis_tag,
            "generator": self.generator,
            "method": self.method,
            "char_poly": [format_scalar(c) for c in self.char_poly.coeffs],
            "det_m_minus_lambda": [format_scalar(c) for c in flip_sign(self.char_poly, dim).coeffs],
            "verdicts": {k: ("match" if v else "mismatch") for k, v in self.verdicts.items()},
            "certificates": self.certificates,
            "factorization": self.factorization,
            "determinant": format_scalar(self.determinant),
            "cross_check": self.cross_check,
        }


def conjecture_check(n: int, basis_tag: str = "full", generator: int = 1,
                     method: Optional[str] = None, action: Optional[BraidAction] = None) -> CharPolyReport:
    """Compare det(lambda I - B(generator)) with both readings of the conjectured factorization.

    ``method`` defaults to direct symbolic computation for n <= 4 and to
    interpolation (with held-out check nodes) above that.
    """
    action = action or BraidAction(canonical_params(n))
    m = action.generator(generator)
    if basis_tag == "subspace":
        m = m.subspace()
    if method is None:
        method = "symbolic" if n <= 4 else "interpolation"
    cross = None
    if method == "symbolic":
        cp = char_poly(m)
    elif method == "interpolation":
        res = char_poly_interpolated(m)
        cp, cross = res.poly, res.checks_passed
    else:
        raise ValueError(f"unknown method {method!r}")
    conj = {v: conjectured_charpoly(n, v) for v in VARIANTS}
    certs = {v: compare_polys(cp, conj[v]) for v in VARIANTS}
    return CharPolyReport(
        n=n,
        basis_tag=basis_tag,
        generator=generator,
        method=method,
        char_poly=cp,
        conjectured=conj,
        verdicts={v: certs[v] is None for v in VARIANTS},
        certificates=certs,
        factorization=trial_factor(cp),
        determinant=det(m),
        cross_check=cross,
    )


# --------------------------------------------------------------------------
# dimensions

class EchelonBasis:
    """Incrementally maintained echelon form of a set of flattened matrices."""

    def __init__(self):
        self.rows: list[tuple[int, list]] = []
        self.members: list[EndoMatrix] = []

    def reduce(self, vec: list) -> list:
        v = list(vec)
        for piv, row in self.rows:
            f = v[piv]
            if f != 0:
                v = [a - f * b if b != 0 else a for a, b in zip(v, row)]
        return v

    def add(self, m: EndoMatrix) -> bool:
        v = self.reduce(m.flat())
        piv = next((k for k, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        self.rows.append((piv, v))
        self.members.append(m)
        return True

    def __len__(self) -> int:
        return len(self.rows)


class ClosureCapReached(RuntimeError):
    pass


def span_closure_dim(gens: Sequence[EndoMatrix], dim: Optional[int] = None,
                     include_inverses: bool = True) -> tuple[int, list[EndoMatrix]]:
    """Dimension and a basis of the unital algebra generated by ``gens``.

    Breadth-first by product length: each new basis element is multiplied on
    the right by every generator (and inverse) until a sweep adds nothing.
    """
    if dim is None:
        if not gens:
            raise ValueError("pass dim when there are no generators")
        dim = gens[0].dim
    mult = list(gens)
    if include_inverses:
        mult += [inverse(g) for g in gens]
    eb = EchelonBasis()
    frontier = []
    for m in [EndoMatrix.identity(dim)] + mult:
        if eb.add(m):
            frontier.append(m)
    cap = dim * dim
    sweeps = 0
    while frontier:
        sweeps += 1
        if sweeps > cap:
            raise ClosureCapReached(f"closure did not stabilise after {cap} sweeps")
        new = []
        for m in frontier:
            for g in mult:
                p = m @ g
                if eb.add(p):
                    new.append(p)
        frontier = new
    return len(eb), eb.members


def centralizer_basis(gens: Sequence[EndoMatrix], dim: int) -> list[EndoMatrix]:
    eqs = commutant_rows(gens)
    if not eqs:
        vecs = [[ONE if k == j else ZERO for k in range(dim * dim)] for j in range(dim * dim)]
    else:
        vecs = nullspace(eqs, dim * dim)
    return [EndoMatrix([v[r * dim:(r + 1) * dim] for r in range(dim)]) for v in vecs]


def centralizer_dim(gens: Sequence[EndoMatrix], dim: Optional[int] = None) -> int:
    """Dimension of {M : M g = g M for every g}."""
    if dim is None:
        dim = gens[0].dim
    eqs = commutant_rows(gens)
    return dim * dim - rank(eqs) if eqs else dim * dim


def center_dim(algebra_basis: Sequence[EndoMatrix]) -> int:
    """Dimension of the centre of span(algebra_basis) (assumed closed under products)."""
    k = len(algebra_basis)
    if k == 0:
        return 0
    # columns: unknown coefficient x_a; rows: entries of sum_a x_a [A_a, A_b]
    eqs: list[list] = []
    comms = [[(a @ b) - (b @ a) for b in algebra_basis] for a in algebra_basis]
    d = algebra_basis[0].dim
    for bi in range(k):
        for r in range(d):
            for c in range(d):
                row = [comms[ai][bi].rows[r][c] for ai in range(k)]
                if any(v != 0 for v in row):
                    eqs.append(row)
    return k - rank(eqs) if eqs else k


def trace_form_rank(algebra_basis: Sequence[EndoMatrix]) -> int:
    """Rank of the Gram matrix trace(A_a A_b)."""
    gram = [[(a @ b).trace() for b in algebra_basis] for a in algebra_basis]
    return rank(gram) if gram else 0


def block_decompositions(algebra_dim: int, center: int, centralizer: int, space_dim: int,
                         max_block: int = 6) -> list[list[tuple[int, int]]]:
    """All (block size, multiplicity) lists consistent with a semisimple action.

    A semisimple algebra acting faithfully on a space of dimension ``space_dim``
    with simple blocks of sizes d_i occurring m_i >= 1 times satisfies
    sum d_i^2 = algebra_dim, #blocks = center, sum m_i^2 = centralizer and
    sum d_i m_i = space_dim.
    """
    solutions = []
    for ds in itertools.combinations_with_replacement(range(1, max_block + 1), center):
        if sum(d * d for d in ds) != algebra_dim:
            continue
        ds = tuple(sorted(ds, reverse=True))
        for ms in itertools.product(range(1, space_dim + 1), repeat=center):
            if sum(m * m for m in ms) != centralizer:
                continue
            if sum(d * m for d, m in zip(ds, ms)) != space_dim:
                continue
            sol = sorted(zip(ds, ms), reverse=True)
            if sol not in solutions:
                solutions.append(sol)
    return solutions


def published_block_hypothesis_check(space_dim: int, centralizer: int) -> dict:
    """Four 2-dimensional and three 1-dimensional blocks: sum of squares 19, seven blocks."""
    ds = (2, 2, 2, 2, 1, 1, 1)
    found = []
    for ms in itertools.product(range(1, space_dim + 1), repeat=len(ds)):
        if sum(d * m for d, m in zip(ds, ms)) == space_dim and sum(m * m for m in ms) == centralizer:
            found.append(list(ms))
    return {"blocks": list(ds), "sum_of_squares": sum(d * d for d in ds),
            "multiplicity_solutions": found}


def sample_mu(rng: random.Random, count: int) -> list[Fraction]:
    """Distinct generic rationals p/q with 2 <= p, q <= 50."""
    out: list[Fraction] = []
    while len(out) < count:
        x = Fraction(rng.randint(2, 50), rng.randint(2, 50))
        if x not in out and x not in (0, -1):
            out.append(x)
    return out


@dataclass
class DimensionSample:
    mu: Fraction
    algebra_dim: int
    centralizer_dim: int
    center_dim: int
    trace_form_rank: int
    bicommutant_dim: int

    def to_dict(self) -> dict:
        return {
            "mu": str(self.mu),
            "algebra_dim": self.algebra_dim,
            "centralizer_dim": self.centralizer_dim,
            "center_dim": self.center_dim,
            "trace_form_rank": self.trace_form_rank,
            "bicommutant_dim": self.bicommutant_dim,
        }


@dataclass
class DimensionReport:
    n: int
    basis_tag: str
    samples: list[DimensionSample] = field(default_factory=list)

    @property
    def mu_samples(self) -> list[Fraction]:
        return [s.mu for s in self.samples]

    def _common(self, attr: str) -> Optional[int]:
        vals = {getattr(s, attr) for s in self.samples}
        return vals.pop() if len(vals) == 1 else None

    @property
    def stable(self) -> bool:
        return all(self._common(a) is not None for a in
                   ("algebra_dim", "centralizer_dim", "center_dim", "trace_form_rank", "bicommutant_dim"))

    @property
    def algebra_dim(self) -> Optional[int]:
        return self._common("algebra_dim")

    @property
    def centralizer_dim(self) -> Optional[int]:
        return self._common("centralizer_dim")

    @property
    def center_dim(self) -> Optional[int]:
        return self._common("center_dim")

    @property
    def trace_form_rank(self) -> Optional[int]:
        return self._common("trace_form_rank")

    @property
    def space_dim(self) -> int:
        return self.n * self.n + (1 if self.basis_tag == "full" else 0)

    def block_consistency(self) -> dict:
        a, c, z = self.algebra_dim, self.centralizer_dim, self.center_dim
        if not self.stable:
            return {"verdict": "unstable across samples"}
        semisimple = self.trace_form_rank == a
        sols = block_decompositions(a, z, c, self.space_dim)
        out = {
            "semisimple_by_trace_form": semisimple,
            "double_centralizer_holds": self._common("bicommutant_dim") == a,
            "decompositions": [[{"block_dim": d, "multiplicity": m} for d, m in s] for s in sols],
            "published_hypothesis": published_block_hypothesis_check(self.space_dim, c),
        }
        if not semisimple:
            verdict = f"trace form has rank {self.trace_form_rank} < {a}: not semisimple at these samples"
        elif sols:
            verdict = "consistent semisimple block structure found"
        else:
            verdict = "no semisimple block structure fits these dimensions"
        out["verdict"] = verdict
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "basis": self.basis_tag,
            "mu_samples": [str(x) for x in self.mu_samples],
            "samples": [s.to_dict() for s in self.samples],
            "stable": self.stable,
            "algebra_dim": self.algebra_dim,
            "centralizer_dim": self.centralizer_dim,
            "center_dim": self.center_dim,
            "trace_form_rank": self.trace_form_rank,
            "block_consistency": self.block_consistency(),
        }


def to_mpq_matrix(m: EndoMatrix) -> EndoMatrix:
    """Same matrix with gmpy2 rationals; the dimension computations are rational-only."""
    return EndoMatrix([[mpq(v.numerator, v.denominator) for v in row] for row in m.rows], m.n, m.basis)


def dimension_sample(n: int, mu: Fraction, basis_tag: str = "subspace") -> DimensionSample:
    gens = [to_mpq_matrix(g) for g in BraidAction(canonical_params(n, mu)).generators(basis_tag)]
    d = gens[0].dim
    a_dim, a_basis = span_closure_dim(gens, d)
    cent = centralizer_basis(gens, d)
    return DimensionSample(
        mu=mu,
        algebra_dim=a_dim,
        centralizer_dim=len(cent),
        center_dim=center_dim(a_basis),
        trace_form_rank=trace_form_rank(a_basis),
        bicommutant_dim=centralizer_dim(cent, d),
    )


def dimension_report(n: int, mu_samples: Sequence[Fraction], basis_tag: str = "subspace") -> DimensionReport:
    report = DimensionReport(n, basis_tag)
    for mu in sorted(mu_samples):
        report.samples.append(dimension_sample(n, Fraction(mu), basis_tag))
    return report
