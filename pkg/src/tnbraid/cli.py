"""Command-line interface: ``tnbraid matrices | verify | analyze | oracle``.

Exit codes: 0 all checks passed, 1 a mathematical check failed,
2 degenerate parameters, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .algebra import DegenerateParameterError, ParamSet, random_params
from .analysis import conjecture_check, det, dimension_report, sample_mu
from .braid import (
    BraidAction,
    canonical_params,
    check_golden,
    check_inverses,
    check_off_diagonal,
    check_subspace_preservation,
    endomorphism_diagnostic,
    fjj_coefficient_probe,
    identify_effective_parameter,
    obstruction_closed_form,
    obstruction_unit_coeff,
    sampled_relation_report,
    verify_braid_relations,
)
from .exact import Polynomial, RationalFunction, format_scalar
from .free_group import compatibility_check, verify_artin_inverses, verify_artin_relations
from .matrix import EndoMatrix
from .report import Report
from . import suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_DEGENERATE = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    n: int = 3
    mu: str = "symbolic"
    params_file: Optional[str] = None
    seed: int = 0
    samples: Optional[int] = None
    basis: str = "full"
    format: str = "json"
    out: Optional[str] = None
    suite: bool = False


# --------------------------------------------------------------------------
# formatting

def _latex_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (r"\mu" if k == 1 else rf"\mu^{{{k}}}")
        c = Fraction(c)
        if mono and abs(c) == 1:
            body = mono
        elif c.denominator == 1:
            body = f"{abs(c.numerator)}{mono}"
        else:
            body = rf"\frac{{{abs(c.numerator)}}}{{{c.denominator}}}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def latex_scalar(v: Any) -> str:
    if isinstance(v, RationalFunction):
        if v.den.degree == 0:
            return _latex_poly(v.num)
        num = v.num
        sign = ""
        if num.lead() < 0 and all(c <= 0 for c in num.coeffs):
            num, sign = -num, "-"
        return rf"{sign}\frac{{{_latex_poly(num)}}}{{{_latex_poly(v.den)}}}"
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    sign = "-" if v < 0 else ""
    return rf"{sign}\frac{{{abs(v.numerator)}}}{{{v.denominator}}}"


def latex_matrix(name: str, m: EndoMatrix) -> str:
    lines = [rf"\[{name}=\left(", r"\begin{array}{" + "c" * m.dim + "}"]
    for row in m.rows:
        lines.append(" & ".join(latex_scalar(v) for v in row) + r" \\")
    lines += [r"\end{array}", r"\right)\]"]
    return "\n".join(lines)


def _csv_scalar(v: Any) -> str:
    if isinstance(v, RationalFunction):
        return str(v)
    return str(Fraction(v))


def _report_rows(results: Any) -> list[dict]:
    rows = []
    if isinstance(results, dict):
        for key, val in results.items():
            if isinstance(val, list) and val and isinstance(val[0], dict) and "status" in val[0]:
                for e in val:
                    rows.append({"section": key, **{k: e.get(k, "") for k in ("check", "instance", "status")}})
    return rows


def render(cfg: RunConfig, results: Any, matrices: Optional[dict[str, EndoMatrix]] = None) -> str:
    if cfg.format == "json":
        doc = {"command": cfg.command, "config": asdict(cfg), "results": results, "version": __version__}
        return json.dumps(doc, indent=2) + "\n"
    if cfg.format == "latex":
        if matrices is None:
            raise UsageError("latex output is only available for the matrices command")
        return "\n\n".join(latex_matrix(name, m) for name, m in matrices.items()) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if matrices is not None:
        for name, m in matrices.items():
            writer.writerow([f"# {name}"])
            for row in m.rows:
                writer.writerow([_csv_scalar(v) for v in row])
    else:
        writer.writerow(["section", "check", "instance", "status"])
        for r in _report_rows(results):
            writer.writerow([r["section"], r["check"], r["instance"], r["status"]])
    return buf.getvalue()


# --------------------------------------------------------------------------
# commands

def load_params(cfg: RunConfig) -> ParamSet:
    if cfg.params_file:
        try:
            data = json.loads(Path(cfg.params_file).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read parameter file: {exc}") from exc
        params = ParamSet.from_dict(data)
        if params.n < 2:
            raise UsageError("need n >= 2")
        return params
    if cfg.n < 2:
        raise UsageError("need n >= 2: B_1 has no generators")
    mu: Any = cfg.mu
    if mu != "symbolic":
        try:
            mu = Fraction(mu)
        except ValueError as exc:
            raise UsageError(f"--mu must be a rational or 'symbolic', got {cfg.mu!r}") from exc
    return canonical_params(cfg.n, mu)


def cmd_matrices(cfg: RunConfig) -> tuple[int, Any, dict]:
    params = load_params(cfg)
    action = BraidAction(params)
    mats = {}
    for i in range(1, params.n):
        m = action.generator(i)
        mats[f"B({i})"] = m.subspace() if cfg.basis == "subspace" else m
    results = {
        "params": params.to_dict(),
        "effective_mu": format_scalar(params.effective_mu()),
        "c2_alpha_mu": format_scalar(params.c2_alpha_mu()),
        "matrices": {k: m.to_dict() for k, m in mats.items()},
    }
    return EXIT_OK, results, mats


def _prefixed(report: Report, prefix: str) -> Report:
    for e in report.entries:
        e.instance = f"{prefix} {e.instance}"
    return report


def cmd_verify(cfg: RunConfig) -> tuple[int, Any]:
    if cfg.suite:
        results = {}
        ok = True
        for name, fn in suite.VERIFY_CRITERIA.items():
            r = fn()
            results[name] = r.to_list()
            ok = ok and r.passed
        return (EXIT_OK if ok else EXIT_FAILED), results

    params = load_params(cfg)
    n = params.n
    action = BraidAction(params)
    rng = random.Random(cfg.seed)
    samples = cfg.samples if cfg.samples is not None else 100
    sections: dict[str, Report] = {}
    sections["braid_relations"] = verify_braid_relations(n, params, action)
    sections["inverses"] = check_inverses(action)
    violations = params.constraint_violations()
    obstruction = Report()
    for i in range(1, n):
        got, want = obstruction_unit_coeff(i, params), obstruction_closed_form(i, params)
        obstruction.add("obstruction_formula", f"X{i} given parameters", got == want,
                        {"expansion": format_scalar(got), "closed_form": format_scalar(want)})
    for k in range(samples):
        p = random_params(n, rng)
        for i in range(1, n):
            got, want = obstruction_unit_coeff(i, p), obstruction_closed_form(i, p)
            obstruction.add("obstruction_formula", f"X{i} sample={k}", got == want,
                            {"params": p.to_dict(), "expansion": format_scalar(got)})
    sections["obstruction"] = obstruction
    sections["artin_relations"] = verify_artin_relations(n)
    sections["artin_inverses"] = verify_artin_inverses(n, rng, 1000, 32)
    sections["sampled_relations"] = sampled_relation_report([n], samples, rng)
    if not violations:
        probe = Report()
        for i in range(1, n):
            v = fjj_coefficient_probe(i, params)
            probe.add("fjj_probe_vanishes", f"X{i}", v == 0, {"value": format_scalar(v)})
        sections["fjj_probe"] = probe
        sections["subspace_preservation"] = check_subspace_preservation(action)
        sections["off_diagonal"] = check_off_diagonal(action)
        sections["endomorphism"] = endomorphism_diagnostic(params, action)
        sections["artin_compatibility"] = compatibility_check(n, action)
        if n == 3 and isinstance(params.effective_mu(), RationalFunction) and params.effective_mu() == RationalFunction.mu():
            sections["golden"] = check_golden(action)
    ok = all(r.passed for r in sections.values())
    results: dict[str, Any] = {"params": params.to_dict(), "constraint_violations": violations}
    results.update({k: r.to_list() for k, r in sections.items()})
    if n == 3 and not cfg.params_file:
        results["effective_parameter"] = identify_effective_parameter()
    return (EXIT_OK if ok else EXIT_FAILED), results


def cmd_analyze(cfg: RunConfig) -> tuple[int, Any]:
    if cfg.suite:
        results: dict[str, Any] = {}
        ok = True
        dims_report, dims = suite.dimensions_check()
        for name, fn in suite.ANALYZE_CRITERIA.items():
            r = dims_report if fn is suite.dimensions_report_only else fn()
            results[name] = r.to_list()
            ok = ok and r.passed
        results["dimension_report"] = dims
        return (EXIT_OK if ok else EXIT_FAILED), results

    if cfg.params_file:
        raise UsageError("analyze works on canonical parameters; use --n/--mu")
    if cfg.n < 2:
        raise UsageError("need n >= 2: B_1 has no generators")
    n = cfg.n
    params = load_params(RunConfig("analyze", n=n, mu="symbolic"))
    action = BraidAction(params)
    checks = Report()
    charpoly = []
    gens = sorted({1, n - 1})
    for g in gens:
        matches = []
        for basis_tag in ("full", "subspace"):
            r = conjecture_check(n, basis_tag, g, action=action)
            charpoly.append(r.to_dict())
            matches += [f"{basis_tag}/{v}" for v, okv in r.verdicts.items() if okv]
            if r.cross_check is not None:
                checks.add("interpolation_cross_check", f"B({g}) {basis_tag}", r.cross_check)
        checks.add("conjecture_verdict", f"B({g}) exactly one reading matches", len(matches) == 1,
                   {"matching": matches}, keep_on_pass=True)
    for i in range(1, n):
        d = det(action.generator(i))
        checks.add("unit_determinant", f"B({i})", d == 1, {"det": format_scalar(d)})

    rng = random.Random(cfg.seed)
    samples = cfg.samples if cfg.samples is not None else 5
    basis_tag = "subspace" if cfg.basis == "subspace" or cfg.basis is None else cfg.basis
    dims = dimension_report(n, sample_mu(rng, samples), basis_tag)
    checks.add("dimension_stability", f"n={n}", dims.stable)
    if n == 3 and basis_tag == "subspace":
        checks.add("algebra_dim", f"expected {suite.PUBLISHED_ALGEBRA_DIM}",
                   dims.algebra_dim == suite.PUBLISHED_ALGEBRA_DIM, {"computed": dims.algebra_dim}, keep_on_pass=True)
        checks.add("centralizer_dim", f"expected {suite.PUBLISHED_CENTRALIZER_DIM}",
                   dims.centralizer_dim == suite.PUBLISHED_CENTRALIZER_DIM, {"computed": dims.centralizer_dim}, keep_on_pass=True)
    results = {"char_poly_reports": charpoly, "dimension_report": dims.to_dict(), "checks": checks.to_list()}
    return (EXIT_OK if checks.passed else EXIT_FAILED), results


def cmd_oracle(cfg: RunConfig) -> tuple[int, Any]:
    if cfg.n < 2:
        raise UsageError("need n >= 2")
    rng = random.Random(cfg.seed)
    words = cfg.samples if cfg.samples is not None else 1000
    rel = verify_artin_relations(cfg.n)
    inv = verify_artin_inverses(cfg.n, rng, words, 32)
    ok = rel.passed and inv.passed
    return (EXIT_OK if ok else EXIT_FAILED), {"artin_relations": rel.to_list(), "artin_inverses": inv.to_list()}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tnbraid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_text in (
        ("matrices", "emit the generator matrices B(i)"),
        ("verify", "run the exact identity checks"),
        ("analyze", "characteristic polynomials and dimensions"),
        ("oracle", "free-group Artin action checks only"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--n", type=int, default=3)
        p.add_argument("--mu", default="symbolic", help="rational such as 2/3, or 'symbolic'")
        p.add_argument("--params-file", dest="params_file")
        p.add_argument("--basis", choices=("full", "subspace"), default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
        p.add_argument("--out")
        p.add_argument("--suite", action="store_true",
                       help="run the whole acceptance property suite (verify, analyze)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items()})
    if cfg.basis is None:
        cfg.basis = "subspace" if cfg.command == "analyze" else "full"
    matrices = None
    try:
        if cfg.command == "matrices":
            code, results, matrices = cmd_matrices(cfg)
        elif cfg.command == "verify":
            code, results = cmd_verify(cfg)
        elif cfg.command == "analyze":
            code, results = cmd_analyze(cfg)
        else:
            code, results = cmd_oracle(cfg)
        text = render(cfg, results, matrices)
    except UsageError as exc:
        print(f"tnbraid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateParameterError as exc:
        print(json.dumps({"error": "degenerate parameters", "quantity": exc.quantity, "message": str(exc)}))
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"tnbraid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
