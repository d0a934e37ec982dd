"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 a size cap or work budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .coxeter import CoxeterMatrix, IrreducibleType, direct_sum, validate_finite_type
from .errors import BudgetExceeded, RankTooLarge
from .oracle import default_budget, verify_inversion, work_estimate
from .series import DEFAULT_DEGREE, invert_series
from .skewgrowth import derivative_at_one, skew_growth_poly, theorem_table, value_at_one, verify_identities

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


@dataclass(frozen=True)
class TypeSpec:
    """Either a product of named irreducible types (``A2xB3``) or a matrix file path."""

    factors: tuple[IrreducibleType, ...] = ()
    path: str | None = None

    @classmethod
    def parse(cls, text: str) -> "TypeSpec":
        tokens = text.split("x")
        factors = []
        for tok in tokens:
            try:
                factors.append(IrreducibleType.parse(tok))
            except ValueError as exc:
                if os.path.isfile(text):
                    return cls(path=text)
                raise ValueError(f"bad type token {tok!r} in {text!r}: {exc}") from None
        return cls(tuple(factors))

    def __str__(self):
        if self.path is not None:
            return self.path
        return "x".join(str(f) for f in self.factors)

    def matrix(self) -> CoxeterMatrix:
        if self.path is not None:
            with open(self.path) as fh:
                return CoxeterMatrix.from_text(fh.read())
        return direct_sum(*(f.matrix() for f in self.factors))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_poly(args) -> int:
    spec = TypeSpec.parse(args.spec)
    M = spec.matrix()
    types = validate_finite_type(M)
    poly = skew_growth_poly(M)
    if args.json:
        _emit({
            "spec": str(spec),
            "rank": M.rank,
            "types": [str(t) for t in types],
            "polynomial": str(poly),
            "coefficients": list(poly.coefficients),
        })
    else:
        print(poly)
        print(json.dumps(list(poly.coefficients)))
    return EXIT_OK


def cmd_derivative(args) -> int:
    spec = TypeSpec.parse(args.spec)
    poly = skew_growth_poly(spec.matrix())
    value, slope = value_at_one(poly), derivative_at_one(poly)
    simple = value == 0 and slope != 0
    if args.json:
        _emit({"spec": str(spec), "value_at_one": value, "derivative_at_one": slope, "simple_root": simple})
    else:
        print(f"N(1) = {value}")
        print(f"N'(1) = {slope}")
        print(f"simple root at t=1: {'yes' if simple else 'no'}")
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_rank < 4:
        print("error: --max-rank must be at least 4", file=sys.stderr)
        return EXIT_USAGE
    rows = theorem_table(args.max_rank)
    passed = all(r.ok and r.simple_root for r in rows)
    if args.json:
        _emit({
            "max_rank": args.max_rank,
            "passed": passed,
            "rows": [
                {
                    "name": r.name,
                    "computed": r.computed,
                    "expected": r.expected,
                    "ok": r.ok,
                    "value_at_one": r.value_at_one,
                    "simple_root": r.simple_root,
                }
                for r in rows
            ],
        })
    else:
        print(f"{'type':<8}{'computed':>10}{'expected':>10}  status")
        for r in rows:
            status = "OK" if r.ok and r.simple_root else "MISMATCH"
            print(f"{r.name:<8}{r.computed:>10}{r.expected:>10}  {status}")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_verify(args) -> int:
    report = verify_identities(args.lmax)
    if args.json:
        _emit(report.to_dict())
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name} ({c.cases} cases): {c.statement}")
            if c.first_failure is not None:
                print(f"    first failure: {json.dumps(c.first_failure, sort_keys=True)}")
        for note in report.notes:
            print(f"note: {note}")
        print("all identities pass" if report.passed else "some identities FAILED")
    return EXIT_OK if report.passed else EXIT_FAIL


def _largest_affordable_degree(rank: int, budget: int) -> int:
    d = 0
    while work_estimate(rank, d + 1) <= budget:
        d += 1
    return d


def cmd_growth(args) -> int:
    spec = TypeSpec.parse(args.spec)
    M = spec.matrix()
    if args.degree < 0:
        print("error: --degree must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    if not args.oracle:
        series = invert_series(skew_growth_poly(M), args.degree)
        if args.json:
            _emit({"spec": str(spec), "degree": args.degree, "series": list(series.coefficients),
                   "oracle": None, "passed": None})
        else:
            print(" ".join(str(c) for c in series.coefficients))
        return EXIT_OK

    budget = default_budget()
    try:
        report = verify_inversion(M, args.degree, budget)
    except BudgetExceeded as exc:
        hint = _largest_affordable_degree(M.rank, budget)
        print(f"error: {exc}; try --degree {hint} or raise ARTIN_GROWTH_BUDGET", file=sys.stderr)
        return EXIT_LIMIT
    if args.json:
        _emit({"spec": str(spec), "degree": args.degree, "series": list(report.series),
               "oracle": list(report.counts), "passed": report.passed})
    else:
        print(" ".join(str(c) for c in report.series))
        print("oracle: " + " ".join(str(c) for c in report.counts))
        verdict = "PASS" if report.passed else f"FAIL (first mismatch at degree {report.first_mismatch})"
        print(f"verdict: {verdict}")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object on stdout")

    parser = argparse.ArgumentParser(
        prog="artin-growth",
        description="Skew-growth polynomials of finite-type Artin monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common], help="print N(t)")
    p.add_argument("spec", help="type such as A5, I2(7), A2xB3, or a matrix file")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("derivative", parents=[common], help="print N(1) and N'(1)")
    p.add_argument("spec")
    p.set_defaults(func=cmd_derivative)

    p = sub.add_parser("table", parents=[common], help="computed vs closed-form N'(1) for all families")
    p.add_argument("--max-rank", type=int, default=10)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="check the degree-sum identities by enumeration")
    p.add_argument("--lmax", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("growth", parents=[common], help="coefficients of 1/N(t)")
    p.add_argument("spec")
    p.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force word counts")
    p.set_defaults(func=cmd_growth)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RankTooLarge, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
