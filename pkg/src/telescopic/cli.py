"""Command-line surface: prove | derive | approx | quad.

Exit codes: 0 success, 1 proof/verification failure, 2 usage error.
Rational arguments accept "p/q" and decimal strings; decimals convert
exactly (0.5 -> 1/2), so no floating contamination enters the exact
pipeline.  All output is deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import mpmath

from . import serialize
from ._version import __version__
from .approximants import approximant_table, rows_to_csv
from .errors import AnsatzExhaustedError, TelescopicError, ToleranceNotMetError
from .families import ParameterPair, make_left_family, make_right_family
from .integration import integrate_01, logcomb_to_float
from .prove import prove_identity
from .quadrature import quad_01
from .telescoping import discover, required_degree_bound, verify_telescoping_all_n


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected a rational like 3/4 or 0.75, got {text!r}"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="telescopic",
        description=(
            "Exact creative-telescoping proofs of a two-parameter integral "
            "identity, with rational log approximants and a quadrature oracle."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=_rational, required=True, help="parameter a (rational)")
    common.add_argument("--b", type=_rational, required=True, help="parameter b (rational)")
    common.add_argument("--n-max", type=int, default=8, help="largest n handled (default 8)")
    common.add_argument(
        "--mode",
        choices=("verify", "discover"),
        default="verify",
        help="use the closed-form certificates or re-derive them (default verify)",
    )
    common.add_argument(
        "--precision-bits", type=int, default=256, help="working float precision (default 256)"
    )
    common.add_argument(
        "--tol", type=float, default=1e-12, help="quadrature tolerance (default 1e-12)"
    )
    common.add_argument("--out", default=None, help="output file path")
    common.add_argument(
        "--seed", type=int, default=0, help="seed recorded for reproducible sweeps"
    )
    common.add_argument(
        "--max-order", type=int, default=2, help="largest recurrence order tried (default 2)"
    )
    common.add_argument(
        "--max-cert-degree",
        type=int,
        default=4,
        help="largest certificate numerator degree tried (default 4)",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("prove", parents=[common], help="run the full proof pipeline")
    sub.add_parser("derive", parents=[common], help="discover recurrence and certificates")
    sub.add_parser("approx", parents=[common], help="emit the approximant table as CSV")
    sub.add_parser("quad", parents=[common], help="compare exact values against quadrature")
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> ParameterPair:
    if not (args.a > args.b > 0):
        parser.error(f"requires a > b > 0 (got a={args.a}, b={args.b})")
    if args.n_max < 0:
        parser.error("--n-max must be nonnegative")
    if args.precision_bits < 64:
        parser.error("--precision-bits must be at least 64")
    if args.tol < 1e-14:
        parser.error("--tol must be at least 1e-14")
    if args.max_order < 1:
        parser.error("--max-order must be at least 1")
    if args.max_cert_degree < 1:
        parser.error("--max-cert-degree must be at least 1")
    return ParameterPair(args.a, args.b)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def cmd_prove(params: ParameterPair, args: argparse.Namespace) -> int:
    proof = prove_identity(
        params,
        mode=args.mode,
        extra_n=args.n_max,
        max_order=args.max_order,
        max_cert_degree=args.max_cert_degree,
    )
    print(f"params: a={params.a}, b={params.b}  mode: {args.mode}")
    if proof.recurrence is not None:
        print(f"recurrence coefficients (in n): {proof.recurrence.to_str()}")
    if proof.left_certificate is not None:
        print(f"left certificate:  {proof.left_certificate.at(0)}")
    if proof.right_certificate is not None:
        print(f"right certificate: {proof.right_certificate.at(0)}")
    for n, left, right in proof.base_cases:
        mark = "==" if left == right else "!="
        print(f"base case n={n}: left = {left}  {mark}  right = {right}")
    if proof.extra_checks:
        top = max(n for n, _, _ in proof.extra_checks)
        print(f"direct left/right comparisons: n = 0..{top}, all equal")
    print(f"substitution check (n<=5): {'pass' if proof.substitution_check else 'FAIL'}")
    if proof.proved:
        print("verdict: proved")
    else:
        print(f"verdict: failed — {proof.failure_reason}")
    _emit(serialize.proof_to_json(proof), args.out)
    return 0 if proof.proved else 1


def cmd_derive(params: ParameterPair, args: argparse.Namespace) -> int:
    families = {
        "left": make_left_family(params),
        "right": make_right_family(params),
    }
    results = {}
    for side, fam in families.items():
        try:
            rec, cert = discover(fam, args.max_order, args.max_cert_degree)
        except AnsatzExhaustedError as exc:
            print(f"{side}: {exc}")
            return 1
        verified = verify_telescoping_all_n(
            fam, rec, cert, required_degree_bound(rec, cert)
        )
        results[side] = rec
        print(f"{side} family:")
        print(f"  recurrence (order {rec.order}): {rec.to_str()}")
        for i, part in enumerate(cert.parts):
            label = "certificate" if len(cert.parts) == 1 else f"certificate n^{i} part"
            print(f"  {label}: {part}")
        print(f"  certificate degree in n: {cert.n_degree()}")
        print(f"  verified for all n: {verified}")
        if not verified:
            return 1
    shared = results["left"] == results["right"]
    print(f"families share one recurrence: {shared}")
    return 0 if shared else 1


def cmd_approx(params: ParameterPair, args: argparse.Namespace) -> int:
    rows = approximant_table(params, args.n_max, args.precision_bits)
    csv_text = rows_to_csv(rows, args.precision_bits)
    _emit(csv_text, args.out)
    if args.out is not None:
        # gnuplot-compatible companion: n against the approximation error
        with open(args.out + ".dat", "w", encoding="utf-8") as handle:
            for row in rows:
                handle.write(f"{row.n} {mpmath.nstr(row.abs_error, 17)}\n")
    return 0


def cmd_quad(params: ParameterPair, args: argparse.Namespace) -> int:
    lines = ["family n exact quadrature abs_diff subdivisions status"]
    for side, fam in (
        ("left", make_left_family(params)),
        ("right", make_right_family(params)),
    ):
        for n in range(args.n_max + 1):
            exact = float(logcomb_to_float(integrate_01(fam.at(n)), 64))
            status = "ok"
            try:
                result = quad_01(fam.at(n), args.tol)
            except ToleranceNotMetError as exc:
                result = exc.result
                status = "tolerance-not-met"
            diff = abs(exact - result.value)
            lines.append(
                f"{side} {n} {exact:.15e} {result.value:.15e} {diff:.3e} "
                f"{result.subdivisions} {status}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = _validate(parser, args)
    handlers = {
        "prove": cmd_prove,
        "derive": cmd_derive,
        "approx": cmd_approx,
        "quad": cmd_quad,
    }
    try:
        return handlers[args.command](params, args)
    except TelescopicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
