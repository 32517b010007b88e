"""Command-line front end with deterministic JSON, CSV and table output.

Exit codes: 0 on success, 1 on validation failure (bad flags, malformed
weights, out-of-range parameters), 2 when a mathematical property or oracle
check fails, so CI pipelines can gate on the theorem checks directly.
Identical inputs produce byte-identical output: all enumerations are sorted,
rationals are rendered as p/q strings, and reals are rendered at a fixed
number of significant digits (``--precision``, default 12).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal
from fractions import Fraction

from . import precision
from .cb_region import cb_region_enumerate
from .central_weights import (
    CentralWeightSpec,
    casimir_subadditivity_check,
    validate_central_weight,
)
from .characters import weight_multiplicities
from .fusion import tensor_decompose
from .qnorm import QExponent, SessionConfig, lminus_norm_exponent, rmatrix_exponent_details
from .root_system import LieTypeError, build_root_system
from .sl2_oracle import verify_norm_formula

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

_HEIGHT_CAPS = {"A": 12, "B": 12, "C": 12, "D": 12, "E": 6, "F": 6, "G": 6}


class CliError(ValueError):
    """Invalid command line input; rendered as a single actionable line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, single line, no usage dump
        raise CliError(message)


def _parse_weight(text: str, rank: int, name: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(c.strip()) for c in str(text).split(","))
    except ValueError:
        raise CliError(f"{name} must be comma-separated integers, got {text!r}")
    if len(coords) != rank:
        raise CliError(f"{name} has {len(coords)} coordinates, expected {rank}")
    return coords


def _parse_q(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"q must be a rational in (0,1) like 0.5 or 1/2, got {text!r}")
    if not 0 < q < 1:
        raise CliError(f"q must satisfy 0 < q < 1, got {text}")
    return q


def _parse_beta(text: str) -> Decimal:
    try:
        return Decimal(text)
    except ArithmeticError:
        raise CliError(f"beta must be a decimal number, got {text!r}")


def _check_height_cap(rs, height: int, force: bool) -> None:
    cap = min(_HEIGHT_CAPS[s] for s, _ in rs.lie_type.factors)
    if height > cap and not force:
        raise CliError(
            f"height {height} exceeds the cap {cap} for type {rs.lie_type}; pass --force to override"
        )


def _frac(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _weight_str(w) -> str:
    return ",".join(str(c) for c in w)


class _Renderer:
    def __init__(self, digits: int):
        self.digits = digits

    def real(self, x) -> str:
        if isinstance(x, float):
            x = Decimal(repr(x))
        return precision.render(x, self.digits)


def _emit(args, payload: dict, headers: list[str], rows: list[list[str]]) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        widths = [len(h) for h in headers]
        for row in rows:
            widths = [max(w, len(c)) for w, c in zip(widths, row)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        for row in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------

def _cmd_fusion(args, render: _Renderer) -> int:
    rs = build_root_system(args.type)
    lam = _parse_weight(args.lam, rs.rank, "--lambda")
    mu = _parse_weight(args.mu, rs.rank, "--mu")
    fd = tensor_decompose(rs, lam, mu)
    payload = {
        "lambda": list(lam),
        "mu": list(mu),
        "components": [{"nu": list(nu), "mult": m} for nu, m in fd.components.items()],
    }
    rows = [[_weight_str(nu), str(m)] for nu, m in fd.components.items()]
    _emit(args, payload, ["nu", "mult"], rows)
    return EXIT_OK


def _cmd_character(args, render: _Renderer) -> int:
    rs = build_root_system(args.type)
    mu = _parse_weight(args.mu, rs.rank, "--mu")
    char = weight_multiplicities(rs, mu)
    ordered = sorted(char.dominant.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
    payload = {
        "type": str(rs.lie_type),
        "mu": list(mu),
        "dim": char.dim,
        "dominant_weights": [{"weight": list(w), "mult": m} for w, m in ordered],
    }
    rows = [[_weight_str(w), str(m)] for w, m in ordered]
    _emit(args, payload, ["weight", "mult"], rows)
    return EXIT_OK


def _cmd_verify_weight(args, render: _Renderer) -> int:
    rs = build_root_system(args.type)
    _check_height_cap(rs, args.height, args.force)
    if args.kind == "beta":
        if args.beta is None:
            raise CliError("--beta is required for --kind beta")
        spec = CentralWeightSpec.beta_norm(_parse_beta(args.beta))
    elif args.kind == "lst":
        if args.beta is None:
            raise CliError("--beta is required for --kind lst")
        spec = CentralWeightSpec.lst(_parse_beta(args.beta))
    else:
        if not args.table:
            raise CliError("--table FILE is required for --kind table")
        try:
            with open(args.table) as fh:
                raw = json.load(fh, parse_float=Decimal)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read weight table {args.table}: {exc}")
        try:
            spec = CentralWeightSpec.from_table(
                {tuple(entry["mu"]): entry["w"] for entry in raw}
            )
        except (TypeError, KeyError):
            raise CliError('weight table must be a list of {"mu": [..], "w": value} entries')
    report = validate_central_weight(rs, spec, args.height)
    payload = {
        "type": str(rs.lie_type),
        "kind": spec.kind,
        "beta": None if spec.beta is None else render.real(spec.beta),
        "height": report.truncation_height,
        "passed": report.passed,
        "violations": [
            {
                "condition": v.condition,
                "weights": [list(w) for w in v.weights],
                "lhs": render.real(v.lhs),
                "rhs": render.real(v.rhs),
            }
            for v in report.violations
        ],
        "notes": list(report.notes),
    }
    rows = [
        [v.condition, ";".join(_weight_str(w) for w in v.weights),
         render.real(v.lhs), render.real(v.rhs)]
        for v in report.violations
    ]
    _emit(args, payload, ["condition", "weights", "lhs", "rhs"], rows)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_norm(args, render: _Renderer) -> int:
    rs = build_root_system(args.type)
    cfg = SessionConfig(_parse_q(args.q), precision=render.digits)
    lam = _parse_weight(args.lam, rs.rank, "--lambda")
    mu = _parse_weight(args.mu, rs.rank, "--mu")
    routes: dict[str, dict] = {}
    exponents: list[Fraction] = []
    if args.route in ("closed", "both"):
        e = lminus_norm_exponent(rs, lam, mu)
        exponents.append(e.value)
        routes["closed"] = {
            "exponent": _frac(e.value),
            "q_power": render.real(e.q_power(cfg.q)),
        }
    if args.route in ("rmatrix", "both"):
        details = rmatrix_exponent_details(rs, lam, mu)
        exponents.append(details.exponent)
        routes["rmatrix"] = {
            "exponent": _frac(details.exponent),
            "q_power": render.real(QExponent(details.exponent).q_power(cfg.q)),
            "minimizer": list(details.minimizer),
            "ties": [list(t) for t in details.ties],
        }
    match = len(set(exponents)) == 1
    payload = {
        "type": str(rs.lie_type),
        "lambda": list(lam),
        "mu": list(mu),
        "q": _frac(cfg.q),
        "routes": routes,
        "match": match,
    }
    rows = [
        [name, info["exponent"], info["q_power"]]
        for name, info in routes.items()
    ]
    _emit(args, payload, ["route", "exponent", "q_power"], rows)
    return EXIT_OK if match else EXIT_VIOLATION


def _cmd_cb_region(args, render: _Renderer) -> int:
    rs = build_root_system(args.type)
    _check_height_cap(rs, args.height, args.force)
    cfg = SessionConfig(_parse_q(args.q), precision=render.digits)
    beta = _parse_beta(args.beta)
    decisions = cb_region_enumerate(rs, cfg, beta, args.height)
    json_rows = []
    rows = []
    for d in decisions:
        if d.certificate.kind == "bound":
            cert = {
                "kind": "bound",
                "bound": render.real(d.certificate.bound),
                "attained_at": list(d.certificate.attained_at),
            }
        else:
            cert = {
                "kind": "divergence",
                "ray_base": list(d.certificate.ray_base),
                "growth_factor": render.real(d.certificate.growth_factor),
            }
        json_rows.append(
            {
                "lambda": list(d.lam),
                "extends": d.extends,
                "boundary": d.boundary,
                "norm_sq": _frac(d.norm_sq),
                "beta_min": render.real(d.beta_min),
                "certificate": cert,
            }
        )
        rows.append(
            [_weight_str(d.lam), str(d.extends).lower(), str(d.boundary).lower(),
             _frac(d.norm_sq), render.real(d.beta_min)]
        )
    payload = {
        "type": str(rs.lie_type),
        "q": _frac(cfg.q),
        "beta": render.real(beta),
        "height": args.height,
        "rows": json_rows,
    }
    _emit(args, payload, ["lambda", "extends", "boundary", "norm_sq", "beta_min"], rows)
    return EXIT_OK


def _cmd_oracle_sl2(args, render: _Renderer) -> int:
    try:
        tol = float(args.tol)
    except ValueError:
        raise CliError(f"--tol must be a positive real, got {args.tol!r}")
    if tol <= 0:
        raise CliError(f"--tol must be positive, got {args.tol}")
    if args.m < 0 or args.n < 0:
        raise CliError("--m and --n must be nonnegative integers")
    report = verify_norm_formula(_parse_q(args.q), args.m, args.n, tol=tol)
    payload = {
        "q": _frac(report.q),
        "m": report.m,
        "n": report.n,
        "tol": f"{report.tol:.1e}",
        "passed": report.passed,
        "norm": {
            "computed": render.real(report.norm_computed),
            "expected": render.real(report.norm_expected),
            "rel_error": f"{float(report.norm_rel_error):.3e}",
        },
        "eigenvalues": [
            {
                "nu": row.nu,
                "exponent": row.exponent,
                "multiplicity": row.multiplicity,
                "value": render.real(row.value),
                "verified_exact": row.verified_exact,
            }
            for row in report.eigen_rows
        ],
        "residuals": {
            "relations": f"{report.relation_residual:.3e}",
            "symmetry": f"{report.symmetry_residual:.3e}",
        },
        "failures": list(report.failures),
    }
    rows = [
        [str(r.nu), str(r.exponent), str(r.multiplicity), render.real(r.value),
         str(r.verified_exact).lower()]
        for r in report.eigen_rows
    ]
    _emit(args, payload, ["nu", "exponent", "multiplicity", "value", "verified_exact"], rows)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_casimir_check(args, render: _Renderer) -> int:
    rs = build_root_system(args.type)
    _check_height_cap(rs, args.height, args.force)
    report = casimir_subadditivity_check(rs, args.height)
    payload = {
        "type": str(rs.lie_type),
        "height": report.truncation_height,
        "passed": report.passed,
        "triples": report.triples_checked,
        "min_slack": render.real(report.min_slack),
        "witness": {
            "lambda": list(report.witness[0]),
            "mu": list(report.witness[1]),
            "nu": list(report.witness[2]),
        },
        "violations": [
            {"lambda": list(l), "mu": list(m), "nu": list(n)}
            for l, m, n in report.violations
        ],
    }
    rows = [
        ["triples", str(report.triples_checked)],
        ["min_slack", render.real(report.min_slack)],
        ["witness", ";".join(_weight_str(w) for w in report.witness)],
        ["passed", str(report.passed).lower()],
    ]
    _emit(args, payload, ["key", "value"], rows)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> _Parser:
    parser = _Parser(prog="qbf", description=__doc__.splitlines()[0])
    parser.add_argument("--precision", type=int, default=12,
                        help="significant digits for rendered reals (default 12)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, height=False):
        p.add_argument("--format", choices=("json", "csv", "table"), default="table")
        p.add_argument("--out", help="write output to a file instead of stdout")
        if height:
            p.add_argument("--height", type=int, required=True)
            p.add_argument("--force", action="store_true",
                           help="override the documented height caps")

    p = sub.add_parser("fusion", help="tensor product decomposition")
    p.add_argument("--type", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    common(p)

    p = sub.add_parser("character", help="weight multiplicities of an irreducible")
    p.add_argument("--type", required=True)
    p.add_argument("--mu", required=True)
    common(p)

    p = sub.add_parser("verify-weight", help="Z1/Z2/symmetry validation of a weight family")
    p.add_argument("--type", required=True)
    p.add_argument("--kind", choices=("beta", "lst", "table"), required=True)
    p.add_argument("--beta")
    p.add_argument("--table", help="JSON file with [{'mu': [..], 'w': value}, ...]")
    common(p, height=True)

    p = sub.add_parser("norm", help="norm exponent of the dual generator matrix")
    p.add_argument("--type", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--route", choices=("closed", "rmatrix", "both"), default="both")
    common(p)

    p = sub.add_parser("cb-region", help="completely-bounded extension region")
    p.add_argument("--type", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--beta", required=True)
    common(p, height=True)

    p = sub.add_parser("oracle-sl2", help="numeric rank-one check of the norm formula")
    p.add_argument("--q", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", default="1e-8")
    common(p)

    p = sub.add_parser("casimir-check", help="Casimir square-root subadditivity sweep")
    p.add_argument("--type", required=True)
    common(p, height=True)

    return parser


_DISPATCH = {
    "fusion": _cmd_fusion,
    "character": _cmd_character,
    "verify-weight": _cmd_verify_weight,
    "norm": _cmd_norm,
    "cb-region": _cmd_cb_region,
    "oracle-sl2": _cmd_oracle_sl2,
    "casimir-check": _cmd_casimir_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.precision < 1 or args.precision > 50:
            raise CliError("--precision must be between 1 and 50")
        return _DISPATCH[args.command](args, _Renderer(args.precision))
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (LieTypeError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
