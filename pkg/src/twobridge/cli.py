"""Command-line surface: every computation, three output formats, batch scans.

Exit codes: 0 success, 1 usage error, 2 when a requested certificate or
numeric check fails (so scans work as scriptable regression gates).
JSON reports carry {command, inputs, results, toolkit_version, timing_ms}
with coefficient lists ascending by degree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .alexander import alexander_polynomial, knot_determinant, torus_targets
from .errors import TwoBridgeError
from .normal_form import Kind, classify, enumerate_forms, epsilon_sequence, sigma, validate
from .numeric import LONGITUDE_TOL, RELATION_TOL, ROOT_TOL, verify_form
from .obstructions import obstruct, scan as obstruction_scan
from .polynomials import IntPolynomial
from .presentation import build_relator, build_word
from .riley import (
    certificate_scan,
    holonomy_matrix,
    longitude_translation,
    property_l_certificate,
    riley_polynomial,
)

OK, USAGE_ERROR, CHECK_FAILED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _coeffs(poly: IntPolynomial) -> list[int]:
    return list(poly.coeffs)


def _cpx(z: complex) -> list[float]:
    return [z.real, z.imag]


def _fmt_cpx(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


# each handler returns (results, text_lines, (csv_header, csv_rows), exit_code)


def _run_present(args):
    form = validate(args.p, args.q)
    eps = epsilon_sequence(form)
    word, relator = build_word(form), build_relator(form)
    results = {
        "p": form.p,
        "q": form.q,
        "mirror_flag": form.mirror_flag,
        "epsilon": list(eps),
        "sigma": sigma(form),
        "word": word.pretty(),
        "relator": relator.pretty(),
    }
    eps_str = "".join("+" if e == 1 else "-" for e in eps)
    lines = [
        f"form {form}" + ("  (q was even; replaced by p - q, mirror)" if form.mirror_flag else ""),
        f"epsilon:  {eps_str}",
        f"sigma:    {results['sigma']}",
        f"word:     {results['word']}",
        f"relator:  {results['relator']}",
    ]
    header = ["p", "q", "mirror_flag", "sigma", "epsilon", "word", "relator"]
    row = [form.p, form.q, form.mirror_flag, results["sigma"], eps_str, results["word"], results["relator"]]
    return results, lines, (header, [row]), OK


def _run_riley(args):
    form = validate(args.p, args.q)
    w = holonomy_matrix(build_word(form))
    lam = riley_polynomial(form)
    expected = (form.p - 1) // 2
    results = {
        "p": form.p,
        "q": form.q,
        "lambda": _coeffs(lam),
        "degree": lam.degree,
        "expected_degree": expected,
        "constant_term": lam.constant_term,
        "leading_coefficient": lam.leading_coefficient,
        "matrix": {
            "w11": _coeffs(w.w11),
            "w12": _coeffs(w.w12),
            "w21": _coeffs(w.w21),
            "w22": _coeffs(w.w22),
        },
        "det_is_one": w.det() == IntPolynomial.one(),
    }
    lines = [
        f"Lambda(y) = {lam.pretty()}",
        f"degree {lam.degree} (expected {expected}), constant term {lam.constant_term}",
        f"W11 = {w.w11.pretty()}",
        f"W12 = {w.w12.pretty()}",
        f"W21 = {w.w21.pretty()}",
        f"W22 = {w.w22.pretty()}",
        f"det W = 1: {results['det_is_one']}",
    ]
    header = ["p", "q", "degree", "expected_degree", "lambda", "det_is_one"]
    row = [form.p, form.q, lam.degree, expected, _join(lam), results["det_is_one"]]
    return results, lines, (header, [row]), OK


def _run_longitude(args):
    form = validate(args.p, args.q)
    w = holonomy_matrix(build_word(form))
    g = longitude_translation(form)
    results = {
        "p": form.p,
        "q": form.q,
        "g": _coeffs(g),
        "sigma": sigma(form),
        "w12": _coeffs(w.w12),
        "w22": _coeffs(w.w22),
    }
    lines = [
        f"g(y) = {g.pretty()}",
        f"pieces: w12*w22 + sigma with sigma = {results['sigma']}",
        f"w12 = {w.w12.pretty()}",
        f"w22 = {w.w22.pretty()}",
        "longitude image at a representation: [[1, -2g], [0, 1]]",
    ]
    header = ["p", "q", "sigma", "g"]
    row = [form.p, form.q, results["sigma"], _join(g)]
    return results, lines, (header, [row]), OK


def _run_alexander(args):
    form = validate(args.p, args.q)
    delta = alexander_polynomial(form)
    det = knot_determinant(form)
    targets = torus_targets(delta)
    results = {
        "p": form.p,
        "q": form.q,
        "delta": _coeffs(delta.poly),
        "determinant": det,
        "torus_targets": [list(t) for t in targets],
    }
    lines = [
        f"Delta(t) = {delta}",
        f"determinant |Delta(-1)| = {det}",
        f"torus targets (Alexander-compatible): {targets if targets else 'none'}",
    ]
    header = ["p", "q", "delta", "determinant", "torus_targets"]
    row = [form.p, form.q, _join(delta.poly), det, " ".join(f"({r},{s})" for r, s in targets)]
    return results, lines, (header, [row]), OK


def _certify_payload(cert):
    kind = classify(cert.form)
    return {
        "p": cert.form.p,
        "q": cert.form.q,
        "kind": kind.kind.value,
        "lambda": _coeffs(cert.lam),
        "g": _coeffs(cert.g),
        "gcd": _coeffs(cert.gcd_lambda_g),
        "gcd_is_one": cert.gcd_lambda_g == IntPolynomial.one(),
        "mod2_divides": cert.mod2_divides,
        "verdict": cert.verdict.value,
    }


def _run_certify(args):
    form = validate(args.p, args.q)
    cert = property_l_certificate(form)
    results = _certify_payload(cert)
    lines = [
        f"Lambda(y) = {cert.lam.pretty()}",
        f"g(y) = {cert.g.pretty()}",
        f"gcd(Lambda, g) over Q = {cert.gcd_lambda_g.pretty()}  (need 1)",
        f"Lambda | (g - 1) over GF(2): {cert.mod2_divides}",
        f"verdict: {cert.verdict.value}",
    ]
    if results["kind"] == Kind.TORUS.value:
        lines.append("note: torus form; certificate is informational for Property L")
    header = ["p", "q", "kind", "gcd_is_one", "mod2_divides", "verdict"]
    row = [form.p, form.q, results["kind"], results["gcd_is_one"], cert.mod2_divides, cert.verdict.value]
    return results, lines, (header, [row]), OK if cert.certified else CHECK_FAILED


def _run_obstruct(args):
    source = validate(args.p, args.q)
    target = validate(args.p2, args.q2)
    report = obstruct(source, target)
    results = {
        "source": {"p": source.p, "q": source.q},
        "target": {"p": target.p, "q": target.q},
        "alexander_divides": report.alexander_divides,
        "riley_divides": report.riley_divides,
        "verdict": report.verdict.value,
        "reasons": list(report.reasons),
    }
    lines = [f"candidate epimorphism {source} -> {target}"]
    lines += [f"  {reason}" for reason in report.reasons]
    lines.append(f"verdict: {report.verdict.value}")
    header = ["source_p", "source_q", "target_p", "target_q", "alexander_divides", "riley_divides", "verdict"]
    row = [source.p, source.q, target.p, target.q, report.alexander_divides, report.riley_divides, report.verdict.value]
    return results, lines, (header, [row]), OK


def _run_scan(args):
    do_certify = args.certify or not (args.certify or args.obstruct)
    do_obstruct = args.obstruct
    results = {"pmax": args.pmax, "forms": len(enumerate_forms(args.pmax))}
    lines = []
    header, rows = [], []
    code = OK
    if do_certify:
        certs = certificate_scan(args.pmax, jobs=args.jobs)
        payloads = [_certify_payload(c) for c in certs]
        failed = [c for c in certs if not c.certified]
        results["certify"] = {"rows": payloads, "failed": len(failed)}
        lines.append(f"certificate scan, p <= {args.pmax}: {len(certs)} forms, {len(failed)} failed")
        for pay in payloads:
            lines.append(
                f"  ({pay['p']},{pay['q']})  {pay['kind']:<10}  gcd=1: {pay['gcd_is_one']!s:<5}  "
                f"mod2: {pay['mod2_divides']!s:<5}  {pay['verdict']}"
            )
        header = ["p", "q", "kind", "gcd_is_one", "mod2_divides", "verdict"]
        rows = [
            [pay["p"], pay["q"], pay["kind"], pay["gcd_is_one"], pay["mod2_divides"], pay["verdict"]]
            for pay in payloads
        ]
        if failed:
            code = CHECK_FAILED
    if do_obstruct:
        reports = obstruction_scan(args.pmax, jobs=args.jobs)
        alive = [r for r in reports if not r.ruled_out]
        results["obstruct"] = {
            "rows": [
                {
                    "source": {"p": r.source.p, "q": r.source.q},
                    "target": {"p": r.target.p, "q": r.target.q},
                    "alexander_divides": r.alexander_divides,
                    "riley_divides": r.riley_divides,
                    "verdict": r.verdict.value,
                }
                for r in reports
            ],
            "not_ruled_out": len(alive),
        }
        lines.append(
            f"obstruction scan, p <= {args.pmax}: {len(reports)} ordered pairs, "
            f"{len(alive)} not ruled out"
        )
        for r in alive:
            lines.append(f"  {r.source} -> {r.target}  survives Alexander test (riley: {r.riley_divides})")
        if not do_certify:
            header = ["source_p", "source_q", "target_p", "target_q", "alexander_divides", "riley_divides", "verdict"]
            rows = [
                [r.source.p, r.source.q, r.target.p, r.target.q, r.alexander_divides, r.riley_divides, r.verdict.value]
                for r in reports
            ]
    return results, lines, (header, rows), code


def _run_verify(args):
    form = validate(args.p, args.q)
    checks = verify_form(form, root_tol=args.tol)
    all_ok = all(c.ok for c in checks)
    results = {
        "p": form.p,
        "q": form.q,
        "root_tol": args.tol,
        "relation_tol": RELATION_TOL,
        "longitude_tol": LONGITUDE_TOL,
        "roots": [
            {
                "y0": _cpx(c.y0),
                "lambda_residual": c.lambda_residual,
                "relation_residual": c.relation_residual,
                "g_abs": c.g_abs,
                "longitude_nonzero": c.longitude_nonzero,
                "ok": c.ok,
            }
            for c in checks
        ],
        "all_ok": all_ok,
    }
    lines = [f"{len(checks)} roots of Lambda{form} (degree {(form.p - 1) // 2})"]
    for c in checks:
        lines.append(
            f"  y0 = {_fmt_cpx(c.y0):<32} relation residual {c.relation_residual:.2e}  "
            f"|g(y0)| = {c.g_abs:.6g}  {'ok' if c.ok else 'FAIL'}"
        )
    lines.append(f"all checks passed: {all_ok}")
    header = ["p", "q", "y0_re", "y0_im", "lambda_residual", "relation_residual", "g_abs", "ok"]
    rows = [
        [form.p, form.q, c.y0.real, c.y0.imag, c.lambda_residual, c.relation_residual, c.g_abs, c.ok]
        for c in checks
    ]
    return results, lines, (header, rows), OK if all_ok else CHECK_FAILED


def _join(poly: IntPolynomial) -> str:
    return " ".join(str(c) for c in poly.coeffs)


def _add_form_args(sub):
    sub.add_argument("p", type=int)
    sub.add_argument("q", type=int)


def _add_format_arg(sub):
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twobridge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"twobridge {__version__}")
    subs = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub = subs.add_parser("present", help="word, relator, epsilon sequence, sigma")
    _add_form_args(sub)
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_present, subparser=sub)

    sub = subs.add_parser("riley", help="representation polynomial Lambda and matrix W")
    _add_form_args(sub)
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_riley, subparser=sub)

    sub = subs.add_parser("longitude", help="longitude polynomial g and its pieces")
    _add_form_args(sub)
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_longitude, subparser=sub)

    sub = subs.add_parser("alexander", help="Alexander polynomial, determinant, torus targets")
    _add_form_args(sub)
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_alexander, subparser=sub)

    sub = subs.add_parser("certify", help="no-representation-kills-the-longitude certificate")
    _add_form_args(sub)
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_certify, subparser=sub)

    sub = subs.add_parser("obstruct", help="epimorphism obstruction for a source/target pair")
    _add_form_args(sub)
    sub.add_argument("p2", type=int)
    sub.add_argument("q2", type=int)
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_obstruct, subparser=sub)

    sub = subs.add_parser("scan", help="batch certificate and/or obstruction tables")
    sub.add_argument("--pmax", type=int, required=True)
    sub.add_argument("--certify", action="store_true", help="certificate table (default when no table selected)")
    sub.add_argument("--obstruct", action="store_true", help="pairwise obstruction table")
    sub.add_argument("--jobs", type=int, default=1, help="worker threads; never changes output bytes")
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_scan, subparser=sub)

    sub = subs.add_parser("verify", help="numeric root checks: relation and longitude at each root")
    _add_form_args(sub)
    sub.add_argument("--tol", type=float, default=ROOT_TOL, help="scaled root-membership tolerance")
    _add_format_arg(sub)
    sub.set_defaults(handler=_run_verify, subparser=sub)

    return parser


def _echo_inputs(args) -> dict:
    skip = {"command", "handler", "format", "subparser"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "scan" and args.format == "csv" and args.certify and args.obstruct:
        parser.error("csv emits one table per run; pick --certify or --obstruct")
    start = time.monotonic()
    try:
        results, lines, (header, rows), code = args.handler(args)
    except TwoBridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.stderr.write(args.subparser.format_usage())
        return USAGE_ERROR
    elapsed_ms = int((time.monotonic() - start) * 1000)
    if args.format == "json":
        report = {
            "command": args.command,
            "inputs": _echo_inputs(args),
            "results": results,
            "toolkit_version": __version__,
            "timing_ms": elapsed_ms,
        }
        print(json.dumps(report, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
