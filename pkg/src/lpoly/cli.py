"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 k <= d (no maximum exists),
3 internal inconsistency or failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .chebyshev import continuous_lead_bound, correction_term
from .closed_forms import closed_form_lead
from .errors import InternalInconsistency, LPolyError, NoMaximum
from .kernel import available_backends
from .poly import PointSet, Polynomial, format_rational, parse_rational
from .solver import AlternationCertificate, ExtremalResult, solve, verify

EXIT_OK, EXIT_INPUT, EXIT_NO_MAXIMUM, EXIT_INCONSISTENT = 0, 1, 2, 3

RECORD_FIELDS = (
    "degree",
    "points",
    "coefficients",
    "lead",
    "certificate",
    "verification",
    "chebyshev_floor",
    "correction",
)
REPORT_FIELDS = (
    "terminal_ok",
    "bounded_ok",
    "alternation_ok",
    "sign_change_count",
    "unique_max_ok",
    "passed",
)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit 2 is reserved for the k <= d obstruction
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed rational {text!r}") from exc


def _strs(values) -> list[str]:
    return [format_rational(v) for v in values]


def instance_from_args(args) -> PointSet:
    if args.points is not None:
        if any(v is not None for v in (args.start, args.step, args.count)):
            raise InputError("give either --points or --start/--step/--count, not both")
        xs = [_rational(s) for s in args.points.split(",") if s.strip()]
    else:
        if args.start is None or args.step is None or args.count is None:
            raise InputError("need --points or all of --start, --step, --count")
        start, step = _rational(args.start), _rational(args.step)
        if step <= 0:
            raise InputError("--step must be positive")
        xs = [start + i * step for i in range(args.count)]
    degree = getattr(args, "degree", None)
    if degree is not None and len(xs) <= degree and all(a < b for a, b in zip(xs, xs[1:])):
        raise NoMaximum(degree, len(xs))
    try:
        return PointSet(tuple(xs))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def build_record(ps: PointSet, d: int, result: ExtremalResult) -> dict:
    report = verify(result, ps, d)
    record = {
        "degree": d,
        "points": _strs(ps.xs),
        "coefficients": result.polynomial.to_strings(),
        "lead": format_rational(result.lead),
        "certificate": _strs(result.certificate.points),
        "verification": report.as_dict(),
        "chebyshev_floor": format_rational(continuous_lead_bound(d, ps.xs[0], ps.xs[-1])),
    }
    if ps.is_first_integers():
        delta = correction_term(result.polynomial, d, ps.k).delta
        record["correction"] = _strs(_padded(delta, d))
    return record


def _padded(p: Polynomial, d: int) -> list[Fraction]:
    cs = list(p.coefficients)
    return cs + [Fraction(0)] * (d + 1 - len(cs))


def record_to_csv(records: list[dict]) -> str:
    header = [f for f in RECORD_FIELDS if f != "verification"]
    header[header.index("certificate") + 1 : header.index("certificate") + 1] = list(REPORT_FIELDS)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        row = []
        for name in header:
            if name in REPORT_FIELDS:
                value = rec["verification"][name]
            else:
                value = rec.get(name, "")
            if isinstance(value, list):
                value = " ".join(value)
            elif isinstance(value, bool):
                value = str(value).lower()
            row.append(value)
        writer.writerow(row)
    return buf.getvalue()


def record_to_text(rec: dict) -> str:
    poly = Polynomial.from_strings(rec["coefficients"])
    lines = [
        f"degree:          {rec['degree']}",
        f"points:          {', '.join(rec['points'])}",
        f"L(x) =           {poly}",
        f"lead:            {rec['lead']}",
        f"certificate:     {', '.join(rec['certificate'])}",
        f"chebyshev floor: {rec['chebyshev_floor']}",
    ]
    if "correction" in rec:
        lines.append(f"L(t(x)) - T_d:   {Polynomial.from_strings(rec['correction'])}")
    v = rec["verification"]
    lines.append(
        "verification:    "
        + ", ".join(f"{name}={v[name]}" for name in REPORT_FIELDS)
    )
    return "\n".join(lines)


def result_from_record(rec: dict, fresh: ExtremalResult) -> ExtremalResult:
    """Rebuild a result from exported fields; the enumeration record comes
    from a fresh solve of the same instance."""
    poly = Polynomial.from_strings(rec["coefficients"])
    return ExtremalResult(
        polynomial=poly,
        lead=parse_rational(rec["lead"]),
        certificate=AlternationCertificate(tuple(parse_rational(s) for s in rec["certificate"])),
        candidates_enumerated=fresh.candidates_enumerated,
        candidates_feasible=fresh.candidates_feasible,
        feasible_nodes=fresh.feasible_nodes,
    )


def format_decimal(value: Fraction, digits: int) -> str:
    """Decimal rendering with exact round-half-even to ``digits`` places."""
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_solve(args) -> int:
    ps = instance_from_args(args)
    result = solve(ps, args.degree, backend=args.backend)
    rec = build_record(ps, args.degree, result)
    if args.format == "json":
        text = json.dumps(rec, indent=2)
    elif args.format == "csv":
        text = record_to_csv([rec])
    else:
        text = record_to_text(rec)
    _emit(text, args.output)
    return EXIT_OK


def _k_range(text: str) -> range:
    try:
        lo, sep, hi = text.partition("..")
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError as exc:
        raise InputError(f"malformed k range {text!r}, expected A..B") from exc
    if hi_i < lo_i:
        raise InputError(f"empty k range {text!r}")
    return range(lo_i, hi_i + 1)


def table_rows(d: int, ks: range, backend: str = "auto") -> list[dict]:
    rows = []
    for k in ks:
        if k <= d:
            raise NoMaximum(d, k)
        ps = PointSet.first_integers(k)
        result = solve(ps, d, backend=backend)
        closed = closed_form_lead(d, k) if d <= 4 else None
        delta = correction_term(result.polynomial, d, k).delta
        rows.append({
            "k": k,
            "closed_form_lead": format_rational(closed) if closed is not None else "",
            "solver_lead": format_rational(result.lead),
            "chebyshev_floor": format_rational(continuous_lead_bound(d, 1, k)),
            "agree": closed is None or closed == result.lead,
            "correction": _strs(_padded(delta, d)),
            "correction_text": str(delta),
        })
    return rows


def cmd_table(args) -> int:
    d = args.degree
    rows = table_rows(d, _k_range(args.k), backend=args.backend)
    if args.format == "json":
        text = json.dumps(
            [{key: v for key, v in r.items() if key != "correction_text"} for r in rows], indent=2
        )
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "closed_form_lead", "solver_lead", "chebyshev_floor", "agree", "correction"])
        for r in rows:
            w.writerow([r["k"], r["closed_form_lead"], r["solver_lead"], r["chebyshev_floor"],
                        "yes" if r["agree"] else "NO", " ".join(r["correction"])])
        text = buf.getvalue()
    else:
        out = [f"d={d}: L(t(x)) = T_{d}(x) + correction"]
        out.append(f"{'k':>4}  {'closed form':>14}  {'solver':>14}  {'floor':>14}  agree  correction")
        for r in rows:
            out.append(
                f"{r['k']:>4}  {r['closed_form_lead'] or '-':>14}  {r['solver_lead']:>14}  "
                f"{r['chebyshev_floor']:>14}  {'yes' if r['agree'] else 'NO':>5}  {r['correction_text']}"
            )
        text = "\n".join(out)
    _emit(text, args.output)
    if not all(r["agree"] for r in rows):
        print("closed form and enumeration disagree", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def _load_record(path: str) -> dict:
    try:
        rec = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read result file: {exc}") from exc
    if not isinstance(rec, dict):
        raise InputError("result file must hold a JSON object")
    missing = [f for f in RECORD_FIELDS if f != "correction" and f not in rec]
    if missing:
        raise InputError(f"result file is missing fields: {', '.join(missing)}")
    if not isinstance(rec["degree"], int):
        raise InputError("degree must be an integer")
    try:
        for name in ("points", "coefficients", "certificate"):
            [parse_rational(s) for s in rec[name]]
        parse_rational(rec["lead"])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed rational in result file: {exc}") from exc
    return rec


def cmd_verify(args) -> int:
    rec = _load_record(args.file)
    d = rec["degree"]
    try:
        ps = PointSet(tuple(parse_rational(s) for s in rec["points"]))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.points is not None or args.start is not None:
        given = instance_from_args(args)
        if given != ps:
            raise InputError("instance flags do not match the points in the result file")
    if args.degree is not None and args.degree != d:
        raise InputError("--degree does not match the result file")

    fresh = solve(ps, d, backend=args.backend)
    report = verify(result_from_record(rec, fresh), ps, d)
    if args.format == "json":
        print(json.dumps(report.as_dict(), indent=2))
    else:
        for name, value in report.as_dict().items():
            print(f"{name}: {value}")
    return EXIT_OK if report.passed else EXIT_INCONSISTENT


def cmd_plotdata(args) -> int:
    if args.samples < 2:
        raise InputError("-n must be at least 2")
    if args.digits < 0:
        raise InputError("--digits must be non-negative")
    ps = instance_from_args(args)
    L = solve(ps, args.degree, backend=args.backend).polynomial
    x1, xk = ps.xs[0], ps.xs[-1]
    n = args.samples
    rows = []
    for i in range(n):
        x = x1 + (xk - x1) * Fraction(i, n - 1)
        rows.append(("sample", x, L(x)))
    rows.extend(("grid", x, L(x)) for x in ps.xs)

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["kind", "x", "value", "x_exact", "value_exact"])
    for kind, x, y in rows:
        w.writerow([kind, format_decimal(x, args.digits), format_decimal(y, args.digits),
                    format_rational(x), format_rational(y)])
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


def _add_instance(p: argparse.ArgumentParser, required_degree: bool = True) -> None:
    p.add_argument("-d", "--degree", type=int, required=required_degree, help="polynomial degree d >= 1")
    p.add_argument("--points", help="comma-separated increasing rationals, e.g. 1,3/2,2,4")
    p.add_argument("--start", help="first term of an arithmetic progression")
    p.add_argument("--step", help="common difference of the progression")
    p.add_argument("--count", type=int, help="number of terms k")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=["auto", *available_backends()], default="auto",
                   help="candidate scan kernel (default: compiled when available)")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lpoly", description=(
        "Exact maximum-lead-coefficient polynomials bounded by 1 on a finite point set."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one instance")
    _add_instance(p)
    _add_common(p)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="closed form vs enumeration vs Chebyshev floor on {1..k}")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("--k", required=True, help="k range A..B (inclusive)")
    _add_common(p)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="re-check an exported JSON result")
    p.add_argument("file")
    _add_instance(p, required_degree=False)
    _add_common(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plotdata", help="CSV samples of L(x) for plotting")
    _add_instance(p)
    _add_common(p)
    p.add_argument("-n", "--samples", type=int, default=100, help="equally spaced samples (>= 2)")
    p.add_argument("--digits", type=int, default=12, help="decimal places, round half even")
    p.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except NoMaximum as exc:
        print(f"error: NoMaximum: {exc}", file=sys.stderr)
        return EXIT_NO_MAXIMUM
    except InternalInconsistency as exc:
        print(f"error: InternalInconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (InputError, LPolyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
