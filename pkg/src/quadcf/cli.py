"""Command-line interface.

Usage:
    quadcf log 2/1 --terms 3 --table          # ln 2 through its fraction
    quadcf atan 1/2 --tol 1e-12               # arctan(1/2)
    quadcf atan --msq 3 --n 3                 # arctan(sqrt(3)/3) = pi/6
    quadcf pi --method machin-split --tol 1e-12
    quadcf integral --n 2 --a 1 --b 2 --c 1 --x 1/5 --oracle
    quadcf cf --family log --params n=3,msq=1 --convergents 5 --diffs
    quadcf verify --deep

Exact parameters are written as rationals ``p/q`` (optional sign, no
decimals); tolerances may use decimal/scientific notation.  Output goes to
stdout as text (default), a single JSON document (``--format json``:
``{"command": ..., "params": ..., "records": [...]}``), or CSV with a header
row.  Exit codes: 0 success, 1 domain/convergence error (diagnostic on
stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from .cf import convergents, eval_backward
from .errors import CFEvaluationError, ConvergenceError, DomainError
from .families import (
    FamilyKind,
    PI_METHODS,
    atan_cf_spec,
    auto_terms,
    completed_cf_spec,
    degenerate_cf_spec,
    difference_closed_form,
    log_cf_spec,
    log_of_fraction,
    pi_cf,
    ratio_cf_spec,
)
from .integrals import AT_ROOT, QuadraticForm, integral_at_root, integral_to
from .numerics import DEFAULT_PREC, HPFloat, pi_ref
from .quadrature import quad_integral
from . import verify as verify_mod

__all__ = ["run", "main"]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _rational(text: str) -> Fraction:
    """Strict p/q parser: decimals are rejected, there is no float fallback."""
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"expected a rational like 3/2 or -7 (no decimals), got {text!r}"
        )
    out = Fraction(text)
    if "/" in text and text.split("/")[1] == "0":
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
    return out


def _tolerance(text: str) -> Fraction:
    try:
        out = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad tolerance {text!r}") from exc
    if out <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return out


@dataclass
class Record:
    kind: str  # value | convergent_row | diff_row | verify_result
    index: int | None = None
    exact: str | None = None  # unreduced p/q
    exact_reduced: str | None = None
    decimal: str | None = None
    error_est: str | None = None
    label: str | None = None
    status: str | None = None
    detail: str | None = None


def _decimal(x, digits: int) -> str:
    if isinstance(x, HPFloat):
        x = x.value
    return format(x, f".{digits}g")


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _convergent_rows(seq, count: int, prec: int, digits: int) -> list[Record]:
    rows = []
    for c in convergents(seq, count):
        rows.append(
            Record(
                kind="convergent_row",
                index=c.k,
                exact=f"{c.p}/{c.q}",
                exact_reduced=_frac_str(c.value) if c.q != 0 else None,
                decimal=_decimal(HPFloat(c.value, prec), digits) if c.q != 0 else None,
            )
        )
    return rows


def _resolve_depth(seq, args) -> int:
    if args.terms is not None:
        return args.terms
    tol = args.tol if args.tol is not None else Fraction(1, 10**15)
    return auto_terms(seq, tol) + 1


def _value_record(seq, depth: int, prec: int, digits: int) -> Record:
    val = eval_backward(seq, depth, prec)
    last = convergents(seq, depth)[depth]
    rec = Record(
        kind="value",
        index=depth,
        decimal=_decimal(val, digits),
    )
    if seq.front.is_one:
        rec.exact = f"{last.p}/{last.q}"
        rec.exact_reduced = _frac_str(last.value)
        rec.decimal = _decimal(HPFloat(last.value, prec), digits)
    return rec


# -- subcommand handlers ---------------------------------------------------------


def _cmd_log(args) -> tuple[list[Record], dict]:
    p, q = args.fraction
    seq = log_of_fraction(p, q)
    depth = _resolve_depth(seq, args)
    records = []
    if args.table:
        records += _convergent_rows(seq, depth, args.prec, args.digits)
    records.append(_value_record(seq, depth, args.prec, args.digits))
    return records, {"p": p, "q": q, "terms": depth, "prec": args.prec}


def _cmd_atan(args) -> tuple[list[Record], dict]:
    if args.fraction is not None:
        m, n = args.fraction
        if m <= 0 or n <= 0:
            raise DomainError("atan m/n needs positive integers m and n")
        seq = atan_cf_spec(Fraction(n), Fraction(m * m))
        params = {"m": m, "n": n}
    else:
        if args.msq is None or args.n is None:
            raise DomainError("atan needs either m/n or both --msq and --n")
        seq = atan_cf_spec(args.n, args.msq)
        params = {"msq": str(args.msq), "n": str(args.n)}
    depth = _resolve_depth(seq, args)
    records = []
    if args.table:
        records += _convergent_rows(seq, depth, args.prec, args.digits)
    records.append(_value_record(seq, depth, args.prec, args.digits))
    params.update({"terms": depth, "prec": args.prec})
    return records, params


def _cmd_pi(args) -> tuple[list[Record], dict]:
    est = pi_cf(args.method, prec=args.prec, depth=args.terms, tol=args.tol)
    oracle = pi_ref(args.prec + 32)
    err = abs(est.value.to_fraction() - oracle.to_fraction())
    rec = Record(
        kind="value",
        index=est.depth,
        decimal=_decimal(est.value, args.digits),
        error_est=_decimal(HPFloat(err, 64), 3),
        label=est.method,
    )
    return [rec], {"method": args.method, "terms": est.depth, "prec": args.prec}


def _cmd_integral(args) -> tuple[list[Record], dict]:
    form = QuadraticForm(args.a, args.b, args.c)
    upper = AT_ROOT if args.at_root else args.x
    if args.at_root:
        val = integral_at_root(args.n, form, args.prec)
    else:
        val = integral_to(args.n, form, args.x, args.prec)
    records = [
        Record(
            kind="value",
            decimal=_decimal(val, args.digits),
            label="closed-form",
        )
    ]
    if args.oracle:
        tol = args.tol if args.tol is not None else Fraction(1, 10**15)
        r = quad_integral(args.n, form, upper, tol)
        records.append(
            Record(
                kind="value",
                decimal=_decimal(r.value, args.digits),
                error_est=_decimal(r.est_error, 3),
                label="oracle",
            )
        )
    params = {
        "n": args.n,
        "a": str(args.a),
        "b": str(args.b),
        "c": str(args.c),
        "upper": "at-root" if args.at_root else str(args.x),
        "prec": args.prec,
    }
    return records, params


def _parse_params(text: str | None) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    if not text:
        return out
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise DomainError(f"--params entries look like key=value, got {item!r}")
        key, _, value = item.partition("=")
        out[key.strip()] = _rational_or_usage(value.strip())
    return out


def _rational_or_usage(text: str) -> Fraction:
    try:
        return _rational(text)
    except argparse.ArgumentTypeError as exc:
        raise DomainError(str(exc)) from exc


def _cmd_cf(args) -> tuple[list[Record], dict]:
    params = _parse_params(args.params)
    family = args.family
    kind = None
    if family == "log":
        seq = log_cf_spec(params.get("n"), params.get("msq"))
        kind = FamilyKind.LOG_NM
    elif family == "atan":
        seq = atan_cf_spec(params.get("n"), params.get("msq"))
        kind = FamilyKind.ATAN_NM
    elif family == "ratio":
        nexp = params.get("nexp")
        if nexp is None or nexp.denominator != 1:
            raise DomainError("ratio needs an integer nexp parameter")
        form = QuadraticForm(params.get("a"), params.get("b"), params.get("c"))
        seq = ratio_cf_spec(int(nexp), form)
    elif family == "completed":
        form = QuadraticForm(params.get("a"), params.get("b"), params.get("c"))
        seq = completed_cf_spec(form)
    elif family == "degenerate":
        seq = degenerate_cf_spec()
    else:  # pragma: no cover - argparse choices guard this
        raise DomainError(f"unknown family {family!r}")

    count = args.convergents
    records = _convergent_rows(seq, count, args.prec, args.digits)
    if args.diffs:
        if kind is None:
            raise DomainError("--diffs needs the log or atan family")
        for k in range(1, count + 1):
            d = difference_closed_form(k, params.get("n"), params.get("msq"), kind)
            records.append(
                Record(
                    kind="diff_row",
                    index=k,
                    exact_reduced=_frac_str(d),
                    decimal=_decimal(HPFloat(d, args.prec), args.digits),
                )
            )
    out_params = {"family": family, "convergents": count, "prec": args.prec}
    out_params.update({k: str(v) for k, v in params.items()})
    return records, out_params


def _cmd_verify(args) -> tuple[list[Record], dict, int]:
    results = [verify_mod.run_criterion(fn) for fn in verify_mod.CRITERIA]
    if args.deep:
        results += [verify_mod.run_criterion(fn) for fn in verify_mod.deep_checks()]
    records = [
        Record(
            kind="verify_result",
            index=i,
            label=r.cid,
            status=r.status,
            detail=f"{r.title}: {r.detail}" if r.detail else r.title,
        )
        for i, r in enumerate(results, start=1)
    ]
    code = 0 if all(r.ok for r in results) else 1
    return records, {"deep": bool(args.deep)}, code


# -- rendering ---------------------------------------------------------------------

_CSV_FIELDS = [
    "kind",
    "index",
    "exact",
    "exact_reduced",
    "decimal",
    "error_est",
    "label",
    "status",
    "detail",
]


def _render_text(records: list[Record], out) -> None:
    for r in records:
        if r.kind == "convergent_row":
            reduced = f"  (= {r.exact_reduced})" if r.exact_reduced != r.exact else ""
            out.write(f"k={r.index:<3d} {r.exact}{reduced}  {r.decimal or ''}\n")
        elif r.kind == "diff_row":
            out.write(f"diff k={r.index:<3d} {r.exact_reduced}  {r.decimal}\n")
        elif r.kind == "verify_result":
            out.write(f"{r.label:<4} {r.status:<5} {r.detail}\n")
        else:
            label = f" [{r.label}]" if r.label else ""
            exact = f"  = {r.exact}" if r.exact else ""
            err = f"  (err est {r.error_est})" if r.error_est else ""
            out.write(f"value{label}: {r.decimal}{exact}{err}\n")


def _render(records: list[Record], command: str, params: dict, fmt: str, out) -> None:
    if fmt == "text":
        _render_text(records, out)
    elif fmt == "json":
        doc = {
            "command": command,
            "params": params,
            "records": [asdict(r) for r in records],
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True))
        out.write("\n")
    else:  # csv
        writer = csv.DictWriter(out, fieldnames=_CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow(asdict(r))


# -- parser -------------------------------------------------------------------------


def _fraction_arg(text: str) -> tuple[int, int]:
    m = re.match(r"^(\d+)/(\d+)$", text)
    if not m:
        raise argparse.ArgumentTypeError(
            f"expected an integer fraction like 2/1, got {text!r}"
        )
    p, q = int(m.group(1)), int(m.group(2))
    if q == 0:
        raise argparse.ArgumentTypeError("zero denominator")
    return p, q


def _add_common(parser: argparse.ArgumentParser, table: bool = True) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--terms", "-k", type=int, help="truncation depth")
    group.add_argument("--tol", type=_tolerance, help="target accuracy (picks the depth)")
    parser.add_argument("--prec", type=int, default=DEFAULT_PREC, help="bits (default 128)")
    parser.add_argument("--digits", type=int, default=15, help="display digits (default 15)")
    if table:
        parser.add_argument("--table", action="store_true", help="emit convergent rows")
    parser.add_argument(
        "--format",
        choices=["text", "json", "csv"],
        default="text",
        dest="fmt",
        help="output format",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quadcf",
        description="Continued fractions for logarithms, arctangents and pi, "
        "with the integral family behind them.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_log = sub.add_parser("log", help="ln(p/q) through its continued fraction")
    p_log.add_argument("fraction", type=_fraction_arg, metavar="p/q")
    _add_common(p_log)

    p_atan = sub.add_parser("atan", help="arctan(m/n) through its continued fraction")
    p_atan.add_argument("fraction", type=_fraction_arg, nargs="?", metavar="m/n")
    p_atan.add_argument("--msq", type=_rational, help="m^2 (for irrational m)")
    p_atan.add_argument("--n", type=_rational, help="denominator n")
    _add_common(p_atan)

    p_pi = sub.add_parser("pi", help="pi through one of the fractions")
    p_pi.add_argument("--method", choices=list(PI_METHODS), required=True)
    _add_common(p_pi, table=False)

    p_int = sub.add_parser("integral", help="integral of x^n/sqrt(a^2 - 2bx + cx^2)")
    p_int.add_argument("--n", type=int, required=True)
    p_int.add_argument("--a", type=_rational, required=True)
    p_int.add_argument("--b", type=_rational, required=True)
    p_int.add_argument("--c", type=_rational, required=True)
    lim = p_int.add_mutually_exclusive_group(required=True)
    lim.add_argument("--x", type=_rational, help="rational upper limit")
    lim.add_argument("--at-root", action="store_true", help="integrate to the radicand root")
    p_int.add_argument("--oracle", action="store_true", help="also run the quadrature oracle")
    _add_common(p_int, table=False)

    p_cf = sub.add_parser("cf", help="convergent/difference tables of any family")
    p_cf.add_argument(
        "--family",
        choices=["log", "atan", "ratio", "completed", "degenerate"],
        required=True,
    )
    p_cf.add_argument("--params", help="comma-separated key=value rationals")
    p_cf.add_argument("--convergents", type=int, default=5, metavar="K")
    p_cf.add_argument("--diffs", action="store_true", help="closed-form difference rows")
    p_cf.add_argument("--prec", type=int, default=DEFAULT_PREC)
    p_cf.add_argument("--digits", type=int, default=15)
    p_cf.add_argument(
        "--format", choices=["text", "json", "csv"], default="text", dest="fmt"
    )

    p_ver = sub.add_parser("verify", help="run the acceptance/invariant suite")
    p_ver.add_argument("--deep", action="store_true", help="include the slow sweeps")
    p_ver.add_argument(
        "--format", choices=["text", "json", "csv"], default="text", dest="fmt"
    )

    return ap


_HANDLERS = {
    "log": _cmd_log,
    "atan": _cmd_atan,
    "pi": _cmd_pi,
    "integral": _cmd_integral,
    "cf": _cmd_cf,
}


def run(argv: list[str], out=None, err=None) -> int:
    """Parse and execute ``argv``; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            records, params, code = _cmd_verify(args)
            _render(records, "verify", params, args.fmt, out)
            return code
        records, params = _HANDLERS[args.command](args)
        _render(records, args.command, params, args.fmt, out)
        return 0
    except (DomainError, ConvergenceError, CFEvaluationError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
