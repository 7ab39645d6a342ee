"""Command-line interface.

Every analysis is exposed as a subcommand with text (default) or JSON
output.  Big integers are always serialized as decimal strings so no
consumer loses precision.  Exit status: 0 success, 1 usage error, 2 resource
guard exceeded, 3 certification failure or an undecided/inconclusive result.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from .denominator import PrecisionSchedule, poly_json_dumps
from .dimers import TilingCount, count_tilings, tiling_series
from .errors import CertificationError, DimerqError, ResourceLimitError
from .identities import (
    STATUS_EQUAL,
    STATUS_UNDECIDED,
    certify_relation,
    classify,
    primitive_filter,
    scan_relations,
)
from .pell import (
    compute_rn,
    lagarias_checks,
    ljunggren_scan,
    pell_numbers,
    primitive_part,
    robinson_scan,
)
from .roots import (
    VERDICT_INCONCLUSIVE,
    compute_pk,
    repeated_roots_criterion,
    repeated_roots_exact,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_UNCERTIFIED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # map argparse usage errors to exit status 1
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", default=None, help="cache directory (default: $DIMER_CACHE or ./cache)")

    parser = _Parser(prog="dimerq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="tiling count of a k x n rectangle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("series", parents=[common], help="tiling counts for lengths 0..terms-1")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)

    p = sub.add_parser("qpoly", parents=[common], help="certified denominator polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--precision", type=int, default=None, help="starting precision in bits")
    p.add_argument("--out", default=None, help="write the polynomial JSON document to this path")

    p = sub.add_parser("check", parents=[common], help="repeated-root verdict")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("exact", "criterion", "both"), default="exact")

    p = sub.add_parser("reduce", parents=[common], help="numerator, gcd and minimal recurrence order")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("identities", parents=[common], help="certified unit relations")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--scan-max", type=int, dest="scan_max")

    p = sub.add_parser("pell", parents=[common], help="Pell numbers and half companions")
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("primitive", parents=[common], help="primitive part of one Pell number")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("robinson", parents=[common], help="square primitive parts up to an index")
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("rn", parents=[common], help="certified conjugate-product value R_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("lagarias", parents=[common], help="divisibility/squareness checks on u_p")
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("ljunggren", parents=[common], help="solutions of X^2 + 1 = 2 Y^4")
    p.add_argument("--bound", type=int, required=True)

    return parser


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _relation_record(k: int, rel) -> dict:
    record = rel.to_json_dict()
    record["implies_repeated"] = rel.status == STATUS_EQUAL and classify(k, rel.S, rel.T)
    return record


def _relations_for(k: int) -> tuple[list[dict], bool]:
    certified = [certify_relation(k, c.S, c.T) for c in scan_relations(k)]
    equal = [r for r in certified if r.status == STATUS_EQUAL]
    primitive = {(rel.S, rel.T) for rel in primitive_filter(k, equal)}
    records = []
    any_undecided = False
    for rel in certified:
        record = _relation_record(k, rel)
        record["primitive"] = (rel.S, rel.T) in primitive
        records.append(record)
        any_undecided |= rel.status == STATUS_UNDECIDED
    return records, any_undecided


def _fmt_subset(items: list[int]) -> str:
    return "{" + ",".join(map(str, items)) + "}"


def _relation_lines(records: list[dict]) -> list[str]:
    lines = []
    for r in records:
        lines.append(
            f"k={r['k']} S={_fmt_subset(r['S'])} T={_fmt_subset(r['T'])} {r['status']}"
            f" primitive={r['primitive']} implies_repeated={r['implies_repeated']}"
        )
    return lines


def _cmd_count(args) -> int:
    result = TilingCount(args.k, args.n, count_tilings(args.k, args.n))
    _emit(
        {"k": result.k, "n": result.n, "count": str(result.count)},
        [str(result.count)],
        args.format,
    )
    return EXIT_OK


def _cmd_series(args) -> int:
    series = tiling_series(args.k, args.terms)
    _emit(
        {"k": series.k, "terms": [str(t) for t in series.terms]},
        [" ".join(str(t) for t in series.terms)],
        args.format,
    )
    return EXIT_OK


def _cmd_qpoly(args) -> int:
    schedule = PrecisionSchedule(initial=args.precision) if args.precision else None
    certified = cache_mod.load_or_build(args.k, cache_mod.resolve_cache_dir(args.cache), schedule)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(poly_json_dumps(certified.to_json_dict()) + "\n")
    payload = certified.to_payload()
    text = [
        f"k={certified.k} degree={certified.poly.degree} precision={certified.precision_used}"
        f" recurrence_checked={certified.recurrence_checked}",
        " ".join(str(c) for c in certified.poly.coeffs),
    ]
    _emit(payload, text, args.format)
    return EXIT_OK


def _cmd_check(args) -> int:
    cache_dir = cache_mod.resolve_cache_dir(args.cache)
    payload: dict = {"k": args.k, "method": args.method}
    status = EXIT_OK
    if args.method in ("exact", "both"):
        # warm the on-disk cache so repeated checks are cheap
        cache_mod.load_or_build(args.k, cache_dir)
        exact = repeated_roots_exact(args.k)
        payload["verdict"] = exact.verdict
        payload["witness_degree"] = None if exact.witness is None else exact.witness.degree
        payload["witness_coeffs"] = (
            None if exact.witness is None else [str(c) for c in exact.witness.coeffs]
        )
    if args.method in ("criterion", "both"):
        crit = repeated_roots_criterion(args.k)
        payload["verdict"] = crit.verdict
        payload["relation"] = None if crit.witness is None else crit.witness.to_json_dict()
        if crit.verdict == VERDICT_INCONCLUSIVE:
            status = EXIT_UNCERTIFIED
    if args.method == "both":
        agree = exact.verdict == crit.verdict
        payload["agree"] = agree
        payload["verdict"] = exact.verdict if agree else "disagree"
    text = [f"k={args.k}: {payload['verdict']}"]
    if payload.get("witness_degree"):
        text.append(f"witness degree {payload['witness_degree']}")
    if payload.get("relation"):
        rel = payload["relation"]
        text.append(f"relation S={rel['S']} T={rel['T']}")
    _emit(payload, text, args.format)
    return status


def _cmd_reduce(args) -> int:
    cache_mod.load_or_build(args.k, cache_mod.resolve_cache_dir(args.cache))
    reduced = compute_pk(args.k)
    payload = {
        "k": reduced.k,
        "p_degree": reduced.P.degree,
        "p_coeffs": [str(c) for c in reduced.P.coeffs],
        "q_degree": reduced.Q.degree,
        "gcd_degree": reduced.common.degree,
        "gcd_coeffs": [str(c) for c in reduced.common.coeffs],
        "min_order": reduced.min_order,
    }
    text = [
        f"k={reduced.k} deg P={reduced.P.degree} deg Q={reduced.Q.degree}"
        f" deg gcd={reduced.common.degree} min_order={reduced.min_order}",
        "P: " + " ".join(str(c) for c in reduced.P.coeffs),
        "gcd: " + " ".join(str(c) for c in reduced.common.coeffs),
    ]
    _emit(payload, text, args.format)
    return EXIT_OK


def _cmd_identities(args) -> int:
    if args.k is not None:
        records, undecided = _relations_for(args.k)
        payload = {"k": args.k, "relations": records}
        lines = _relation_lines(records) or [f"k={args.k}: no relations"]
    else:
        census = []
        undecided = False
        for k in range(1, args.scan_max + 1):
            records, k_undecided = _relations_for(k)
            undecided |= k_undecided
            if records:
                census.append({"k": k, "relations": records})
        payload = {"scan_max": args.scan_max, "census": census}
        lines = []
        for entry in census:
            lines.extend(_relation_lines(entry["relations"]))
        if not lines:
            lines = [f"no relations for k <= {args.scan_max}"]
    _emit(payload, lines, args.format)
    return EXIT_UNCERTIFIED if undecided else EXIT_OK


def _cmd_pell(args) -> int:
    pairs = pell_numbers(args.max)
    payload = {"max": args.max, "pairs": [{"n": p.n, "u": str(p.u), "r": str(p.r)} for p in pairs]}
    text = [f"{p.n} {p.u} {p.r}" for p in pairs]
    _emit(payload, text, args.format)
    return EXIT_OK


def _cmd_primitive(args) -> int:
    part = primitive_part(args.n)
    _emit({"n": part.n, "L": str(part.L)}, [str(part.L)], args.format)
    return EXIT_OK


def _cmd_robinson(args) -> int:
    squares = robinson_scan(args.max)
    _emit({"max": args.max, "squares": squares}, [" ".join(map(str, squares))], args.format)
    return EXIT_OK


def _cmd_rn(args) -> int:
    report = compute_rn(args.n)
    mid, rad = report.r_ball.decimal_str()
    payload = {
        "n": report.n,
        "L": str(report.L),
        "is_square": report.is_square,
        "r_integer": None if report.r_integer is None else str(report.r_integer),
        "r_ball": {"midpoint": mid, "radius": rad, "precision": report.r_ball.prec},
    }
    value = report.r_integer if report.is_square else f"~{float(report.r_ball):.12g} (irrational)"
    _emit(payload, [f"n={report.n} L={report.L} R_n={value}"], args.format)
    return EXIT_OK


def _cmd_lagarias(args) -> int:
    report = lagarias_checks(args.p)
    payload = {
        "p": report.p,
        "u": str(report.u),
        "p_divides_up": report.p_divides_up,
        "up_is_square": report.up_is_square,
    }
    text = [
        f"u_{report.p} = {report.u}: divisible by {report.p}: {report.p_divides_up},"
        f" perfect square: {report.up_is_square}"
    ]
    _emit(payload, text, args.format)
    return EXIT_OK


def _cmd_ljunggren(args) -> int:
    solutions = ljunggren_scan(args.bound)
    payload = {"bound": args.bound, "solutions": [{"x": str(x), "y": str(y)} for x, y in solutions]}
    _emit(payload, [f"({x}, {y})" for x, y in solutions], args.format)
    return EXIT_OK


_COMMANDS = {
    "count": _cmd_count,
    "series": _cmd_series,
    "qpoly": _cmd_qpoly,
    "check": _cmd_check,
    "reduce": _cmd_reduce,
    "identities": _cmd_identities,
    "pell": _cmd_pell,
    "primitive": _cmd_primitive,
    "robinson": _cmd_robinson,
    "rn": _cmd_rn,
    "lagarias": _cmd_lagarias,
    "ljunggren": _cmd_ljunggren,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_UNCERTIFIED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DimerqError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_UNCERTIFIED


if __name__ == "__main__":
    raise SystemExit(main())
