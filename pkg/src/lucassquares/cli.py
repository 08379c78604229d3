"""Command line interface.

Four subcommands:

- seq: evaluate U_n and V_n (exactly, or modulo M) at an index or range;
- solve: generate parametric solutions of the Pell and quartic equations
  and cross-check them against direct enumeration;
- search: run one bounded square-class search box;
- verify: run classification reports or the full seventeen-report harness.

Output formats: table (plain rows), json, csv.  JSON renders every integer
as a decimal string so arbitrary-precision values survive consumers that
parse numbers as floats.  All output is deterministic for a given command
line.  Exit codes: 0 success, 1 usage error, 2 counterexample found,
3 query out of the predicted scope.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, replace

from . import classifier, diophantine, sequences
from .classifier import (
    CLASSIFICATION_IDS,
    FAMILIES,
    REPORT_IDS,
    REPORT_SUMMARIES,
    SquareClassFinding,
    SquareClassQuery,
    TheoremReport,
    p_range,
)
from .identities import CheckOutcome
from .sequences import SequenceParams

__all__ = ["main", "report_to_dict", "report_from_dict"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_OUT_OF_SCOPE = 3


class CliError(Exception):
    """A usage-level failure; rendered to stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # pragma: no cover - thin shim
        raise CliError(message)


@dataclass
class _Result:
    table_lines: list[str]
    csv_header: list[str]
    csv_rows: list[list]
    json_payload: dict
    exit_code: int = EXIT_OK


# --------------------------------------------------------------------------
# serialization helpers

def _stringify(obj):
    """Recursively render integers as decimal strings (bools untouched)."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_stringify(item) for item in obj]
    if isinstance(obj, dict):
        return {key: _stringify(value) for key, value in obj.items()}
    return obj


def _as_int(value) -> int:
    if isinstance(value, bool):
        raise ValueError(f"expected an integer, got {value!r}")
    return int(value)


def _query_dict(query: SquareClassQuery) -> dict:
    return {
        "family": query.family,
        "w": query.w,
        "p_values": list(query.p_values),
        "n_max": query.n_max,
        "m_max": query.m_max,
        "m_min": query.m_min,
        "n_parity": query.n_parity,
    }


def _query_from_dict(data: dict) -> SquareClassQuery:
    return SquareClassQuery(
        family=data["family"],
        w=_as_int(data["w"]),
        p_values=tuple(_as_int(p) for p in data["p_values"]),
        n_max=_as_int(data["n_max"]),
        m_max=None if data["m_max"] is None else _as_int(data["m_max"]),
        m_min=_as_int(data["m_min"]),
        n_parity=data["n_parity"],
    )


def _finding_dict(finding: SquareClassFinding) -> dict:
    return {
        "family": finding.family,
        "P": finding.P,
        "n": finding.n,
        "m": finding.m,
        "w": finding.w,
        "x": finding.x,
    }


def _finding_from_dict(data: dict) -> SquareClassFinding:
    return SquareClassFinding(
        family=data["family"],
        P=_as_int(data["P"]),
        n=_as_int(data["n"]),
        m=None if data["m"] is None else _as_int(data["m"]),
        w=_as_int(data["w"]),
        x=_as_int(data["x"]),
    )


def _outcome_dict(outcome: CheckOutcome) -> dict:
    return {
        "check_id": outcome.check_id,
        "inputs": list(outcome.inputs),
        "passed": outcome.passed,
        "lhs": outcome.lhs,
        "rhs": outcome.rhs,
        "note": outcome.note,
    }


def _outcome_from_dict(data: dict) -> CheckOutcome:
    return CheckOutcome(
        check_id=data["check_id"],
        inputs=tuple(_as_int(i) for i in data["inputs"]),
        passed=bool(data["passed"]),
        lhs=_as_int(data["lhs"]),
        rhs=_as_int(data["rhs"]),
        note=data.get("note", ""),
    )


def report_to_dict(report: TheoremReport) -> dict:
    """Plain-data form of a report (native ints; stringified only in JSON)."""
    def entry(item):
        if isinstance(item, SquareClassFinding):
            return _finding_dict(item)
        return _outcome_dict(item)

    return {
        "theorem_id": report.theorem_id,
        "summary": REPORT_SUMMARIES[report.theorem_id],
        "query": None if report.query is None else _query_dict(report.query),
        "predicted": [entry(item) for item in report.predicted],
        "found": [entry(item) for item in report.found],
        "verdict": report.verdict,
        "notes": report.notes,
    }


def report_from_dict(data: dict) -> TheoremReport:
    """Inverse of report_to_dict; accepts decimal-string or native ints."""
    def entry(item: dict):
        if "check_id" in item:
            return _outcome_from_dict(item)
        return _finding_from_dict(item)

    return TheoremReport(
        theorem_id=data["theorem_id"],
        query=None if data["query"] is None else _query_from_dict(data["query"]),
        predicted=tuple(entry(item) for item in data["predicted"]),
        found=tuple(entry(item) for item in data["found"]),
        verdict=data["verdict"],
        notes=data.get("notes", ""),
    )


# --------------------------------------------------------------------------
# rendering

def _render(result: _Result, fmt: str) -> str:
    if fmt == "table":
        return "".join(line + "\n" for line in result.table_lines)
    if fmt == "json":
        return json.dumps(_stringify(result.json_payload),
                          indent=2, sort_keys=True) + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result.csv_header)
    for row in result.csv_rows:
        writer.writerow(["" if cell is None else cell for cell in row])
    return buffer.getvalue()


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# argument parsing

_SPAN_RE = re.compile(r"^(-?\d+)(?:\.\.(-?\d+))?$")


def _parse_index_span(text: str) -> tuple[int, int]:
    match = _SPAN_RE.match(text)
    if not match:
        raise CliError(f"bad index spec {text!r}; use a single integer or LO..HI")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise CliError(f"bad index range {text!r}: lower bound exceeds upper bound")
    return lo, hi


def _add_p_selection(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--P", type=int, action="append", dest="p_list",
                        metavar="P", help="explicit P value (repeatable)")
    parser.add_argument("--P-max", type=int, dest="p_max", metavar="N",
                        help="all P from 1 through N")
    parser.add_argument("--P-odd-max", type=int, dest="p_odd_max", metavar="N",
                        help="all odd P from 1 through N")
    parser.add_argument("--multiple-of", type=int, dest="multiple_of", metavar="D",
                        help="keep only P divisible by D")


def _resolve_p_values(args: argparse.Namespace, required: bool = True,
                      ) -> tuple[int, ...] | None:
    chosen = [name for name, value in (("--P", args.p_list),
                                       ("--P-max", args.p_max),
                                       ("--P-odd-max", args.p_odd_max))
              if value]
    if len(chosen) > 1:
        raise CliError(f"{' and '.join(chosen)} are mutually exclusive")
    if args.p_list:
        values = tuple(sorted(set(args.p_list)))
    elif args.p_max:
        values = p_range(args.p_max)
    elif args.p_odd_max:
        values = p_range(args.p_odd_max, parity="odd")
    else:
        if required:
            raise CliError("select P values with --P, --P-max or --P-odd-max")
        return None
    if args.multiple_of:
        values = tuple(p for p in values if p % args.multiple_of == 0)
    if not values:
        raise CliError("the P selection is empty")
    return values


def _build_parser() -> _Parser:
    parser = _Parser(prog="lucassq",
                     description="Verification toolkit for Lucas sequence "
                                 "square classes and related Pell equations.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"),
                        default="table", help="output format (default: table)")
    common.add_argument("--out", metavar="FILE",
                        help="write output to FILE instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    seq = sub.add_parser("seq", parents=[common],
                         help="evaluate U_n and V_n at an index or range")
    seq.add_argument("-P", type=int, required=True, help="recurrence parameter P")
    seq.add_argument("-Q", type=int, default=1, help="recurrence parameter Q (default 1)")
    seq.add_argument("-n", required=True, metavar="N|LO..HI",
                     help="index or inclusive index range")
    seq.add_argument("--mod", type=int, metavar="M",
                     help="reduce modulo M (requires nonnegative indices)")

    solve = sub.add_parser("solve", parents=[common],
                           help="solve the Pell and quartic equations")
    solve.add_argument("equation", choices=("pell5", "form", "pell3", "quartic"),
                       help="pell5: u**2-5v**2 = +-1; form: x**2-4xy-y**2 in {-5,-1}; "
                            "pell3: b**2-3c**2 = 1; quartic: x**4+ax**2+b = 5y**2")
    solve.add_argument("--sign", type=int, choices=(1, -1), default=1,
                       help="right-hand side for pell5 (default 1)")
    solve.add_argument("--c", type=int, choices=(-5, -1), default=-1,
                       help="right-hand side for form (default -1)")
    solve.add_argument("--count", type=int, default=5,
                       help="number of family members to generate (default 5)")
    solve.add_argument("--variant", choices=tuple(diophantine.QUARTIC_VARIANTS),
                       default="plus3", help="quartic variant (default plus3)")
    solve.add_argument("--xmax", type=int, default=2000,
                       help="x bound for the quartic scan (default 2000)")
    solve.add_argument("--enum-bound", type=int, dest="enum_bound",
                       help="explicit bound for the enumeration cross-check")

    search = sub.add_parser("search", parents=[common],
                            help="run one bounded square-class search box")
    search.add_argument("family", choices=FAMILIES,
                        help="U, V (one-term) or UU, VV (two-term)")
    search.add_argument("w", type=int, help="square-free coefficient")
    _add_p_selection(search)
    search.add_argument("--nmax", type=int, required=True, help="index bound")
    search.add_argument("--mmax", type=int, help="divisor index bound (two-term)")
    search.add_argument("--mmin", type=int, default=1,
                        help="divisor index lower bound (default 1)")
    search.add_argument("--parity", choices=("odd", "even"),
                        help="restrict searched n to one parity")
    search.add_argument("--jobs", type=int, default=1,
                        help="worker processes (default 1)")

    verify = sub.add_parser("verify", parents=[common],
                            help="run verification reports")
    verify.add_argument("target", metavar="REPORT|all",
                        help="report id or 'all' (ids: " + ", ".join(REPORT_IDS) + ")")
    verify.add_argument("--profile", choices=("quick", "full"), default="quick",
                        help="box sizes (default quick)")
    _add_p_selection(verify)
    verify.add_argument("--nmax", type=int, help="override the index bound")
    verify.add_argument("--mmax", type=int, help="override the divisor bound")
    verify.add_argument("--mmin", type=int, help="override the divisor lower bound")
    verify.add_argument("--parity", choices=("odd", "even"),
                        help="restrict searched n to one parity")
    verify.add_argument("--jobs", type=int, default=1,
                        help="worker processes (default 1)")

    return parser


# --------------------------------------------------------------------------
# subcommand handlers

def _cmd_seq(args: argparse.Namespace) -> _Result:
    lo, hi = _parse_index_span(args.n)
    params = SequenceParams(args.P, args.Q)
    rows: list[list[int]] = []
    if args.mod is not None:
        if lo < 0:
            raise CliError("--mod requires nonnegative indices")
        for n in range(lo, hi + 1):
            pair = sequences.pair_mod(params, n, args.mod)
            rows.append([pair.n, pair.u_res, pair.v_res])
    else:
        for pair in sequences.seq_range(params, lo, hi):
            rows.append([pair.n, pair.u, pair.v])
    payload = {
        "command": "seq",
        "P": args.P,
        "Q": args.Q,
        "modulus": args.mod,
        "rows": [{"n": n, "u": u, "v": v} for n, u, v in rows],
    }
    table = [f"{n} {u} {v}" for n, u, v in rows]
    return _Result(table, ["n", "u", "v"], rows, payload)


def _cmd_solve(args: argparse.Namespace) -> _Result:
    if args.count < 1:
        raise CliError(f"--count must be >= 1, got {args.count}")

    if args.equation == "quartic":
        solutions = diophantine.quartic_solutions(args.variant, args.xmax)
        rows = [[s.x, s.y] for s in solutions]
        payload = {
            "command": "solve",
            "equation": "quartic",
            "variant": args.variant,
            "polynomial": diophantine.quartic_polynomial(args.variant),
            "x_bound": args.xmax,
            "solutions": [{"x": s.x, "y": s.y} for s in solutions],
        }
        table = [f"{x} {y}" for x, y in rows]
        return _Result(table, ["x", "y"], rows, payload)

    # The agreement check extends the family until it provably covers the
    # enumeration bound, so a --count smaller than the bound requires cannot
    # masquerade as a disagreement; only --count rows are displayed.
    if args.equation == "pell5":
        family = diophantine.pell5_family(args.sign, args.count)
        bound = args.enum_bound if args.enum_bound is not None else family[-1].v
        cover = family
        while cover[-1].v <= bound:
            cover = diophantine.pell5_family(args.sign, len(cover) + 1)
        oracle = diophantine.pell5_enumerate(args.sign, bound)
        family_pairs = {(s.u, s.v) for s in cover if s.v <= bound}
        oracle_pairs = {(s.u, s.v) for s in oracle}
        rows = [[s.z, s.u, s.v] for s in family]
        header = ["z", "u", "v"]
        table = [f"{s.u} {s.v}" for s in family]
        payload = {
            "command": "solve",
            "equation": "pell5",
            "sign": args.sign,
            "solutions": [{"z": s.z, "u": s.u, "v": s.v} for s in family],
        }
    elif args.equation == "form":
        family = diophantine.form_family(args.c, args.count)
        bound = args.enum_bound if args.enum_bound is not None else family[-1].y
        cover = family
        while cover[-1].y <= bound:
            cover = diophantine.form_family(args.c, len(cover) + 1)
        oracle = diophantine.form_enumerate(args.c, bound)
        family_pairs = {(s.x, s.y) for s in cover if s.y <= bound}
        oracle_pairs = {(s.x, s.y) for s in oracle}
        rows = [[s.z, s.x, s.y] for s in family]
        header = ["z", "x", "y"]
        table = [f"{s.x} {s.y}" for s in family]
        payload = {
            "command": "solve",
            "equation": "form",
            "c": args.c,
            "solutions": [{"z": s.z, "x": s.x, "y": s.y} for s in family],
        }
    else:
        family = diophantine.pell3_family(args.count)
        bound = args.enum_bound if args.enum_bound is not None else family[-1][1]
        cover = family
        while cover[-1][1] <= bound:
            cover = diophantine.pell3_family(len(cover) + 1)
        oracle = diophantine.pell3_enumerate(bound)
        family_pairs = {bc for bc in cover if bc[1] <= bound}
        oracle_pairs = set(oracle)
        rows = [[b, c] for b, c in family]
        header = ["b", "c"]
        table = [f"{b} {c}" for b, c in family]
        payload = {
            "command": "solve",
            "equation": "pell3",
            "solutions": [{"b": b, "c": c} for b, c in family],
        }

    agree = family_pairs == oracle_pairs
    payload["oracle_bound"] = bound
    payload["family_matches_oracle"] = agree
    table.append(f"family=oracle: {'yes' if agree else 'no'}")
    exit_code = EXIT_OK if agree else EXIT_COUNTEREXAMPLE
    return _Result(table, header, rows, payload, exit_code)


def _finding_row(finding: SquareClassFinding) -> list:
    return [finding.family, finding.P, finding.n, finding.m, finding.w, finding.x]


def _finding_line(finding: SquareClassFinding) -> str:
    m_text = "-" if finding.m is None else str(finding.m)
    return f"{finding.family} {finding.P} {finding.n} {m_text} {finding.w} {finding.x}"


def _cmd_search(args: argparse.Namespace) -> _Result:
    p_values = _resolve_p_values(args)
    try:
        query = SquareClassQuery(args.family, args.w, p_values, args.nmax,
                                 m_max=args.mmax, m_min=args.mmin,
                                 n_parity=args.parity)
    except ValueError as err:
        raise CliError(str(err)) from None
    findings = classifier.search(query, jobs=args.jobs)
    payload = {
        "command": "search",
        "query": _query_dict(query),
        "findings": [_finding_dict(f) for f in findings],
    }
    return _Result([_finding_line(f) for f in findings],
                   ["family", "P", "n", "m", "w", "x"],
                   [_finding_row(f) for f in findings],
                   payload)


def _report_table_lines(report: TheoremReport) -> list[str]:
    lines = [f"{report.theorem_id} {report.verdict} "
             f"found={len(report.found)} predicted={len(report.predicted)}"]
    if report.verdict != classifier.CONSISTENT:
        lines.append(f"  {report.notes}")
    return lines


def _verify_exit_code(reports: list[TheoremReport]) -> int:
    verdicts = {report.verdict for report in reports}
    if classifier.COUNTEREXAMPLE in verdicts:
        return EXIT_COUNTEREXAMPLE
    if classifier.OUT_OF_SCOPE in verdicts:
        return EXIT_OUT_OF_SCOPE
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> _Result:
    overrides_given = any(value is not None for value in
                          (args.p_list, args.p_max, args.p_odd_max,
                           args.multiple_of, args.nmax, args.mmax,
                           args.mmin, args.parity))
    if args.target == "all":
        if overrides_given:
            raise CliError("box overrides apply to a single report, not 'all'")
        reports = classifier.verify_all(args.profile, jobs=args.jobs)
    elif args.target in CLASSIFICATION_IDS:
        query = classifier.default_query(args.target, args.profile)
        p_values = _resolve_p_values(args, required=False)
        try:
            if p_values is not None:
                query = replace(query, p_values=p_values)
            if args.nmax is not None:
                query = replace(query, n_max=args.nmax)
            if args.mmax is not None:
                query = replace(query, m_max=args.mmax)
            if args.mmin is not None:
                query = replace(query, m_min=args.mmin)
            if args.parity is not None:
                query = replace(query, n_parity=args.parity)
        except ValueError as err:
            raise CliError(str(err)) from None
        reports = [classifier.verify_theorem(args.target, query, jobs=args.jobs)]
    elif args.target in REPORT_IDS:
        if overrides_given:
            raise CliError("box overrides apply to classification reports only; "
                           f"{args.target} runs at the profile's grid sizes")
        reports = [classifier.verify_report(args.target, args.profile, jobs=args.jobs)]
    else:
        raise CliError(f"unknown report {args.target!r}; "
                       f"valid: all, {', '.join(REPORT_IDS)}")

    table: list[str] = []
    for report in reports:
        table.extend(_report_table_lines(report))
    counts = {verdict: sum(1 for r in reports if r.verdict == verdict)
              for verdict in (classifier.CONSISTENT, classifier.COUNTEREXAMPLE,
                              classifier.OUT_OF_SCOPE)}
    table.append(f"reports={len(reports)} consistent={counts[classifier.CONSISTENT]} "
                 f"counterexample={counts[classifier.COUNTEREXAMPLE]} "
                 f"out_of_scope={counts[classifier.OUT_OF_SCOPE]}")
    payload = {
        "command": "verify",
        "target": args.target,
        "profile": args.profile,
        "reports": [report_to_dict(report) for report in reports],
    }
    csv_rows = [[report.theorem_id, report.verdict, len(report.found),
                 len(report.predicted), report.notes] for report in reports]
    return _Result(table, ["theorem_id", "verdict", "found", "predicted", "notes"],
                   csv_rows, payload, _verify_exit_code(reports))


_HANDLERS = {
    "seq": _cmd_seq,
    "solve": _cmd_solve,
    "search": _cmd_search,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = _HANDLERS[args.command](args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    _emit(_render(result, args.format), args.out)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
