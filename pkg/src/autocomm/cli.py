"""Command line entry point: ``autocomm analyze | survey | isoclinic``.

Exit codes: 0 ok, 1 input error, 2 a bound reported violated,
3 definitive negative, 4 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .autocommuting import analyze
from .bounds import bound_report, characterization_check
from .catalog import build, max_order_cap, standard_corpus
from .errors import GroupError, SearchBudgetExceeded
from .isoclinism import DEFAULT_PAIR_BUDGET, find_autoisoclinism
from .report import fmt_rational, report_to_dict, rows_to_csv, survey_row, SURVEY_COLUMNS

log = logging.getLogger("autocomm")

EXIT_OK, EXIT_INPUT, EXIT_VIOLATED, EXIT_NONE, EXIT_BUDGET = 0, 1, 2, 3, 4


@dataclass
class OutputConfig:
    format: str = "table"
    destination: Optional[str] = None
    verbosity: int = 0

    def validate(self, mode: str) -> None:
        if self.format == "csv" and mode != "survey":
            raise GroupError("csv output is only available for survey")

    def emit(self, text: str) -> None:
        if not text.endswith("\n"):
            text += "\n"
        if self.destination in (None, "-"):
            sys.stdout.write(text)
        else:
            Path(self.destination).write_text(text)


def _table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in headers]] + [["" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_analyze(args, out: OutputConfig) -> int:
    G = build(args.group)
    rep = analyze(G)
    bounds = bound_report(G, report=rep) if args.bounds else None
    chars = characterization_check(G, report=rep) if args.characterize else None
    if out.format == "json":
        doc = report_to_dict(rep, bounds, chars, automorphisms=args.automorphisms)
        out.emit(json.dumps(doc, indent=2))
    else:
        lines = [
            f"group        {G.name}",
            f"order        {G.order}",
            f"|Aut|        {rep.aut_order}",
            f"L(G)         {[G.labels[x] for x in rep.absolute_center]}",
            f"K(G)         {[G.labels[x] for x in rep.autocommutator_subgroup]}",
            f"S(G,Aut(G))  {[G.labels[x] for x in rep.autocommutator_set]}",
            f"orbits       {rep.orbit_count}",
            f"Pr           {fmt_rational(rep.pr)}",
        ]
        if args.all_g:
            lines += ["", _table(["g", "Pr_g"], [(G.labels[g], fmt_rational(v)) for g, v in rep.distribution.items()])]
        if bounds is not None:
            rows = [
                (e.bound_id, e.side, "" if e.g is None else G.labels[e.g], fmt_rational(e.bound_value),
                 fmt_rational(e.actual), e.holds, e.equality, "" if e.applicable else e.note)
                for e in bounds
            ]
            lines += ["", _table(["bound", "side", "g", "bound_value", "actual", "holds", "equality", "note"], rows)]
        if chars is not None:
            rows = [(v.check_id, v.hypothesis_met, v.conclusion_holds) for v in chars]
            lines += ["", _table(["check", "hypothesis_met", "conclusion_holds"], rows)]
        out.emit("\n".join(lines))
    if bounds is not None and bounds.violations:
        for e in bounds.violations:
            log.warning("bound %s violated (g=%s): actual %s vs %s", e.bound_id, e.g,
                        fmt_rational(e.actual), fmt_rational(e.bound_value))
        return EXIT_VIOLATED
    return EXIT_OK


def _survey_one(job: tuple[int, int]) -> dict:
    max_order, i = job
    G = standard_corpus(max_order, cap=max(max_order, 1))[i]
    try:
        rep = analyze(G)
    except SearchBudgetExceeded:
        row = {k: None for k in SURVEY_COLUMNS}
        row.update(name=G.name, order=G.order, status="budget")
        return row
    return survey_row(rep, bound_report(G, report=rep))


def survey_rows(max_order: int, jobs: int = 1) -> list[dict]:
    n = len(standard_corpus(max_order, cap=max(max_order, 1)))
    work = [(max_order, i) for i in range(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_survey_one, work))
    else:
        rows = [_survey_one(w) for w in work]
    rows.sort(key=lambda r: (r["order"], r["name"]))
    return rows


def cmd_survey(args, out: OutputConfig) -> int:
    cap = max_order_cap()
    if args.max_order > cap:
        raise GroupError(f"--max-order {args.max_order} exceeds cap {cap} (set AUTOCOMM_MAX_ORDER)")
    rows = survey_rows(args.max_order, args.jobs)
    if out.format == "csv":
        text = rows_to_csv(rows)
    elif out.format == "json":
        text = json.dumps(rows, indent=2)
    else:
        text = _table(SURVEY_COLUMNS, [[r[k] for k in SURVEY_COLUMNS] for r in rows])
    try:
        out.emit(text)
    except OSError as exc:
        log.error("cannot write survey: %s", exc)
        return EXIT_INPUT
    return EXIT_OK


def cmd_isoclinic(args, out: OutputConfig) -> int:
    G, H = build(args.a), build(args.b)
    try:
        iso = find_autoisoclinism(G, H, budget=args.budget)
    except SearchBudgetExceeded as exc:
        log.error("%s", exc)
        out.emit(json.dumps({"source": G.name, "target": H.name, "verdict": "budget_exhausted"}))
        return EXIT_BUDGET
    if iso is None:
        out.emit(json.dumps({"source": G.name, "target": H.name, "verdict": "none"}))
        return EXIT_NONE
    out.emit(json.dumps({"verdict": "autoisoclinic", **iso.to_dict()}, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="autocomm", description="Generalized autocommuting probability of small groups.")
    p.add_argument("-v", "--verbose", action="count", default=0)
    p.add_argument("--output", "-o", help="write to this path instead of standard output")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="Pr_g data, bounds and characterizations for one group")
    a.add_argument("--group", required=True, help="group spec, e.g. cyclic:4, dihedral:4, product:cyclic:3,cyclic:4, file:g.json")
    a.add_argument("--all-g", action="store_true", help="print the full Pr_g distribution")
    a.add_argument("--bounds", action="store_true")
    a.add_argument("--characterize", action="store_true")
    a.add_argument("--automorphisms", action="store_true", help="include automorphism image arrays (json)")
    a.add_argument("--format", choices=["table", "json", "csv"], default="table")

    s = sub.add_parser("survey", help="one row per corpus group")
    s.add_argument("--max-order", type=int, default=16)
    s.add_argument("--format", choices=["table", "json", "csv"], default="csv")
    s.add_argument("--jobs", type=int, default=1)

    i = sub.add_parser("isoclinic", help="search for an autoisoclinism between two groups")
    i.add_argument("a")
    i.add_argument("b")
    i.add_argument("--budget", type=int, default=DEFAULT_PAIR_BUDGET)
    i.add_argument("--format", choices=["json"], default="json")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    out = OutputConfig(args.format, args.output, args.verbose)
    handlers = {"analyze": cmd_analyze, "survey": cmd_survey, "isoclinic": cmd_isoclinic}
    try:
        out.validate(args.command)
        return handlers[args.command](args, out)
    except GroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
