"""JSON and CSV encodings of reports.  Rationals travel as ``"a/b"`` strings."""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from typing import Any, Iterable, Optional

from .autocommuting import AutocommutingReport
from .bounds import BoundEntry, BoundReport, CharacterizationVerdict


def fmt_rational(x: Optional[Fraction]) -> Optional[str]:
    if x is None:
        return None
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: Optional[str]) -> Optional[Fraction]:
    if s is None:
        return None
    num, sep, den = s.partition("/")
    if not sep:
        raise ValueError(f"rational {s!r} must be written a/b")
    return Fraction(int(num), int(den))


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def bound_entry_to_dict(entry: BoundEntry, labels=None) -> dict:
    return {
        "bound_id": entry.bound_id,
        "side": entry.side,
        "g": None if entry.g is None else (labels[entry.g] if labels else entry.g),
        "applicable": entry.applicable,
        "strict": entry.strict,
        "bound_value": fmt_rational(entry.bound_value),
        "actual": fmt_rational(entry.actual),
        "holds": entry.holds,
        "equality": entry.equality,
        "note": entry.note,
        "witness": _plain(entry.witness),
    }


def characterization_to_dict(v: CharacterizationVerdict) -> dict:
    return {
        "check_id": v.check_id,
        "hypothesis_met": v.hypothesis_met,
        "conclusion_holds": v.conclusion_holds,
        "details": _plain(v.details),
    }


def report_to_dict(
    rep: AutocommutingReport,
    bounds: Optional[BoundReport] = None,
    characterizations: Optional[Iterable[CharacterizationVerdict]] = None,
    automorphisms: bool = False,
) -> dict:
    G = rep.group
    out: dict[str, Any] = {
        "group": G.name,
        "order": G.order,
        "aut_order": rep.aut_order,
        "L": list(rep.absolute_center.members),
        "K": list(rep.autocommutator_subgroup.members),
        "S": list(rep.autocommutator_set),
        "orbit_count": rep.orbit_count,
        "pr": fmt_rational(rep.pr),
        "distribution": {G.labels[g]: fmt_rational(v) for g, v in rep.distribution.items()},
    }
    if bounds is not None:
        out["bounds"] = [bound_entry_to_dict(e, G.labels) for e in bounds]
    if characterizations is not None:
        out["characterizations"] = [characterization_to_dict(v) for v in characterizations]
    if automorphisms:
        out["automorphisms"] = rep.aut.maps.tolist()
    return out


def rationals_from_dict(doc: dict) -> dict[str, Any]:
    """Pull every rational back out of a serialized report."""
    return {
        "pr": parse_rational(doc["pr"]),
        "distribution": {k: parse_rational(v) for k, v in doc["distribution"].items()},
        "bounds": [
            (b["bound_id"], b["g"], parse_rational(b["bound_value"]), parse_rational(b["actual"]))
            for b in doc.get("bounds", [])
        ],
    }


SURVEY_COLUMNS = [
    "name", "order", "aut_order", "L", "K", "S", "orbit_count", "pr",
    "B6_bound", "B6_equality", "B7_bound", "B7_equality", "status",
]


def survey_row(rep: AutocommutingReport, bounds: BoundReport) -> dict:
    b6, b7 = bounds.by_id("B6")[0], bounds.by_id("B7")[0]
    return {
        "name": rep.name,
        "order": rep.order,
        "aut_order": rep.aut_order,
        "L": rep.absolute_center.order,
        "K": rep.autocommutator_subgroup.order,
        "S": len(rep.autocommutator_set),
        "orbit_count": rep.orbit_count,
        "pr": fmt_rational(rep.pr),
        "B6_bound": fmt_rational(b6.bound_value),
        "B6_equality": b6.equality,
        "B7_bound": fmt_rational(b7.bound_value),
        "B7_equality": b7.equality,
        "status": "ok" if not bounds.violations else "violated:" + ";".join(
            sorted({e.bound_id for e in bounds.violations})
        ),
    }


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SURVEY_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: "" if row.get(k) is None else row[k] for k in SURVEY_COLUMNS})
    return buf.getvalue()
