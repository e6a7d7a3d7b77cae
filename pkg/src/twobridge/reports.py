"""Rendering of reports as text, JSON or CSV.

Every renderer is deterministic: field order is fixed by the report's
``as_dict`` and JSON is written without key sorting so the order survives.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .bounds import DeltaBoundReport
from .lab import FamilyMember, Table1Report, Table2Report, Truncated

FORMATS = ("text", "json", "csv")


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header: list[str], rows: Iterable[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


# -- bound reports -----------------------------------------------------------------

def _bound_text(report: DeltaBoundReport) -> str:
    upper = "none" if report.upper is None else str(report.upper)
    head = f"lower {report.lower}, upper {upper}"
    if report.exact:
        head += ", exact"
    elif report.candidates:
        head += f" ({' or '.join(map(str, report.candidates))})"
    lines = [head]
    for key in ("lower", "upper"):
        tags = report.provenance.get(key)
        if tags:
            lines.append(f"  {key} from: {', '.join(tags)}")
    if report.certificate is not None:
        lines.append(f"  certificate, total cost {report.certificate.total_cost}:")
        for step in report.certificate.steps:
            if step.kind == "twist":
                lines.append(f"    {step.word} -> {step.result}  band 2 {step.delta:+d}, cost {step.cost}")
            else:
                lines.append(f"    {step.word} = {step.result}")
    return "\n".join(lines) + "\n"


def _bound_csv(report: DeltaBoundReport) -> str:
    p = report.provenance
    cost = None if report.certificate is None else report.certificate.total_cost
    return _csv(["lower", "upper", "exact", "lower_from", "upper_from", "certificate_cost"],
                [[report.lower, report.upper, report.exact,
                  ";".join(p.get("lower", [])), ";".join(p.get("upper", [])), cost]])


# -- tables ---------------------------------------------------------------------------

def _table1_text(report: Table1Report) -> str:
    rows = [("K", "normal form", "family word", "verdict")]
    rows += [(r.name, str(r.normal_form), str(r.example), str(r.verdict)) for r in report.rows]
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.append(f"table 1: {'ok' if report.ok else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


def _table1_csv(report: Table1Report) -> str:
    return _csv(["name", "normal_form", "example", "verdict", "ok"],
                [[r.name, str(r.normal_form), str(r.example), str(r.verdict), r.ok]
                 for r in report.rows])


def _cell_text(values: tuple[int, ...]) -> str:
    return " or ".join(map(str, values)) if values else "?"


def table2_matrix(report: Table2Report) -> list[list[str]]:
    """Upper-triangular matrix of computed cells; diagonal 0, lower part blank."""
    names = report.names
    out = []
    for i, r in enumerate(names):
        row = []
        for j, c in enumerate(names):
            if j < i:
                row.append("")
            elif j == i:
                row.append("0")
            else:
                row.append(_cell_text(report.cell(r, c).computed))
        out.append(row)
    return out


def _table2_text(report: Table2Report) -> str:
    from .catalog import CATALOG
    names = report.names
    matrix = table2_matrix(report)
    labels = [f"{n} {CATALOG[n].word}" for n in names]
    width = max(len(x) for x in labels)
    cw = max(max(len(c) for row in matrix for c in row), max(len(n) for n in names))
    lines = [" " * width + " | " + " ".join(n.rjust(cw) for n in names)]
    lines.append("-" * len(lines[0]))
    for label, row in zip(labels, matrix):
        lines.append(label.ljust(width) + " | " + " ".join(c.rjust(cw) for c in row))
    bad = [c for c in report.cells if not c.ok]
    for c in bad:
        lines.append(f"MISMATCH {c.row} x {c.column}: expected {_cell_text(c.expected)}, "
                     f"computed {_cell_text(c.computed)}")
    lines.append(f"table 2: {'ok' if report.ok else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


def _table2_csv(report: Table2Report) -> str:
    names = list(report.names)
    return _csv([""] + names, [[n] + row for n, row in zip(names, table2_matrix(report))])


# -- family scans -----------------------------------------------------------------------

def _member_row(m: FamilyMember) -> list:
    return [m.params.beta, " ".join(map(str, m.params.betas)), str(m.word), m.pair.p, m.pair.q,
            m.name, m.a2, m.chirality]


_MEMBER_HEADER = ["beta", "betas", "word", "p", "q", "name", "a2", "chirality"]


def _scan_text(items: list) -> str:
    lines = []
    for m in items:
        if isinstance(m, Truncated):
            lines.append(f"... truncated after {m.emitted} members: {m.reason}")
            continue
        name = m.name or "-"
        lines.append(f"{str(m.params):<24} {str(m.word):<36} S({m.pair.p},{m.pair.q})"
                     f"  a2={m.a2}  {name}")
    return "\n".join(lines) + ("\n" if lines else "")


def _scan_csv(items: list) -> str:
    rows = []
    for m in items:
        if isinstance(m, Truncated):
            rows.append(["", "", f"# truncated after {m.emitted}: {m.reason}", "", "", "", "", ""])
        else:
            rows.append(_member_row(m))
    return _csv(_MEMBER_HEADER, rows)


def _scan_jsonl(items: list) -> str:
    return "".join(json.dumps(m.as_dict()) + "\n" for m in items)


# -- plain records -----------------------------------------------------------------------

def _record_text(record: dict) -> str:
    width = max((len(k) for k in record), default=0)
    lines = []
    for k, v in record.items():
        if isinstance(v, (list, tuple)):
            v = " ".join(map(str, v))
        elif v is None:
            v = "-"
        lines.append(f"{k.ljust(width)}  {v}")
    return "\n".join(lines) + "\n"


def _records_csv(records: list[dict]) -> str:
    if not records:
        return ""
    header = list(records[0])

    def cell(v):
        if isinstance(v, dict):
            return json.dumps(v)
        if isinstance(v, (list, tuple)):
            return " ".join(map(str, v))
        return v

    return _csv(header, [[cell(r[k]) for k in header] for r in records])


def emit_report(report, fmt: str = "text") -> str:
    """Render any report this package produces in ``fmt``."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    if isinstance(report, DeltaBoundReport):
        return {"text": _bound_text, "json": lambda r: _json(r.as_dict()), "csv": _bound_csv}[fmt](report)
    if isinstance(report, Table1Report):
        return {"text": _table1_text, "json": lambda r: _json(r.as_dict()), "csv": _table1_csv}[fmt](report)
    if isinstance(report, Table2Report):
        return {"text": _table2_text, "json": lambda r: _json(r.as_dict()), "csv": _table2_csv}[fmt](report)
    if isinstance(report, list) and all(isinstance(m, (FamilyMember, Truncated)) for m in report):
        return {"text": _scan_text, "json": _scan_jsonl, "csv": _scan_csv}[fmt](report)
    if isinstance(report, dict):
        return {"text": _record_text, "json": _json, "csv": lambda r: _records_csv([r])}[fmt](report)
    if isinstance(report, list) and all(isinstance(r, dict) for r in report):
        if fmt == "text":
            return "".join(_record_text(r) + "\n" for r in report)
        return _json(report) if fmt == "json" else _records_csv(report)
    raise TypeError(f"cannot render {type(report).__name__}")
