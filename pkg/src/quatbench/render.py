"""Deterministic text renderings of workbench payloads.

All functions take the plain-dict form of the service responses (what the
HTTP API serializes), so the command-line client can render whatever a
local or remote service returns.  Markdown uses pipe tables, CSV uses
RFC-style quoting, and ordering is fixed so output is byte-identical
across runs.
"""

from __future__ import annotations

import csv
import io
import json

FORMATS = ("markdown", "csv", "json")


def _csv_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cell_text(cell: dict) -> str:
    if not cell["values"]:
        return "-"
    parts = []
    for v in cell["values"]:
        if v["match"]:
            parts.append(str(v["computed"]))
        else:
            parts.append(f"{v['computed']}!={v['printed']}")
    return "/".join(parts)


def render_table(table: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(table)
    header = [""] + list(table["columns"])
    body = [[row["label"]] + [_cell_text(c) for c in row["cells"]] for row in table["rows"]]
    if fmt == "csv":
        return _csv_text([header] + body)
    lines = [f"### {table['id']}: {table['title']}", ""]
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "|".join("---" for _ in header) + "|")
    for row in body:
        lines.append("| " + " | ".join(row) + " |")
    if not table["match"]:
        lines.append("")
        lines.append("Cells shown as computed!=printed disagree with the published table.")
    return "\n".join(lines) + "\n"


def render_cost(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(payload)
    rows: list[list[str]] = []
    if payload["mode"] == "paper":
        rows = [[c["label"], str(c["transistors"])] for c in payload["components"]]
    else:
        rows = [[f"{b['block']} x{b['count']}", str(b["transistors"])]
                for b in payload["by_block"]]
    rows.append(["total", str(payload["total"])])
    if fmt == "csv":
        head = [["component", "transistors"]]
        out = _csv_text(head + rows)
        if payload.get("discrepancy"):
            out += _csv_text([["note", payload["discrepancy"]]])
        return out
    lines = [f"### {payload['design']} ({payload['kind']}"
             + (f", {payload['digits']} digits" if payload["digits"] > 1 else "")
             + f") - {payload['mode']} count", ""]
    width = max(len(r[0]) for r in rows)
    for label, value in rows:
        lines.append(f"{label.ljust(width)}  {value:>5} T")
    if payload.get("discrepancy"):
        lines.append("")
        lines.append(f"note: {payload['discrepancy']}")
    return "\n".join(lines) + "\n"


def render_errata(entries: list[dict], fmt: str) -> str:
    if fmt == "json":
        return render_json(entries)
    if fmt == "csv":
        rows = [["id", "location", "printed", "computed", "method", "verified", "detail"]]
        for e in entries:
            rows.append([e["id"], e["location"], e["printed"], e["computed"],
                         e["method"], "yes" if e["verified"] else "no", e["detail"]])
        return _csv_text(rows)
    lines = []
    for e in entries:
        status = "verified" if e["verified"] else "NOT VERIFIED"
        lines.append(f"### {e['id']} ({status})")
        lines.append("")
        lines.append(f"- where: {e['location']}")
        lines.append(f"- printed: {e['printed']}")
        lines.append(f"- computed: {e['computed']}")
        lines.append(f"- method: {e['method']}")
        lines.append(f"- note: {e['detail']}")
        lines.append("")
    return "\n".join(lines)


def render_verify(payload: dict, limit: int = 10) -> str:
    lines = []
    if payload["ok"]:
        lines.append(f"{payload['netlist']}: pass {payload['passed']}/{payload['total']}")
    else:
        lines.append(f"{payload['netlist']}: FAIL {payload['passed']}/{payload['total']}")
        for m in payload["mismatches"][:limit]:
            ins = " ".join(f"{k}={v}" for k, v in m["inputs"].items())
            exp = " ".join(f"{k}={v}" for k, v in m["expected"].items())
            act = " ".join(f"{k}={v}" for k, v in m["actual"].items())
            lines.append(f"  {ins} -> {act} (expected {exp})")
        more = len(payload["mismatches"]) - limit
        if more > 0:
            lines.append(f"  ... and {more} more counterexamples")
    return "\n".join(lines) + "\n"


def render_outputs(outputs: dict[str, int]) -> str:
    return " ".join(f"{name}={value}" for name, value in outputs.items()) + "\n"
