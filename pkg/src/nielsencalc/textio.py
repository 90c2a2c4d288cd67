"""Matrix text format and the JSON encoding of reports.

Matrix rows are separated by ``;`` (or newlines), entries by whitespace.
Integers are written as decimal strings in JSON, infinity as ``"inf"``.
"""

from __future__ import annotations

import re

from .invariants import Bounded, InvariantReport, Known, Unknown
from .lattice import IntMatrix
from .quotients import INF, ExtendedNat, Finite
from .validation import ValidationResult

_INT = re.compile(r"-?\d+\Z")


class MatrixParseError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_matrix(text: str) -> IntMatrix:
    rows = []
    width = None
    line, col = 1, 1
    token, tok_line, tok_col = "", 1, 1
    current = []
    row_start = (1, 1)

    def flush_token():
        nonlocal token
        if token:
            if not _INT.match(token):
                raise MatrixParseError(f"not an integer: {token!r}", tok_line, tok_col)
            current.append(int(token))
            token = ""

    def flush_row():
        nonlocal current, width
        if not current:
            raise MatrixParseError("empty row", *row_start)
        if width is None:
            width = len(current)
        elif len(current) != width:
            raise MatrixParseError(
                f"ragged row: {len(current)} entries, expected {width}", *row_start
            )
        rows.append(current)
        current = []

    body = text.rstrip()
    if not body.strip():
        raise MatrixParseError("empty input", 1, 1)
    for ch in body:
        if ch == ";" or (ch == "\n" and (current or token)):
            flush_token()
            flush_row()
        elif ch.isspace():
            flush_token()
        else:
            if not token:
                tok_line, tok_col = line, col
            token += ch
        if ch == "\n":
            line, col = line + 1, 1
        else:
            col += 1
        if ch in ";\n":
            row_start = (line, col)
    flush_token()
    flush_row()
    return IntMatrix.from_rows(rows, width)


def serialize_matrix(a: IntMatrix) -> str:
    return str(a)


def encode_ext(x: ExtendedNat) -> str:
    return str(x)


def decode_ext(s: str) -> ExtendedNat:
    return INF if s == "inf" else Finite(int(s))


def encode_value(v) -> dict:
    if isinstance(v, Known):
        return {"status": "known", "value": encode_ext(v.value)}
    if isinstance(v, Bounded):
        return {"status": "bounded", "lo": encode_ext(v.lo), "hi": encode_ext(v.hi), "reason": v.reason}
    return {"status": "unknown", "reason": v.reason}


def decode_value(d: dict):
    status = d["status"]
    if status == "known":
        return Known(decode_ext(d["value"]))
    if status == "bounded":
        return Bounded(decode_ext(d["lo"]), decode_ext(d["hi"]), d.get("reason", ""))
    if status == "unknown":
        return Unknown(d.get("reason", ""))
    raise ValueError(f"unknown status tag {status!r}")


_FIELDS = (("N", "n_num"), ("Nsharp", "n_sharp"), ("MCC", "mcc"), ("MC", "mc"))


def report_to_dict(report: InvariantReport, validation: ValidationResult | None = None) -> dict:
    out = {
        "invariants": {key: encode_value(getattr(report, attr)) for key, attr in _FIELDS},
        "reidemeister": encode_value(
            report.reidemeister if isinstance(report.reidemeister, Unknown) else Known(report.reidemeister)
        ),
        "notes": list(report.notes),
    }
    if validation is not None:
        out["validation"] = {
            "ok": validation.ok,
            "violations": [{"rule": r, "message": m} for r, m in validation.violations],
        }
    return out


def report_from_dict(d: dict) -> InvariantReport:
    inv = d["invariants"]
    reid = decode_value(d["reidemeister"])
    return InvariantReport(
        *(decode_value(inv[key]) for key, _ in _FIELDS),
        reidemeister=reid.value if isinstance(reid, Known) else reid,
        notes=tuple(d.get("notes", ())),
    )
