"""System documents (JSON) and bound tables (CSV)."""

from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .asymptotics import BoundReport
from .errors import ParseError
from .geometry import PolygonSpec
from .systems import MarkedSystem

CSV_HEADER = ["family", "d", "d1", "d2", "n", "log_lb", "n_ln_n", "ratio", "target"]
PARAM_NAMES = ("d", "d1", "d2")


@dataclass(frozen=True)
class SystemDocument:
    family: str
    params: tuple  # (d, d1, d2), absent ones None
    n: int
    intervals: tuple[tuple[int, int], ...]
    marks: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        params = tuple(self.params) + (None,) * (3 - len(self.params))
        if self.marks is None:
            ivs = tuple(sorted(tuple(iv) for iv in self.intervals))
            marks = None
        else:
            if len(self.marks) != len(self.intervals):
                raise ValueError("marks and intervals differ in length")
            pairs = sorted((tuple(iv), mk) for iv, mk in zip(self.intervals, self.marks))
            ivs = tuple(iv for iv, _ in pairs)
            marks = tuple(mk for _, mk in pairs)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "intervals", ivs)
        object.__setattr__(self, "marks", marks)

    @classmethod
    def from_marked(cls, spec: PolygonSpec, marked: MarkedSystem) -> "SystemDocument":
        return cls(spec.family, (spec.d, spec.d1, spec.d2), spec.n,
                   marked.intervals, tuple(mk for _, mk in marked.pairs))

    @classmethod
    def from_intervals(cls, spec: PolygonSpec, intervals) -> "SystemDocument":
        return cls(spec.family, (spec.d, spec.d1, spec.d2), spec.n, tuple(intervals))

    def spec(self) -> PolygonSpec:
        d, d1, d2 = self.params
        return PolygonSpec(self.family, d, d1, d2, self.n)

    def marked(self) -> Optional[MarkedSystem]:
        if self.marks is None:
            return None
        return MarkedSystem(tuple(zip(self.intervals, self.marks)))


def serialize_system(doc: SystemDocument) -> str:
    """One-line JSON document; stable key order."""
    obj = {
        "family": doc.family,
        "params": {k: v for k, v in zip(PARAM_NAMES, doc.params) if v is not None},
        "n": doc.n,
        "intervals": [list(iv) for iv in doc.intervals],
    }
    if doc.marks is not None:
        obj["marks"] = list(doc.marks)
    return json.dumps(obj, separators=(", ", ": "))


def _locate(text: str, key: str) -> tuple[int, int]:
    m = re.search(r'"%s"' % re.escape(key), text)
    if m is None:
        return 1, 1
    line = text.count("\n", 0, m.start()) + 1
    col = m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
    return line, col


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def parse_system(text: str) -> SystemDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    for key in ("family", "params", "n", "intervals"):
        if key not in obj:
            raise ParseError(f"missing field {key!r}")
    extra = set(obj) - {"family", "params", "n", "intervals", "marks"}
    if extra:
        raise ParseError(f"unknown field {sorted(extra)[0]!r}", *_locate(text, sorted(extra)[0]))
    params = obj["params"]
    if not isinstance(params, dict) or set(params) - set(PARAM_NAMES) or not all(_is_int(v) for v in params.values()):
        raise ParseError("params must map d/d1/d2 to integers", *_locate(text, "params"))
    if not _is_int(obj["n"]):
        raise ParseError("n must be an integer", *_locate(text, "n"))
    ivs = obj["intervals"]
    if not isinstance(ivs, list) or not all(
        isinstance(iv, list) and len(iv) == 2 and all(_is_int(x) for x in iv) and iv[0] <= iv[1] for iv in ivs
    ):
        raise ParseError("intervals must be [a, b] integer pairs with a <= b", *_locate(text, "intervals"))
    marks = obj.get("marks")
    if marks is not None:
        if not isinstance(marks, list) or len(marks) != len(ivs) or not all(_is_int(x) for x in marks):
            raise ParseError("marks must be one integer per interval", *_locate(text, "marks"))
        if any(not a <= mk <= b for (a, b), mk in zip(ivs, marks)):
            raise ParseError("mark outside its interval", *_locate(text, "marks"))
    doc = SystemDocument(
        obj["family"],
        tuple(params.get(k) for k in PARAM_NAMES),
        obj["n"],
        tuple(tuple(iv) for iv in ivs),
        None if marks is None else tuple(marks),
    )
    try:
        doc.spec()
    except ValueError as exc:
        raise ParseError(str(exc), *_locate(text, "family")) from None
    return doc


def read_documents(stream: TextIO) -> Iterable[SystemDocument]:
    """JSON-lines stream of documents; line numbers refer to the stream."""
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield parse_system(line)
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (line", 1)[0], lineno, exc.column) from None


def _fmt(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "-inf" if x < 0 else "inf"
    return format(x, ".12g")


def bound_rows(report: BoundReport) -> list[list[str]]:
    d, d1, d2 = tuple(report.params) + (None,) * (3 - len(report.params))
    out = []
    for row in report.rows:
        out.append([
            report.family,
            str(d),
            "" if d1 is None else str(d1),
            "" if d2 is None else str(d2),
            str(row.n),
            _fmt(row.log_lb),
            _fmt(row.n_ln_n),
            _fmt(row.ratio),
            str(report.target),
        ])
    return out


def write_csv(reports: Iterable[BoundReport], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for report in reports:
        writer.writerows(bound_rows(report))


def csv_text(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    write_csv(reports, buf)
    return buf.getvalue()


def read_csv(stream: TextIO) -> list[dict]:
    reader = csv.DictReader(stream)
    if reader.fieldnames != CSV_HEADER:
        raise ParseError(f"unexpected CSV header {reader.fieldnames}")
    return list(reader)
