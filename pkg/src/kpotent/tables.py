"""Golden files of reference counting tables, and diffs against the formulas.

Each file under ``tables/`` has a ``kind:`` line (star_P, rhombus or y), an
``s:`` line, one ``key=value ...: polynomial`` line per row, and optional
``@erratum`` lines recording a known wrong coefficient::

    @erratum m=7 q^17 printed=340 computed=336

An erratum is accepted only if the structured count (an enumeration of all
diagonal patterns, see :func:`kpotent.potent.free_slot_polynomial`) agrees
with the computed coefficient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from . import counting
from .poset import poset_chain, poset_rhombus, poset_y
from .potent import free_slot_polynomial
from .qpoly import QPolynomial

TABLE_IDS = (4, 5, 6, 7, 9, 10, 11, 12)


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class Erratum:
    row: tuple[tuple[str, int], ...]
    degree: int
    printed: int
    computed: int


@dataclass(frozen=True)
class TermDiff:
    row: tuple[tuple[str, int], ...]
    degree: int
    printed: int
    computed: int

    def __str__(self) -> str:
        key = " ".join(f"{k}={v}" for k, v in self.row)
        return f"{key} q^{self.degree}: printed {self.printed}, computed {self.computed}"


@dataclass
class Table:
    id: int
    kind: str
    s: int
    rows: list[tuple[tuple[tuple[str, int], ...], QPolynomial]] = field(default_factory=list)
    errata: list[Erratum] = field(default_factory=list)


def _parse_key(text: str) -> tuple[tuple[str, int], ...]:
    out = []
    for tok in text.split():
        m = re.fullmatch(r"([a-z]+)=(\d+)", tok)
        if not m:
            raise TableError(f"bad row key {tok!r}")
        out.append((m.group(1), int(m.group(2))))
    return tuple(out)


def parse_table(text: str, table_id: int = 0) -> Table:
    kind = s = None
    rows, errata = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("kind:"):
            kind = line[5:].strip()
        elif line.startswith("s:"):
            s = int(line[2:])
        elif line.startswith("@erratum"):
            m = re.fullmatch(r"@erratum\s+(.*?)\s+q\^(\d+)\s+printed=(\d+)\s+computed=(\d+)", line)
            if not m:
                raise TableError(f"bad erratum line {line!r}")
            errata.append(Erratum(_parse_key(m.group(1)), int(m.group(2)),
                                  int(m.group(3)), int(m.group(4))))
        else:
            key, _, poly = line.partition(":")
            rows.append((_parse_key(key), QPolynomial.parse(poly)))
    if kind not in ("star_P", "rhombus", "y") or s is None:
        raise TableError("table needs 'kind:' and 's:' lines")
    return Table(table_id, kind, s, rows, errata)


def load_table(table_id: int) -> Table:
    if table_id not in TABLE_IDS:
        raise TableError(f"no table {table_id}; available: {', '.join(map(str, TABLE_IDS))}")
    text = resources.files("kpotent").joinpath("tables", f"table{table_id}.txt").read_text("utf-8")
    return parse_table(text, table_id)


def compute_row(kind: str, s: int, row) -> QPolynomial:
    p = dict(row)
    if kind == "star_P":
        return counting.star_P(p["m"], s)
    if kind == "rhombus":
        return counting.rhombus_count(p["n"], p["m"], s)
    if kind == "y":
        return counting.y_count(p["n"], p["m"], p["l"], s)
    raise TableError(f"unknown kind {kind!r}")


def structured_row(kind: str, s: int, row) -> QPolynomial:
    """The same row by enumerating diagonal patterns on the poset itself."""
    p = dict(row)
    if kind == "star_P":
        # arm of length m above a hub pinned to the first symbol
        return free_slot_polynomial(poset_chain(p["m"] + 1), s, fixed={0: 0})
    if kind == "rhombus":
        return free_slot_polynomial(poset_rhombus(p["n"], p["m"]), s)
    if kind == "y":
        return free_slot_polynomial(poset_y(p["n"], p["m"], p["l"]), s)
    raise TableError(f"unknown kind {kind!r}")


def term_diffs(printed: QPolynomial, computed: QPolynomial, row=()) -> list[TermDiff]:
    a, b = printed.terms, computed.terms
    return [TermDiff(row, d, a.get(d, 0), b.get(d, 0))
            for d in sorted(set(a) | set(b), reverse=True) if a.get(d, 0) != b.get(d, 0)]


@dataclass
class TableReport:
    table: Table
    computed: list[QPolynomial]
    diffs: list[TermDiff]
    unexplained: list[TermDiff]
    stale_errata: list[Erratum]
    unconfirmed_errata: list[Erratum]

    @property
    def ok(self) -> bool:
        return not (self.unexplained or self.stale_errata or self.unconfirmed_errata)


def check_table(table: Table, adjudicate: bool = True) -> TableReport:
    """Diff every row; match diffs against the recorded errata.

    With ``adjudicate``, each erratum row is recomputed by the structured
    count and the erratum stands only if that count agrees with the formula.
    """
    computed, diffs = [], []
    for row, printed in table.rows:
        poly = compute_row(table.kind, table.s, row)
        computed.append(poly)
        diffs.extend(term_diffs(printed, poly, row))
    known = {(e.row, e.degree): e for e in table.errata}
    unexplained = []
    matched = set()
    for d in diffs:
        e = known.get((d.row, d.degree))
        if e and e.printed == d.printed and e.computed == d.computed:
            matched.add((d.row, d.degree))
        else:
            unexplained.append(d)
    stale = [e for key, e in known.items() if key not in matched]
    unconfirmed = []
    if adjudicate:
        cache: dict = {}
        for e in table.errata:
            if e.row not in cache:
                cache[e.row] = structured_row(table.kind, table.s, e.row)
            if cache[e.row].coeff(e.degree) != e.computed:
                unconfirmed.append(e)
    return TableReport(table, computed, diffs, unexplained, stale, unconfirmed)


def render_table(report: TableReport) -> str:
    t = report.table
    lines = [f"Table {t.id} ({t.kind}, s={t.s})"]
    for (row, _), poly in zip(t.rows, report.computed):
        key = " ".join(f"{k}={v}" for k, v in row)
        lines.append(f"{key}: {poly}")
    for d in report.diffs:
        tag = "UNEXPLAINED" if d in report.unexplained else "erratum"
        lines.append(f"  diff [{tag}] {d}")
    for e in report.stale_errata:
        lines.append(f"  stale erratum: {e}")
    for e in report.unconfirmed_errata:
        lines.append(f"  erratum not confirmed by structured count: {e}")
    lines.append(f"Table {t.id}: {'PASS' if report.ok else 'FAIL'}")
    return "\n".join(lines)
