"""
Analysis reports and comparison tables (text, json, csv).

Exact quantities stay exact in json: ACNV and SAC are written as fraction
strings (``"229/2"``) and fitness values as decimal strings, so a report
re-parses to identical values.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .fitness import FitnessConfig, evaluate
from .sbox import SBox
from .spectral import coordinate_nonlinearities, sac, sbox_nonlinearity


def format_decimal(value: Fraction, places: int | None = None) -> str:
    """Decimal rendering of a fraction.

    With ``places=None`` the shortest exact form with at least one decimal
    is used when the expansion terminates (``114.5``, ``105.25``);
    otherwise four rounded places.
    """
    value = Fraction(value)
    if places is None:
        den = value.denominator
        for p in range(1, 18):
            if (10 ** p) % den == 0:
                places = p
                break
        else:
            places = 4
    scaled = value * 10 ** places
    q = scaled.numerator // scaled.denominator
    r = scaled - q
    if r > Fraction(1, 2) or (r == Fraction(1, 2) and q % 2):
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    if places == 0:
        return f"{sign}{q}"
    digits = str(q).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


@dataclass(frozen=True)
class AnalysisReport:
    source: str
    n: int
    coordinate_nls: tuple[int, ...]
    acnv: Fraction
    nl: int
    sac_average: Fraction
    sac_matrix: tuple[tuple[Fraction, ...], ...] | None = None
    magnitude: int | None = None
    fitness: int | None = None

    @property
    def min_nl(self) -> int:
        return min(self.coordinate_nls)

    @property
    def max_nl(self) -> int:
        return max(self.coordinate_nls)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "n": self.n,
            "coordinate_nls": list(self.coordinate_nls),
            "min_nl": self.min_nl,
            "max_nl": self.max_nl,
            "acnv": str(self.acnv),
            "nl": self.nl,
            "sac_average": str(self.sac_average),
            "sac_matrix": None if self.sac_matrix is None
            else [[str(v) for v in row] for row in self.sac_matrix],
            "magnitude": self.magnitude,
            "fitness": None if self.fitness is None else str(self.fitness),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        matrix = d.get("sac_matrix")
        return cls(
            source=d["source"],
            n=d["n"],
            coordinate_nls=tuple(d["coordinate_nls"]),
            acnv=Fraction(d["acnv"]),
            nl=d["nl"],
            sac_average=Fraction(d["sac_average"]),
            sac_matrix=None if matrix is None
            else tuple(tuple(Fraction(v) for v in row) for row in matrix),
            magnitude=d.get("magnitude"),
            fitness=None if d.get("fitness") is None else int(d["fitness"]),
        )


def analyze(s: SBox, source: str = "", magnitude: int | None = None,
            with_sac_matrix: bool = False) -> AnalysisReport:
    nls = coordinate_nonlinearities(s)
    matrix, average = sac(s)
    return AnalysisReport(
        source=source,
        n=s.n,
        coordinate_nls=tuple(nls),
        acnv=Fraction(sum(nls), len(nls)),
        nl=sbox_nonlinearity(s),
        sac_average=average,
        sac_matrix=tuple(tuple(r) for r in matrix) if with_sac_matrix else None,
        magnitude=magnitude,
        fitness=None if magnitude is None else evaluate(s, FitnessConfig(magnitude)),
    )


def render_report(report: AnalysisReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        d = report.to_dict()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["source", "n", "coordinate_nls", "min_nl", "max_nl", "acnv", "nl",
                "sac_average", "magnitude", "fitness"]
        w.writerow(cols)
        w.writerow([
            d["source"], d["n"], " ".join(map(str, d["coordinate_nls"])), d["min_nl"],
            d["max_nl"], format_decimal(report.acnv, 2), d["nl"],
            format_decimal(report.sac_average, 7),
            "" if d["magnitude"] is None else d["magnitude"],
            "" if d["fitness"] is None else d["fitness"],
        ])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"source         {report.source}",
        f"n              {report.n}",
        "coordinate NL  " + " ".join(map(str, report.coordinate_nls)),
        f"min / max      {report.min_nl} / {report.max_nl}",
        f"ACNV           {format_decimal(report.acnv, 2)}",
        f"NL             {report.nl}",
        f"SAC            {format_decimal(report.sac_average, 7)}",
    ]
    if report.fitness is not None:
        lines.append(f"E (M={report.magnitude})       {report.fitness}")
    if report.sac_matrix is not None:
        lines.append("SAC matrix")
        for row in report.sac_matrix:
            lines.append("  " + " ".join(format_decimal(v, 4) for v in row))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    min_nl: int
    max_nl: int
    acnv: Fraction


@dataclass
class ComparisonTable:
    rows: list[ComparisonRow] = field(default_factory=list)

    @classmethod
    def from_sboxes(cls, labelled: Iterable[tuple[str, SBox]]) -> "ComparisonTable":
        rows = []
        for label, s in labelled:
            nls = coordinate_nonlinearities(s)
            rows.append(ComparisonRow(label, min(nls), max(nls), Fraction(sum(nls), len(nls))))
        rows.sort(key=lambda r: (r.acnv, r.label))
        return cls(rows)

    def render(self, fmt: str = "text") -> str:
        if fmt == "json":
            return json.dumps([{"label": r.label, "min_nl": r.min_nl, "max_nl": r.max_nl,
                                "acnv": str(r.acnv)} for r in self.rows], indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["label", "min_nl", "max_nl", "acnv"])
            for r in self.rows:
                w.writerow([r.label, r.min_nl, r.max_nl, format_decimal(r.acnv)])
            return buf.getvalue()
        if fmt != "text":
            raise ValueError(f"unknown format {fmt!r}")
        width = max([len("Method")] + [len(r.label) for r in self.rows])
        out = [f"{'Method':<{width}}  Min NL  Max NL  ACNV"]
        for r in self.rows:
            out.append(f"{r.label:<{width}}  {r.min_nl:>6}  {r.max_nl:>6}  {format_decimal(r.acnv)}")
        return "\n".join(out) + "\n"
