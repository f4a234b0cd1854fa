"""Yearly diversity series over cited/citing arrangements of a corpus.

Four arrangements are supported:

``typeA_cross``
    Each year's cohort against the documents citing it.
``typeA_cumulative``
    Everything published up to each year against the documents citing
    that aggregate. One pass gives both the MOD and the ODR series.
``typeB``
    Consecutive publication cohorts against each other (no citations).
``typeC``
    Consecutive citing cohorts against each other.

Years without documents, or with nobody citing them, still produce a row;
their measures carry an ``undefined_*`` status instead of a number.
"""

from __future__ import annotations

import csv
import enum
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .corpus import Corpus, CitationGraph, citing_set, cohort, cumulative_cohort
from .diversity import (
    MeasureValue,
    mean_overlay_distance,
    overlay_diversity,
    ratio_of,
)
from .errors import InvariantViolation
from .overlay import build_overlay

__all__ = [
    "Mode",
    "SliceSpec",
    "SeriesRow",
    "DiversitySeries",
    "type_a_cross_series",
    "type_a_cumulative_series",
    "type_b_series",
    "type_c_series",
    "compute_series",
]

logger = logging.getLogger(__name__)


class Mode(str, enum.Enum):
    TYPE_A_CROSS = "typeA_cross"
    TYPE_A_CUMULATIVE = "typeA_cumulative"
    TYPE_B = "typeB"
    TYPE_C = "typeC"

    @property
    def consecutive(self) -> bool:
        return self in (Mode.TYPE_B, Mode.TYPE_C)

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        return cls(str(name).replace("-", "_"))


@dataclass(frozen=True)
class SliceSpec:
    """Which arrangement to compute, over which years, with which counting.

    ``exclude_self_citing_overlap`` removes source documents from the
    citing side; it is off by default and meant for sensitivity checks.
    """

    mode: Mode
    year_range: tuple
    counting: str = "fractional"
    exclude_self_citing_overlap: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode.parse(self.mode))
        y0, y1 = (int(y) for y in self.year_range)
        if y0 > y1:
            raise ValueError(f"year range {y0}:{y1} is empty")
        object.__setattr__(self, "year_range", (y0, y1))

    @classmethod
    def for_corpus(cls, mode, store, year_range=None, **kw):
        """Spec whose year range defaults to the corpus' first and last year."""
        years = store.years()
        if year_range is None:
            if not years:
                raise ValueError("corpus is empty; a year range must be given")
            year_range = (years[0], years[-1])
        elif years and (year_range[0] < years[0] or year_range[1] > years[-1]):
            logger.warning(
                "year range %s:%s extends beyond corpus years %s:%s; "
                "rows outside will be undefined",
                year_range[0], year_range[1], years[0], years[-1],
            )
        return cls(mode, tuple(year_range), **kw)

    def row_years(self) -> list:
        y0, y1 = self.year_range
        start = y0 + 1 if self.mode.consecutive else y0
        return list(range(start, y1 + 1))


@dataclass(frozen=True)
class SeriesRow:
    year: int
    n_source_docs: int
    n_target_docs: int
    od_source: MeasureValue
    od_target: MeasureValue
    mod: MeasureValue
    odr: MeasureValue

    @property
    def status(self) -> str:
        """``'ok'`` or the ``;``-joined reasons some measure is undefined."""
        reasons = []
        if not self.od_source.ok:
            reasons.append("empty_source")
        if not self.od_target.ok:
            reasons.append("empty_target")
        if not reasons and not self.odr.ok:
            reasons.append("zero_source_diversity")
        return ";".join(reasons) or "ok"


CSV_HEADER = ("year", "n_source", "n_target", "od_source", "od_target", "mod", "odr", "status")


def _cell(m: MeasureValue) -> str:
    return repr(m.value) if m.ok else ""


@dataclass(frozen=True)
class DiversitySeries:
    spec: SliceSpec
    rows: tuple

    def __len__(self):
        return len(self.rows)

    def column(self, name: str) -> list:
        """Values of one measure by year, ``None`` where undefined."""
        return [getattr(r, name).value for r in self.rows]

    @property
    def years(self) -> list:
        return [r.year for r in self.rows]

    def write_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER)
            for r in self.rows:
                w.writerow(
                    (
                        r.year,
                        r.n_source_docs,
                        r.n_target_docs,
                        _cell(r.od_source),
                        _cell(r.od_target),
                        _cell(r.mod),
                        _cell(r.odr),
                        r.status,
                    )
                )


def compare_sets(store: Corpus, source_ids, target_ids, basemap, counting, year) -> SeriesRow:
    """Profile two doc-id sets and compute every measure between them."""
    src = build_overlay((store[i] for i in sorted(source_ids)), basemap, counting)
    tgt = build_overlay((store[i] for i in sorted(target_ids)), basemap, counting)
    od_s = overlay_diversity(src, basemap)
    od_t = overlay_diversity(tgt, basemap)
    row = SeriesRow(
        year,
        len(source_ids),
        len(target_ids),
        od_s,
        od_t,
        mean_overlay_distance(src, tgt, basemap),
        ratio_of(od_s, od_t),
    )
    if tgt.is_empty and (row.mod.ok or row.od_target.ok):
        raise InvariantViolation(f"year {year}: empty target produced a defined measure")
    return row


def _citers(graph, ids, spec):
    target = citing_set(graph, ids)
    if spec.exclude_self_citing_overlap:
        target -= set(ids)
    return target


def _run(spec, years, row_for, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(row_for, years))
    else:
        rows = [row_for(y) for y in years]
    return DiversitySeries(spec, tuple(rows))


def _check_mode(spec, expected):
    if spec.mode is not expected:
        raise ValueError(f"expected a {expected.value} spec, got {spec.mode.value}")


def type_a_cross_series(store, graph: CitationGraph, b, spec: SliceSpec, workers=None):
    """Per-year cohort (cited side) against the documents citing it."""
    _check_mode(spec, Mode.TYPE_A_CROSS)

    def row_for(year):
        source = cohort(store, year)
        return compare_sets(store, source, _citers(graph, source, spec), b, spec.counting, year)

    return _run(spec, spec.row_years(), row_for, workers)


def type_a_cumulative_series(store, graph: CitationGraph, b, spec: SliceSpec, workers=None):
    """Everything published up to each year against the documents citing it."""
    _check_mode(spec, Mode.TYPE_A_CUMULATIVE)

    def row_for(year):
        source = cumulative_cohort(store, year)
        return compare_sets(store, source, _citers(graph, source, spec), b, spec.counting, year)

    return _run(spec, spec.row_years(), row_for, workers)


def type_b_series(store, b, spec: SliceSpec, workers=None):
    """Cohort of year Y-1 (source) against the cohort of year Y (target)."""
    _check_mode(spec, Mode.TYPE_B)

    def row_for(year):
        return compare_sets(
            store, cohort(store, year - 1), cohort(store, year), b, spec.counting, year
        )

    return _run(spec, spec.row_years(), row_for, workers)


def type_c_series(store, graph: CitationGraph, b, spec: SliceSpec, workers=None):
    """Citers of cohort Y-1 (source) against citers of cohort Y (target)."""
    _check_mode(spec, Mode.TYPE_C)

    def row_for(year):
        prev, cur = cohort(store, year - 1), cohort(store, year)
        return compare_sets(
            store, _citers(graph, prev, spec), _citers(graph, cur, spec), b, spec.counting, year
        )

    return _run(spec, spec.row_years(), row_for, workers)


def compute_series(store, graph: Optional[CitationGraph], b, spec: SliceSpec, workers=None):
    """Dispatch on ``spec.mode``."""
    if spec.mode is Mode.TYPE_B:
        return type_b_series(store, b, spec, workers)
    funcs = {
        Mode.TYPE_A_CROSS: type_a_cross_series,
        Mode.TYPE_A_CUMULATIVE: type_a_cumulative_series,
        Mode.TYPE_C: type_c_series,
    }
    return funcs[spec.mode](store, graph, b, spec, workers)
