"""Regulatory-coverage index: per-bucket ratio of policy-related articles.

Buckets are days, ISO weeks (Monday start), or calendar months, spanning
the full date range of the input. A bucket with no articles has an
undefined ratio by default; zero- and forward-fill policies are opt-in.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import DataError


class Periodicity(str, Enum):
    DAILY = "daily"
    WEEKLY = "weekly"
    MONTHLY = "monthly"


class FillPolicy(str, Enum):
    MISSING = "missing"
    ZERO = "zero"
    FORWARD = "forward"


@dataclass(frozen=True)
class IndexPoint:
    bucket_start: dt.date
    n_reg: int
    n_all: int
    value: float | None


@dataclass
class IndexSeries:
    periodicity: Periodicity
    points: list[IndexPoint]

    def values(self) -> list[float | None]:
        return [p.value for p in self.points]

    def dates(self) -> list[dt.date]:
        return [p.bucket_start for p in self.points]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["bucket_start", "n_reg", "n_all", "crrix"])
        for p in self.points:
            writer.writerow(
                [
                    p.bucket_start.isoformat(),
                    p.n_reg,
                    p.n_all,
                    "" if p.value is None else repr(p.value),
                ]
            )
        return buf.getvalue()

    def save_csv(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv(), encoding="utf-8", newline="")

    @classmethod
    def from_csv(cls, text: str, periodicity: Periodicity) -> "IndexSeries":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header != ["bucket_start", "n_reg", "n_all", "crrix"]:
            raise DataError(f"unexpected index CSV header: {header}")
        points = []
        for row in reader:
            if not row:
                continue
            points.append(
                IndexPoint(
                    bucket_start=dt.date.fromisoformat(row[0]),
                    n_reg=int(row[1]),
                    n_all=int(row[2]),
                    value=None if row[3] == "" else float(row[3]),
                )
            )
        return cls(periodicity=periodicity, points=points)

    @classmethod
    def load_csv(cls, path: str | Path, periodicity: Periodicity) -> "IndexSeries":
        return cls.from_csv(Path(path).read_text(encoding="utf-8"), periodicity)


def bucket_start(date: dt.date, periodicity: Periodicity) -> dt.date:
    if periodicity is Periodicity.DAILY:
        return date
    if periodicity is Periodicity.WEEKLY:
        return date - dt.timedelta(days=date.weekday())
    return date.replace(day=1)


def _next_bucket(start: dt.date, periodicity: Periodicity) -> dt.date:
    if periodicity is Periodicity.DAILY:
        return start + dt.timedelta(days=1)
    if periodicity is Periodicity.WEEKLY:
        return start + dt.timedelta(days=7)
    if start.month == 12:
        return dt.date(start.year + 1, 1, 1)
    return dt.date(start.year, start.month + 1, 1)


def build_index(
    articles: Sequence[tuple[dt.date, bool]],
    periodicity: Periodicity = Periodicity.WEEKLY,
    fill_policy: FillPolicy = FillPolicy.MISSING,
) -> IndexSeries:
    """Bucket (date, is_regulatory) pairs and form per-bucket coverage ratios."""
    if not articles:
        raise DataError("cannot build an index from zero articles")
    totals: dict[dt.date, int] = {}
    regs: dict[dt.date, int] = {}
    for date, is_reg in articles:
        b = bucket_start(date, periodicity)
        totals[b] = totals.get(b, 0) + 1
        if is_reg:
            regs[b] = regs.get(b, 0) + 1

    first = min(totals)
    last = max(totals)
    points: list[IndexPoint] = []
    cursor = first
    prev_value: float | None = None
    while cursor <= last:
        n_all = totals.get(cursor, 0)
        n_reg = regs.get(cursor, 0)
        if n_all > 0:
            value: float | None = n_reg / n_all
        elif fill_policy is FillPolicy.ZERO:
            value = 0.0
        elif fill_policy is FillPolicy.FORWARD:
            value = prev_value
        else:
            value = None
        points.append(IndexPoint(bucket_start=cursor, n_reg=n_reg, n_all=n_all, value=value))
        if value is not None:
            prev_value = value
        cursor = _next_bucket(cursor, periodicity)
    return IndexSeries(periodicity=periodicity, points=points)


MarketSeries = list[tuple[dt.date, float]]


def load_market_csv(path: str | Path) -> MarketSeries:
    """Dated value series from a ``date,value`` CSV with a header row."""
    text = Path(path).read_text(encoding="utf-8")
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or len(header) < 2:
        raise DataError(f"market CSV needs a date,value header, got {header}")
    out: MarketSeries = []
    for row in reader:
        if not row:
            continue
        try:
            out.append((dt.date.fromisoformat(row[0]), float(row[1])))
        except (ValueError, IndexError) as exc:
            raise DataError(f"malformed market CSV row {row!r}: {exc}") from exc
    if not out:
        raise DataError("market CSV has no data rows")
    return out


@dataclass
class AlignedSeries:
    dates: list[dt.date]
    x: np.ndarray
    y: np.ndarray

    def __len__(self) -> int:
        return len(self.dates)


def _as_dated_values(
    series: IndexSeries | MarketSeries, periodicity: Periodicity | None
) -> dict[dt.date, float]:
    """Collapse a series to bucket-start -> value, dropping missing values.

    Market-style series are resampled by keeping the last observation
    within each bucket.
    """
    if isinstance(series, IndexSeries):
        return {p.bucket_start: p.value for p in series.points if p.value is not None}
    out: dict[dt.date, float] = {}
    for date, value in sorted(series, key=lambda r: r[0]):
        b = bucket_start(date, periodicity) if periodicity else date
        out[b] = value  # later dates overwrite: last observation in bucket
    return out


def align_series(
    a: IndexSeries | MarketSeries, b: IndexSeries | MarketSeries
) -> AlignedSeries:
    """Inner join two dated series on bucket dates.

    When exactly one side is an :class:`IndexSeries`, the other is
    resampled to its periodicity (last observation per bucket). Rows with
    missing values are dropped; an empty intersection is an error.
    """
    period_a = a.periodicity if isinstance(a, IndexSeries) else None
    period_b = b.periodicity if isinstance(b, IndexSeries) else None
    if period_a and period_b and period_a is not period_b:
        raise DataError(
            f"cannot align {period_a.value} and {period_b.value} index series"
        )
    period = period_a or period_b
    map_a = _as_dated_values(a, period)
    map_b = _as_dated_values(b, period)
    common = sorted(set(map_a) & set(map_b))
    if not common:
        raise DataError("series have no overlapping dates after alignment")
    return AlignedSeries(
        dates=common,
        x=np.asarray([map_a[d] for d in common], dtype=np.float64),
        y=np.asarray([map_b[d] for d in common], dtype=np.float64),
    )
