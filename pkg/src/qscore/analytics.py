"""QS bands, per-year cohort summaries and multi-year trends."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import DuplicateYearError, EmptyCohortError
from .scoring import QualityScore

__all__ = [
    "QsCategory",
    "BandConfig",
    "CategoryStats",
    "CohortSummary",
    "TrendSeries",
    "qs_category",
    "summarize_cohort",
    "trend",
]


class QsCategory(enum.IntEnum):
    """QS band. Integer values give the ordering Below < Average < Above."""

    BelowAverage = 0
    Average = 1
    AboveAverage = 2

    @property
    def label(self) -> str:
        return {0: "Below Average", 1: "Average", 2: "Above Average"}[self.value]


# display/serialization order
CATEGORY_ORDER = (QsCategory.AboveAverage, QsCategory.Average, QsCategory.BelowAverage)


@dataclass(frozen=True)
class BandConfig:
    """Absolute QS cut-offs. Scores in ``[lower, upper]`` are Average."""

    lower_threshold: float = 4.0
    upper_threshold: float = 7.0

    def __post_init__(self):
        if not 0 <= self.lower_threshold < self.upper_threshold <= 10:
            raise ValueError(
                "bands need 0 <= lower < upper <= 10, got "
                f"{self.lower_threshold!r}, {self.upper_threshold!r}"
            )


def qs_category(qs: float, bands: BandConfig = BandConfig()) -> QsCategory:
    if qs < bands.lower_threshold:
        return QsCategory.BelowAverage
    if qs > bands.upper_threshold:
        return QsCategory.AboveAverage
    return QsCategory.Average


@dataclass(frozen=True)
class CategoryStats:
    count: int
    share: float
    mean_qs: Optional[float]


@dataclass(frozen=True)
class CohortSummary:
    cohort_year: int
    categories: Dict[QsCategory, CategoryStats]
    overall_mean_qs: float
    total_students: int

    def __getitem__(self, cat: QsCategory) -> CategoryStats:
        return self.categories[cat]

    def to_dict(self) -> dict:
        return {
            "cohort_year": self.cohort_year,
            "total_students": self.total_students,
            "overall_mean_qs": self.overall_mean_qs,
            "categories": {
                cat.name: {
                    "count": self.categories[cat].count,
                    "share": self.categories[cat].share,
                    "mean_qs": self.categories[cat].mean_qs,
                }
                for cat in CATEGORY_ORDER
            },
        }


def summarize_cohort(
    scores: Sequence[QualityScore], bands: BandConfig = BandConfig()
) -> CohortSummary:
    """Counts, shares and mean QS per band for a single cohort year."""
    if not scores:
        raise EmptyCohortError("cannot summarize an empty cohort")
    years = {s.cohort_year for s in scores}
    if len(years) != 1:
        raise ValueError(f"scores span several cohort years: {sorted(years)}")

    buckets: Dict[QsCategory, List[float]] = {cat: [] for cat in QsCategory}
    for s in scores:
        buckets[qs_category(s.qs_total, bands)].append(s.qs_total)

    n = len(scores)
    # sort before summing so the result does not depend on input order
    categories = {
        cat: CategoryStats(
            count=len(vals),
            share=len(vals) / n,
            mean_qs=math.fsum(sorted(vals)) / len(vals) if vals else None,
        )
        for cat, vals in buckets.items()
    }
    overall = math.fsum(sorted(s.qs_total for s in scores)) / n
    return CohortSummary(
        cohort_year=years.pop(),
        categories=categories,
        overall_mean_qs=overall,
        total_students=n,
    )


@dataclass(frozen=True)
class TrendSeries:
    """Cohort summaries in ascending year order."""

    summaries: Tuple[CohortSummary, ...]

    def __post_init__(self):
        years = self.years
        if any(b <= a for a, b in zip(years, years[1:])):
            raise DuplicateYearError(f"years must be strictly increasing: {years}")

    def __len__(self) -> int:
        return len(self.summaries)

    @property
    def years(self) -> List[int]:
        return [s.cohort_year for s in self.summaries]

    def mean_series(self, category: QsCategory) -> List[Optional[float]]:
        """Per-year band means; ``None`` marks a year where the band is empty."""
        return [s.categories[category].mean_qs for s in self.summaries]

    def overall_series(self) -> List[float]:
        return [s.overall_mean_qs for s in self.summaries]


def trend(summaries: Iterable[CohortSummary]) -> TrendSeries:
    summaries = list(summaries)
    seen = set()
    for s in summaries:
        if s.cohort_year in seen:
            raise DuplicateYearError(f"duplicate cohort year {s.cohort_year}")
        seen.add(s.cohort_year)
    return TrendSeries(tuple(sorted(summaries, key=lambda s: s.cohort_year)))
