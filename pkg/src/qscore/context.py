"""Assemble the ranking context for one cohort year."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import NoRankingDataError
from .records import (
    CompanyRankEntry,
    StudentRecord,
    UniversityRankEntry,
    normalize_name,
)
from .scoring import UNIV_SCOPES, AcademicCategory, RankingContext, academic_category

__all__ = ["ScoringConfig", "select_cohort", "rank_year", "build_context"]


@dataclass(frozen=True)
class ScoringConfig:
    """Knobs that decide which rows are scored and against which tables.

    ``rank_fallback`` lets a cohort use the most recent earlier ranking year
    when its own year is missing. ``pass_only`` scores only students whose
    ``final_result`` is ``Pass``. ``univ_scope`` is ``"both"`` (country
    table first, then world), ``"country"`` or ``"world"``.
    """

    rank_fallback: bool = True
    pass_only: bool = False
    univ_scope: str = "both"

    def __post_init__(self):
        if self.univ_scope not in UNIV_SCOPES:
            raise ValueError(f"univ_scope must be one of {UNIV_SCOPES}")

    def to_dict(self) -> dict:
        return asdict(self)


def select_cohort(
    students: Iterable[StudentRecord], cohort_year: int, config: ScoringConfig = ScoringConfig()
) -> List[StudentRecord]:
    """Students of ``cohort_year`` that will be scored, in input order."""
    return [
        s for s in students
        if s.eyear == cohort_year and (not config.pass_only or s.final_result == "Pass")
    ]


def rank_year(available: Iterable[int], cohort_year: int, fallback: bool) -> Optional[int]:
    """Ranking year to use for a cohort: exact match, else latest earlier year."""
    years = set(available)
    if cohort_year in years:
        return cohort_year
    if fallback:
        earlier = [y for y in years if y < cohort_year]
        if earlier:
            return max(earlier)
    return None


def _rank_map(entries: Sequence[Tuple[str, int, int]], cohort_year: int, fallback: bool) -> Dict[str, int]:
    year = rank_year((y for _, _, y in entries), cohort_year, fallback)
    return {normalize_name(name): rank for name, rank, y in entries if y == year}


def build_context(
    students: Sequence[StudentRecord],
    univ_ranks: Sequence[UniversityRankEntry],
    comp_ranks: Sequence[CompanyRankEntry],
    cohort_year: int,
    config: ScoringConfig = ScoringConfig(),
) -> RankingContext:
    cohort = select_cohort(students, cohort_year, config)
    if not any(s.eyear == cohort_year for s in students):
        raise ValueError(f"no students with eyear {cohort_year}")

    fb = config.rank_fallback
    country = _rank_map(
        [(u.univ_name, u.univ_rank, u.uryear) for u in univ_ranks if u.scope == "country"],
        cohort_year, fb,
    )
    world = _rank_map(
        [(u.univ_name, u.univ_rank, u.uryear) for u in univ_ranks if u.scope == "world"],
        cohort_year, fb,
    )
    companies = _rank_map([(c.comp_name, c.comp_rank, c.cryear) for c in comp_ranks], cohort_year, fb)

    categories = [academic_category(s) for s in cohort]
    usable_univ = {
        "both": country or world,
        "country": country,
        "world": world,
    }[config.univ_scope]
    if AcademicCategory.SPHE in categories and not usable_univ:
        raise NoRankingDataError(
            f"cohort {cohort_year} has SPHE students but no university ranking "
            f"(scope {config.univ_scope!r}) for that year"
        )
    if AcademicCategory.SOFJ in categories and not companies:
        raise NoRankingDataError(
            f"cohort {cohort_year} has SOFJ students but no company ranking for that year"
        )

    packages = [s.package for s, c in zip(cohort, categories) if c is AcademicCategory.SOFJ]
    return RankingContext.from_maps(
        year=cohort_year,
        university_ranks_country=country,
        university_ranks_world=world,
        company_ranks=companies,
        package_min=min(packages) if packages else None,
        package_max=max(packages) if packages else None,
        univ_scope=config.univ_scope,
    )
