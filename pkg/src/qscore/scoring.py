"""Per-student quality scores from post-course transitions.

A student either went on to higher education (SPHE), took a job (SOFJ) or
left no trace in the year after the course (SWNDA). SPHE students are scored
on a 1-10 scale from the rank of the university they joined. SOFJ students
get two 0-5 components, one from the rank of the employer and one from the
package relative to the rest of the cohort. Anyone unranked, or without data,
contributes zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Optional

from .errors import DegenerateRankingError, OutOfRangeError, ScoringError
from .records import StudentRecord, normalize_name
from .scaling import ScaleSpec, linear_scale

__all__ = [
    "AcademicCategory",
    "RankingContext",
    "QualityScore",
    "academic_category",
    "score_sphe",
    "score_ir",
    "score_po",
    "score_sofj",
    "score_student",
    "UNIV_SCOPES",
]

SPHE_SCALE = (1.0, 10.0)
IR_SCALE = (1.0, 5.0)
PO_SCALE = (0.0, 5.0)
PO_TIED = 2.5

# how a university name is looked up: country table then world table, or one only
UNIV_SCOPES = ("both", "country", "world")


class AcademicCategory(str, enum.Enum):
    SPHE = "SPHE"
    SOFJ = "SOFJ"
    SWNDA = "SWNDA"


def _max_rank(ranks: Mapping[str, int]) -> Optional[int]:
    return max(ranks.values()) if ranks else None


@dataclass(frozen=True)
class RankingContext:
    """Everything needed to score one cohort year.

    Maps are keyed by :func:`~qscore.records.normalize_name` output. Use
    :meth:`from_maps` to have the rank maxima derived from the maps.
    """

    university_ranks_country: Mapping[str, int]
    university_ranks_world: Mapping[str, int]
    company_ranks: Mapping[str, int]
    rank_max_univ_country: Optional[int]
    rank_max_univ_world: Optional[int]
    industry_rank_max: Optional[int]
    package_min: Optional[float]
    package_max: Optional[float]
    year: int
    univ_scope: str = "both"

    def __post_init__(self):
        for name, label, rmax in (
            ("university_ranks_country", "country university", self.rank_max_univ_country),
            ("university_ranks_world", "world university", self.rank_max_univ_world),
            ("company_ranks", "company", self.industry_rank_max),
        ):
            ranks = MappingProxyType(dict(getattr(self, name)))
            object.__setattr__(self, name, ranks)
            if any(r < 1 for r in ranks.values()):
                raise ValueError(f"{label} ranks must be >= 1")
            if rmax != _max_rank(ranks):
                raise ValueError(
                    f"{label} rank_max {rmax!r} does not match the table maximum "
                    f"{_max_rank(ranks)!r}"
                )
        if (self.package_min is None) != (self.package_max is None):
            raise ValueError("package_min and package_max must be given together")
        if self.package_min is not None and self.package_min > self.package_max:
            raise ValueError(
                f"package_min {self.package_min!r} exceeds package_max {self.package_max!r}"
            )
        if self.univ_scope not in UNIV_SCOPES:
            raise ValueError(f"univ_scope must be one of {UNIV_SCOPES}, got {self.univ_scope!r}")

    @classmethod
    def from_maps(
        cls,
        year: int,
        university_ranks_country: Optional[Mapping[str, int]] = None,
        university_ranks_world: Optional[Mapping[str, int]] = None,
        company_ranks: Optional[Mapping[str, int]] = None,
        package_min: Optional[float] = None,
        package_max: Optional[float] = None,
        univ_scope: str = "both",
    ) -> "RankingContext":
        country = {normalize_name(k): v for k, v in (university_ranks_country or {}).items()}
        world = {normalize_name(k): v for k, v in (university_ranks_world or {}).items()}
        comps = {normalize_name(k): v for k, v in (company_ranks or {}).items()}
        return cls(
            university_ranks_country=country,
            university_ranks_world=world,
            company_ranks=comps,
            rank_max_univ_country=_max_rank(country),
            rank_max_univ_world=_max_rank(world),
            industry_rank_max=_max_rank(comps),
            package_min=package_min,
            package_max=package_max,
            year=year,
            univ_scope=univ_scope,
        )

    def resolve_university(self, name: str) -> tuple[Optional[int], Optional[int]]:
        """Return ``(rank, rank_max)`` for ``name``, or ``(None, None)`` if unranked."""
        key = normalize_name(name)
        tables = {
            "both": ("country", "world"),
            "country": ("country",),
            "world": ("world",),
        }[self.univ_scope]
        for scope in tables:
            if scope == "country":
                ranks, rmax = self.university_ranks_country, self.rank_max_univ_country
            else:
                ranks, rmax = self.university_ranks_world, self.rank_max_univ_world
            if key in ranks:
                return ranks[key], rmax
        return None, None

    def resolve_company(self, name: str) -> Optional[int]:
        return self.company_ranks.get(normalize_name(name))


@dataclass(frozen=True)
class QualityScore:
    """Score of one student for one cohort year.

    ``qs_ir`` and ``qs_po`` are only set for SOFJ students, whose total is
    their sum.
    """

    student_id: int
    cohort_year: int
    category: AcademicCategory
    qs_total: float
    qs_ir: Optional[float] = None
    qs_po: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "category", AcademicCategory(self.category))
        cat = self.category
        if cat is AcademicCategory.SOFJ:
            if self.qs_ir is None or self.qs_po is None:
                raise ValueError("SOFJ scores need both qs_ir and qs_po")
            if self.qs_total != self.qs_ir + self.qs_po:
                raise ValueError("SOFJ qs_total must equal qs_ir + qs_po")
            if not (self.qs_ir == 0 or 1.0 <= self.qs_ir <= 5.0):
                raise ValueError(f"qs_ir {self.qs_ir!r} outside {{0}} U [1, 5]")
            if not 0.0 <= self.qs_po <= 5.0:
                raise ValueError(f"qs_po {self.qs_po!r} outside [0, 5]")
        elif self.qs_ir is not None or self.qs_po is not None:
            raise ValueError(f"{cat.value} scores carry no qs_ir/qs_po components")
        if cat is AcademicCategory.SWNDA and self.qs_total != 0:
            raise ValueError("SWNDA scores are always 0")
        if cat is AcademicCategory.SPHE and 0 < self.qs_total < 1:
            raise ValueError(f"ranked SPHE scores start at 1, got {self.qs_total!r}")
        if not 0.0 <= self.qs_total <= 10.0:
            raise ValueError(f"qs_total {self.qs_total!r} outside [0, 10]")

    def to_dict(self) -> dict:
        return {
            "student_id": self.student_id,
            "cohort_year": self.cohort_year,
            "category": self.category.value,
            "qs_ir": self.qs_ir,
            "qs_po": self.qs_po,
            "qs_total": self.qs_total,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "QualityScore":
        def real(name, optional=False):
            v = d.get(name) if optional else d[name]
            if v is None and optional:
                return None
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise TypeError(f"{name} must be a number, got {v!r}")
            return float(v)

        for name in ("student_id", "cohort_year"):
            if isinstance(d[name], bool) or not isinstance(d[name], int):
                raise TypeError(f"{name} must be an integer, got {d[name]!r}")
        return cls(
            student_id=d["student_id"],
            cohort_year=d["cohort_year"],
            category=AcademicCategory(d["category"]),
            qs_total=real("qs_total"),
            qs_ir=real("qs_ir", optional=True),
            qs_po=real("qs_po", optional=True),
        )


def academic_category(record: StudentRecord) -> AcademicCategory:
    """Classify a validated record by its transition flags."""
    if record.univ_f == "Y":
        return AcademicCategory.SPHE
    if record.comp_f == "Y":
        return AcademicCategory.SOFJ
    return AcademicCategory.SWNDA


def _rank_score(rank: Optional[int], rank_max: Optional[int], scale, what: str) -> float:
    if rank is None:
        return 0.0
    if rank < 1 or rank_max is None or rank > rank_max:
        raise OutOfRangeError(f"{what} rank {rank} outside [1, {rank_max}]")
    if rank_max == 1:
        raise DegenerateRankingError(
            f"{what} ranking has a single rank; cannot scale rank {rank}"
        )
    lo, hi = scale
    return linear_scale(rank, ScaleSpec(rank_max, 1, lo, hi))


def score_sphe(university_rank: Optional[int], rank_max: Optional[int]) -> float:
    """Score on [1, 10] from a university rank; 0 for an unranked university.

    >>> score_sphe(1, 200), score_sphe(200, 200), score_sphe(None, 200)
    (10.0, 1.0, 0.0)
    """
    return _rank_score(university_rank, rank_max, SPHE_SCALE, "university")


def score_ir(company_rank: Optional[int], industry_rank_max: Optional[int]) -> float:
    """Industry-rank component on [1, 5]; 0 for an unranked company."""
    return _rank_score(company_rank, industry_rank_max, IR_SCALE, "company")


def score_po(package: float, package_min: float, package_max: float) -> float:
    """Package component on [0, 5], relative to the cohort's package range.

    A cohort whose packages are all equal gets the scale midpoint, 2.5.
    """
    if not package_min <= package <= package_max:
        raise OutOfRangeError(
            f"package {package!r} outside cohort range [{package_min!r}, {package_max!r}]"
        )
    if package_min == package_max:
        return PO_TIED
    lo, hi = PO_SCALE
    return linear_scale(package, ScaleSpec(package_min, package_max, lo, hi))


def score_sofj(qs_ir: float, qs_po: float) -> float:
    return qs_ir + qs_po


def score_student(record: StudentRecord, ctx: RankingContext) -> QualityScore:
    """Score one validated student against the ranking context of its cohort."""
    category = academic_category(record)
    base = dict(student_id=record.id, cohort_year=record.eyear, category=category)
    try:
        if category is AcademicCategory.SPHE:
            rank, rank_max = ctx.resolve_university(record.univ)
            return QualityScore(qs_total=score_sphe(rank, rank_max), **base)
        if category is AcademicCategory.SOFJ:
            if ctx.package_min is None:
                raise OutOfRangeError("no package bounds in context for an SOFJ student")
            qs_ir = score_ir(ctx.resolve_company(record.comp), ctx.industry_rank_max)
            qs_po = score_po(record.package, ctx.package_min, ctx.package_max)
            return QualityScore(
                qs_total=score_sofj(qs_ir, qs_po), qs_ir=qs_ir, qs_po=qs_po, **base
            )
        return QualityScore(qs_total=0.0, **base)
    except ScoringError as exc:
        if exc.student_id is not None:
            raise
        raise type(exc)(exc.reason, student_id=record.id) from exc
