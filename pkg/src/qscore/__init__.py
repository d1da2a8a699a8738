"""Outcome-based quality scores for higher-education cohorts.

Students are scored from what they did after the course (further study,
a job, or nothing recorded), scores are grouped into bands per cohort
year, and the results are rendered as pie and trend charts.
"""

from .analytics import (
    BandConfig,
    CategoryStats,
    CohortSummary,
    QsCategory,
    TrendSeries,
    qs_category,
    summarize_cohort,
    trend,
)
from .context import ScoringConfig, build_context, select_cohort
from .errors import (
    CorruptStoreError,
    DegenerateRankingError,
    DegenerateScaleError,
    Diagnostic,
    DuplicateYearError,
    EmptyCohortError,
    MissingYearError,
    NoRankingDataError,
    OutOfRangeError,
    QScoreError,
    ScoringError,
    ValidationError,
)
from .loaders import (
    load_company_ranks,
    load_students,
    load_university_ranks,
    parse_company_ranks,
    parse_students,
    parse_university_ranks,
)
from .records import (
    CompanyRankEntry,
    StudentRecord,
    UniversityRankEntry,
    normalize_name,
)
from .report import ChartSpec, render_line, render_pie, write_report
from .scaling import ScaleSpec, linear_scale
from .scoring import (
    AcademicCategory,
    QualityScore,
    RankingContext,
    academic_category,
    score_ir,
    score_po,
    score_sofj,
    score_sphe,
    score_student,
)
from .store import available_years, load_scores, save_scores
from .datasets import sample_paths

__version__ = "0.1.0"
