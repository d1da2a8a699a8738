"""Row types for the student, university-rank and company-rank tables."""

from __future__ import annotations

from dataclasses import dataclass

STUDENT_COLUMNS = (
    "course", "eyear", "code", "id", "gender", "region", "he", "imd", "age",
    "prev_attempt", "credit", "disability", "final_result", "univ", "comp",
    "package", "univ_f", "comp_f", "q_score",
)

UNIVERSITY_COLUMNS = (
    "univ_code", "univ_name", "univ_city", "univ_state", "univ_score",
    "univ_rank", "uryear",
)
UNIVERSITY_OPTIONAL_COLUMNS = ("scope",)

COMPANY_COLUMNS = (
    "comp_name", "comp_sector", "comp_subsector", "comp_area", "comp_country",
    "comp_para1", "comp_para2", "comp_para3", "comp_para4", "comp_rank", "cryear",
)

SCOPES = ("country", "world")


def normalize_name(name: str) -> str:
    """Canonical form used to match institution and company names.

    Trims, collapses internal whitespace runs to one space and case-folds.

    >>> normalize_name("  Indian  Institute of\\tScience ")
    'indian institute of science'
    """
    return " ".join(name.split()).casefold()


@dataclass(frozen=True)
class StudentRecord:
    course: str
    eyear: int
    code: str
    id: int
    gender: str
    region: str
    he: str
    imd: str
    age: str
    prev_attempt: str
    credit: str
    disability: str
    final_result: str
    univ: str
    comp: str
    package: float
    univ_f: str
    comp_f: str
    q_score: float = 0.0


@dataclass(frozen=True)
class UniversityRankEntry:
    univ_code: str
    univ_name: str
    univ_city: str
    univ_state: str
    univ_score: float
    univ_rank: int
    uryear: int
    scope: str = "country"


@dataclass(frozen=True)
class CompanyRankEntry:
    comp_name: str
    comp_sector: str
    comp_subsector: str
    comp_area: str
    comp_country: str
    comp_para1: float
    comp_para2: float
    comp_para3: float
    comp_para4: float
    comp_rank: int
    cryear: int
