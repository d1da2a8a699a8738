"""CSV readers for the three input tables.

Each ``parse_*`` function returns every valid row together with one
:class:`~qscore.errors.Diagnostic` per rejected row (or one for a bad
header, in which case no rows are parsed). The ``load_*`` wrappers raise
:class:`~qscore.errors.ValidationError` instead when anything was rejected.

Files are comma-separated UTF-8 with a header row; quoted fields may
contain commas or newlines. Line numbers in diagnostics are physical
lines in the file, header on line 1.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass, field
from typing import Callable, Generic, Hashable, List, Sequence, Tuple, TypeVar

from .errors import Diagnostic, ValidationError
from .records import (
    COMPANY_COLUMNS,
    SCOPES,
    STUDENT_COLUMNS,
    UNIVERSITY_COLUMNS,
    UNIVERSITY_OPTIONAL_COLUMNS,
    CompanyRankEntry,
    StudentRecord,
    UniversityRankEntry,
    normalize_name,
)

T = TypeVar("T")

__all__ = [
    "LoadResult",
    "parse_students",
    "parse_university_ranks",
    "parse_company_ranks",
    "load_students",
    "load_university_ranks",
    "load_company_ranks",
]


@dataclass
class LoadResult(Generic[T]):
    records: List[T] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diagnostics


class _RowProblems:
    """Accumulates the problems of one row; the first one names the diagnostic."""

    def __init__(self):
        self.items: List[Tuple[str, str]] = []

    def add(self, kind: str, message: str) -> None:
        self.items.append((kind, message))

    def text(self, row: dict, col: str) -> str:
        return (row.get(col) or "").strip()

    def integer(self, row: dict, col: str, minimum=None):
        raw = self.text(row, col)
        try:
            value = int(raw)
        except ValueError:
            self.add("type-mismatch", f"{col}={raw!r} is not an integer")
            return None
        if minimum is not None and value < minimum:
            self.add("type-mismatch", f"{col}={value} must be >= {minimum}")
            return None
        return value

    def real(self, row: dict, col: str, default=None):
        raw = self.text(row, col)
        if raw == "" and default is not None:
            return default
        try:
            value = float(raw)
        except ValueError:
            self.add("type-mismatch", f"{col}={raw!r} is not a number")
            return None
        if value != value or value in (float("inf"), float("-inf")):
            self.add("type-mismatch", f"{col}={raw!r} is not a finite number")
            return None
        return value

    def flag(self, row: dict, col: str):
        raw = self.text(row, col)
        if raw not in ("Y", "N"):
            self.add("type-mismatch", f"{col}={raw!r} must be 'Y' or 'N'")
            return None
        return raw


def _parse(
    path,
    required: Sequence[str],
    optional: Sequence[str],
    convert: Callable[[dict, _RowProblems], T],
    key: Callable[[T], Hashable],
    duplicate_kind: str,
    describe_key: Callable[[T], str],
) -> LoadResult[T]:
    path_s = os.fspath(path)
    result: LoadResult[T] = LoadResult()
    with open(path_s, newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        header = next(reader, [])
        missing = [c for c in required if c not in header]
        unexpected = [c for c in header if c not in required and c not in optional]
        if missing or unexpected:
            parts = []
            if missing:
                parts.append("missing column(s): " + ", ".join(missing))
            if unexpected:
                parts.append("unexpected column(s): " + ", ".join(unexpected))
            kind = "missing-column" if missing else "unexpected-column"
            result.diagnostics.append(Diagnostic(path_s, 1, kind, "; ".join(parts)))
            return result

        seen = {}
        line = reader.line_num
        for fields in reader:
            start = line + 1
            line = reader.line_num
            if not fields:
                continue
            if len(fields) != len(header):
                result.diagnostics.append(Diagnostic(
                    path_s, start, "type-mismatch",
                    f"row has {len(fields)} fields, header has {len(header)}",
                ))
                continue
            row = dict(zip(header, fields))
            problems = _RowProblems()
            record = convert(row, problems)
            if not problems.items:
                k = key(record)
                if k in seen:
                    problems.add(
                        duplicate_kind,
                        f"{describe_key(record)} already defined on line {seen[k]}",
                    )
                else:
                    seen[k] = start
            if problems.items:
                kind = problems.items[0][0]
                message = "; ".join(m for _, m in problems.items)
                result.diagnostics.append(Diagnostic(path_s, start, kind, message))
            else:
                result.records.append(record)
    return result


def _student(row: dict, p: _RowProblems):
    t = p.text
    univ_f = p.flag(row, "univ_f")
    comp_f = p.flag(row, "comp_f")
    package = p.real(row, "package", default=0.0)
    fields = dict(
        course=t(row, "course"),
        eyear=p.integer(row, "eyear"),
        code=t(row, "code"),
        id=p.integer(row, "id"),
        gender=t(row, "gender"),
        region=t(row, "region"),
        he=t(row, "he"),
        imd=t(row, "imd"),
        age=t(row, "age"),
        prev_attempt=t(row, "prev_attempt"),
        credit=t(row, "credit"),
        disability=t(row, "disability"),
        final_result=t(row, "final_result"),
        univ=t(row, "univ"),
        comp=t(row, "comp"),
        package=package,
        univ_f=univ_f,
        comp_f=comp_f,
        q_score=p.real(row, "q_score", default=0.0),
    )
    if univ_f == "Y" and comp_f == "Y":
        p.items.insert(0, ("conflicting-flags", "univ_f and comp_f are both 'Y'"))
    if package is not None and package < 0:
        p.add("type-mismatch", f"package={package!r} must be >= 0")
    if comp_f == "Y" and package is not None and package <= 0:
        p.add("missing-package", "comp_f='Y' requires a positive package")
    if p.items:
        return None
    return StudentRecord(**fields)


def _university(row: dict, p: _RowProblems):
    scope = p.text(row, "scope").lower() or "country"
    if scope not in SCOPES:
        p.add("type-mismatch", f"scope={scope!r} must be one of {', '.join(SCOPES)}")
    fields = dict(
        univ_code=p.text(row, "univ_code"),
        univ_name=p.text(row, "univ_name"),
        univ_city=p.text(row, "univ_city"),
        univ_state=p.text(row, "univ_state"),
        univ_score=p.real(row, "univ_score"),
        univ_rank=p.integer(row, "univ_rank", minimum=1),
        uryear=p.integer(row, "uryear"),
        scope=scope,
    )
    if not normalize_name(fields["univ_name"]):
        p.add("type-mismatch", "univ_name is empty")
    if p.items:
        return None
    return UniversityRankEntry(**fields)


def _company(row: dict, p: _RowProblems):
    fields = dict(
        comp_name=p.text(row, "comp_name"),
        comp_sector=p.text(row, "comp_sector"),
        comp_subsector=p.text(row, "comp_subsector"),
        comp_area=p.text(row, "comp_area"),
        comp_country=p.text(row, "comp_country"),
        comp_para1=p.real(row, "comp_para1"),
        comp_para2=p.real(row, "comp_para2"),
        comp_para3=p.real(row, "comp_para3"),
        comp_para4=p.real(row, "comp_para4"),
        comp_rank=p.integer(row, "comp_rank", minimum=1),
        cryear=p.integer(row, "cryear"),
    )
    if not normalize_name(fields["comp_name"]):
        p.add("type-mismatch", "comp_name is empty")
    if p.items:
        return None
    return CompanyRankEntry(**fields)


def parse_students(path) -> LoadResult[StudentRecord]:
    return _parse(
        path, STUDENT_COLUMNS, (), _student,
        key=lambda r: (r.eyear, r.id),
        duplicate_kind="duplicate-id",
        describe_key=lambda r: f"student id {r.id} in eyear {r.eyear}",
    )


def parse_university_ranks(path) -> LoadResult[UniversityRankEntry]:
    return _parse(
        path, UNIVERSITY_COLUMNS, UNIVERSITY_OPTIONAL_COLUMNS, _university,
        key=lambda r: (normalize_name(r.univ_name), r.uryear, r.scope),
        duplicate_kind="duplicate-entry",
        describe_key=lambda r: f"university {r.univ_name!r} ({r.scope}, {r.uryear})",
    )


def parse_company_ranks(path) -> LoadResult[CompanyRankEntry]:
    return _parse(
        path, COMPANY_COLUMNS, (), _company,
        key=lambda r: (normalize_name(r.comp_name), r.cryear),
        duplicate_kind="duplicate-entry",
        describe_key=lambda r: f"company {r.comp_name!r} ({r.cryear})",
    )


def _raise_on_diagnostics(result: LoadResult[T]) -> List[T]:
    if result.diagnostics:
        raise ValidationError(result.diagnostics)
    return result.records


def load_students(path) -> List[StudentRecord]:
    return _raise_on_diagnostics(parse_students(path))


def load_university_ranks(path) -> List[UniversityRankEntry]:
    return _raise_on_diagnostics(parse_university_ranks(path))


def load_company_ranks(path) -> List[CompanyRankEntry]:
    return _raise_on_diagnostics(parse_company_ranks(path))
