"""Exception hierarchy shared by every qscore module."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional


class QScoreError(Exception):
    """Base class for all errors raised by qscore."""


class ScoringError(QScoreError, ValueError):
    """A score could not be computed. Carries the student id once known."""

    def __init__(self, message: str, student_id: Optional[int] = None):
        self.reason = message
        self.student_id = student_id
        if student_id is not None:
            message = f"student {student_id}: {message}"
        super().__init__(message)


class DegenerateScaleError(ScoringError):
    """input_min equals input_max, so the scale has no slope."""


class DegenerateRankingError(ScoringError):
    """A ranking table with a single rank was used to score a ranked entity."""


class OutOfRangeError(ScoringError):
    """A rank or package lies outside the bounds of its scale."""


class NoRankingDataError(QScoreError):
    """A cohort needs a ranking table that is empty after year filtering."""


class AnalyticsError(QScoreError, ValueError):
    pass


class EmptyCohortError(AnalyticsError):
    pass


class DuplicateYearError(AnalyticsError):
    pass


class MissingYearError(QScoreError):
    """Requested cohort years are not present in the score store."""

    def __init__(self, missing: Iterable[int], available: Iterable[int]):
        self.missing = sorted(missing)
        self.available = sorted(available)
        avail = ", ".join(map(str, self.available)) or "none"
        if self.missing:
            msg = f"no stored scores for year(s) {', '.join(map(str, self.missing))}"
        else:
            msg = "score store holds no years"
        super().__init__(f"{msg}; available: {avail}")


@dataclass(frozen=True)
class Diagnostic:
    """One problem found in an input file, located by path and line."""

    path: str
    line: int
    kind: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}:{self.line}: {self.kind}: {self.message}"


class ValidationError(QScoreError):
    """Raised by the loaders when an input file has any diagnostic."""

    def __init__(self, diagnostics: List[Diagnostic]):
        self.diagnostics = list(diagnostics)
        lines = [str(d) for d in self.diagnostics[:10]]
        more = len(self.diagnostics) - len(lines)
        if more > 0:
            lines.append(f"... and {more} more")
        super().__init__(
            f"{len(self.diagnostics)} validation error(s):\n" + "\n".join(lines)
        )


class CorruptStoreError(QScoreError):
    def __init__(self, path: str, line: int, reason: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: corrupt score record: {reason}")
