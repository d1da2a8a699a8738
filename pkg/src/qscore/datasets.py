"""Bundled synthetic dataset: two cohort years shaped like a small case study."""

from importlib import resources
from pathlib import Path
from typing import Dict


def sample_paths() -> Dict[str, Path]:
    """Paths of the bundled ``students``, ``univ_ranks`` and ``comp_ranks`` CSVs."""
    root = resources.files("qscore") / "data"
    return {
        "students": Path(str(root / "students.csv")),
        "univ_ranks": Path(str(root / "university_ranks.csv")),
        "comp_ranks": Path(str(root / "company_ranks.csv")),
    }
