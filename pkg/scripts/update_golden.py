"""Rewrite tests/golden/ from the bundled sample dataset.

    python scripts/update_golden.py

Run after an intentional change to scoring or rendering, then review the diff.
"""

import shutil
import sys
import tempfile
from pathlib import Path

from qscore import sample_paths
from qscore.cli import main

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


def run_pipeline(work: Path) -> None:
    paths = sample_paths()
    inputs = [
        "--students", str(paths["students"]),
        "--univ-ranks", str(paths["univ_ranks"]),
        "--comp-ranks", str(paths["comp_ranks"]),
    ]
    for argv in (
        ["validate", *inputs],
        ["score", *inputs, "--store", str(work / "store")],
        ["report", "--store", str(work / "store"), "--out", str(work / "report")],
    ):
        if main(argv) != 0:
            sys.exit(f"pipeline step failed: {argv[0]}")


if __name__ == "__main__":
    with tempfile.TemporaryDirectory() as tmp:
        work = Path(tmp)
        run_pipeline(work)
        shutil.rmtree(GOLDEN, ignore_errors=True)
        (GOLDEN / "store").mkdir(parents=True)
        for p in (work / "store").glob("scores_*.jsonl"):
            shutil.copy(p, GOLDEN / "store" / p.name)
        shutil.copytree(work / "report", GOLDEN / "report")
    print(f"wrote {GOLDEN}")
