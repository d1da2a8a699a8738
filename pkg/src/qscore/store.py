"""Per-year score store on the local filesystem.

Layout under ``store_dir``::

    scores_<year>.jsonl   one QualityScore object per line
    meta_<year>.json      provenance of the run that wrote the year

Each score line is a JSON object with the keys ``student_id``,
``cohort_year``, ``category`` (``"SPHE"``, ``"SOFJ"`` or ``"SWNDA"``),
``qs_ir``, ``qs_po`` (``null`` unless SOFJ) and ``qs_total``, in that
order. Floats are written with their shortest round-tripping repr, so a
load reproduces the saved values bit for bit.

Writes go to a temporary file in the same directory followed by an
atomic rename; re-saving a year replaces it and readers never observe a
partially written file.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import tempfile
import time
from pathlib import Path
from typing import Iterable, List, Mapping, Optional

from .errors import CorruptStoreError
from .scoring import QualityScore

__all__ = [
    "scores_path",
    "meta_path",
    "save_scores",
    "load_scores",
    "load_meta",
    "available_years",
    "file_digest",
    "make_provenance",
]

_SCORES_RE = re.compile(r"^scores_(-?\d+)\.jsonl$")


def scores_path(store_dir, year: int) -> Path:
    return Path(store_dir) / f"scores_{year}.jsonl"


def meta_path(store_dir, year: int) -> Path:
    return Path(store_dir) / f"meta_{year}.json"


def atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def file_digest(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return "sha256:" + h.hexdigest()


def make_provenance(inputs: Mapping[str, object], config: Mapping, timestamp: Optional[int] = None) -> dict:
    """Provenance record: input digests, a config snapshot and a UTC timestamp.

    The timestamp honours ``SOURCE_DATE_EPOCH`` when set, which makes the
    whole store reproducible byte for byte.
    """
    if timestamp is None:
        env = os.environ.get("SOURCE_DATE_EPOCH")
        timestamp = int(env) if env else int(time.time())
    return {
        "inputs": {name: {"path": os.fspath(p), "digest": file_digest(p)} for name, p in inputs.items()},
        "config": dict(config),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime(timestamp)),
    }


def save_scores(store_dir, cohort_year: int, scores: Iterable[QualityScore], provenance: Mapping) -> Path:
    scores = list(scores)
    for s in scores:
        if s.cohort_year != cohort_year:
            raise ValueError(f"score for student {s.student_id} belongs to {s.cohort_year}, not {cohort_year}")
    body = "".join(json.dumps(s.to_dict(), allow_nan=False) + "\n" for s in scores)
    path = scores_path(store_dir, cohort_year)
    atomic_write_text(path, body)
    atomic_write_text(
        meta_path(store_dir, cohort_year),
        json.dumps({"cohort_year": cohort_year, "count": len(scores), **provenance}, indent=2, sort_keys=True) + "\n",
    )
    return path


def load_scores(store_dir, cohort_year: int) -> List[QualityScore]:
    """Scores saved for ``cohort_year``; an empty list when none were saved."""
    path = scores_path(store_dir, cohort_year)
    try:
        fh = open(path, encoding="utf-8")
    except FileNotFoundError:
        return []
    out = []
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                score = QualityScore.from_dict(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                raise CorruptStoreError(os.fspath(path), lineno, str(exc) or type(exc).__name__) from exc
            if score.cohort_year != cohort_year:
                raise CorruptStoreError(os.fspath(path), lineno, f"cohort_year {score.cohort_year} != {cohort_year}")
            out.append(score)
    return out


def load_meta(store_dir, cohort_year: int) -> Optional[dict]:
    path = meta_path(store_dir, cohort_year)
    if not path.exists():
        return None
    return json.loads(path.read_text(encoding="utf-8"))


def available_years(store_dir) -> List[int]:
    d = Path(store_dir)
    if not d.is_dir():
        return []
    years = []
    for p in d.iterdir():
        m = _SCORES_RE.match(p.name)
        if m:
            years.append(int(m.group(1)))
    return sorted(years)
