"""``qscore`` command line: validate inputs, score cohorts, render reports.

Exit codes: 0 success, 1 data or validation error, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import Counter
from pathlib import Path
from typing import List, Optional, Sequence

from .analytics import BandConfig, summarize_cohort, trend
from .context import ScoringConfig, build_context, select_cohort
from .errors import MissingYearError, QScoreError, ValidationError
from .loaders import parse_company_ranks, parse_students, parse_university_ranks
from .report import write_report
from .scoring import UNIV_SCOPES, AcademicCategory, score_student
from .store import available_years, load_scores, make_provenance, save_scores

log = logging.getLogger("qscore")

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2
STORE_ENV = "QSCORE_STORE"

DEFAULTS = {
    "students": None,
    "univ_ranks": None,
    "comp_ranks": None,
    "store": None,
    "years": None,
    "bands": "4,7",
    "pass_only": False,
    "rank_fallback": True,
    "univ_scope": "both",
    "out": "report",
    "force_line": False,
}


class UsageError(Exception):
    pass


def _parse_years(value) -> Optional[List[int]]:
    if value is None:
        return None
    if isinstance(value, int):
        return [value]
    if isinstance(value, list):
        items = value
    else:
        items = [v for v in str(value).split(",") if v.strip()]
    try:
        return sorted({int(v) for v in items})
    except (TypeError, ValueError):
        raise UsageError(f"invalid --years value {value!r}; expected e.g. 2013,2014")


def _parse_bands(value) -> BandConfig:
    if isinstance(value, (list, tuple)):
        parts = list(value)
    else:
        parts = str(value).split(",")
    try:
        lower, upper = (float(p) for p in parts)
        return BandConfig(lower, upper)
    except (TypeError, ValueError):
        raise UsageError(f"invalid --bands value {value!r}; expected lower,upper with 0 <= lower < upper <= 10")


def _resolve(args: argparse.Namespace) -> dict:
    """Merge defaults, the optional JSON config file and explicit flags."""
    cfg = dict(DEFAULTS)
    env_store = os.environ.get(STORE_ENV)
    if env_store:
        cfg["store"] = env_store
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                file_cfg = json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.config}: invalid JSON config: {exc}")
        if not isinstance(file_cfg, dict):
            raise UsageError(f"{args.config}: config must be a JSON object")
        unknown = sorted(set(file_cfg) - set(DEFAULTS))
        if unknown:
            raise UsageError(f"{args.config}: unknown config key(s): {', '.join(unknown)}")
        cfg.update(file_cfg)
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    cfg["years"] = _parse_years(cfg["years"])
    cfg["band_config"] = _parse_bands(cfg["bands"])
    if cfg["univ_scope"] not in UNIV_SCOPES:
        raise UsageError(f"univ_scope must be one of {', '.join(UNIV_SCOPES)}")
    return cfg


def _require(cfg: dict, *keys: str) -> None:
    flag = {"univ_ranks": "--univ-ranks", "comp_ranks": "--comp-ranks"}
    missing = [flag.get(k, f"--{k}") for k in keys if not cfg.get(k)]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join(missing))
    for k in keys:
        if k in ("students", "univ_ranks", "comp_ranks") and not Path(cfg[k]).is_file():
            raise FileNotFoundError(f"input file not found: {cfg[k]}")


def _load_inputs(cfg: dict):
    results = [
        parse_students(cfg["students"]),
        parse_university_ranks(cfg["univ_ranks"]),
        parse_company_ranks(cfg["comp_ranks"]),
    ]
    diagnostics = [d for r in results for d in r.diagnostics]
    return [r.records for r in results], diagnostics


def cmd_validate(cfg: dict) -> int:
    _require(cfg, "students", "univ_ranks", "comp_ranks")
    (students, univs, comps), diagnostics = _load_inputs(cfg)
    for d in diagnostics:
        print(d)
    print(
        f"{len(diagnostics)} errors ({len(students)} students, "
        f"{len(univs)} university ranks, {len(comps)} company ranks)"
    )
    return EXIT_DATA if diagnostics else EXIT_OK


def cmd_score(cfg: dict) -> int:
    _require(cfg, "students", "univ_ranks", "comp_ranks", "store")
    (students, univs, comps), diagnostics = _load_inputs(cfg)
    if diagnostics:
        raise ValidationError(diagnostics)
    scoring = ScoringConfig(
        rank_fallback=cfg["rank_fallback"], pass_only=cfg["pass_only"], univ_scope=cfg["univ_scope"]
    )
    years = cfg["years"] or sorted({s.eyear for s in students})

    # score every year before writing anything so a failure leaves the store untouched
    per_year = {}
    for year in years:
        ctx = build_context(students, univs, comps, year, scoring)
        per_year[year] = [score_student(s, ctx) for s in select_cohort(students, year, scoring)]

    provenance = make_provenance(
        {"students": cfg["students"], "univ_ranks": cfg["univ_ranks"], "comp_ranks": cfg["comp_ranks"]},
        scoring.to_dict(),
    )
    for year, scores in per_year.items():
        save_scores(cfg["store"], year, scores, provenance)
        counts = Counter(s.category for s in scores)
        mean = sum(s.qs_total for s in scores) / len(scores) if scores else 0.0
        print(
            f"{year}: {len(scores)} scored (SPHE {counts[AcademicCategory.SPHE]}, "
            f"SOFJ {counts[AcademicCategory.SOFJ]}, SWNDA {counts[AcademicCategory.SWNDA]}), "
            f"mean QS {mean:.2f}"
        )
    return EXIT_OK


def cmd_report(cfg: dict) -> int:
    _require(cfg, "store")
    available = available_years(cfg["store"])
    years = cfg["years"] or available
    missing = [y for y in years if y not in available]
    if not years or missing:
        raise MissingYearError(missing, available)
    bands = cfg["band_config"]
    summaries = [summarize_cohort(load_scores(cfg["store"], y), bands) for y in years]
    written = write_report(trend(summaries), cfg["out"], force_line=cfg["force_line"], bands=bands)
    for path in written:
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with option values; flags override it")
    common.add_argument("--students", help="student table CSV")
    common.add_argument("--univ-ranks", dest="univ_ranks", help="university rank table CSV")
    common.add_argument("--comp-ranks", dest="comp_ranks", help="company rank table CSV")
    common.add_argument("--store", help=f"score store directory (default: ${STORE_ENV})")
    common.add_argument("--years", help="comma-separated cohort years (default: all)")
    common.add_argument("--bands", help="QS band thresholds lower,upper (default 4,7)")
    common.add_argument("--pass-only", dest="pass_only", action="store_true", default=None,
                        help="score only students whose final_result is Pass")
    common.add_argument("--no-rank-fallback", dest="rank_fallback", action="store_false", default=None,
                        help="require ranking tables for the exact cohort year")
    common.add_argument("--univ-scope", dest="univ_scope", choices=UNIV_SCOPES,
                        help="university tables to consult (default: both, country first)")
    common.add_argument("--out", help="report output directory (default: report)")
    common.add_argument("--force-line", dest="force_line", action="store_true", default=None,
                        help="draw the trend line even for a single year")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="qscore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check the three input CSVs")
    sub.add_parser("score", parents=[common], help="score cohorts into the store")
    sub.add_parser("report", parents=[common], help="render charts from the store")
    return parser


COMMANDS = {"validate": cmd_validate, "score": cmd_score, "report": cmd_report}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        cfg = _resolve(args)
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"qscore: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        for d in exc.diagnostics:
            print(d, file=sys.stderr)
        print(f"{len(exc.diagnostics)} errors", file=sys.stderr)
        return EXIT_DATA
    except (QScoreError, ValueError) as exc:
        print(f"qscore: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        name = getattr(exc, "filename", None)
        detail = f"{exc.strerror}: {name}" if name and exc.strerror else str(exc)
        print(f"qscore: error: {detail}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
