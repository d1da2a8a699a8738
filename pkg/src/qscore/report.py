"""Static pie and line charts as SVG, each with a JSON sidecar.

The JSON sidecar carries the exact numbers behind a chart; the SVG is a
rendering of them. Output contains no timestamps or generated ids, so the
same input always yields the same bytes. Coordinates are written with two
decimals.

Colors are fixed per band:

============== =========
Above Average  ``#2ca02c``
Average        ``#1f77b4``
Below Average  ``#d62728``
Overall (line) ``#444444``
============== =========
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from .analytics import CATEGORY_ORDER, BandConfig, CohortSummary, QsCategory, TrendSeries

__all__ = [
    "ChartSpec",
    "COLORS",
    "pie_data",
    "pie_svg",
    "line_data",
    "line_svg",
    "render_pie",
    "render_line",
    "write_report",
]

COLORS = {
    QsCategory.AboveAverage: "#2ca02c",
    QsCategory.Average: "#1f77b4",
    QsCategory.BelowAverage: "#d62728",
    "Overall": "#444444",
}
Y_TICKS = (0, 2, 4, 6, 8, 10)
FONT = 'font-family="sans-serif"'


@dataclass(frozen=True)
class ChartSpec:
    kind: str
    title: str
    basename: str
    width: int = 640
    height: int = 480

    def __post_init__(self):
        if self.kind not in ("pie", "line"):
            raise ValueError(f"chart kind must be 'pie' or 'line', got {self.kind!r}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("chart dimensions must be positive")


def _f(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _svg_open(spec: ChartSpec) -> List[str]:
    w, h = spec.width, spec.height
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
        f'<text x="{_f(w / 2)}" y="28" text-anchor="middle" {FONT} font-size="18">{escape(spec.title)}</text>',
    ]


def _write(out_dir, basename: str, svg: str, data: dict) -> Tuple[Path, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    svg_path = out / f"{basename}.svg"
    json_path = out / f"{basename}.json"
    svg_path.write_text(svg, encoding="utf-8", newline="\n")
    json_path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8", newline="\n")
    return svg_path, json_path


# -- pie ---------------------------------------------------------------------

def pie_data(summary: CohortSummary, spec: ChartSpec) -> dict:
    slices = []
    for cat in CATEGORY_ORDER:
        st = summary.categories[cat]
        slices.append({
            "category": cat.name,
            "label": cat.label,
            "count": st.count,
            "share": st.share,
            "mean_qs": st.mean_qs,
            "angle_deg": st.share * 360.0,
            "percent_label": f"{st.share * 100:.1f}%",
            "color": COLORS[cat],
            "drawn": st.count > 0,
        })
    return {
        "kind": "pie",
        "title": spec.title,
        "width": spec.width,
        "height": spec.height,
        "cohort_year": summary.cohort_year,
        "total_students": summary.total_students,
        "overall_mean_qs": summary.overall_mean_qs,
        "slices": slices,
        "angle_sum_deg": math.fsum(s["angle_deg"] for s in slices),
    }


def pie_svg(data: dict, spec: ChartSpec) -> str:
    w, h = spec.width, spec.height
    r = min(w * 0.6, h - 80) / 2 * 0.9
    cx, cy = w * 0.34, (h + 40) / 2
    parts = _svg_open(spec)

    drawn = [s for s in data["slices"] if s["drawn"]]
    start = 0.0
    for s in drawn:
        sweep = s["angle_deg"]
        cls = f'class="slice {s["category"]}"'
        if sweep >= 360.0 - 1e-9:
            parts.append(f'<circle {cls} cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" fill="{s["color"]}" stroke="#ffffff"/>')
        else:
            a0 = math.radians(start - 90.0)
            a1 = math.radians(start + sweep - 90.0)
            x0, y0 = cx + r * math.cos(a0), cy + r * math.sin(a0)
            x1, y1 = cx + r * math.cos(a1), cy + r * math.sin(a1)
            large = 1 if sweep > 180.0 else 0
            parts.append(
                f'<path {cls} d="M {_f(cx)} {_f(cy)} L {_f(x0)} {_f(y0)} '
                f'A {_f(r)} {_f(r)} 0 {large} 1 {_f(x1)} {_f(y1)} Z" '
                f'fill="{s["color"]}" stroke="#ffffff"/>'
            )
        start += sweep

    lx, ly = w * 0.68, cy - 40
    for i, s in enumerate(data["slices"]):
        y = ly + i * 26
        parts.append(f'<rect x="{_f(lx)}" y="{_f(y)}" width="14" height="14" fill="{s["color"]}"/>')
        parts.append(
            f'<text x="{_f(lx + 20)}" y="{_f(y + 12)}" {FONT} font-size="13">'
            f'{escape(s["label"])} {s["percent_label"]} (n={s["count"]})</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_pie(summary: CohortSummary, spec: ChartSpec, out_dir=".") -> Tuple[Path, Path]:
    """Write ``<basename>.svg`` and ``<basename>.json`` for one cohort year."""
    if spec.kind != "pie":
        raise ValueError("render_pie needs a ChartSpec of kind 'pie'")
    data = pie_data(summary, spec)
    return _write(out_dir, spec.basename, pie_svg(data, spec), data)


# -- line --------------------------------------------------------------------

def _segments(years: Sequence[int], values: Sequence[Optional[float]]) -> List[List[int]]:
    runs, cur = [], []
    for y, v in zip(years, values):
        if v is None:
            if cur:
                runs.append(cur)
            cur = []
        else:
            cur.append(y)
    if cur:
        runs.append(cur)
    return runs


def line_data(series: TrendSeries, spec: ChartSpec) -> dict:
    if len(series) == 0:
        raise ValueError("a line chart needs at least one year")
    years = series.years
    lines = []
    for cat in CATEGORY_ORDER:
        values = series.mean_series(cat)
        lines.append({
            "name": cat.name,
            "label": cat.label,
            "color": COLORS[cat],
            "values": values,
            "segments": _segments(years, values),
        })
    overall = series.overall_series()
    lines.append({
        "name": "Overall",
        "label": "Overall",
        "color": COLORS["Overall"],
        "values": overall,
        "segments": _segments(years, overall),
    })
    return {
        "kind": "line",
        "title": spec.title,
        "width": spec.width,
        "height": spec.height,
        "years": years,
        "y_axis": {"min": 0, "max": 10, "ticks": list(Y_TICKS)},
        "series": lines,
    }


def line_svg(data: dict, spec: ChartSpec) -> str:
    w, h = spec.width, spec.height
    left, right, top, bottom = 56.0, w - 150.0, 50.0, h - 50.0
    years = data["years"]
    lo, hi = years[0], years[-1]

    def px(year: int) -> float:
        if hi == lo:
            return (left + right) / 2
        pad = (right - left) * 0.05
        return left + pad + (year - lo) / (hi - lo) * (right - left - 2 * pad)

    def py(v: float) -> float:
        return bottom - v / 10.0 * (bottom - top)

    parts = _svg_open(spec)
    for t in data["y_axis"]["ticks"]:
        y = py(t)
        parts.append(f'<line x1="{_f(left)}" y1="{_f(y)}" x2="{_f(right)}" y2="{_f(y)}" stroke="#dddddd"/>')
        parts.append(f'<text x="{_f(left - 8)}" y="{_f(y + 4)}" text-anchor="end" {FONT} font-size="12">{t}</text>')
    parts.append(f'<line x1="{_f(left)}" y1="{_f(bottom)}" x2="{_f(right)}" y2="{_f(bottom)}" stroke="#000000"/>')
    parts.append(f'<line x1="{_f(left)}" y1="{_f(top)}" x2="{_f(left)}" y2="{_f(bottom)}" stroke="#000000"/>')
    for year in years:
        parts.append(
            f'<text x="{_f(px(year))}" y="{_f(bottom + 20)}" text-anchor="middle" {FONT} font-size="12">{year}</text>'
        )
    parts.append(
        f'<text x="16" y="{_f((top + bottom) / 2)}" transform="rotate(-90 16 {_f((top + bottom) / 2)})" '
        f'text-anchor="middle" {FONT} font-size="12">Mean QS</text>'
    )

    for s in data["series"]:
        value_at = dict(zip(years, s["values"]))
        parts.append(f'<g class="series {s["name"]}" stroke="{s["color"]}" fill="{s["color"]}">')
        for seg in s["segments"]:
            if len(seg) > 1:
                pts = " ".join(f"{_f(px(y))},{_f(py(value_at[y]))}" for y in seg)
                parts.append(f'<polyline points="{pts}" fill="none" stroke-width="2"/>')
        for y, v in value_at.items():
            if v is not None:
                parts.append(f'<circle cx="{_f(px(y))}" cy="{_f(py(v))}" r="3.5"/>')
        parts.append("</g>")

    for i, s in enumerate(data["series"]):
        y = top + 10 + i * 24
        parts.append(f'<rect x="{_f(right + 16)}" y="{_f(y)}" width="14" height="14" fill="{s["color"]}"/>')
        parts.append(f'<text x="{_f(right + 36)}" y="{_f(y + 12)}" {FONT} font-size="13">{escape(s["label"])}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_line(series: TrendSeries, spec: ChartSpec, out_dir=".") -> Tuple[Path, Path]:
    """Write ``<basename>.svg`` and ``<basename>.json`` for a multi-year trend."""
    if spec.kind != "line":
        raise ValueError("render_line needs a ChartSpec of kind 'line'")
    data = line_data(series, spec)
    return _write(out_dir, spec.basename, line_svg(data, spec), data)


def write_report(
    series: TrendSeries,
    out_dir,
    force_line: bool = False,
    title: str = "Quality Score",
    bands: Optional[BandConfig] = None,
) -> List[Path]:
    """One pie per year, a trend line when there are 2+ years (or when forced),
    and ``summary.json`` collecting every cohort summary.
    """
    written: List[Path] = []
    for s in series.summaries:
        spec = ChartSpec("pie", f"{title}: QS categories {s.cohort_year}", f"pie_{s.cohort_year}")
        written.extend(render_pie(s, spec, out_dir))
    if len(series) > 1 or force_line:
        spec = ChartSpec("line", f"{title}: mean QS by year", "trend")
        written.extend(render_line(series, spec, out_dir))
    combined = {
        "years": series.years,
        "bands": None if bands is None else {
            "lower_threshold": bands.lower_threshold,
            "upper_threshold": bands.upper_threshold,
        },
        "summaries": [s.to_dict() for s in series.summaries],
    }
    path = Path(out_dir) / "summary.json"
    path.write_text(json.dumps(combined, indent=2) + "\n", encoding="utf-8", newline="\n")
    written.append(path)
    return written
