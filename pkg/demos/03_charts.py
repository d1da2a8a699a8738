# %% [markdown]
# # Pie and trend charts
#
# Scores are stored per year, then turned into one pie chart per year
# and one trend line across years. Every chart is an SVG plus a JSON file
# with the exact numbers behind it.
#
# Run from anywhere; output goes to ``demo_output/`` in the current directory.

# %%
import json
from pathlib import Path

from qscore import (
    BandConfig,
    build_context,
    load_company_ranks,
    load_scores,
    load_students,
    load_university_ranks,
    sample_paths,
    save_scores,
    score_student,
    summarize_cohort,
    trend,
    write_report,
)

out = Path("demo_output")
paths = sample_paths()
students = load_students(paths["students"])
univs = load_university_ranks(paths["univ_ranks"])
comps = load_company_ranks(paths["comp_ranks"])

for year in (2013, 2014):
    ctx = build_context(students, univs, comps, year)
    scores = [score_student(s, ctx) for s in students if s.eyear == year]
    save_scores(out / "store", year, scores, {"source": "demo"})

# %% [markdown]
# Bands are absolute cut-offs so years stay comparable. Try moving them.

# %%
bands = BandConfig(lower_threshold=4.0, upper_threshold=7.0)
series = trend(summarize_cohort(load_scores(out / "store", y), bands) for y in (2013, 2014))
for path in write_report(series, out / "report", bands=bands):
    print(path)

# %%
line = json.loads((out / "report" / "trend.json").read_text())
for s in line["series"]:
    print(f"{s['label']:<14}", s["values"])
