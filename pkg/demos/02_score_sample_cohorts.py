# %% [markdown]
# # Scoring the bundled sample cohorts
#
# The package ships a small synthetic institution: two enrolment years,
# a university ranking (national plus a handful of world entries) and a
# company ranking for each year.

# %%
from collections import Counter

from qscore import (
    build_context,
    load_company_ranks,
    load_students,
    load_university_ranks,
    sample_paths,
    score_student,
    summarize_cohort,
)

paths = sample_paths()
students = load_students(paths["students"])
univs = load_university_ranks(paths["univ_ranks"])
comps = load_company_ranks(paths["comp_ranks"])
print(len(students), "students,", len(univs), "university ranks,", len(comps), "company ranks")

# %% [markdown]
# A ranking context holds everything one cohort year is scored against:
# the rank tables for that year and the cohort's package range.

# %%
ctx = build_context(students, univs, comps, 2013)
print("country rank max:", ctx.rank_max_univ_country)
print("world rank max  :", ctx.rank_max_univ_world)
print("company rank max:", ctx.industry_rank_max)
print("packages        :", ctx.package_min, "-", ctx.package_max)

# %%
scores = [score_student(s, ctx) for s in students if s.eyear == 2013]
by_id = {s.id: s for s in students}
for qs in scores[:12]:
    s = by_id[qs.student_id]
    where = s.univ or s.comp or "-"
    parts = f"(IR {qs.qs_ir:.2f} + PO {qs.qs_po:.2f})" if qs.qs_ir is not None else ""
    print(f"{qs.student_id}  {qs.category.value:<5}  {qs.qs_total:5.2f} {parts:<22} {where.strip()}")

# %%
print(Counter(q.category.value for q in scores))
summary = summarize_cohort(scores)
for cat, stats in summary.categories.items():
    mean = "n/a" if stats.mean_qs is None else f"{stats.mean_qs:.2f}"
    print(f"{cat.label:<14} {stats.count:>3}  {stats.share:6.1%}  mean {mean}")
print("overall mean QS:", round(summary.overall_mean_qs, 3))
