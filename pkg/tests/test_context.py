import pytest
from hypothesis import given
from hypothesis import strategies as st

from qscore import (
    CompanyRankEntry,
    NoRankingDataError,
    ScoringConfig,
    StudentRecord,
    UniversityRankEntry,
    build_context,
    load_company_ranks,
    load_students,
    load_university_ranks,
    select_cohort,
)
from qscore.context import rank_year


def stu(id, eyear=2014, univ_f="N", comp_f="N", package=0.0, final_result="Pass", univ="", comp=""):
    return StudentRecord("BSc", eyear, "B", id, "F", "N", "HE", "0-10%", "0-35", "0", "120", "N",
                         final_result, univ, comp, package, univ_f, comp_f)


def uni(name, rank, year, scope="country"):
    return UniversityRankEntry("U", name, "c", "s", 50.0, rank, year, scope)


def comp(name, rank, year):
    return CompanyRankEntry(name, "IT", "x", "Asia", "India", 1.0, 1.0, 1.0, 1.0, rank, year)


UNIS = [uni("A", 1, 2013), uni("B", 2, 2013), uni("A", 3, 2014), uni("B", 1, 2014), uni("C", 7, 2014)]
COMPS = [comp("X", 1, 2014), comp("Y", 4, 2014)]


def test_exact_year_match():
    ctx = build_context([stu(1, univ_f="Y")], UNIS, COMPS, 2014)
    assert dict(ctx.university_ranks_country) == {"a": 3, "b": 1, "c": 7}
    assert ctx.rank_max_univ_country == 7


def test_falls_back_to_latest_earlier_year():
    ctx = build_context([stu(1, eyear=2015, univ_f="Y")], UNIS, COMPS, 2015)
    assert ctx.rank_max_univ_country == 7 and ctx.year == 2015


def test_no_fallback_when_disabled():
    with pytest.raises(NoRankingDataError):
        build_context([stu(1, eyear=2015, univ_f="Y")], UNIS, COMPS, 2015, ScoringConfig(rank_fallback=False))


def test_later_rankings_are_never_used():
    ctx = build_context([stu(1, eyear=2012)], UNIS, COMPS, 2012)
    assert dict(ctx.university_ranks_country) == {}


def test_package_bounds_over_sofj_only():
    students = [
        stu(1, comp_f="Y", package=6.5), stu(2, comp_f="Y", package=3.0),
        stu(3, comp_f="Y", package=10.0), stu(4, univ_f="Y"), stu(5, eyear=2013, comp_f="Y", package=99.0),
    ]
    ctx = build_context(students, UNIS, COMPS, 2014)
    assert (ctx.package_min, ctx.package_max) == (3.0, 10.0)


def test_no_sofj_means_no_package_bounds():
    ctx = build_context([stu(1, univ_f="Y")], UNIS, [], 2014)
    assert ctx.package_min is None and ctx.package_max is None


def test_sofj_without_company_table():
    with pytest.raises(NoRankingDataError):
        build_context([stu(1, comp_f="Y", package=5.0)], UNIS, [], 2014)


def test_pass_only_changes_package_bounds():
    students = [stu(1, comp_f="Y", package=3.0, final_result="Fail"), stu(2, comp_f="Y", package=5.0),
                stu(3, comp_f="Y", package=8.0)]
    cfg = ScoringConfig(pass_only=True)
    assert [s.id for s in select_cohort(students, 2014, cfg)] == [2, 3]
    assert build_context(students, UNIS, COMPS, 2014, cfg).package_min == 5.0


def test_world_scope_is_selected_separately():
    unis = UNIS + [uni("Oxford", 1, 2013, "world"), uni("ETH", 12, 2013, "world")]
    ctx = build_context([stu(1, univ_f="Y")], unis, COMPS, 2014)
    assert ctx.rank_max_univ_country == 7
    assert ctx.rank_max_univ_world == 12


def test_requires_students_of_year():
    with pytest.raises(ValueError):
        build_context([stu(1)], UNIS, COMPS, 2020)


@given(st.sets(st.integers(min_value=2000, max_value=2030), max_size=8), st.integers(min_value=2000, max_value=2030))
def test_rank_year_choice(years, cohort):
    chosen = rank_year(years, cohort, fallback=True)
    earlier = [y for y in years if y <= cohort]
    assert chosen == (max(earlier) if earlier else None)


@given(st.dictionaries(st.sampled_from("abcdefgh"), st.integers(min_value=1, max_value=500), min_size=1))
def test_rank_max_is_true_maximum(ranks):
    comps = [comp(name, r, 2014) for name, r in ranks.items()]
    ctx = build_context([stu(1, comp_f="Y", package=2.0)], [], comps, 2014)
    assert ctx.industry_rank_max == max(ranks.values())


def test_sample_contexts(sample):
    students = load_students(sample["students"])
    unis = load_university_ranks(sample["univ_ranks"])
    comps = load_company_ranks(sample["comp_ranks"])
    for year in (2013, 2014):
        ctx = build_context(students, unis, comps, year)
        by_hand = max(u.univ_rank for u in unis if u.uryear == year and u.scope == "country")
        assert ctx.rank_max_univ_country == by_hand
        assert ctx.industry_rank_max == max(c.comp_rank for c in comps if c.cryear == year)
        packages = [s.package for s in students if s.eyear == year and s.comp_f == "Y"]
        assert (ctx.package_min, ctx.package_max) == (min(packages), max(packages))
