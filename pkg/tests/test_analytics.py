import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qscore import (
    AcademicCategory,
    BandConfig,
    DuplicateYearError,
    EmptyCohortError,
    QsCategory,
    QualityScore,
    qs_category,
    summarize_cohort,
    trend,
)

A, M, B = QsCategory.AboveAverage, QsCategory.Average, QsCategory.BelowAverage


def make_score(i, t, year):
    if t == 0:
        return QualityScore(i, year, AcademicCategory.SWNDA, 0.0)
    if t < 1:
        # only an unranked employer with a low package scores below 1
        return QualityScore(i, year, AcademicCategory.SOFJ, t, qs_ir=0.0, qs_po=t)
    return QualityScore(i, year, AcademicCategory.SPHE, t)


def cohort(totals, year=2013):
    return [make_score(i, t, year) for i, t in enumerate(totals)]


@pytest.mark.parametrize("qs,expected", [(0.0, B), (3.999, B), (4.0, M), (7.0, M), (7.0001, A), (9.1, A)])
def test_qs_category_defaults(qs, expected):
    assert qs_category(qs) is expected


def test_category_ordering():
    assert A > M > B


@pytest.mark.parametrize("lower,upper", [(5, 5), (-1, 4), (3, 11), (7, 4)])
def test_band_config_rejects_bad_thresholds(lower, upper):
    with pytest.raises(ValueError):
        BandConfig(lower, upper)


def test_summary_of_four():
    s = summarize_cohort(cohort([10.0, 8.0, 5.0, 2.0]))
    assert [s[c].count for c in (A, M, B)] == [2, 1, 1]
    assert [s[c].share for c in (A, M, B)] == [0.5, 0.25, 0.25]
    assert [s[c].mean_qs for c in (A, M, B)] == [9.0, 5.0, 2.0]
    assert s.overall_mean_qs == 6.25
    assert s.total_students == 4


def test_singleton():
    s = summarize_cohort(cohort([5.0]))
    assert [s[c].count for c in (A, M, B)] == [0, 1, 0]
    assert s[A].mean_qs is None and s[B].mean_qs is None
    assert s.overall_mean_qs == 5.0


def test_all_zero_cohort():
    s = summarize_cohort(cohort([0.0, 0.0]))
    assert s[B].count == 2 and s[B].share == 1.0
    assert s.overall_mean_qs == 0.0


def test_empty_cohort():
    with pytest.raises(EmptyCohortError):
        summarize_cohort([])


def test_mixed_years_rejected():
    with pytest.raises(ValueError):
        summarize_cohort(cohort([1.0]) + cohort([2.0], year=2014))


def test_to_dict_lists_all_bands():
    d = summarize_cohort(cohort([5.0])).to_dict()
    assert list(d["categories"]) == ["AboveAverage", "Average", "BelowAverage"]
    assert d["categories"]["AboveAverage"] == {"count": 0, "share": 0.0, "mean_qs": None}


class TestTrend:
    def test_sorted(self):
        t = trend([summarize_cohort(cohort([1.0], 2014)), summarize_cohort(cohort([2.0], 2013))])
        assert t.years == [2013, 2014]
        assert t.overall_series() == [2.0, 1.0]

    def test_single(self):
        assert len(trend([summarize_cohort(cohort([1.0]))])) == 1

    def test_duplicate_years(self):
        s = summarize_cohort(cohort([1.0]))
        with pytest.raises(DuplicateYearError):
            trend([s, s])

    def test_gaps_are_none(self):
        t = trend([summarize_cohort(cohort([9.0], 2013)), summarize_cohort(cohort([1.0], 2014))])
        assert t.mean_series(A) == [9.0, None]
        assert t.mean_series(B) == [None, 1.0]


sofj_like = st.one_of(st.just(0.0), st.floats(min_value=0.0, max_value=10.0))
score_lists = st.lists(sofj_like, min_size=1, max_size=60)


@given(score_lists)
def test_summary_invariants(totals):
    s = summarize_cohort(cohort(totals))
    stats = [s[c] for c in QsCategory]
    assert sum(x.count for x in stats) == len(totals)
    assert abs(math.fsum(x.share for x in stats) - 1.0) <= 1e-9
    weighted = math.fsum(x.count * x.mean_qs for x in stats if x.count) / s.total_students
    assert abs(weighted - s.overall_mean_qs) <= 1e-9
    assert abs(sum(totals) / len(totals) - s.overall_mean_qs) <= 1e-9


@given(score_lists, st.randoms(use_true_random=False))
def test_summary_permutation_invariant(totals, rnd):
    scores = cohort(totals)
    shuffled = scores[:]
    rnd.shuffle(shuffled)
    assert summarize_cohort(scores) == summarize_cohort(shuffled)


@given(st.floats(min_value=0, max_value=10), st.floats(min_value=0, max_value=6), st.floats(min_value=0, max_value=3))
def test_raising_lower_threshold_never_promotes(qs, lower, bump):
    before = qs_category(qs, BandConfig(lower, 7.0))
    after = qs_category(qs, BandConfig(min(lower + bump, 6.9), 7.0))
    assert after <= before
