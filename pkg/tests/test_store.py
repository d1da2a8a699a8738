import json

import pytest

from qscore import AcademicCategory, CorruptStoreError, QualityScore, available_years, load_scores, save_scores
from qscore.store import load_meta, make_provenance, scores_path


def some_scores(year=2013):
    return [
        QualityScore(1, year, AcademicCategory.SWNDA, 0.0),
        QualityScore(2, year, AcademicCategory.SPHE, 5.522613065326633),
        QualityScore(3, year, AcademicCategory.SOFJ, 3.0408163265306123 + 0.1, qs_ir=3.0408163265306123, qs_po=0.1),
    ]


def test_round_trip(tmp_path):
    save_scores(tmp_path, 2013, some_scores(), {"note": "t"})
    assert load_scores(tmp_path, 2013) == some_scores()


def test_line_shape(tmp_path):
    save_scores(tmp_path, 2013, some_scores(), {})
    lines = scores_path(tmp_path, 2013).read_text().splitlines()
    assert len(lines) == 3
    first = json.loads(lines[0])
    assert list(first) == ["student_id", "cohort_year", "category", "qs_ir", "qs_po", "qs_total"]
    assert first["qs_ir"] is None


def test_second_save_replaces_first(tmp_path):
    save_scores(tmp_path, 2013, some_scores(), {})
    save_scores(tmp_path, 2013, some_scores()[:1], {})
    assert load_scores(tmp_path, 2013) == some_scores()[:1]
    assert load_meta(tmp_path, 2013)["count"] == 1


def test_missing_year_is_empty(tmp_path):
    assert load_scores(tmp_path, 1999) == []
    assert load_scores(tmp_path / "nowhere", 1999) == []


def test_corrupt_line_reports_line_number(tmp_path):
    save_scores(tmp_path, 2013, some_scores(), {})
    path = scores_path(tmp_path, 2013)
    lines = path.read_text().splitlines()
    lines[1] = lines[1][:-5]
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CorruptStoreError) as err:
        load_scores(tmp_path, 2013)
    assert err.value.line == 2


def test_invalid_record_is_corrupt(tmp_path):
    path = scores_path(tmp_path, 2013)
    path.write_text(json.dumps({"student_id": 1, "cohort_year": 2013, "category": "SWNDA",
                                "qs_ir": None, "qs_po": None, "qs_total": 3.0}) + "\n")
    with pytest.raises(CorruptStoreError):
        load_scores(tmp_path, 2013)


def test_wrong_year_rejected_on_save(tmp_path):
    with pytest.raises(ValueError):
        save_scores(tmp_path, 2014, some_scores(2013), {})


def test_available_years_and_no_temp_files(tmp_path):
    save_scores(tmp_path, 2014, some_scores(2014), {})
    save_scores(tmp_path, 2013, some_scores(), {})
    assert available_years(tmp_path) == [2013, 2014]
    assert sorted(p.name for p in tmp_path.iterdir()) == [
        "meta_2013.json", "meta_2014.json", "scores_2013.jsonl", "scores_2014.jsonl"]


def test_provenance(tmp_path, monkeypatch):
    src = tmp_path / "in.csv"
    src.write_text("a\n")
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    prov = make_provenance({"students": src}, {"pass_only": False})
    assert prov["timestamp"] == "1970-01-01T00:00:00Z"
    assert prov["inputs"]["students"]["digest"].startswith("sha256:")
    save_scores(tmp_path / "store", 2013, some_scores(), prov)
    meta = load_meta(tmp_path / "store", 2013)
    assert meta["config"] == {"pass_only": False} and meta["cohort_year"] == 2013


@pytest.mark.parametrize("field,value", [("student_id", "7"), ("qs_total", "5.0"), ("cohort_year", True)])
def test_mistyped_field_is_corrupt(tmp_path, field, value):
    record = {"student_id": 1, "cohort_year": 2013, "category": "SPHE", "qs_ir": None, "qs_po": None, "qs_total": 5.0}
    record[field] = value
    scores_path(tmp_path, 2013).write_text(json.dumps(record) + "\n")
    with pytest.raises(CorruptStoreError):
        load_scores(tmp_path, 2013)
