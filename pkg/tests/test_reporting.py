import pandas as pd

from src.reporting import REPORT_COLUMNS, run_proposition_suite, suite_passed, summarize, write_report


def _small_suite():
    return run_proposition_suite(ranks=(2,), cases=2, seed=1, max_len=4)


def test_small_suite_passes():
    df = _small_suite()
    assert list(df.columns) == REPORT_COLUMNS
    assert not df.empty
    assert (df["Cases"] == df["Passed"] + df["Failed"] + df["Errors"]).all()
    assert suite_passed(df), df[df["Passed"] != df["Cases"]].to_string()


def test_summary_groups_by_check():
    df = _small_suite()
    summary = summarize(df)
    assert summary["Check"].is_unique
    assert summary["Cases"].sum() == df["Cases"].sum()


def test_failures_are_reported():
    df = pd.DataFrame([{"Check": "x", "Group": "A", "Rank": 2, "Cases": 2, "Passed": 1,
                        "Failed": 1, "Errors": 0, "Seconds": 0.0}], columns=REPORT_COLUMNS)
    assert not suite_passed(df)


def test_report_is_written_as_csv(tmp_path):
    df = _small_suite()
    path = write_report(df, str(tmp_path / "nested" / "report.csv"))
    loaded = pd.read_csv(path)
    assert list(loaded.columns) == REPORT_COLUMNS
    assert len(loaded) == len(df)
