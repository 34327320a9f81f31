import pytest

from linksgould.verify import ReportDocument, run_suite


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_theorem1_small_grid():
    report = run_suite("theorem1", max_m=3, max_k=3)
    assert report.passed
    assert report.counts == {"total": 3 * 7, "failed": 0}
    assert report.suite == "theorem1"
    assert report.elapsed_seconds is not None


def test_theorem2_small_grid():
    report = run_suite("theorem2", max_m=3, max_k=2)
    assert report.passed
    # m=1: r in {1,2}; m=2: {1,3}; m=3: {1,2,4,5}  ->  8 roots, 5 k-values
    assert report.counts["total"] == 8 * 5


def test_corrupted_eigenvalues_fail():
    report = run_suite("theorem1", max_m=2, max_k=3, corrupt_eigenvalues=True)
    assert not report.passed
    assert report.counts["failed"] > 0


def test_remaining_suites_pass_smallish():
    assert run_suite("lemma2-vanishing", max_m=5).passed
    assert run_suite("xi-endpoints", max_m=5).passed
    assert run_suite("skein-coefficients", max_m=5).passed
    assert run_suite("lg21-qminus1", max_k=5).passed
    assert run_suite("tensor-oracle").passed


def test_jobs_equivalence():
    serial = run_suite("theorem1", max_m=2, max_k=2, jobs=1)
    parallel = run_suite("theorem1", max_m=2, max_k=2, jobs=4)
    assert serial.to_json(stable=True) == parallel.to_json(stable=True)


def test_report_round_trip():
    report = run_suite("xi-endpoints", max_m=3)
    full = report.to_dict(stable=False)
    back = ReportDocument.from_dict(full)
    assert back.suite == report.suite
    assert back.elapsed_seconds == report.elapsed_seconds
    assert [c.to_dict() for c in back.cells] == [c.to_dict() for c in report.cells]
    again = ReportDocument.from_json(report.to_json(stable=True))
    assert again.elapsed_seconds is None
    assert again.passed == report.passed


def test_stable_json_identical_across_runs():
    a = run_suite("lg21-qminus1", max_k=4).to_json(stable=True)
    b = run_suite("lg21-qminus1", max_k=4).to_json(stable=True)
    assert a == b
    assert "elapsed" not in a


def test_pole_surfaces_as_failure_not_crash():
    # r not coprime to m is a usage error at the reduction layer, but the
    # suites only ever construct coprime pairs; simulate a failing cell by
    # corrupting instead and check the report shape.
    report = run_suite("theorem2", max_m=2, max_k=1, corrupt_eigenvalues=True)
    for cell in report.cells:
        assert isinstance(cell.left, str) and isinstance(cell.right, str)
