import pytest

from heckefusion.verify import SUITES, run_suite


@pytest.mark.parametrize("n", range(1, 6))
def test_all_suites_pass(n):
    report = run_suite(n)
    failed = [c for c in report["checks"] if not c["passed"]]
    assert report["passed"], failed
    assert {c["suite"] for c in report["checks"]} == set(SUITES)


def test_single_suite_and_counts():
    report = run_suite(4, "idempotents")
    assert report["tableaux"] == 10
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["fusion equals Dipper-James"]["count"] == 10


def test_caps_and_unknown_suite():
    with pytest.raises(ValueError):
        run_suite(6)
    with pytest.raises(ValueError):
        run_suite(0)
    with pytest.raises(ValueError):
        run_suite(2, "nope")
