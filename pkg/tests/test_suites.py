import pytest

from jetframes.suites import ALL_SUITE_NAMES, SUITES, run_suite

EXPECTED_SUITES = {
    "axioms", "deleon", "prel1", "grol1", "grol3", "grop1", "grol4",
    "rbsp1", "rbsl1", "rbsl2", "rbsl3", "rbst1", "rbst2", "diagram",
    "oracle",
}


def test_registry_contents():
    assert set(ALL_SUITE_NAMES) == EXPECTED_SUITES
    for suite in SUITES.values():
        assert suite.properties
        assert suite.description


@pytest.mark.parametrize("name", sorted(EXPECTED_SUITES - {"rbst2"}))
def test_suites_pass_at_small_scale(name):
    report = run_suite(name, [1, 2, 3], 15, 2024)
    failing = [p.name for p in report.properties if not p.passed]
    assert report.passed, failing


def test_dimension_one_degenerates_gracefully():
    # every skew map vanishes at n=1, so all suites still run and pass
    for name in ("prel1", "grol1", "rbst1", "rbsl2"):
        assert run_suite(name, [1], 10, 5).passed


def test_rbst2_fails_exactly_on_orbit_invariance():
    report = run_suite("rbst2", [2, 3], 25, 7)
    failing = {p.name for p in report.properties if not p.passed}
    assert failing == {"projection_invariant_on_orbits"}
    failure = next(p for p in report.properties if not p.passed)
    ce = failure.counterexample
    assert ce is not None
    assert {"suite", "property", "n", "trial", "seed"} <= set(ce)
    assert ce["projected"] != ce["projected_after_action"]


def test_reports_are_reproducible():
    a = run_suite("grol4", [2], 10, 99).to_doc()
    b = run_suite("grol4", [2], 10, 99).to_doc()
    a.pop("wall_time_s")
    b.pop("wall_time_s")
    assert a == b


def test_report_document_shape():
    rep = run_suite("rbsl1", [1, 2], 3, 1).to_doc()
    assert rep["suite"] == "rbsl1"
    assert rep["ns"] == [1, 2]
    assert rep["trials"] == 3
    assert rep["seed"] == 1
    for prop in rep["properties"]:
        assert {"name", "passed", "trials_run", "failures",
                "counterexample"} <= set(prop)
        assert prop["trials_run"] == 6


def test_unknown_suite_and_bad_trials():
    with pytest.raises(KeyError):
        run_suite("nope", [1], 1, 0)
    with pytest.raises(ValueError):
        run_suite("prel1", [1], 0, 0)
