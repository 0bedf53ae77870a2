import pytest

from hv_algebra.suites import (
    DEFAULT_SAMPLES,
    SUITE_NAMES,
    SuiteResult,
    SuiteSettings,
    run_suite,
)


def _settings(group, counts: dict[str, int] | None = None, **overrides) -> SuiteSettings:
    samples = {key: 3 for key in DEFAULT_SAMPLES}
    samples.update(composition_elements=2, lifts=4, group_laws=5, **(counts or {}))
    return SuiteSettings(group=group, samples=samples, **overrides)


def test_empty_selection_passes(z):
    report = run_suite(_settings(z), [])
    assert report.passed
    assert report.suites == []


def test_unknown_suite_rejected(z):
    with pytest.raises(ValueError, match="nope"):
        run_suite(_settings(z), ["nope"])


def test_all_suites_pass_on_z(z):
    seen = []
    report = run_suite(_settings(z, seed=4), progress=seen.append)
    assert [s.name for s in report.suites] == list(SUITE_NAMES)
    assert [s.name for s in seen] == list(SUITE_NAMES)
    failed = {s.name: s.counterexample for s in report.suites if not s.passed}
    assert failed == {}
    assert all(s.samples > 0 for s in report.suites)


@pytest.mark.parametrize(
    "name", ["jacobi", "cocycles", "derivations", "automorphisms", "roundtrip"]
)
def test_suites_pass_over_quadratic_field(z2, name):
    report = run_suite(_settings(z2, seed=2), [name])
    assert report.passed, report.suites[0].counterexample


def test_wrong_psi2_degree_fails_with_witness(z):
    report = run_suite(_settings(z, {"cocycles": 200}, psi2_degree=4, seed=8), ["cocycles"])
    assert not report.passed
    (result,) = report.suites
    example = result.counterexample
    assert example["check"] == "cocycle_psi2"
    assert example["seed"] == 8
    assert {"u", "v", "w", "value", "verify_seed", "identity"} <= set(example)
    assert result.checks["cocycle_psi1"]["passed"]


def test_report_is_reproducible(z):
    first = run_suite(_settings(z, seed=21), ["foundations", "roundtrip"])
    second = run_suite(_settings(z, seed=21), ["foundations", "roundtrip"])
    assert first.to_data(timing=False) == second.to_data(timing=False)


def test_witness_does_not_depend_on_selection(z):
    settings = _settings(z, {"cocycles": 50}, psi2_degree=5, seed=3)
    alone = run_suite(settings, ["cocycles"])
    together = run_suite(settings, ["foundations", "cocycles"])
    assert alone.suites[0].to_data(timing=False) == together.suites[1].to_data(timing=False)


def test_report_shape(z):
    data = run_suite(_settings(z, seed=1), ["oracles"]).to_data()
    assert data["seed_algorithm"] == "numpy-philox4x64/seedsequence"
    assert data["group"] == {"group": "Z", "pairing": ["1"], "field": {"mode": "rational"}}
    (suite,) = data["suites"]
    assert suite["status"] == "pass"
    assert "seconds" in suite
    assert suite["counterexample"] is None


def test_first_failure_is_kept():
    result = SuiteResult(name="demo", seed=5)
    result.check("a", True)
    result.check("b", False, lambda: {"x": 1})
    result.check("c", False, lambda: {"x": 2})
    assert result.counterexample == {"check": "b", "seed": 5, "x": 1}
    assert result.samples == 3
    assert not result.checks["c"]["passed"]


def test_roundtrip_also_covers_quadratic_coefficients(z):
    report = run_suite(_settings(z, {"roundtrip_quadratic": 8}, seed=3), ["roundtrip"])
    assert report.passed, report.suites[0].counterexample
    checks = report.suites[0].checks
    assert checks["parse_print"]["samples"] == 3
    assert checks["parse_print_quadratic"] == {"passed": True, "samples": 8}
