import json

import pytest

from gapvir.checks import CHECKS, CheckResult
from gapvir.sampling import DEFAULT_SEED, rng, seed_from_env
from gapvir.suite import PROFILES, report_json, run_suite


def test_profiles_cover_every_check():
    assert set(PROFILES["quick"]) == set(CHECKS) == set(PROFILES["full"])


def test_quick_profile_passes_and_is_deterministic():
    a = report_json(run_suite("quick"))
    b = report_json(run_suite("quick"))
    assert a["passed"]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert [r["id"] for r in a["results"]] == sorted(r["id"] for r in a["results"])


def test_parallel_matches_serial():
    only = ["lie", "omega", "theta"]
    a = report_json(run_suite("quick", jobs=1, only=only))
    b = report_json(run_suite("quick", jobs=2, only=only))
    assert a == b


def test_seed_env(monkeypatch):
    monkeypatch.delenv("GAPVIR_SEED", raising=False)
    assert seed_from_env() == DEFAULT_SEED
    monkeypatch.setenv("GAPVIR_SEED", "17")
    assert seed_from_env() == 17
    assert rng(17, "x").random() == rng(17, "x").random()
    assert rng(17, "x").random() != rng(17, "y").random()


def test_failure_carries_counterexample():
    res = CheckResult("demo", "demo")
    res.expect(True, "fine")
    res.expect(False, "boom")
    assert not res.passed and res.counterexample == "boom"
    assert res.to_json()["counterexample"] == "boom"
    assert res.line().startswith("[FAIL] demo")


def test_unknown_profile():
    with pytest.raises(ValueError):
        run_suite("nope")
