import json

import pytest

from projrefl import verify
from projrefl.group import GroupParams
from projrefl.stats import StatProfile, stat_profile

FAST = {"timing": False}


@pytest.mark.parametrize(
    "suite,params",
    [("projRS", (3, 1, 3, 3)), ("uou", (2, 1, 1, 2)), ("oldnew", (4, 1, 1, 3))],
)
def test_examples_pass(suite, params):
    report = verify.run_verify(suite, {**FAST, "bound": 8}, GroupParams(*params))
    assert report["version"] == 1
    assert len(report["checks"]) == 1
    assert verify.report_ok(report)


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_verify("nosuch")


def test_report_schema():
    report = verify.run_verify("cyc", FAST)
    assert set(report) == {"version", "checks"}
    for check in report["checks"]:
        assert set(check) == {"name", "params", "status", "witness", "ms"}
        assert check["status"] == "pass" and check["witness"] is None and check["ms"] == 0
    text = verify.dumps(report)
    assert json.loads(text) == report
    assert text == verify.dumps(verify.run_verify("cyc", FAST))


def test_failure_is_reported_not_raised(monkeypatch):
    def broken(g, colors=None):
        prof = stat_profile(g, colors)
        return StatProfile(prof.hdes, prof.h, tuple(x + 1 for x in prof.k), prof.lam, prof.fmaj)

    monkeypatch.setattr(verify, "stat_profile", broken)
    report = verify.run_verify("oldnew", {**FAST, "max_r": 1})
    assert not verify.report_ok(report)
    first = report["checks"][0]
    assert first["status"] == "fail"
    assert first["witness"] == {"element": {"sigma": [1], "colors": [0]}, "position": 1}


@pytest.mark.parametrize("suite", ["represe", "scalars", "deg", "coba", "cyc", "dimirrep", "characters", "uou"])
def test_fast_suites_pass(suite):
    report = verify.run_verify(suite, {**FAST, "max_order": 400})
    assert report["checks"] and verify.report_ok(report)


def test_max_order_restricts():
    report = verify.run_verify("projRS", {**FAST, "max_order": 6})
    assert report["checks"]
    for c in report["checks"]:
        p = c["params"]
        assert GroupParams(p["r"], p["p"], p["q"], p["n"]).order() <= 6
