"""Suite dispatch: report shape, exit codes, parameter handling."""

import json

from crystalcone.suites import SUITE_NAMES, render_report, run_suite

BASE = {"a1": 3, "a2": 3, "k1": 1, "k2": 1}


def test_all_suites_verify_at_small_scale():
    params = dict(BASE, depth=3, support=2, max_coord=2, weyl_depth=8,
                  k_range=4, kmax=3, L=4, L_max=40)
    for name in SUITE_NAMES:
        code, report = run_suite(name, params)
        assert code == 0, (name, report)
        assert report["verified"] is True
        assert report["suite"] == name
        assert report["witnesses"] == []
        json.dumps(report)  # must be serializable


def test_report_shape():
    code, report = run_suite("closure", dict(BASE, depth=2, support=2, max_coord=2))
    assert set(report) == {"suite", "config", "verified", "witnesses", "params"}
    assert report["config"] == BASE
    assert "depth" in report["params"]


def test_unknown_suite():
    code, report = run_suite("nonsense", BASE)
    assert code == 2
    assert "error" in report


def test_missing_parameters():
    code, report = run_suite("closure", {"a1": 3, "a2": 3})
    assert code == 2


def test_invalid_weight_exit_2():
    code, report = run_suite("closure", {"a1": 3, "a2": 3, "k1": 1, "k2": 3})
    assert code == 2
    assert "invalid configuration" in report["error"]


def test_invalid_depth_exit_2():
    code, report = run_suite("closure", dict(BASE, depth=99))
    assert code == 2


def test_classify_suite_ignores_weight():
    code, report = run_suite("classify", {"a1": 3, "a2": 3, "kmax": 2})
    assert code == 0
    assert report["params"]["kmax"] == 2


def test_equality_records_achieving_K():
    code, report = run_suite(
        "equality", dict(BASE, support=2, max_coord=2, escalation=[8, 12])
    )
    assert code == 0
    assert report["params"]["achieved_K"] == 8


def test_render_report_deterministic():
    _, report = run_suite("classify", {"a1": 3, "a2": 3, "kmax": 2})
    assert render_report(report) == render_report(report)
