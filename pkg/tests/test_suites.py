import json

from torfold.suites import SUITES, suite_cluster_folding, suite_involution


def test_registry_names():
    assert set(SUITES) == {
        "involution",
        "foldability",
        "cluster-folding",
        "flip-mutation",
        "exchange-identities",
        "ymonomial",
    }


def test_reports_are_deterministic():
    a = suite_involution(trials=50, seed=7)
    b = suite_involution(trials=50, seed=7)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_seed_changes_report_config_only_in_config():
    a = suite_involution(trials=50, seed=7)
    b = suite_involution(trials=50, seed=8)
    assert a["config"] != b["config"]
    assert a["passed"] and b["passed"]


def test_report_shape():
    report = suite_cluster_folding(1, depth=3, trials=10, seed=1)
    assert report["suite"] == "cluster-folding"
    assert {"name", "passed"} <= set(report["checks"][0])
    assert isinstance(report["passed"], bool)
