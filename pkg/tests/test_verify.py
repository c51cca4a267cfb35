import json

import pytest

from semicomp.composition import Composition
from semicomp.errors import TheoremViolation
from semicomp.verify import CAMPAIGNS, THEOREM_IDS, CampaignConfig, VerificationReport, run_all, run_campaign

SMALL = CampaignConfig(max_n=5, samples=20)


def test_every_id_has_a_campaign():
    assert set(CAMPAIGNS) == set(THEOREM_IDS)


@pytest.mark.parametrize("theorem_id", THEOREM_IDS)
def test_small_campaigns_pass(theorem_id):
    rep = run_campaign(theorem_id, SMALL)
    assert rep.passed, rep.failures[:3]
    assert rep.checked > 0


def test_report_serialization_is_sorted():
    r = VerificationReport("x")
    r.fail("b", 1, 2)
    r.fail("a", 1, 2)
    r.finish()
    d = r.to_dict()
    assert [f["instance"] for f in d["failures"]] == ["a", "b"]
    assert not d["passed"] and "elapsed" not in d
    assert "elapsed" in r.to_dict(timings=True)


def test_run_all_is_deterministic():
    a = [r.to_dict() for r in run_all(["obs-strong", "ssss"], SMALL)]
    b = [r.to_dict() for r in run_all(["obs-strong", "ssss"], SMALL)]
    assert json.dumps(a) == json.dumps(b)


def test_campaign_errors_become_failures(monkeypatch):
    def broken(cfg, r):
        r.checked += 1
        raise TheoremViolation("boom")

    monkeypatch.setitem(CAMPAIGNS, "obs-strong", broken)
    rep = run_campaign("obs-strong", SMALL)
    assert not rep.passed and "boom" in rep.failures[0][2]


def test_random_mode_only_samples():
    cfg = CampaignConfig(max_n=6, mode="random", samples=10, seed=3)
    assert len(list(cfg.corpus())) == 10
    assert all(isinstance(C, Composition) and C.order <= 6 for C in cfg.corpus())
