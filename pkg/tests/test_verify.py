import json

import pytest

from vactab import verify
from vactab.errors import OutOfDomain, UnknownIdentity


def test_catalog_size_and_lookup():
    assert len(verify.IDS) == 43
    assert len(set(verify.IDS)) == 43
    entry = verify.get("thm6.1")
    assert entry.id == "thm6.1"
    assert entry.fixtures
    with pytest.raises(UnknownIdentity):
        verify.get("thm99")


def test_single_runs():
    rep = verify.run("eq2.1", {"n": 3, "k": 3})
    assert rep.passed and rep.lhs == rep.rhs == 27
    assert verify.run("thm6.1", {"k1": 2, "k2": 2}).passed
    rep = verify.run("thm3.1", {"k": 3, "shape": [2, 1]})
    assert rep.passed and rep.lhs == 2


def test_domain_errors():
    with pytest.raises(OutOfDomain):
        verify.run("eq2.1", {"n": 0, "k": 3})
    with pytest.raises(OutOfDomain):
        verify.run("eq2.1", {"n": 2, "k": 2, "colour": 1})


@pytest.mark.parametrize("iid", verify.IDS)
def test_every_fixture_passes(iid):
    reports, skipped = verify.run_entry(iid, budget_ms=float("inf"))
    assert skipped == 0
    assert all(r.passed for r in reports), [r.to_json() for r in reports if not r.passed]


def test_run_all_summary():
    summary = verify.run_all(budget_ms=0)
    assert summary.passed
    assert summary.ids() == set(verify.IDS)


def test_report_json_is_plain():
    js = verify.run("eq2.1", {"n": 2, "k": 2}).to_json()
    assert js["lhs"] == "4"
    assert js["params"] == {"n": "2", "k": "2"}
    json.dumps(js)
