"""The theorem-check registry: pass/skip semantics and report plumbing."""

import json

import pytest

from majperm.reports import (FAIL, PASS, SKIP, VerificationReport,
                             reports_to_json)
from majperm.verify import available, default_ranges, run, run_all

# small enough to finish in seconds, large enough to exercise each branch
SMALL = {
    "prop-2.1": {"n_max": 5},
    "thm-main": {"n_max": 5},
    "lem-grbase": {"n_max": 5},
    "lem-grind": {"cases": [[4, 3, 2]]},
    "lem-ind": {"cases": [[4, 2]]},
    "cor-n+1": {"n_max": 4},
    "thm-dthm": {"n_max": 6, "d_max": 2},
    "eq-mnkeq": {"n_max": 6, "d_max": 2},
    "eq-grbaseeq": {"k_max": 3, "d_max": 2},
    "thm-base": {"n_max": 6},
    "cor-gcd": {"n_max": 5},
    "prop-prime": {"primes": [2, 3, 5]},
    "thm-prime": {"primes": [2, 3], "np_max": 6},
    "prop-prime-power": {"cases": [[2, 2]]},
    "thm-prime-power": {"cases": [[2, 2, 1]]},
    "thm-p2-items-1-5": {"n_max": 6, "n_max_sets": 5},
    "f_l-shift": {"n_max": 5},
    "g-shift": {"n_max": 5},
    "syt-oracle": {"n_max": 5, "nn_max": 6},
}


@pytest.mark.parametrize("tid", sorted(SMALL))
def test_registered_check_passes(tid):
    reports = run(tid, SMALL[tid])
    assert reports, f"{tid} produced no reports"
    bad = [r for r in reports if r.status == FAIL]
    assert not bad, f"{tid}: {bad[0].params} -> {bad[0].witness}"


def test_available_lists_all_ids():
    ids = available()
    assert set(SMALL) == set(ids)
    assert len(ids) == len(set(ids))


def test_unknown_id_raises():
    with pytest.raises(ValueError):
        run("no-such-theorem")


def test_default_ranges_are_copies():
    a = default_ranges("thm-main")
    a["n_max"] = 99
    assert default_ranges("thm-main")["n_max"] != 99


def test_pinned_hypothesis_violation_is_skipped():
    reports = run("thm-main", {"n": 4, "k": 2, "l": 2})
    assert len(reports) == 1
    assert reports[0].status == SKIP
    assert reports[0].status != PASS


def test_pinned_valid_tuple_passes():
    reports = run("thm-main", {"n": 4, "k": 3, "l": 2})
    assert [r.status for r in reports] == [PASS]


def test_skip_never_counts_as_pass():
    reports = run("thm-dthm", {"n": 6, "k": 2, "l": 2, "d": 1})
    assert all(r.status == SKIP for r in reports)


def test_reports_are_deterministic_and_sorted():
    a = run("thm-main", {"n_max": 5})
    b = run("thm-main", {"n_max": 5})
    assert [(r.theorem_id, r.params, r.status) for r in a] == \
        [(r.theorem_id, r.params, r.status) for r in b]


def test_run_all_covers_every_id():
    reports = run_all({"n_max": 4})
    seen = {r.theorem_id for r in reports}
    assert seen == set(available())
    assert not [r for r in reports if r.status == FAIL]


def test_report_validation():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, "maybe")
    with pytest.raises(ValueError):
        VerificationReport("x", {}, FAIL)  # fail requires a witness
    ok = VerificationReport("x", {"n": 3}, FAIL, witness="3 != 4")
    assert ok.witness == "3 != 4"


def test_reports_to_json_shape():
    reports = run("thm-main", {"n": 5, "k": 2, "l": 3})
    payload = json.loads(reports_to_json(reports))
    assert isinstance(payload, list) and payload
    row = payload[0]
    assert set(row) >= {"theorem", "params", "status", "elapsed"}
    assert row["theorem"] == "thm-main"
    assert row["status"] == "pass"


def test_failing_checks_carry_witnesses():
    # every FAIL path goes through a constructor that requires a witness;
    # spot-check the report type contract instead of forcing a failure
    rep = VerificationReport("thm-main", {"n": 2}, FAIL, witness="w")
    assert rep.witness
