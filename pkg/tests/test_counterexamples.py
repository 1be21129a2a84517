import pytest

from admperm.counterexamples import CASES, verify_counterexample
from admperm.rootdata import get_root_datum
from admperm.serialize import recheck_certificate


@pytest.fixture(scope="module")
def reports():
    return {c: verify_counterexample(c) for c in ("e6", "e7")}


@pytest.mark.parametrize("case", ["e6", "e7"])
def test_all_subchecks_pass(reports, case):
    rep = reports[case]
    assert rep.passed, [c.name for c in rep.failed()]
    assert rep.verdicts == {"permissible": True, "admissible": False, "admissible_direct": False, "haines": False}
    n_vertices = len(CASES[case]["vertices"])
    assert sum(c.name.startswith("x(a_") for c in rep.checks) == n_vertices
    assert recheck_certificate(get_root_datum(case.upper()), rep.certificate) == []


@pytest.mark.parametrize("case", ["e6", "e7"])
def test_identity_w2_flips_verdicts(reports, case):
    ctrl = verify_counterexample(case, w2_word=())
    assert not ctrl.passed
    assert ctrl.verdicts["admissible"] and ctrl.verdicts["haines"]
    base = {c.name: c.passed for c in reports[case].checks}
    flipped = {c.name for c in ctrl.checks if c.passed != base[c.name]}
    assert {"w2 not <= w1", "not admissible (pair criterion)", "matrix of w2 w1^-1"} <= flipped


def test_other_perturbation_changes_verdict():
    # swapping in a different w2 from the same coset still breaks the match with the published data
    ctrl = verify_counterexample("e6", w2_word=(4, 5, 6, 2, 4))
    assert not ctrl.passed


def test_unknown_case():
    with pytest.raises(ValueError):
        verify_counterexample("e5")


def test_report_json(reports):
    doc = reports["e6"].to_json()
    assert doc["passed"] and doc["certificate"]["case"] == "e6"
    assert all(set(c) == {"name", "passed", "detail"} for c in doc["checks"])
