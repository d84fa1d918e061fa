import pytest

from permspec.errors import ResourceLimitError, UsageError
from permspec.oracles import (
    KNOWN_ERRATA,
    ErrataEntry,
    LemmaCheck,
    errata_ledger,
    fixsq_check,
    lambda_check,
    leg_check,
    leij_check,
    leij_partition_check,
    leijk_check,
    leyij_check,
    prfix_check,
    printed_fix_sq,
    property_checks,
    run_suite,
    sum_fix_sq,
    transposition_recurrence_check,
    vertex_transitivity_check,
)


def _values_by_item(checks):
    return {check.item: check.brute_force for check in checks}


def test_leij_n4():
    checks = leij_check(4)
    assert len(checks) == 12 * 4
    assert all(check.passed for check in checks)
    assert _values_by_item(checks) == {1: 6, 2: 6, 3: 2, 4: 2}


def test_leijk_n4():
    checks = leijk_check(4)
    assert len(checks) == 24 * 6
    assert all(check.passed for check in checks)
    assert _values_by_item(checks) == {1: 3, 2: 1, 3: 9, 4: 1, 5: 3, 6: 3}


@pytest.mark.parametrize("n", [5, 6])
def test_leij_and_leijk_larger(n):
    assert all(check.passed for check in leij_check(n))
    assert all(check.passed for check in leijk_check(n))


def test_leij_partition():
    report = leij_partition_check(4)
    assert report.passed, report.issues
    assert report.details["expected_size"] == 12


def test_vertex_transitivity_flags_differences():
    rows = [LemmaCheck("Leij", 4, (1, 2), 1, 6, 6), LemmaCheck("Leij", 4, (2, 1), 1, 6, 5)]
    assert not vertex_transitivity_check(rows).passed
    assert vertex_transitivity_check(leij_check(4)).passed
    with pytest.raises(UsageError):
        vertex_transitivity_check([])


def test_leij_range():
    with pytest.raises(UsageError):
        leij_check(3)
    with pytest.raises(ResourceLimitError):
        leij_check(8)


@pytest.mark.parametrize("n", [4, 5])
def test_prfix(n):
    report = prfix_check(n)
    assert report.passed, report.issues
    assert report.details["graded"]
    assert report.details["sum_fix_sq"] == sum_fix_sq(n)


def test_prfix_ungraded_at_n6():
    report = prfix_check(6)
    assert report.passed, report.issues
    assert not report.details["graded"]
    assert report.details["taus_checked"] == 720


@pytest.mark.parametrize("n", [4, 5])
def test_transposition_recurrences(n):
    report = transposition_recurrence_check(n)
    assert report.passed, report.issues
    assert report.details["instances"]["Eqij"] > 0
    assert report.details["instances"]["Eqijk"] > 0


def test_fix_squares():
    assert sum_fix_sq(4) == 48
    assert printed_fix_sq(4) == 416
    assert sum_fix_sq(3) == 12
    assert printed_fix_sq(3) == 27
    check = fixsq_check(4)
    assert check.passed
    assert check.brute_force == 48


def test_lambda_n4():
    report = lambda_check(4)
    assert report.passed, report.issues
    assert report.details["lambda_coefficient"] == "16"
    assert report.details["lambda"] == "16*z^2"


def test_leyij_n4():
    checks = leyij_check(4)
    assert all(check.passed for check in checks)
    assert sum(1 for check in checks if check.lemma == "LeYij-entry") == 9


def test_leg():
    check = leg_check(4)
    assert check.passed
    assert check.to_dict()["closed_form"] == "-2*y[1,2] - 4*y[1,3] - 6*y[1,4] - 2*y[2,3] - 4*y[2,4] - 2*y[3,4]"


def test_run_suite_fixsq_reports_the_remark():
    result = run_suite(4, ["fixsq"])
    assert result.passed
    rows = result.to_rows()
    assert rows[0]["brute_force"] == 48
    assert rows[1]["type"] == "errata"
    assert rows[1]["tag"] == "FIX_SQUARES_REMARK"
    assert rows[1]["printed"] == 416


def test_run_suite_errors():
    with pytest.raises(UsageError):
        run_suite(4, ["nope"])
    with pytest.raises(UsageError):
        run_suite(3, ["leij"])
    with pytest.raises(ResourceLimitError):
        run_suite(6, ["recurrence"])


def test_run_suite_progress():
    calls = []
    run_suite(4, ["leg", "fixsq"], progress=lambda k, total, name: calls.append((k, total, name)))
    assert calls == [(1, 2, "leg"), (2, 2, "fixsq")]


def test_errata_entries_never_fail():
    entry = ErrataEntry("TAG", "statement", 1, 2, 4)
    assert entry.passed
    assert entry.to_dict()["type"] == "errata"


def test_errata_ledger_n4():
    ledger = errata_ledger(4)
    assert ledger.passed, (ledger.missing, ledger.unexpected)
    assert sorted(ledger.tags) == sorted(KNOWN_ERRATA)
    entries = {entry.tag: entry for entry in ledger.entries}
    inv = entries["INV_DEFINITION"]
    assert (inv.witness_n, inv.witness, inv.printed, inv.computed) == (3, "2,1,3", 2, 1)
    squares = entries["FIX_SQUARES_REMARK"]
    assert (squares.witness_n, squares.printed, squares.computed) == (3, 27, 12)
    lam = entries["LAMBDA_FACTOR"]
    assert (lam.printed, lam.computed) == (384, 16)
    assert entries["DICHOTOMY_LABEL"].computed == ["3+1", "4"]
    assert str(entries["MIF_SET_VALUE"].computed) == "-16"


def test_errata_ledger_range():
    with pytest.raises(UsageError):
        errata_ledger(3)


def test_property_checks():
    reports = property_checks()
    assert [r.name for r in reports] == [
        "group-axioms",
        "convolution-representation",
        "rank-metamorphic",
        "character-orthogonality",
        "chains-and-agreement",
    ]
    assert all(r.passed for r in reports), [r.issues for r in reports]
