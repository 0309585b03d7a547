"""Acceptance gate: ten criteria, one pass/fail line each.

Each test runs one criterion's full check list from the report suite,
prints a single summary line, and asserts that every check passed
within the allowed runtime.  Run with `pytest -s tests/test_acceptance.py`
to see the lines as they appear.
"""

import time

from weyl_ising import cli


def run_criterion(number, fn, budget=None):
    title = cli.ACCEPTANCE[number - 1][0]
    start = time.perf_counter()
    checks = fn()
    elapsed = time.perf_counter() - start
    passed = [c for c in checks if c["status"] == "pass"]
    ok = len(passed) == len(checks)
    within = budget is None or elapsed < budget
    verdict = "PASS" if ok and within else "FAIL"
    budget_note = f", budget {budget:.0f}s" if budget else ""
    print(f"criterion {number} ({title}): {verdict} "
          f"[{len(passed)}/{len(checks)} checks, "
          f"{elapsed:.1f}s{budget_note}]")
    failed = [c["name"] for c in checks if c["status"] != "pass"]
    assert ok, f"failed checks: {failed}"
    if budget is not None:
        assert within, f"criterion {number} took {elapsed:.1f}s " \
                       f"(budget {budget:.0f}s)"
    return checks


def test_criterion_01_oracle_equivalence():
    checks = run_criterion(1, cli._criterion_1, budget=60)
    assert len(checks) == 15


def test_criterion_02_ising_normalization():
    run_criterion(2, cli._criterion_2)


def test_criterion_03_central_charges():
    checks = run_criterion(3, cli._criterion_3, budget=5)
    assert len(checks) == 12


def test_criterion_04_sub_virasoro():
    checks = run_criterion(4, cli._criterion_4)
    assert len(checks) == 4


def test_criterion_05_group_orders():
    checks = run_criterion(5, cli._criterion_5, budget=30)
    assert len(checks) == 10


def test_criterion_06_transposition_profile():
    run_criterion(6, cli._criterion_6)


def test_criterion_07_lattice_layer():
    run_criterion(7, cli._criterion_7)


def test_criterion_08_cocycle_layer():
    run_criterion(8, cli._criterion_8)


def test_criterion_09_triality():
    checks = run_criterion(9, lambda: cli._criterion_9(6), budget=60)
    assert len(checks) == 21


def test_criterion_10_property_suites():
    run_criterion(10, cli._criterion_10)
