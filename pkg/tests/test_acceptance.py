"""Acceptance suite: every release criterion at its stated tolerance.

Each test runs one validation check, prints a single PASS/FAIL line with
the measured values (visible under ``pytest -s``), and asserts both the
check outcome and its runtime budget. Tolerances live in
``bridgegap.acceptance``.

The survey-distribution criterion is expected to fail: its reference
percentages sum to 101.9%, which no true distribution over disjoint
buckets can produce. The check is kept faithful to the reference values
rather than weakened; see the README for the analysis.
"""

import subprocess
import sys

import pytest

from bridgegap import acceptance as acc
from bridgegap import validate as v


def report(outcome, budget):
    status = "PASS" if outcome.passed else "FAIL"
    print(f"{status}  {outcome.name} [{outcome.elapsed:.2f}s]: {outcome.measured}")
    assert outcome.elapsed < budget, f"runtime budget exceeded: {outcome.elapsed:.2f}s >= {budget}s"
    assert outcome.passed, f"{outcome.name}: measured {outcome.measured}; expected {outcome.expected}"


def test_entry_distance_oracle_equivalence():
    report(v.check_oracle_equivalence(1), acc.ORACLE_TIME_BUDGET_S)


def test_exhaustive_path_counts_match_closed_form():
    report(v.check_exhaustive_path_counts(1), acc.EXHAUSTIVE_TIME_BUDGET_S)


def test_mean_path_counts_match_expectation():
    report(v.check_expected_path_counts(1), acc.EXPECTATION_TIME_BUDGET_S)


def test_falling_factorial_approximation_quality():
    report(v.check_falling_factorial_quality(1), acc.FF_TIME_BUDGET_S)


def test_connectivity_phase_transition():
    report(v.check_connectivity_transition(1), acc.TRANSITION_TIME_BUDGET_S)


def test_entry_path_concentration():
    report(v.check_path_concentration(1), acc.CONCENTRATION_TIME_BUDGET_S)


def test_distance_law_worked_sweep():
    report(v.check_distance_law_sweep(None), acc.LAW_SWEEP_TIME_BUDGET_S)


def test_substrate_comparison_qualitative():
    report(v.check_substrate_comparison(None), acc.COMPARISON_TIME_BUDGET_S)


def test_survey_distribution_reproduction():
    report(v.check_survey_distribution(1), acc.SURVEY_TIME_BUDGET_S)


def test_validate_quick_is_deterministic():
    runs = [
        subprocess.run(
            [sys.executable, "-m", "bridgegap", "validate", "--level", "quick", "--threads", "4"],
            capture_output=True,
        )
        for _ in range(2)
    ]
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].returncode == runs[1].returncode
    print("PASS  validate --level quick determinism: byte-identical reports")
