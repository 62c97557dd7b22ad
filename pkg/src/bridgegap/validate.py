"""Validation suite: measured behavior against exact oracles and closed forms.

Each check returns a CheckOutcome with a deterministic measured/expected
summary; the CLI renders them as a fixed-width table (no timings on
stdout, so repeated runs are byte-identical) and pytest asserts them
individually. All tunable constants live in ``acceptance``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import acceptance as acc
from .generate import ModelParams, gen_model
from .measure import count_entry_paths, entry_path_distance, social_distances
from .experiments import (
    SweepConfig,
    run_concentration,
    run_connectivity_transition,
    run_substrate_comparison,
    run_sweep,
)
from .rng import derive_seed, substream
from .survey import homophily_distribution, load_bundled_sample
from .theory import TheoryInputs, expected_entry_paths, falling_factorial_ratio


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    measured: str
    expected: str
    elapsed: float


def _outcome(name, passed, measured, expected, started) -> CheckOutcome:
    return CheckOutcome(
        name=name,
        passed=bool(passed),
        measured=measured,
        expected=expected,
        elapsed=time.perf_counter() - started,
    )


def check_oracle_equivalence(n_jobs: int | None = 1) -> CheckOutcome:
    """Per-node entry-path BFS equals the multi-source BFS distance."""
    t0 = time.perf_counter()
    mismatches = 0
    nodes_checked = 0
    for i in range(acc.ORACLE_GRAPHS):
        rng = substream(acc.ORACLE_SEED, i)
        n1 = int(rng.integers(2, 150))
        n2 = int(rng.integers(1, min(60, acc.ORACLE_MAX_NODES - n1) + 1))
        p1 = float(rng.uniform(0.0, 0.25))
        p2 = float(rng.uniform(0.0, 0.25))
        b = acc.ORACLE_BRIDGE_PROBS[i % len(acc.ORACLE_BRIDGE_PROBS)]
        params = ModelParams(
            n1=n1, p1=p1, n2=n2, p2=p2, bridge_prob=b, seed=derive_seed(acc.ORACLE_SEED, 1, i)
        )
        g = gen_model(params)
        report = social_distances(g)
        for u in range(n1):
            if entry_path_distance(g, u) != report.dstar_of(u):
                mismatches += 1
            nodes_checked += 1
    return _outcome(
        "entry-distance oracle equivalence",
        mismatches == 0,
        f"{mismatches} mismatches over {acc.ORACLE_GRAPHS} graphs ({nodes_checked} nodes)",
        "0 mismatches",
        t0,
    )


def _falling_factorial_int(n: int, l: int) -> int:
    out = 1
    for i in range(l):
        out *= n - i
    return out


def check_exhaustive_path_counts(n_jobs: int | None = 1) -> CheckOutcome:
    """On complete blocks with all bridges, enumeration matches the closed form."""
    t0 = time.perf_counter()
    mismatches = []
    cases = 0
    for n1 in range(acc.EXHAUSTIVE_N1_RANGE[0], acc.EXHAUSTIVE_N1_RANGE[1] + 1):
        for n2 in range(acc.EXHAUSTIVE_N2_RANGE[0], acc.EXHAUSTIVE_N2_RANGE[1] + 1):
            params = ModelParams(n1=n1, p1=1.0, n2=n2, p2=1.0, bridge_count=n1 * n2, seed=0)
            g = gen_model(params)
            stats = count_entry_paths(g, 0, n1)
            for l in range(1, n1 + 1):
                cases += 1
                expected = n2 * _falling_factorial_int(n1 - 1, l - 1)
                if stats.counts[l] != expected:
                    mismatches.append((n1, n2, l, stats.counts[l], expected))
    return _outcome(
        "exhaustive path counts vs closed form",
        not mismatches,
        f"{len(mismatches)} mismatches over {cases} cases",
        "exact equality for every (n1, n2, l)",
        t0,
    )


def check_expected_path_counts(n_jobs: int | None = 1) -> CheckOutcome:
    """Mean path counts over many draws match the exact expectation."""
    t0 = time.perf_counter()
    params = ModelParams(
        n1=acc.EXPECTATION_N1,
        p1=acc.EXPECTATION_P1,
        n2=acc.EXPECTATION_N2,
        p2=acc.EXPECTATION_P2,
        bridge_prob=acc.EXPECTATION_B,
        seed=acc.EXPECTATION_SEED,
    )
    result = run_concentration(
        params,
        trials=acc.EXPECTATION_DRAWS,
        l_max=max(acc.EXPECTATION_LENGTHS),
        n_jobs=n_jobs,
    )
    inputs = TheoryInputs(
        n1=params.n1, p1=params.p1, n2=params.n2, b=params.bridge_prob
    )
    worst = 0.0
    details = []
    for l in acc.EXPECTATION_LENGTHS:
        exact = expected_entry_paths(inputs, l).exact
        se = math.sqrt(result.var_counts[l] / result.trials)
        dev = abs(result.mean_counts[l] - exact) / se if se > 0 else math.inf
        worst = max(worst, dev)
        details.append(f"l={l}: {result.mean_counts[l]:.4f} vs {exact:.4f} ({dev:.2f} se)")
    return _outcome(
        "mean path counts vs expectation",
        worst <= acc.EXPECTATION_SE_FACTOR,
        "; ".join(details),
        f"all within {acc.EXPECTATION_SE_FACTOR:.0f} standard errors",
        t0,
    )


def check_falling_factorial_quality(n_jobs: int | None = 1) -> CheckOutcome:
    """Approximation ratio near 1 at large n and monotone along the n grid."""
    t0 = time.perf_counter()
    ratio = falling_factorial_ratio(acc.FF_N, acc.FF_L).ratio
    in_band = acc.FF_RATIO_BAND[0] <= ratio <= acc.FF_RATIO_BAND[1]
    grid = [falling_factorial_ratio(n, acc.FF_L).ratio for n in acc.FF_MONOTONE_GRID]
    monotone = all(a < b for a, b in zip(grid, grid[1:]))
    return _outcome(
        "falling-factorial approximation",
        in_band and monotone,
        f"ratio(n={acc.FF_N}, l={acc.FF_L})={ratio:.6f}; grid monotone={monotone}",
        f"ratio in [{acc.FF_RATIO_BAND[0]}, {acc.FF_RATIO_BAND[1]}] and increasing in n",
        t0,
    )


def check_connectivity_transition(n_jobs: int | None = 1) -> CheckOutcome:
    """Connectivity is common above the ln(n)/n threshold and rare below."""
    t0 = time.perf_counter()
    rows = run_connectivity_transition(
        acc.TRANSITION_N,
        [acc.TRANSITION_LOW_MULTIPLIER, acc.TRANSITION_HIGH_MULTIPLIER],
        trials=acc.TRANSITION_TRIALS,
        seed=acc.TRANSITION_SEED,
        n_jobs=n_jobs,
    )
    low, high = rows[0].fraction_connected, rows[1].fraction_connected
    passed = high >= acc.TRANSITION_HIGH_MIN_FRAC and low <= acc.TRANSITION_LOW_MAX_FRAC
    return _outcome(
        "connectivity phase transition",
        passed,
        f"connected frac: c={acc.TRANSITION_LOW_MULTIPLIER} -> {low:.2f}, "
        f"c={acc.TRANSITION_HIGH_MULTIPLIER} -> {high:.2f}",
        f"<= {acc.TRANSITION_LOW_MAX_FRAC} below, >= {acc.TRANSITION_HIGH_MIN_FRAC} above",
        t0,
    )


def check_path_concentration(n_jobs: int | None = 1) -> CheckOutcome:
    """Short entry paths are rare; paths within ceil(d0)+1 are the norm."""
    t0 = time.perf_counter()
    params = ModelParams(
        n1=acc.CONCENTRATION_N1,
        p1=acc.CONCENTRATION_P1,
        n2=acc.CONCENTRATION_N2,
        p2=acc.CONCENTRATION_P2,
        bridge_prob=acc.CONCENTRATION_B,
        seed=acc.CONCENTRATION_SEED,
    )
    result = run_concentration(params, trials=acc.CONCENTRATION_TRIALS, n_jobs=n_jobs)
    short_frac = result.fractions[1]
    within = result.frac_entry_within_lmax
    passed = (
        short_frac <= acc.CONCENTRATION_SHORT_MAX_FRAC
        and within >= acc.CONCENTRATION_WITHIN_MIN_FRAC
    )
    return _outcome(
        "entry-path concentration",
        passed,
        f"d0={result.d0:.3f}; frac(len 1)={short_frac:.3f}; "
        f"frac(entry within {result.l_max})={within:.3f}",
        f"<= {acc.CONCENTRATION_SHORT_MAX_FRAC} short, >= {acc.CONCENTRATION_WITHIN_MIN_FRAC} within",
        t0,
    )


def check_distance_law_sweep(n_jobs: int | None = 1) -> CheckOutcome:
    """Worked sweep: analytic column {5, 4, 3} and measured means within band."""
    t0 = time.perf_counter()
    config = SweepConfig(
        n1=acc.LAW_SWEEP_N1,
        p1=acc.LAW_SWEEP_P1,
        n2=acc.LAW_SWEEP_N2,
        p2=acc.LAW_SWEEP_P2,
        x_values=acc.LAW_SWEEP_XS,
        trials=acc.LAW_SWEEP_TRIALS,
        seed=acc.LAW_SWEEP_SEED,
        substrate="er",
        connectivity_policy="record",
    )
    result = run_sweep(config, n_jobs=n_jobs)
    analytic_ok = all(
        abs(row.analytic_dstar - want) <= acc.LAW_SWEEP_ANALYTIC_TOL
        for row, want in zip(result.rows, acc.LAW_SWEEP_ANALYTIC)
    )
    deviations = [
        abs(row.mean_dstar - want) for row, want in zip(result.rows, acc.LAW_SWEEP_ANALYTIC)
    ]
    empirical_ok = all(d <= acc.LAW_SWEEP_EMPIRICAL_BAND for d in deviations)
    measured = "; ".join(
        f"x={row.x}: mean={row.mean_dstar:.3f} analytic={row.analytic_dstar:.3f}"
        for row in result.rows
    )
    return _outcome(
        "distance-law sweep (n1=10^4)",
        analytic_ok and empirical_ok,
        measured,
        f"analytic {list(acc.LAW_SWEEP_ANALYTIC)}, measured within "
        f"{acc.LAW_SWEEP_EMPIRICAL_BAND} of each",
        t0,
    )


def check_substrate_comparison(n_jobs: int | None = 1) -> CheckOutcome:
    """ER and scale-free substrates give nearby, non-increasing curves."""
    t0 = time.perf_counter()
    config = SweepConfig(
        n1=acc.COMPARISON_N1,
        p1=acc.COMPARISON_P1,
        n2=acc.COMPARISON_N2,
        p2=acc.COMPARISON_P2,
        x_values=acc.COMPARISON_XS,
        trials=acc.COMPARISON_TRIALS,
        seed=acc.COMPARISON_SEED,
        substrate="er",
        connectivity_policy="record",
    )
    result = run_substrate_comparison(config, n_jobs=n_jobs)
    passed = (
        result.max_divergence <= acc.COMPARISON_MAX_DIVERGENCE
        and result.er_increases <= acc.COMPARISON_MAX_INCREASES
        and result.sf_increases <= acc.COMPARISON_MAX_INCREASES
    )
    return _outcome(
        "substrate comparison (ER vs SF)",
        passed,
        f"max divergence={result.max_divergence:.3f}; increases: "
        f"er={result.er_increases}, sf={result.sf_increases}",
        f"divergence <= {acc.COMPARISON_MAX_DIVERGENCE}, "
        f"increases <= {acc.COMPARISON_MAX_INCREASES} per curve",
        t0,
    )


def check_survey_distribution(n_jobs: int | None = 1) -> CheckOutcome:
    """Bundled sample against the reference homophily percentages.

    The reference values sum to 101.9%, which no true distribution can
    reproduce; the bundled sample matches buckets 4..1 exactly and this
    check is expected to fail on bucket 0. Kept faithful rather than
    weakened.
    """
    t0 = time.perf_counter()
    dist = homophily_distribution(load_bundled_sample())
    passed = all(dist.percentages[k] == v for k, v in acc.SURVEY_EXPECTED.items())
    measured = ", ".join(f"{k}: {dist.percentages[k]}" for k in sorted(acc.SURVEY_EXPECTED, reverse=True))
    expected = ", ".join(f"{k}: {v}" for k, v in sorted(acc.SURVEY_EXPECTED.items(), reverse=True))
    return _outcome("survey homophily distribution", passed, measured, expected, t0)


Check = Callable[[int | None], CheckOutcome]

QUICK_CHECKS: tuple[Check, ...] = (
    check_oracle_equivalence,
    check_exhaustive_path_counts,
    check_expected_path_counts,
    check_falling_factorial_quality,
    check_connectivity_transition,
    check_survey_distribution,
)

FULL_CHECKS: tuple[Check, ...] = QUICK_CHECKS + (
    check_path_concentration,
    check_distance_law_sweep,
    check_substrate_comparison,
)


def run_level(level: str, n_jobs: int | None = 1) -> list[CheckOutcome]:
    if level == "quick":
        checks = QUICK_CHECKS
    elif level == "full":
        checks = FULL_CHECKS
    else:
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    return [check(n_jobs) for check in checks]


def render_table(outcomes: list[CheckOutcome]) -> str:
    """Fixed-width PASS/FAIL table; deterministic (no timings)."""
    name_w = max(len(o.name) for o in outcomes)
    lines = []
    for o in outcomes:
        status = "PASS" if o.passed else "FAIL"
        lines.append(f"{status}  {o.name.ljust(name_w)}  measured: {o.measured}")
        lines.append(f"      {' ' * name_w}  expected: {o.expected}")
    passed = sum(o.passed for o in outcomes)
    lines.append(f"{passed}/{len(outcomes)} checks passed")
    return "\n".join(lines) + "\n"
