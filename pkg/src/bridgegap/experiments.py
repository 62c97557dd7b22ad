"""Monte Carlo harness comparing measured graphs against the closed forms.

Four experiment families:

* ``run_sweep``: social distance and capital as a function of bridge
  count, with the analytic prediction carried in every row.
* ``run_concentration``: distribution of entry-path counts by length at a
  fixed parameter point.
* ``run_connectivity_transition``: fraction of connected G(n, p) draws
  around the ln(n)/n threshold.
* ``run_substrate_comparison``: the same sweep on Erdos-Renyi and
  scale-free blocks at matched density.

Trials are seeded independently as (master seed, point index, trial
index), so parallel and serial execution produce identical results, and
aggregation is order-independent.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import ResampleExhaustedError
from .generate import ModelParams, gen_er_block, gen_model, gen_model_scale_free
from .graph import CommunityGraph, build, is_connected
from .measure import count_entry_paths, social_distances
from .rng import TAG_CONCENTRATION, TAG_SWEEP, TAG_TRANSITION, STREAM_SOURCE, derive_seed, substream
from .theory import TheoryInputs, social_distance_law

SUBSTRATES = ("er", "sf")
CONNECTIVITY_POLICIES = ("resample", "record")
MAX_RESAMPLE_ATTEMPTS = 100

# a trial is excluded from the distance mean when more than half of the
# backward community cannot reach any forward node
EXCLUSION_UNREACHABLE_FRAC = 0.5

CSV_HEADER = "x,mean_dstar,std_dstar,analytic_dstar,unreachable_frac,cumulative_capital"


@dataclass(frozen=True)
class SweepConfig:
    """One bridge-count sweep: base model, x grid, trials, seeding."""

    n1: int
    p1: float
    n2: int
    p2: float
    x_values: tuple[int, ...]
    trials: int
    seed: int = 0
    substrate: str = "er"
    connectivity_policy: str = "record"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        xs = tuple(int(x) for x in self.x_values)
        if len(set(xs)) != len(xs) or list(xs) != sorted(xs):
            raise ValueError("x_values must be distinct and sorted")
        object.__setattr__(self, "x_values", xs)
        if self.substrate not in SUBSTRATES:
            raise ValueError(f"substrate must be one of {SUBSTRATES}")
        if self.connectivity_policy not in CONNECTIVITY_POLICIES:
            raise ValueError(f"connectivity_policy must be one of {CONNECTIVITY_POLICIES}")

    @classmethod
    def from_json(cls, text: str) -> "SweepConfig":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("sweep config must be a JSON object")
        required = {"n1", "p1", "n2", "p2", "x_values", "trials", "seed"}
        optional = {"substrate", "connectivity_policy"}
        missing = required - data.keys()
        if missing:
            raise ValueError(f"sweep config missing keys: {sorted(missing)}")
        unknown = data.keys() - required - optional
        if unknown:
            raise ValueError(f"sweep config has unknown keys: {sorted(unknown)}")
        return cls(
            n1=int(data["n1"]),
            p1=float(data["p1"]),
            n2=int(data["n2"]),
            p2=float(data["p2"]),
            x_values=tuple(int(x) for x in data["x_values"]),
            trials=int(data["trials"]),
            seed=int(data["seed"]),
            substrate=data.get("substrate", "er"),
            connectivity_policy=data.get("connectivity_policy", "record"),
        )

    def to_json(self) -> str:
        data = asdict(self)
        data["x_values"] = list(self.x_values)
        return json.dumps(data, indent=2)


@dataclass(frozen=True)
class SweepRow:
    x: int
    mean_dstar: float
    std_dstar: float
    analytic_dstar: float
    unreachable_frac: float
    cumulative_capital: float
    excluded_trials: int = 0
    connectivity_violations: int = 0


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    rows: tuple[SweepRow, ...]

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.x},{r.mean_dstar:.6f},{r.std_dstar:.6f},{r.analytic_dstar:.6f},"
                f"{r.unreachable_frac:.6f},{r.cumulative_capital:.6f}"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ConcentrationResult:
    """Entry-path count statistics by length over many independent draws."""

    trials: int
    l_max: int
    d0: float
    fractions: dict[int, float]
    mean_counts: dict[int, float]
    var_counts: dict[int, float]
    frac_entry_within_lmax: float

    @property
    def mean_at_lmax(self) -> float:
        return self.mean_counts[self.l_max]

    @property
    def var_at_lmax(self) -> float:
        return self.var_counts[self.l_max]


@dataclass(frozen=True)
class TransitionRow:
    multiplier: float
    p: float
    fraction_connected: float


@dataclass(frozen=True)
class ComparisonResult:
    er: SweepResult
    sf: SweepResult
    max_divergence: float
    er_increases: int
    sf_increases: int


def _trial_params(config: SweepConfig, point_idx: int, x: int, trial_idx: int, attempt: int) -> ModelParams:
    seed = derive_seed(config.seed, TAG_SWEEP, point_idx, trial_idx, attempt)
    return ModelParams(
        n1=config.n1, p1=config.p1, n2=config.n2, p2=config.p2, bridge_count=x, seed=seed
    )


def _blocks_connected(g: CommunityGraph) -> bool:
    v1 = range(g.n1)
    v2 = range(g.n1, g.n)
    return is_connected(g, v1) and is_connected(g, v2)


def _generate(params: ModelParams, substrate: str) -> CommunityGraph:
    if substrate == "sf":
        return gen_model_scale_free(params)
    return gen_model(params)


def _sweep_trial(task: tuple[SweepConfig, int, int, int]) -> tuple[int, int, float, bool, float, float, int]:
    """One sweep trial; returns point/trial ids and the trial statistics."""
    config, point_idx, x, trial_idx = task
    violations = 0
    for attempt in range(MAX_RESAMPLE_ATTEMPTS):
        params = _trial_params(config, point_idx, x, trial_idx, attempt)
        g = _generate(params, config.substrate)
        if _blocks_connected(g):
            break
        if config.connectivity_policy == "record":
            violations = 1
            break
    else:
        raise ResampleExhaustedError(
            f"no connected blocks after {MAX_RESAMPLE_ATTEMPTS} attempts at x={x}"
        )
    report = social_distances(g)
    unreachable_frac = report.unreachable_count / config.n1
    excluded = unreachable_frac > EXCLUSION_UNREACHABLE_FRAC or report.mean_dstar is None
    mean = math.nan if excluded else report.mean_dstar
    return (point_idx, trial_idx, mean, excluded, unreachable_frac, report.cumulative_capital, violations)


def _run_tasks(tasks: list, worker, n_jobs: int | None):
    if n_jobs is None:
        n_jobs = os.cpu_count() or 1
    if n_jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        chunk = max(1, len(tasks) // (4 * n_jobs))
        return list(pool.map(worker, tasks, chunksize=chunk))


def _analytic_dstar(config: SweepConfig, x: int) -> float:
    try:
        inputs = TheoryInputs(n1=config.n1, p1=config.p1, n2=config.n2, x=float(x))
        return social_distance_law(inputs).predicted_dstar
    except Exception:
        return math.nan


def run_sweep(config: SweepConfig, n_jobs: int | None = 1) -> SweepResult:
    """Measure mean social distance against bridge count.

    For each x the configured number of independent graphs is drawn and
    measured; the per-trial distance is the mean over reachable backward
    nodes, trials with majority-unreachable backward communities are
    excluded from the distance mean (but still counted in the
    unreachable fraction), and every row carries the analytic prediction
    recomputed from the row parameters.
    """
    tasks = [
        (config, pi, x, t)
        for pi, x in enumerate(config.x_values)
        for t in range(config.trials)
    ]
    outcomes = _run_tasks(tasks, _sweep_trial, n_jobs)
    outcomes.sort(key=lambda o: (o[0], o[1]))
    rows = []
    for pi, x in enumerate(config.x_values):
        point = [o for o in outcomes if o[0] == pi]
        means = np.array([o[2] for o in point if not o[3]], dtype=np.float64)
        excluded = sum(1 for o in point if o[3])
        mean = float(means.mean()) if means.size else math.nan
        std = float(means.std(ddof=1)) if means.size > 1 else (0.0 if means.size else math.nan)
        rows.append(
            SweepRow(
                x=x,
                mean_dstar=mean,
                std_dstar=std,
                analytic_dstar=_analytic_dstar(config, x),
                unreachable_frac=float(np.mean([o[4] for o in point])),
                cumulative_capital=float(np.mean([o[5] for o in point])),
                excluded_trials=excluded,
                connectivity_violations=sum(o[6] for o in point),
            )
        )
    return SweepResult(config=config, rows=tuple(rows))


def _concentration_trial(task: tuple[ModelParams, str, int, int]) -> np.ndarray:
    base, substrate, trial_idx, l_max = task
    seed = derive_seed(base.seed, TAG_CONCENTRATION, trial_idx)
    params = replace(base, seed=seed)
    g = _generate(params, substrate)
    source = int(substream(seed, STREAM_SOURCE).integers(0, params.n1))
    stats = count_entry_paths(g, source, l_max)
    return np.array([stats.counts[l] for l in range(1, l_max + 1)], dtype=np.int64)


def run_concentration(
    params: ModelParams,
    trials: int,
    l_max: int | None = None,
    substrate: str = "er",
    n_jobs: int | None = 1,
) -> ConcentrationResult:
    """Entry-path count distribution from a random source, across draws.

    Each trial draws a fresh graph, picks a source uniformly in the
    backward community, and enumerates exact path counts up to ``l_max``
    (default: ceil(d0) + 1 from the distance law). Fractions are the
    share of trials with at least one path of the given length; moments
    are the sample mean and variance (ddof=1) of the counts.
    """
    inputs = TheoryInputs(
        n1=params.n1, p1=params.p1, n2=params.n2, b=params.effective_bridge_prob
    )
    d0 = math.nan
    if l_max is None:
        d0 = social_distance_law(inputs).d0
        l_max = max(1, math.ceil(d0) + 1)
    else:
        try:
            d0 = social_distance_law(inputs).d0
        except Exception:
            d0 = math.nan
    tasks = [(params, substrate, t, int(l_max)) for t in range(trials)]
    counts = np.vstack(_run_tasks(tasks, _concentration_trial, n_jobs))
    fractions = {l: float(np.mean(counts[:, l - 1] >= 1)) for l in range(1, l_max + 1)}
    mean_counts = {l: float(counts[:, l - 1].mean()) for l in range(1, l_max + 1)}
    var_counts = {
        l: float(counts[:, l - 1].var(ddof=1)) if trials > 1 else 0.0
        for l in range(1, l_max + 1)
    }
    within = float(np.mean(counts.sum(axis=1) >= 1))
    return ConcentrationResult(
        trials=trials,
        l_max=int(l_max),
        d0=d0,
        fractions=fractions,
        mean_counts=mean_counts,
        var_counts=var_counts,
        frac_entry_within_lmax=within,
    )


def _transition_trial(task: tuple[int, float, int, int, int]) -> tuple[int, int, bool]:
    n, p, seed, ci, trial_idx = task
    rng = substream(seed, TAG_TRANSITION, ci, trial_idx)
    g = build(n, 0, gen_er_block(n, p, rng))
    return (ci, trial_idx, is_connected(g))


def run_connectivity_transition(
    n: int,
    multipliers: Sequence[float],
    trials: int,
    seed: int = 0,
    n_jobs: int | None = 1,
) -> list[TransitionRow]:
    """Connected fraction of G(n, c * ln(n)/n) for each multiplier c."""
    if n < 2:
        raise ValueError("need n >= 2")
    p0 = math.log(n) / n
    tasks = [
        (n, min(1.0, c * p0), seed, ci, t)
        for ci, c in enumerate(multipliers)
        for t in range(trials)
    ]
    outcomes = _run_tasks(tasks, _transition_trial, n_jobs)
    rows = []
    for ci, c in enumerate(multipliers):
        hits = [o[2] for o in outcomes if o[0] == ci]
        rows.append(
            TransitionRow(
                multiplier=float(c),
                p=min(1.0, c * p0),
                fraction_connected=float(np.mean(hits)),
            )
        )
    return rows


def _count_increases(rows: Iterable[SweepRow]) -> int:
    means = [r.mean_dstar for r in rows if not math.isnan(r.mean_dstar)]
    return sum(1 for a, b in zip(means, means[1:]) if b > a + 1e-9)


def run_substrate_comparison(config: SweepConfig, n_jobs: int | None = 1) -> ComparisonResult:
    """Run the same sweep on ER and scale-free blocks and compare curves.

    Both sweeps share the x grid and the master seed; with fixed bridge
    counts the bridge sets are identical draw for draw, so the curves
    differ only through the block substrate.
    """
    er = run_sweep(replace(config, substrate="er"), n_jobs=n_jobs)
    sf = run_sweep(replace(config, substrate="sf"), n_jobs=n_jobs)
    divergences = [
        abs(a.mean_dstar - b.mean_dstar)
        for a, b in zip(er.rows, sf.rows)
        if not (math.isnan(a.mean_dstar) or math.isnan(b.mean_dstar))
    ]
    return ComparisonResult(
        er=er,
        sf=sf,
        max_divergence=max(divergences) if divergences else math.nan,
        er_increases=_count_increases(er.rows),
        sf_increases=_count_increases(sf.rows),
    )
