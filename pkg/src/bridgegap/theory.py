"""Closed-form predictions for the two-community model.

Pure functions evaluating the quantities the experiments are compared
against: the falling-factorial approximation behind the path-count
formulas, candidate and expected entry-path counts, the logarithmic
social-distance law, and the Erdos-Renyi connectivity threshold.

Conventions
-----------
* All factorial ratios are computed as running sums of logarithms, never
  via factorial values, so they stay finite-precision-safe up to n ~ 1e9.
* ``log`` means the natural logarithm throughout; in particular the
  connectivity threshold is ln(n)/n, the standard reading for the sharp
  Erdos-Renyi connectivity transition.
* ``d0`` denotes log base (n1*p1) of 1/(n2*b); the law predicts social
  distance d0 + 1. With a fixed bridge count x = n1*n2*b this is
  log(n1/x) / log(n1*p1), independent of n2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidRegimeError


class FallingFactorial(NamedTuple):
    exact: float
    approx: float
    ratio: float


class ExactApprox(NamedTuple):
    exact: float
    approx: float


@dataclass(frozen=True)
class TheoryInputs:
    """Model parameters as seen by the closed forms.

    Exactly one of ``b`` (bridging probability) or ``x`` (expected bridge
    count) must be given; they are interchangeable via x = n1*n2*b.
    """

    n1: int
    p1: float
    n2: int
    b: float | None = None
    x: float | None = None

    def __post_init__(self):
        if self.n1 < 2 or self.n2 < 1:
            raise ValueError("need n1 >= 2 and n2 >= 1")
        if not 0.0 <= self.p1 <= 1.0:
            raise ValueError(f"p1 must be in [0, 1], got {self.p1}")
        if (self.b is None) == (self.x is None):
            raise ValueError("exactly one of b / x required")
        if self.b is not None and not 0.0 <= self.b <= 1.0:
            raise ValueError(f"b must be in [0, 1], got {self.b}")
        if self.x is not None and self.x < 0:
            raise ValueError(f"x must be non-negative, got {self.x}")

    @property
    def bridge_prob(self) -> float:
        return self.b if self.b is not None else self.x / (self.n1 * self.n2)

    @property
    def bridge_count(self) -> float:
        return self.x if self.x is not None else self.b * self.n1 * self.n2

    @property
    def expected_bridges_per_node(self) -> float:
        """n2*b, the expected number of bridges at one backward node."""
        return self.bridge_prob * self.n2


@dataclass(frozen=True)
class TheoryReport:
    """Point predictions for one parameter set."""

    inputs: TheoryInputs
    d0: float
    predicted_dstar: float
    expected_paths_exact: dict[int, float]
    expected_paths_approx: dict[int, float]
    candidates_exact: dict[int, float]
    candidates_approx: dict[int, float]
    connectivity_p0_block1: float
    connectivity_p0_block2: float
    flags: tuple[str, ...]


def _log_falling(n: float, l: int) -> float:
    """ln of n * (n-1) * ... * (n-l+1); 0 for l == 0."""
    return math.fsum(math.log(n - i) for i in range(l))


def falling_factorial_ratio(n: int, l: int) -> FallingFactorial:
    """n!/(n-l)! alongside its n**l approximation and their ratio.

    The ratio is computed in log space so it stays meaningful even when
    both values overflow to inf.
    """
    if l < 0 or l > n:
        raise ValueError(f"need 0 <= l <= n, got n={n}, l={l}")
    if l == 0:
        return FallingFactorial(1.0, 1.0, 1.0)
    log_exact = _log_falling(n, l)
    log_approx = l * math.log(n)
    return FallingFactorial(
        exact=math.exp(log_exact),
        approx=math.exp(log_approx),
        ratio=math.exp(log_exact - log_approx),
    )


def candidate_entry_paths(n1: int, n2: int, l: int) -> ExactApprox:
    """Number of candidate entry paths of length l from a fixed node.

    Exact count n2 * (n1-1)!/(n1-l)!: one forward endpoint and an ordered
    choice of l-1 further backward nodes. Approximation n2 * n1**(l-1).
    """
    if not 1 <= l <= n1:
        raise ValueError(f"need 1 <= l <= n1, got l={l}, n1={n1}")
    log_exact = math.log(n2) + _log_falling(n1 - 1, l - 1)
    log_approx = math.log(n2) + (l - 1) * math.log(n1)
    return ExactApprox(exact=math.exp(log_exact), approx=math.exp(log_approx))


def expected_entry_paths(inputs: TheoryInputs, l: int) -> ExactApprox:
    """Expected number of entry paths of length l from a fixed node.

    Exact value: (candidate count) * p1**(l-1) * b, by linearity of
    expectation over candidate paths, with no asymptotic step.
    Approximation: (n2*b) * (n1*p1)**(l-1).
    """
    if not 1 <= l <= inputs.n1:
        raise ValueError(f"need 1 <= l <= n1, got l={l}, n1={inputs.n1}")
    b = inputs.bridge_prob
    if b == 0.0 or (inputs.p1 == 0.0 and l > 1):
        return ExactApprox(0.0, 0.0)
    log_exact = math.log(inputs.n2) + math.log(b)
    if l > 1:
        log_exact += _log_falling(inputs.n1 - 1, l - 1) + (l - 1) * math.log(inputs.p1)
    approx = inputs.n2 * b * (inputs.n1 * inputs.p1) ** (l - 1)
    return ExactApprox(exact=math.exp(log_exact), approx=approx)


def connectivity_threshold(n: int) -> float:
    """Sharp connectivity threshold ln(n)/n for G(n, p)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return math.log(n) / n


def social_distance_law(inputs: TheoryInputs, max_length: int | None = None) -> TheoryReport:
    """Evaluate the logarithmic social-distance law and its companions.

    d0 = log(1/(n2*b)) / log(n1*p1) and the predicted social distance is
    d0 + 1; equivalently d0 = log(n1/x) / log(n1*p1) with x = n1*n2*b.
    Requires n1*p1 > 1 (InvalidRegimeError otherwise) and x > 0. Out-of-
    regime parameter choices are reported through ``flags`` rather than
    rejected: ``bridges_saturated`` when x >= n1 (predicted distance at
    most 1) and ``outside_sparse_regime`` when n2*b >= 1.
    """
    np1 = inputs.n1 * inputs.p1
    if np1 <= 1.0:
        raise InvalidRegimeError(f"need n1*p1 > 1 for the law, got {np1}")
    x = inputs.bridge_count
    if x <= 0:
        raise ValueError("need a positive bridge count / probability")
    d0 = math.log(inputs.n1 / x) / math.log(np1)
    flags = []
    if x >= inputs.n1:
        flags.append("bridges_saturated")
    if inputs.expected_bridges_per_node >= 1.0:
        flags.append("outside_sparse_regime")

    if max_length is None:
        max_length = max(3, math.ceil(d0) + 2) if d0 > 0 else 3
    max_length = min(max_length, inputs.n1)
    ls = range(1, max_length + 1)
    cand = {l: candidate_entry_paths(inputs.n1, inputs.n2, l) for l in ls}
    exp_paths = {l: expected_entry_paths(inputs, l) for l in ls}
    return TheoryReport(
        inputs=inputs,
        d0=d0,
        predicted_dstar=d0 + 1.0,
        expected_paths_exact={l: v.exact for l, v in exp_paths.items()},
        expected_paths_approx={l: v.approx for l, v in exp_paths.items()},
        candidates_exact={l: v.exact for l, v in cand.items()},
        candidates_approx={l: v.approx for l, v in cand.items()},
        connectivity_p0_block1=connectivity_threshold(inputs.n1),
        connectivity_p0_block2=connectivity_threshold(inputs.n2) if inputs.n2 >= 2 else 0.0,
        flags=tuple(flags),
    )
