"""Friendship-survey ingestion and homophily tallies.

Input is a CSV with header ``subject_id,own_group,f1,f2,f3,f4``: each
respondent names their own group and the groups of exactly four close
friends. Group labels are opaque strings compared only for equality.
The homophily distribution buckets respondents by how many of the four
friends share the respondent's group.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from importlib import resources
from pathlib import Path
from typing import IO, Iterable

from .errors import BadRowArityError, EmptyInputError, EmptyLabelError, MissingColumnError

EXPECTED_HEADER = ["subject_id", "own_group", "f1", "f2", "f3", "f4"]
TIE_BUCKETS = (4, 3, 2, 1, 0)

BUNDLED_SAMPLE = "survey_sample.csv"


@dataclass(frozen=True)
class SurveyRecord:
    subject_id: str
    own_group: str
    friend_groups: tuple[str, str, str, str]

    @property
    def same_group_ties(self) -> int:
        return sum(1 for f in self.friend_groups if f == self.own_group)


@dataclass(frozen=True)
class HomophilyDistribution:
    """Counts and percentages per same-group tie bucket."""

    counts: dict[int, int]
    percentages: dict[int, float]
    total: int


def load_survey(src: str | Path | IO[str]) -> list[SurveyRecord]:
    """Parse and validate survey records; malformed rows raise with line numbers."""
    if isinstance(src, (str, Path)):
        text = Path(src).read_text(encoding="utf-8")
    else:
        text = src.read()
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumnError("empty file: missing header") from None
    if header != EXPECTED_HEADER:
        raise MissingColumnError(
            f"expected header {','.join(EXPECTED_HEADER)!r}, got {','.join(header)!r}"
        )
    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(EXPECTED_HEADER):
            raise BadRowArityError(f"line {lineno}: expected {len(EXPECTED_HEADER)} fields, got {len(row)}")
        if any(not field.strip() for field in row[1:]):
            raise EmptyLabelError(f"line {lineno}: empty group label")
        records.append(
            SurveyRecord(
                subject_id=row[0],
                own_group=row[1],
                friend_groups=(row[2], row[3], row[4], row[5]),
            )
        )
    return records


def _percent(count: int, total: int) -> float:
    """count/total as a percentage, one decimal, round half up."""
    pct = Decimal(count) * 100 / Decimal(total)
    return float(pct.quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))


def homophily_distribution(records: Iterable[SurveyRecord]) -> HomophilyDistribution:
    """Tally respondents by same-group tie count."""
    records = list(records)
    if not records:
        raise EmptyInputError("no survey records")
    counts = {k: 0 for k in TIE_BUCKETS}
    for rec in records:
        counts[rec.same_group_ties] += 1
    total = len(records)
    percentages = {k: _percent(c, total) for k, c in counts.items()}
    return HomophilyDistribution(counts=counts, percentages=percentages, total=total)


def load_bundled_sample() -> list[SurveyRecord]:
    """Load the survey sample shipped with the package."""
    ref = resources.files("bridgegap").joinpath("data").joinpath(BUNDLED_SAMPLE)
    with ref.open("r", encoding="utf-8") as fh:
        return load_survey(fh)
