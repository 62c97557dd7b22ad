import io

import pytest

from bridgegap import homophily_distribution, load_survey
from bridgegap.errors import BadRowArityError, EmptyInputError, EmptyLabelError, MissingColumnError
from bridgegap.survey import SurveyRecord, load_bundled_sample

HEADER = "subject_id,own_group,f1,f2,f3,f4"


def _records(text):
    return load_survey(io.StringIO(text))


def test_load_simple_record():
    records = _records(f"{HEADER}\ns1,BC,BC,BC,BC,BC\n")
    assert len(records) == 1
    assert records[0].same_group_ties == 4


def test_load_empty_after_header():
    assert _records(f"{HEADER}\n") == []


def test_header_required():
    with pytest.raises(MissingColumnError):
        _records("subject_id,own_group,f1,f2,f3\ns1,BC,BC,BC,BC\n")
    with pytest.raises(MissingColumnError):
        _records("")


def test_bad_arity_reports_line():
    with pytest.raises(BadRowArityError, match="line 3"):
        _records(f"{HEADER}\ns1,BC,BC,BC,BC,BC\ns2,BC,BC,BC,BC\n")


def test_empty_label_rejected():
    with pytest.raises(EmptyLabelError, match="line 2"):
        _records(f"{HEADER}\ns1,BC,BC,,BC,BC\n")


def test_distribution_single_record():
    dist = homophily_distribution(_records(f"{HEADER}\ns1,X,X,X,X,X\n"))
    assert dist.percentages[4] == 100.0
    assert dist.counts == {4: 1, 3: 0, 2: 0, 1: 0, 0: 0}


def test_distribution_two_records_split():
    text = f"{HEADER}\ns1,A,A,A,A,A\ns2,A,B,B,B,B\n"
    dist = homophily_distribution(_records(text))
    assert dist.percentages[4] == 50.0
    assert dist.percentages[0] == 50.0


def test_distribution_empty_input():
    with pytest.raises(EmptyInputError):
        homophily_distribution([])


def test_distribution_order_invariant():
    records = _records(
        f"{HEADER}\n" + "".join(f"s{i},A,{'A' if i % 2 else 'B'},A,B,A\n" for i in range(10))
    )
    forward = homophily_distribution(records)
    backward = homophily_distribution(list(reversed(records)))
    assert forward.counts == backward.counts
    assert forward.percentages == backward.percentages


def test_counts_sum_and_percentages_recomputable():
    records = [
        SurveyRecord("s", "G", ("G",) * k + ("H",) * (4 - k))
        for k in (4, 4, 3, 2, 0, 0, 1, 4)
    ]
    dist = homophily_distribution(records)
    assert sum(dist.counts.values()) == dist.total == len(records)
    total_pct = sum(dist.percentages.values())
    assert abs(total_pct - 100.0) <= 0.2
    for k, c in dist.counts.items():
        assert dist.percentages[k] == pytest.approx(round(c / dist.total * 100, 1), abs=0.05)


def test_rounding_half_up():
    # 1/16 = 6.25% must round up to 6.3, not to even
    records = [SurveyRecord(f"s{i}", "A", ("A", "A", "A", "A")) for i in range(15)]
    records.append(SurveyRecord("s15", "A", ("B", "B", "B", "B")))
    dist = homophily_distribution(records)
    assert dist.percentages[0] == 6.3
    assert dist.percentages[4] == 93.8  # 93.75 rounds half up


def test_bundled_sample_shape():
    records = load_bundled_sample()
    assert len(records) == 1000
    dist = homophily_distribution(records)
    assert dist.counts == {4: 620, 3: 223, 2: 77, 1: 44, 0: 36}
    assert dist.percentages == {4: 62.0, 3: 22.3, 2: 7.7, 1: 4.4, 0: 3.6}
