from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grassmod.reports import EXIT_CODES, CheckReport, SuiteReport, canonical, dumps, worst


def test_canonical_numbers():
    assert canonical({"a": 3, "b": Fraction(1, 2), "c": Fraction(4), "d": True, "e": None}) == {
        "a": "3", "b": "1/2", "c": "4", "d": True, "e": None}
    with pytest.raises(TypeError):
        canonical(0.5)


def test_dumps_sorted_and_stable():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    "1",\n    "2"\n  ],\n  "b": "1"\n}\n'


def test_worst_and_exit_codes():
    assert worst(["pass", "skipped"]) == "skipped"
    assert worst(["pass", "inconclusive", "skipped"]) == "inconclusive"
    assert worst(["fail", "inconclusive"]) == "fail"
    assert worst([]) == "pass"
    assert EXIT_CODES == {"pass": 0, "fail": 2, "inconclusive": 3, "skipped": 4}


json_values = st.recursive(
    st.none() | st.booleans() | st.integers() | st.text(max_size=8)
    | st.fractions(min_value=-100, max_value=100, max_denominator=50),
    lambda children: st.lists(children, max_size=3) | st.dictionaries(st.text(max_size=5), children, max_size=3),
    max_leaves=10)


@settings(max_examples=100, deadline=None)
@given(params=st.dictionaries(st.text(min_size=1, max_size=6), json_values, max_size=4),
       witness=json_values, status=st.sampled_from(sorted(EXIT_CODES)), seed=st.integers(0, 2 ** 64 - 1),
       runtime=st.none() | st.integers(0, 10 ** 6))
def test_report_round_trip_byte_identical(params, witness, status, seed, runtime):
    rep = CheckReport("x.y", "anchor", params, status, seed, None, witness, {"k": 1}, runtime)
    text = rep.to_json()
    again = CheckReport.from_json(text)
    assert again.to_json() == text
    assert again.exit_code == EXIT_CODES[status]


def test_runtime_only_when_recorded():
    rep = CheckReport("a", "b", {}, "pass", 1)
    assert "runtime_ms" not in rep.to_dict()
    assert CheckReport("a", "b", {}, "pass", 1, runtime_ms=5).to_dict()["runtime_ms"] == "5"


def test_suite_report_aggregates():
    reps = [CheckReport("a", "x", {}, "pass", 1), CheckReport("b", "y", {}, "inconclusive", 1)]
    suite = SuiteReport("quick", 1, reps)
    assert suite.status == "inconclusive" and suite.exit_code == 3
    assert suite.to_dict()["counts"] == {"pass": "1", "fail": "0", "inconclusive": "1", "skipped": "0"}


def test_unknown_status_rejected():
    with pytest.raises(ValueError):
        CheckReport("a", "b", {}, "maybe", 1)
