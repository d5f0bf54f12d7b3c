from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import literal_sensitivity, symmetric_from_values
from symsens.core import CompactTruthTable, sensitivity_profile
from symsens.counting import max_sensitivity_count
from symsens.distribution import (
    SensitivityHistogram,
    census,
    census_reference,
    scan,
    table_rows,
    turan_bound,
    verify_theorem1,
    verify_turan,
)
from symsens.errors import FormatError, SizeError


@pytest.mark.parametrize(
    "n, counts", [(1, {0: 2, 1: 2}), (2, {0: 2, 2: 6}), (3, {0: 2, 2: 2, 3: 12})]
)
def test_census_examples(n, counts):
    hist = census(n)
    assert hist.nonzero() == counts
    assert hist.total == 2 ** (n + 1)


def test_census_against_literal_oracle():
    for n in range(1, 6):
        counts = {}
        for values in product((0, 1), repeat=n + 1):
            s = literal_sensitivity(n, symmetric_from_values(values))
            counts[s] = counts.get(s, 0) + 1
        assert census(n).nonzero() == dict(sorted(counts.items()))


def test_census_matches_reference_loop():
    for n in range(1, 13):
        assert census(n) == census_reference(n)


@pytest.mark.parametrize("n, count", [(3, 12), (1, 2), (12, 7904)])
def test_verify_theorem1(n, count):
    check = verify_theorem1(n)
    assert check and check.counterexamples == 0
    assert check.max_sensitivity_count == count


def test_verify_theorem1_vector_path():
    for n in (13, 16):
        check = verify_theorem1(n)
        assert check and check.max_sensitivity_count == max_sensitivity_count(n)


def test_verify_turan_examples():
    assert verify_turan(3) and verify_turan(3).min_nontrivial == 2
    assert verify_turan(1) and verify_turan(1).min_nontrivial == 1
    check = verify_turan(10)
    assert check and check.bound == 6 and check.min_nontrivial == 6
    assert sensitivity_profile(check.witness).max == 6


def test_turan_bound_is_tight():
    for n in range(1, 15):
        assert verify_turan(n).min_nontrivial == turan_bound(n)


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 12), st.integers(4, 10), st.sampled_from([1, 2, 4, None]))
def test_parallel_equals_sequential(n, chunk_bits, workers):
    assert census(n, workers=workers, chunk_bits=chunk_bits) == census(n)
    assert scan(n, workers=workers, chunk_bits=chunk_bits) == scan(n)


def test_histogram_invariants():
    for n in range(1, 17):
        hist = census(n)
        assert hist.total == 2 ** (n + 1)
        assert hist[0] == 2
        assert all(hist[s] == 0 for s in range(1, turan_bound(n)))
        assert all(c % 2 == 0 for c in hist.counts.values())
        assert hist[n] == max_sensitivity_count(n)


def test_caps():
    with pytest.raises(SizeError, match="compact tables"):
        census(25)
    with pytest.raises(SizeError):
        census(63, cap=100)
    with pytest.raises(SizeError):
        list(table_rows(7))


def test_histogram_round_trips():
    for n in (1, 3, 8):
        hist = census(n)
        assert SensitivityHistogram.from_csv(hist.to_csv()) == hist
        assert SensitivityHistogram.from_json(hist.to_json()) == hist
    assert census(2).to_json() == '{"n":2,"counts":{"0":2,"2":6},"total":8}'
    assert census(3).to_csv().splitlines() == ["n,s,count", "3,0,2", "3,2,2", "3,3,12"]
    with pytest.raises(FormatError):
        SensitivityHistogram.from_json('{"n":2,"counts":{"0":2},"total":8}')
    with pytest.raises(FormatError):
        SensitivityHistogram.from_csv("n,s,count\n2,0,2\n3,0,2\n")


def test_table_rows_order():
    rows = [(str(c), str(comp), s) for c, comp, s in table_rows(1)]
    assert rows == [("11", "2", 0), ("10", "1+1", 1), ("01", "1+1", 1), ("00", "2", 0)]
    assert {s for _, _, s in table_rows(2)} == {0, 2}
    assert len(list(table_rows(6))) == 128
