from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import VAS_PERM, brute_sturm, planar_meander
from sturmkit.census import (
    census,
    is_dissipative,
    is_integrable_involution,
    is_meander,
    is_morse,
    is_sturm,
)
from sturmkit.errors import LimitExceededError
from sturmkit.perm import reverse_trivial


def test_meander_examples():
    assert is_meander((1, 2, 3))
    assert not is_meander((2, 4, 1, 3))
    assert is_meander((1, 8, 7, 4, 5, 6, 3, 2, 9))


@pytest.mark.parametrize("n", range(1, 8))
def test_meander_matches_planar_simulation(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert is_meander(p) == planar_meander(p), p


def test_predicate_examples():
    assert is_dissipative((1, 2, 3)) and not is_dissipative((1, 3, 2))
    assert is_dissipative(VAS_PERM)
    assert is_morse((1, 2, 3)) and not is_morse((2, 1)) and is_morse((1, 4, 3, 2, 5))
    assert is_sturm((1, 4, 3, 2, 5)).sturm
    rep = is_sturm((1, 2, 3, 4))
    assert not rep.sturm and "N even" in rep.failures
    assert is_sturm((1, 6, 7, 10, 3, 4, 9, 8, 5, 2, 11)).sturm


def test_integrable_examples():
    assert is_integrable_involution((1, 8, 7, 4, 5, 6, 3, 2, 9)).integrable
    assert is_integrable_involution((1, 2, 3)).integrable
    rep = is_integrable_involution((1, 4, 5, 2, 3, 6, 7))
    assert not rep.integrable
    assert any(f.startswith("(i) ") for f in rep.failures)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_census_matches_brute_force(n):
    assert census(n, "all").members == sorted(brute_sturm(n), key=lambda p: ",".join(map(str, p)))


def test_census_small_values():
    assert census(1, "all").raw == 1
    assert census(3, "all").raw == 1  # only the identity among S(3)


def test_census_deterministic_across_jobs():
    a = census(11, "all", jobs=1)
    b = census(11, "all", jobs=3)
    assert a.members == b.members and a.representatives == b.representatives
    c = census(11, "integrable", jobs=1)
    d = census(11, "integrable", jobs=4)
    assert c.members == d.members


def test_limits():
    with pytest.raises(LimitExceededError):
        census(13, "all")
    with pytest.raises(ValueError):
        census(4, "all")


def test_all_sturm_thirteen_with_override():
    res = census(13, "all", jobs=None, limit=13)
    assert (res.raw, res.upto_trivial) == (1083, 566)


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_reverse_trivial_preserves_sturm(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert is_sturm(p).sturm == is_sturm(reverse_trivial(p)).sturm


@pytest.mark.parametrize("n", [9, 11])
def test_reverse_trivial_maps_census_to_itself(n):
    members = set(census(n, "all").members)
    assert {reverse_trivial(p) for p in members} == members


def test_integrable_subset_of_involutions():
    inv = set(census(11, "involutions").members)
    assert set(census(11, "integrable").members) <= inv


@settings(max_examples=200)
@given(st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_report_consistency(p):
    rep = is_integrable_involution(tuple(p))
    assert rep.sturm == (rep.meandric and rep.dissipative and rep.morse and len(p) % 2 == 1)
    if rep.integrable:
        assert rep.involution and rep.sturm


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11, 13])
def test_integrable_census_matches_signature_enumeration(n):
    from sturmkit.lapsig import MaxN, counts, enumerate_raw, enumerate_signatures

    res = census(n, "integrable")
    raw = [s for s in enumerate_raw(MaxN(n)) if counts(s)[2] == n]
    canon = [s for s in enumerate_signatures(MaxN(n)) if counts(s)[2] == n]
    assert (res.raw, res.upto_trivial) == (len(raw), len(canon))
