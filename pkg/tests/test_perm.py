from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from sturmkit.errors import PermutationError
from sturmkit.perm import (
    as_permutation,
    compose_paths,
    cycle_structure,
    format_perm,
    identity,
    inverse,
    morse_indices,
    parse_perm,
    reverse_trivial,
    zero_numbers,
)

perms = st.integers(1, 12).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_parse_and_format():
    assert parse_perm("1,8,7,4,5,6,3,2,9") == (1, 8, 7, 4, 5, 6, 3, 2, 9)
    assert parse_perm(" {1, 2 ,3} ") == (1, 2, 3)
    assert format_perm((1, 4, 3, 2, 5)) == "1,4,3,2,5"


@pytest.mark.parametrize("bad", ["1,1,2", "0,1", "1,2,4", "", "a,b"])
def test_malformed(bad):
    with pytest.raises(PermutationError):
        parse_perm(bad)


@pytest.mark.parametrize(
    "p",
    [(1, 2, 3), (1, 4, 3, 2, 5), (1, 8, 7, 4, 5, 6, 3, 2, 9)],
)
def test_inverse_examples(p):
    assert inverse(p) == p


@given(perms)
def test_inverse_involutive(p):
    assert inverse(inverse(p)) == p


def test_morse_examples():
    assert morse_indices((1,)) == (0,)
    assert morse_indices((1, 4, 3, 2, 5)) == (0, 1, 2, 1, 0)
    assert morse_indices((1, 8, 7, 4, 5, 6, 3, 2, 9)) == (0, 1, 2, 1, 0, 1, 2, 1, 0)
    assert morse_indices((2, 1))[1] == -1


@given(perms)
def test_morse_unit_steps(p):
    idx = morse_indices(p)
    assert idx[0] == 0
    assert all(abs(b - a) == 1 for a, b in zip(idx, idx[1:]))


def test_zero_number_examples():
    z = zero_numbers((1, 4, 3, 2, 5))
    assert (z[1, 3], z[2, 3], z[2, 4]) == (0, 1, 1)
    assert z[1, 1] is None


def _z_direct(p, j, jp):
    """Literal evaluation of the closed formula with rational arithmetic."""
    from fractions import Fraction

    pinv = inverse(p)
    sg = lambda k, i: (pinv[k - 1] > pinv[i - 1]) - (pinv[k - 1] < pinv[i - 1])  # noqa: E731
    total = Fraction(morse_indices(p)[j - 1])
    total += Fraction((-1) ** jp * sg(jp, j) - 1, 2)
    total += sum((-1) ** k * sg(k, j) for k in range(j + 1, jp))
    return total


@given(perms)
def test_zero_numbers_match_literal_formula(p):
    z = zero_numbers(p)
    for j, jp, v in z.entries():
        assert v == _z_direct(p, j, jp)
        assert z[jp, j] == v


def test_reverse_trivial_examples():
    assert reverse_trivial((1, 2, 3)) == (1, 2, 3)
    assert reverse_trivial((1, 4, 3, 2, 5)) == (1, 4, 3, 2, 5)
    # j -> 8 - p(8 - j) evaluated by hand: (7-6+1, ...) gives the same tuple
    assert reverse_trivial((1, 2, 5, 4, 3, 6, 7)) == (1, 2, 5, 4, 3, 6, 7)
    assert reverse_trivial((1, 3, 2)) == (2, 1, 3)


@given(perms)
def test_reverse_trivial_involutive(p):
    assert reverse_trivial(reverse_trivial(p)) == p


def test_cycle_structure():
    assert cycle_structure((1, 2, 3)) == [(1,), (2,), (3,)]
    cyc = cycle_structure((1, 8, 7, 4, 5, 6, 3, 2, 9))
    assert [c for c in cyc if len(c) == 2] == [(2, 8), (3, 7)]
    assert sorted(c[0] for c in cyc if len(c) == 1) == [1, 4, 5, 6, 9]
    vas = cycle_structure((1, 12, 11, 6, 5, 4, 7, 10, 9, 8, 3, 2, 13))
    assert [c for c in vas if len(c) == 2] == [(2, 12), (3, 11), (4, 6), (8, 10)]


@given(perms)
def test_cycles_partition(p):
    cyc = cycle_structure(p)
    assert sorted(x for c in cyc for x in c) == list(range(1, len(p) + 1))


def test_compose_paths():
    vas = (1, 12, 11, 6, 5, 4, 7, 10, 9, 8, 3, 2, 13)
    assert compose_paths(identity(13), vas) == vas
    assert compose_paths(vas, vas) == identity(13)
    assert compose_paths((2, 1), (1, 2)) == (2, 1)
    with pytest.raises(PermutationError):
        compose_paths((1, 2), (1, 2, 3))


def test_as_permutation_rejects_empty():
    with pytest.raises(PermutationError):
        as_permutation([])
