"""Formal pitchfork detection and reduction N -> N-2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import Permutation, as_permutation


@dataclass(frozen=True)
class ReductionStep:
    position: int
    collapsed: tuple[int, int, int]
    result: Permutation


def find_pitchforks(p: Sequence[int]) -> list[int]:
    """Positions q where p(q), p(q+1), p(q+2) are consecutive integers in monotone order."""
    p = as_permutation(p)
    if len(p) < 3:
        raise ValueError("pitchforks need N >= 3")
    out = []
    for q in range(len(p) - 2):
        a, b, c = p[q : q + 3]
        if (b == a + 1 and c == b + 1) or (b == a - 1 and c == b - 1):
            out.append(q + 1)
    return out


def reduce_at(p: Sequence[int], q: int) -> Permutation:
    p = as_permutation(p)
    if len(p) < 3 or q not in find_pitchforks(p):
        raise ValueError(f"no pitchfork at position {q}")
    triple = p[q - 1 : q + 2]
    m = min(triple)
    kept = list(p[: q - 1]) + [m] + list(p[q + 2 :])
    # values above the collapsed triple shift down by two
    return tuple(v - 2 if v > m + 2 else v for v in kept)


def fully_reducible(p: Sequence[int]) -> tuple[bool, list[ReductionStep]]:
    """Greedy reduction at the first available pitchfork until N = 1 or stuck."""
    cur = as_permutation(p)
    trace: list[ReductionStep] = []
    while len(cur) > 1:
        spots = find_pitchforks(cur) if len(cur) >= 3 else []
        if not spots:
            return False, trace
        q = spots[0]
        nxt = reduce_at(cur, q)
        trace.append(ReductionStep(q, tuple(cur[q - 1 : q + 2]), nxt))
        cur = nxt
    return True, trace


def fully_reducible_exhaustive(p: Sequence[int]) -> tuple[bool, list[ReductionStep]]:
    """Backtrack over every pitchfork choice; returns the first successful trace."""
    seen: set[Permutation] = set()

    def rec(cur: Permutation) -> list[ReductionStep] | None:
        if len(cur) == 1:
            return []
        if cur in seen or len(cur) < 3:
            return None
        seen.add(cur)
        for q in find_pitchforks(cur):
            nxt = reduce_at(cur, q)
            rest = rec(nxt)
            if rest is not None:
                return [ReductionStep(q, tuple(cur[q - 1 : q + 2]), nxt)] + rest
        return None

    trace = rec(as_permutation(p))
    return (trace is not None), (trace or [])


def integrable_reduction(p: Sequence[int]) -> tuple[bool, list[ReductionStep]]:
    """Reduce to N = 1 through integrable involutions only, backtracking over choices."""
    from .census import is_integrable_involution

    def rec(cur: Permutation) -> list[ReductionStep] | None:
        if len(cur) == 1:
            return []
        if len(cur) < 3:
            return None
        for q in find_pitchforks(cur):
            nxt = reduce_at(cur, q)
            if not is_integrable_involution(nxt).integrable:
                continue
            rest = rec(nxt)
            if rest is not None:
                return [ReductionStep(q, tuple(cur[q - 1 : q + 2]), nxt)] + rest
        return None

    trace = rec(as_permutation(p))
    return (trace is not None), (trace or [])
