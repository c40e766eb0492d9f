"""Sturm predicates and brute-force censuses over S(N)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import LimitExceededError
from .perm import Permutation, as_permutation, format_perm, inverse, morse_indices, reverse_trivial

CLASSES = ("all", "involutions", "integrable")
DEFAULT_LIMITS = {"all": 11, "involutions": 13, "integrable": 13}


@dataclass
class SturmReport:
    meandric: bool = False
    dissipative: bool = False
    morse: bool = False
    sturm: bool = False
    involution: bool = False
    integrable: bool = False
    failures: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "meandric": self.meandric,
            "dissipative": self.dissipative,
            "morse": self.morse,
            "sturm": self.sturm,
            "involution": self.involution,
            "integrable": self.integrable,
            "failures": list(self.failures),
        }


def _interleave(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


def is_meander(p: Sequence[int]) -> bool:
    """Arcs between pinv(j) and pinv(j+1) alternate upper, lower; same-side arcs must not interleave."""
    pinv = inverse(p)
    sides: tuple[list[tuple[int, int]], list[tuple[int, int]]] = ([], [])
    for j in range(len(pinv) - 1):
        a, b = pinv[j], pinv[j + 1]
        arc = (min(a, b), max(a, b))
        bucket = sides[j % 2]
        if any(_interleave(arc, other) for other in bucket):
            return False
        bucket.append(arc)
    return True


def is_dissipative(p: Sequence[int]) -> bool:
    p = as_permutation(p)
    return p[0] == 1 and p[-1] == len(p)


def is_morse(p: Sequence[int]) -> bool:
    return min(morse_indices(p)) >= 0


def is_sturm(p: Sequence[int]) -> SturmReport:
    p = as_permutation(p)
    r = SturmReport(meandric=is_meander(p), dissipative=is_dissipative(p), morse=is_morse(p))
    if len(p) % 2 == 0:
        r.failures.append("N even")
    if not r.meandric:
        r.failures.append("not meandric")
    if not r.dissipative:
        r.failures.append("not dissipative")
    if not r.morse:
        r.failures.append("negative Morse index")
    r.sturm = r.meandric and r.dissipative and r.morse and len(p) % 2 == 1
    return r


def two_cycles(p: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, v) for a, v in enumerate(p, start=1) if v > a]


def stable_points(p: Sequence[int]) -> list[int]:
    idx = morse_indices(p)
    return [e for e, v in enumerate(p, start=1) if v == e and idx[e - 1] == 0]


def is_integrable_involution(p: Sequence[int]) -> SturmReport:
    p = as_permutation(p)
    r = is_sturm(p)
    r.involution = all(p[v - 1] == k for k, v in enumerate(p, start=1))
    if not r.involution:
        r.failures.append("not an involution")
        return r
    cycles = two_cycles(p)
    stable = stable_points(p)

    def core(c: tuple[int, int]) -> frozenset[int]:
        return frozenset(e for e in stable if c[0] < e < c[1])

    clauses: list[str] = []
    for x in range(len(cycles)):
        for y in range(x + 1, len(cycles)):
            a, b = cycles[x], cycles[y]
            if a[0] > b[0]:
                a, b = b, a
            intersecting = b[0] < a[1]
            nested = (b[0] - a[0]) * (a[1] - b[1]) > 0
            if intersecting and not nested:
                clauses.append(f"(i) {a} and {b} intersect without nesting")
            if nested and core(a) == core(b) and b[0] - a[0] != a[1] - b[1]:
                clauses.append(f"(ii) {a} and {b} share a core but are not centered")
            if not nested and not any(a[1] < e < b[0] for e in stable):
                clauses.append(f"(iii) {a} and {b} are not separated by a stable point")
    r.failures += clauses
    r.integrable = r.sturm and not clauses
    return r


# ------------------------------------------------------------------ census


def _sturm_from_prefix(n: int, prefix: tuple[int, ...]) -> list[Permutation]:
    """All Sturm permutations whose inverse starts with ``prefix``.

    Depth-first over the meander path pinv(1), pinv(2), ... with pruning on
    arc crossings and negative Morse indices.
    """
    pinv = list(prefix)
    used = [False] * (n + 1)
    for x in pinv:
        used[x] = True
    arcs: tuple[list[tuple[int, int]], list[tuple[int, int]]] = ([], [])
    idx = 0
    for j in range(1, len(pinv)):
        a, b = pinv[j - 1], pinv[j]
        arc = (min(a, b), max(a, b))
        if any(_interleave(arc, o) for o in arcs[(j - 1) % 2]):
            return []
        arcs[(j - 1) % 2].append(arc)
        step = 1 if b > a else -1
        idx += step if j % 2 == 1 else -step
        if idx < 0:
            return []
    found: list[Permutation] = []

    def rec(j: int, idx: int) -> None:
        # j values placed; next is value j+1
        if j == n:
            if idx == 0:
                p = [0] * n
                for v, x in enumerate(pinv, start=1):
                    p[x - 1] = v
                found.append(tuple(p))
            return
        last = pinv[-1]
        bucket = arcs[(j - 1) % 2]
        for x in range(2, n + 1):
            if used[x] or (x == n) != (j + 1 == n):
                continue
            step = 1 if x > last else -1
            nidx = idx + (step if j % 2 == 1 else -step)
            if nidx < 0:
                continue
            arc = (min(last, x), max(last, x))
            if any(_interleave(arc, o) for o in bucket):
                continue
            bucket.append(arc)
            used[x] = True
            pinv.append(x)
            rec(j + 1, nidx)
            pinv.pop()
            used[x] = False
            bucket.pop()

    if len(pinv) == n:
        rec(n, idx)
    else:
        rec(len(pinv), idx)
    return found


def _involutions(n: int, fixed_prefix: tuple[tuple[int, ...], ...] = ()) -> Iterator[Permutation]:
    """Involutions fixing 1 and N, generated from fixed points and matchings of 2..N-1."""

    def rec(rest: list[int]) -> Iterator[list[tuple[int, ...]]]:
        if not rest:
            yield []
            return
        a, tail = rest[0], rest[1:]
        for t in rec(tail):
            yield [(a,)] + t
        for k, b in enumerate(tail):
            for t in rec(tail[:k] + tail[k + 1 :]):
                yield [(a, b)] + t

    if n == 1:
        yield (1,)
        return
    rest = list(range(2, n))
    for c in fixed_prefix:
        for v in c:
            rest.remove(v)
    for cyc in rec(rest):
        p = list(range(1, n + 1))
        for c in list(fixed_prefix) + cyc:
            if len(c) == 2:
                a, b = c
                p[a - 1], p[b - 1] = b, a
        yield tuple(p)


def _shards(n: int, cls: str) -> list[tuple]:
    if n <= 3:
        return [()]
    if cls == "all":
        return [(1, x) for x in range(2, n)]
    # involutions: shard on the fate of position 2
    return [((2,),)] + [(((2, b),)) for b in range(3, n)]


def _run_shard(args: tuple[int, str, tuple]) -> list[Permutation]:
    n, cls, shard = args
    if cls == "all":
        if n == 1:
            return [(1,)]
        return _sturm_from_prefix(n, shard or (1,))
    out = []
    for p in _involutions(n, shard):
        if cls == "involutions":
            if is_sturm(p).sturm:
                out.append(p)
        elif is_integrable_involution(p).integrable:
            out.append(p)
    return out


def trivial_rep(p: Permutation) -> Permutation:
    """The lexicographically smaller of p and its trivial mirror."""
    q = reverse_trivial(p)
    return min(p, q, key=format_perm)


@dataclass
class CensusResult:
    N: int
    cls: str
    members: list[Permutation]
    representatives: list[Permutation]

    @property
    def raw(self) -> int:
        return len(self.members)

    @property
    def upto_trivial(self) -> int:
        return len(self.representatives)

    def report(self) -> dict:
        return {"N": self.N, "raw": self.raw, "uptoTrivial": self.upto_trivial}


def census(n: int, cls: str = "all", jobs: int | None = 1, limit: int | None = None) -> CensusResult:
    """Sturm permutations of length ``n`` in the requested class.

    ``jobs`` > 1 shards the search over worker processes; the merged output
    is sorted, so results do not depend on the worker count.
    """
    if cls not in CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    if n < 1 or n % 2 == 0:
        raise ValueError("N must be a positive odd integer")
    cap = DEFAULT_LIMITS[cls] if limit is None else limit
    if n > cap:
        raise LimitExceededError(f"N={n} exceeds the {cls} census limit {cap}; raise --limit")
    tasks = [(n, cls, s) for s in _shards(n, cls)]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_shard, tasks))
    else:
        parts = [_run_shard(t) for t in tasks]
    members = sorted({p for part in parts for p in part}, key=format_perm)
    reps = sorted({trivial_rep(p) for p in members}, key=format_perm)
    return CensusResult(n, cls, members, reps)
