"""One-line permutations, Morse indices and zero numbers.

Everything is 1-based: ``p[j - 1]`` is the value at position ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InternalInvariantError, PermutationError

Permutation = tuple[int, ...]


def as_permutation(entries: Iterable[int]) -> Permutation:
    """Validate and freeze a sequence of 1..N."""
    p = tuple(int(v) for v in entries)
    n = len(p)
    if n == 0:
        raise PermutationError("empty permutation")
    seen = [False] * (n + 1)
    for v in p:
        if v < 1 or v > n:
            raise PermutationError(f"value {v} out of range 1..{n}")
        if seen[v]:
            raise PermutationError(f"duplicate value {v}")
        seen[v] = True
    return p


def parse_perm(text: str) -> Permutation:
    body = text.strip().strip("{}[]() ")
    if not body:
        raise PermutationError("empty permutation")
    try:
        vals = [int(tok) for tok in body.replace(" ", ",").split(",") if tok != ""]
    except ValueError as exc:
        raise PermutationError(f"not a comma-separated integer list: {text!r}") from exc
    return as_permutation(vals)


def format_perm(p: Sequence[int]) -> str:
    return ",".join(str(v) for v in p)


def inverse(p: Sequence[int]) -> Permutation:
    p = as_permutation(p)
    out = [0] * len(p)
    for pos, v in enumerate(p, start=1):
        out[v - 1] = pos
    return tuple(out)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sigma_kj(pinv: Sequence[int], k: int, j: int) -> int:
    return _sign(pinv[k - 1] - pinv[j - 1])


def morse_indices(p: Sequence[int]) -> tuple[int, ...]:
    """i_1 = 0 and i_{j+1} = i_j + (-1)^(j+1) * sign(pinv(j+1) - pinv(j))."""
    pinv = inverse(p)
    out = [0]
    for j in range(1, len(pinv)):
        step = _sigma_kj(pinv, j + 1, j)
        out.append(out[-1] + (step if j % 2 == 1 else -step))
    return tuple(out)


@dataclass(frozen=True)
class ZeroMatrix:
    """Symmetric zero-number table; index with 1-based ``z[j, k]``."""

    n: int
    values: tuple[tuple[int | None, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int | None:
        j, k = key
        return self.values[j - 1][k - 1]

    def entries(self):
        for j in range(1, self.n + 1):
            for k in range(j + 1, self.n + 1):
                yield j, k, self.values[j - 1][k - 1]


def zero_numbers(p: Sequence[int]) -> ZeroMatrix:
    pinv = inverse(p)
    n = len(pinv)
    idx = morse_indices(p)
    table: list[list[int | None]] = [[None] * n for _ in range(n)]
    for j in range(1, n + 1):
        partial = 0  # running sum over k strictly between j and j'
        for jp in range(j + 1, n + 1):
            term = _sigma_kj(pinv, jp, j) * (1 if jp % 2 == 0 else -1)
            numer = term - 1
            if numer % 2:
                raise InternalInvariantError(f"odd half-term at ({j},{jp})")
            z = idx[j - 1] + numer // 2 + partial
            table[j - 1][jp - 1] = z
            table[jp - 1][j - 1] = z
            partial += _sigma_kj(pinv, jp, j) * (1 if jp % 2 == 0 else -1)
    return ZeroMatrix(n, tuple(tuple(r) for r in table))


def reverse_trivial(p: Sequence[int]) -> Permutation:
    """Conjugation by position and value reversal: j -> N+1 - p(N+1-j)."""
    p = as_permutation(p)
    n = len(p)
    return tuple(n + 1 - p[n - j] for j in range(1, n + 1))


def cycle_structure(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest element, ordered by that element."""
    p = as_permutation(p)
    seen = [False] * (len(p) + 1)
    cycles = []
    for start in range(1, len(p) + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x - 1]
        cycles.append(tuple(cyc))
    return cycles


def compose_paths(h0: Sequence[int], h1: Sequence[int]) -> Permutation:
    """Return h0^{-1} o h1 in one-line form."""
    h0 = as_permutation(h0)
    h1 = as_permutation(h1)
    if len(h0) != len(h1):
        raise PermutationError(f"length mismatch {len(h0)} vs {len(h1)}")
    h0inv = inverse(h0)
    return tuple(h0inv[v - 1] for v in h1)


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))
