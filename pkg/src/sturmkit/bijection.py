"""Signatures <-> integrable Sturm involutions, plus the min/max pairing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InternalInvariantError, NotIntegrableError
from .lapsig import NEG, Annular, Central, Pair, Signature, labels, serialize
from .perm import Permutation, as_permutation, compose_paths, morse_indices

__all__ = ["Pairing", "signature_to_permutation", "permutation_to_signature", "compose_paths"]


@dataclass(frozen=True)
class Pairing:
    """(min position, max position) for every frozen list entry pair."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def partner(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out


def signature_to_permutation(sig: Signature) -> tuple[Permutation, Pairing]:
    labs = labels(sig)
    entries = list(range(1, len(labs) + 1))
    pairs = []
    for lab in labs:
        if lab.role != "min":
            continue
        a, b = lab.position, lab.partner
        pairs.append((a, b))
        if lab.lap % 2 == 1:  # odd laps swap boundary order
            entries[a - 1], entries[b - 1] = b, a
    perm = as_permutation(entries)
    from .census import is_integrable_involution

    report = is_integrable_involution(perm)
    if not report.integrable:
        raise InternalInvariantError(
            f"image of {serialize(sig)} is not an integrable involution: {report.failures}"
        )
    return perm, Pairing(tuple(sorted(pairs)))


def _read_laps(p: Sequence[int], first: int, last: int, count: int, annular: bool) -> tuple[int, ...]:
    """Lap numbers of the lower list starting at ``first`` inside the pair ending at ``last``.

    ``count`` fixes the length for central pairs; annular lists stop at the
    first point where the automaton sits at lap 1 with a positive crossing
    and the next entry is not mirrored.
    """
    laps: list[int] = []
    sign = NEG
    j = 0
    while True:
        if count >= 0 and j == count:
            break
        pos = first + j
        if pos >= last - j:
            raise NotIntegrableError("structure", f"list starting at {first} overruns its pair")
        odd = p[pos - 1] == last - j
        if not odd and p[pos - 1] != pos:
            raise NotIntegrableError("structure", f"position {pos} is neither mirrored nor fixed")
        if not laps:
            if not odd:
                raise NotIntegrableError("structure", f"list at {first} must start with lap 1")
            laps.append(1)
        else:
            prev = laps[-1]
            if (prev % 2 == 1) != odd:
                lap = prev + 1 if sign == NEG else prev - 1
                if lap < 1:
                    raise NotIntegrableError("structure", f"lap drops below 1 at {pos}")
                laps.append(lap)
            else:
                laps.append(prev)
                sign = NEG if sign != NEG else "Pos"
        j += 1
        if annular and laps[-1] == 1 and sign != NEG:
            nxt = first + j
            if not (nxt < last - j and p[nxt - 1] == last - j):
                break
    return tuple(laps)


def permutation_to_signature(p: Sequence[int]) -> Signature:
    """Rebuild the signature whose image is ``p``; raise NotIntegrableError otherwise."""
    from .census import is_integrable_involution

    p = as_permutation(p)
    report = is_integrable_involution(p)
    if not report.integrable:
        named = [f for f in report.failures if f.startswith("(")]
        clause = (named or report.failures or ["unknown"])[0]
        raise NotIntegrableError(clause)
    n = len(p)
    idx = morse_indices(p)

    def stable(k: int) -> bool:
        return p[k - 1] == k and idx[k - 1] == 0

    def parse_pair(x: int) -> tuple[Pair, int]:
        y = p[x - 1]
        if y == x:
            if idx[x - 1] == 0:
                raise NotIntegrableError("structure", f"expected a pair at {x}, found a saddle")
            return Central((), ()), x + 1
        if y < x:
            raise NotIntegrableError("structure", f"pair at {x} closes before it opens")
        if any(stable(k) for k in range(x + 1, y)):
            lower = _read_laps(p, x, y, -1, annular=True)
            s = len(lower)
            inner = parse_seq(x + s, y - s + 1)
            return Annular(lower, tuple(inner), tuple(reversed(lower))), y + 1
        if (y - x) % 2:
            raise NotIntegrableError("structure", f"central pair {x}..{y} has no midpoint")
        s = (y - x) // 2
        lower = _read_laps(p, x, y, s, annular=False)
        return Central(lower, tuple(reversed(lower))), y + 1

    def parse_seq(start: int, stop: int) -> list[Pair]:
        pairs: list[Pair] = []
        pos = start
        while True:
            pair, pos = parse_pair(pos)
            pairs.append(pair)
            if pos >= stop:
                break
            if not stable(pos):
                raise NotIntegrableError("structure", f"expected a saddle at {pos}")
            pos += 1
        if pos != stop:
            raise NotIntegrableError("structure", f"sequence overruns {stop}")
        return pairs

    if not stable(1) or not stable(n):
        raise NotIntegrableError("structure", "endpoints must be saddles")
    sig = Signature(tuple(parse_seq(2, n)) if n > 1 else ())
    try:
        back, _ = signature_to_permutation(sig)
    except Exception as exc:  # reconstruction produced an invalid tree
        raise NotIntegrableError("structure", str(exc)) from exc
    if back != p:
        raise NotIntegrableError("structure", f"reconstruction {serialize(sig)} does not round-trip")
    return sig
