"""Full lap signatures: grammar, axioms, crossing signs, labels, enumeration.

Text form uses ``*`` for a saddle, ``@`` for a center, ``(`` ``)`` for a
min/max list pair and ``{1,2}`` for a lap list.  Saddles are implicit in the
tree: the top level and every annular interior alternate pair, saddle, pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import InternalInvariantError, ParseError, ValidationError

NEG = "Neg"
POS = "Pos"


@dataclass(frozen=True)
class Central:
    lower: tuple[int, ...]
    upper: tuple[int, ...]


@dataclass(frozen=True)
class Annular:
    lower: tuple[int, ...]
    inner: tuple["Pair", ...]
    upper: tuple[int, ...]


Pair = Union[Central, Annular]


@dataclass(frozen=True)
class Signature:
    pairs: tuple[Pair, ...] = ()

    def __str__(self) -> str:
        return serialize(self)


@dataclass(frozen=True)
class EquilibriumLabel:
    position: int
    kind: str  # "saddle" | "center" | "frozen"
    morse_neumann: int
    morse_periodic: int
    lap: int | None = None
    role: str | None = None  # "min" | "max"
    tprime_sign: str | None = None
    partner: int | None = None  # position of the paired min/max entry


# ---------------------------------------------------------------- parsing

_WS = " \t\r\n"


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.violations: list[tuple[str, str]] = []

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos] in _WS:
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, got {got!r}", self.pos)
        self.pos += 1

    def lap_list(self) -> tuple[int, ...]:
        self.take("{")
        vals: list[int] = []
        if self.peek() == "}":
            self.pos += 1
            return ()
        while True:
            self.peek()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                raise ParseError("expected a lap number", start)
            v = int(self.text[start : self.pos])
            if v < 1:
                raise ParseError("lap numbers must be positive", start)
            vals.append(v)
            ch = self.peek()
            if ch == ",":
                self.pos += 1
            elif ch == "}":
                self.pos += 1
                return tuple(vals)
            else:
                raise ParseError(f"unexpected {ch or 'end of input'!r} in lap list", self.pos)

    def items(self, closer: str) -> list:
        """Read '*', '@' and pairs until ``closer`` (or end for the top level)."""
        out: list = []
        while True:
            ch = self.peek()
            if ch == closer or (ch == "{" and closer == ")"):
                return out
            if ch == "*":
                self.pos += 1
                out.append("*")
            elif ch == "@":
                self.pos += 1
                out.append("@")
            elif ch == "(":
                out.append(self.pair())
            elif ch == "":
                raise ParseError("unbalanced parenthesis", self.pos)
            else:
                raise ParseError(f"unexpected character {ch!r}", self.pos)

    def pair(self):
        where = self.pos
        self.take("(")
        lower = self.lap_list() if self.peek() == "{" else ()
        body = self.items(")")
        upper = self.lap_list() if self.peek() == "{" else ()
        if self.peek() != ")":
            raise ParseError("expected ')' after upper lap list", self.pos)
        self.pos += 1
        loc = f"pair at offset {where}"
        if tuple(reversed(lower)) != upper:
            self.violations.append(("vi", f"{loc}: upper list is not the lower list reversed"))
        if body == ["@"]:
            return Central(lower, upper)
        if "@" in body:
            self.violations.append(("iv", f"{loc}: center marker must stand alone in its pair"))
            body = [b for b in body if b != "@"]
        if not body:
            self.violations.append(("iv", f"{loc}: central pair lacks a center marker"))
            return Central(lower, upper)
        inner = self.sequence(body, loc, top=False)
        if not lower or not upper:
            self.violations.append(("v", f"{loc}: annular pair needs nonempty lists"))
        if len(inner) < 2:
            self.violations.append(("ii", f"{loc}: redundant nesting around a single pair"))
        return Annular(lower, tuple(inner), upper)

    def sequence(self, body: list, loc: str, top: bool) -> list:
        if top:
            if not body or body[0] != "*" or body[-1] != "*":
                self.violations.append(("i", f"{loc}: must start and end with a saddle"))
            core = body[1:-1] if len(body) >= 2 and body[0] == "*" and body[-1] == "*" else body
            if body == ["*"]:
                return []
            if body and (not core or core[0] == "*" or core[-1] == "*"):
                self.violations.append(("iii", f"{loc}: adjacent saddles not separated by a pair"))
        else:
            if body[0] == "*" or body[-1] == "*":
                self.violations.append(("iii", f"{loc}: inner sequence must start and end with a pair"))
            core = body
        pairs = []
        prev = None
        for item in core:
            if item == "@":
                self.violations.append(("iv", f"{loc}: center marker outside a pair"))
                continue
            is_pair = item != "*"
            if prev is not None and prev == is_pair:
                what = "pairs" if is_pair else "saddles"
                self.violations.append(("iii", f"{loc}: adjacent {what} not separated"))
            prev = is_pair
            if is_pair:
                pairs.append(item)
        return pairs


def parse_signature(text: str) -> Signature:
    """Parse text into a signature, enforcing the structural axioms (i)-(vi).

    Lap-number axioms (vii)-(ix) are left to :func:`validate`.
    """
    parser = _Parser(text)
    body = parser.items("")
    pairs = parser.sequence(body, "top level", top=True)
    if parser.violations:
        raise ValidationError(parser.violations)
    return Signature(tuple(pairs))


def _fmt_list(vals: Sequence[int]) -> str:
    return "{" + ",".join(map(str, vals)) + "}" if vals else ""


def _serialize_pair(p: Pair) -> str:
    if isinstance(p, Central):
        return f"({_fmt_list(p.lower)}@{_fmt_list(p.upper)})"
    inner = "*".join(_serialize_pair(x) for x in p.inner)
    return f"({_fmt_list(p.lower)}{inner}{_fmt_list(p.upper)})"


def serialize(sig: Signature) -> str:
    return "*" + "".join(_serialize_pair(p) + "*" for p in sig.pairs)


# ------------------------------------------------------------- validation


def _list_violations(vals: Sequence[int], annular: bool, loc: str) -> list[tuple[str, str]]:
    out: list[tuple[str, str]] = []
    if not vals:
        return out
    if vals[0] != 1:
        out.append(("vii", f"{loc}: first lap number is {vals[0]}, not 1"))
    if annular and (vals[-1] != 1 or len(vals) % 2):
        out.append(("vii", f"{loc}: annular list must end in 1 and have even length"))
    if any(abs(b - a) > 1 for a, b in zip(vals, vals[1:])):
        out.append(("viii", f"{loc}: neighbouring lap numbers differ by more than 1"))
        return out
    # alternate jump condition on maximal constant runs with a successor
    ext = [0, *vals]
    j0 = 1
    while j0 < len(ext):
        j1 = j0
        while j1 + 1 < len(ext) and ext[j1 + 1] == ext[j0]:
            j1 += 1
        if j1 + 1 < len(ext):
            lhs = (ext[j0] - ext[j0 - 1]) * (ext[j1 + 1] - ext[j1])
            if lhs != (-1) ** (j1 - j0):
                out.append(("ix", f"{loc}: alternate jump condition fails on run {j0}..{j1}"))
                break
        j0 = j1 + 1
    return out


def _walk_violations(pairs: Sequence[Pair], path: str) -> list[tuple[str, str]]:
    out: list[tuple[str, str]] = []
    for k, p in enumerate(pairs, start=1):
        loc = f"{path}{k}"
        if tuple(reversed(p.lower)) != p.upper:
            out.append(("vi", f"pair {loc}: upper list is not the lower list reversed"))
        if isinstance(p, Annular):
            if not p.lower:
                out.append(("v", f"pair {loc}: annular pair needs nonempty lists"))
            if not p.inner:
                out.append(("v", f"pair {loc}: annular pair needs an inner sequence"))
            elif len(p.inner) < 2:
                out.append(("ii", f"pair {loc}: redundant nesting around a single pair"))
            out += _list_violations(p.lower, True, f"pair {loc} lower")
            out += _walk_violations(p.inner, f"{loc}.")
        else:
            out += _list_violations(p.lower, False, f"pair {loc} lower")
    return out


def validate(sig: Signature) -> list[tuple[str, str]]:
    """Every violated axiom as (roman numeral, location); empty means valid."""
    return _walk_violations(sig.pairs, "")


def require_valid(sig: Signature) -> Signature:
    bad = validate(sig)
    if bad:
        raise ValidationError(bad)
    return sig


def parse_valid(text: str) -> Signature:
    return require_valid(parse_signature(text))


# ----------------------------------------------------------- bookkeeping


def _pair_stats(p: Pair) -> tuple[int, int]:
    """(centers, q) inside a pair."""
    if isinstance(p, Central):
        return 1, len(p.lower)
    c, q = 0, len(p.lower)
    for x in p.inner:
        dc, dq = _pair_stats(x)
        c += dc
        q += dq
    return c, q


def counts(sig: Signature) -> tuple[int, int, int, int]:
    """(n, q, N, centers) with n = saddles + centers and N = n + 2q."""
    require_valid(sig)
    c = q = 0
    for p in sig.pairs:
        dc, dq = _pair_stats(p)
        c += dc
        q += dq
    n = 2 * c + 1
    return n, q, n + 2 * q, c


def tprime_signs(vals: Sequence[int], annular: bool = False) -> tuple[str, ...]:
    """Crossing signs of the period map along a lap list."""
    out: list[str] = []
    for j, lap in enumerate(vals):
        if j == 0:
            if lap != 1:
                raise InternalInvariantError("lap list must start at 1")
            out.append(NEG)
            continue
        prev, sign = vals[j - 1], out[-1]
        if lap == prev:
            out.append(POS if sign == NEG else NEG)
        elif lap == prev + 1 and sign == NEG:
            out.append(NEG)
        elif lap == prev - 1 and sign == POS:
            out.append(POS)
        else:
            raise InternalInvariantError(f"inconsistent jump {prev}->{lap} after sign {sign}")
    if annular and out and out[-1] != POS:
        raise InternalInvariantError("annular list must end with a positive crossing")
    return tuple(out)


def _frozen_morse(lap: int, sign: str) -> tuple[int, int]:
    return (lap, 2 * lap - 1) if sign == NEG else (lap + 1, 2 * lap)


def _center_morse(lower: Sequence[int]) -> int:
    if not lower:
        return 1
    sign = tprime_signs(lower)[-1]
    return lower[-1] + 1 if sign == NEG else lower[-1]


def labels(sig: Signature) -> tuple[EquilibriumLabel, ...]:
    """Stripped symbol sequence with kinds, laps, crossing signs and Morse indices."""
    require_valid(sig)
    out: list[EquilibriumLabel] = []

    def saddle() -> None:
        out.append(EquilibriumLabel(len(out) + 1, "saddle", 0, 0))

    def pair(p: Pair) -> None:
        s = len(p.lower)
        signs = tprime_signs(p.lower, isinstance(p, Annular))
        first = len(out) + 1
        for lap, sg in zip(p.lower, signs):
            iN, iP = _frozen_morse(lap, sg)
            out.append(EquilibriumLabel(len(out) + 1, "frozen", iN, iP, lap, "min", sg))
        if isinstance(p, Central):
            iN = _center_morse(p.lower)
            out.append(EquilibriumLabel(len(out) + 1, "center", iN, 2 * iN - 1))
        else:
            seq(p.inner)
        for k, lap in enumerate(p.upper):
            mate = first + s - 1 - k
            sg = signs[s - 1 - k]
            iN, iP = _frozen_morse(lap, sg)
            out.append(EquilibriumLabel(len(out) + 1, "frozen", iN, iP, lap, "max", sg, mate))
        # back-fill partners of the minima
        for k in range(s):
            lo = out[first - 1 + k]
            out[first - 1 + k] = EquilibriumLabel(
                lo.position, lo.kind, lo.morse_neumann, lo.morse_periodic,
                lo.lap, lo.role, lo.tprime_sign, len(out) - k,
            )

    def seq(pairs: Sequence[Pair]) -> None:
        for k, p in enumerate(pairs):
            if k:
                saddle()
            pair(p)

    saddle()
    if sig.pairs:
        seq(sig.pairs)
        saddle()
    return tuple(out)


# --------------------------------------------------------------- symmetry


def _reverse_pair(p: Pair) -> Pair:
    if isinstance(p, Central):
        return p
    return Annular(p.lower, tuple(_reverse_pair(x) for x in reversed(p.inner)), p.upper)


def reverse_signature(sig: Signature) -> Signature:
    """Mirror image: pair order reversed at every nesting level."""
    return Signature(tuple(_reverse_pair(p) for p in reversed(sig.pairs)))


def canonicalize(sig: Signature) -> Signature:
    """Pick the representative whose text is byte-wise larger.

    Larger rather than smaller so that '{' beats '@', i.e. a pair with
    lap lists is written before a bare center.
    """
    rev = reverse_signature(sig)
    return sig if serialize(sig) >= serialize(rev) else rev


def is_palindromic(sig: Signature) -> bool:
    return reverse_signature(sig) == sig


# ------------------------------------------------------------ enumeration


@lru_cache(maxsize=None)
def lap_lists(s: int, annular: bool = False) -> tuple[tuple[int, ...], ...]:
    """All lists of length ``s`` obeying (vii)-(ix), by the crossing-sign automaton."""
    if s == 0:
        return () if annular else ((),)
    found: list[tuple[int, ...]] = []

    def grow(vals: list[int], sign: str) -> None:
        if len(vals) == s:
            if not annular or (vals[-1] == 1 and sign == POS):
                found.append(tuple(vals))
            return
        lap = vals[-1]
        if sign == NEG:
            grow(vals + [lap + 1], NEG)
            grow(vals + [lap], POS)
        else:
            if lap > 1:
                grow(vals + [lap - 1], POS)
            grow(vals + [lap], NEG)

    grow([1], NEG)
    if annular and s % 2:
        return ()
    return tuple(sorted(found, reverse=True))


@lru_cache(maxsize=None)
def _pairs_exact(c: int, q: int) -> tuple[Pair, ...]:
    """Every single pair holding exactly ``c`` centers and list mass ``q``."""
    out: list[Pair] = []
    if c == 1:
        out += [Central(v, tuple(reversed(v))) for v in lap_lists(q)]
    if c >= 2:
        for s in range(2, q + 1, 2):
            for v in lap_lists(s, annular=True):
                for inner in _seqs_exact(c, q - s, 2):
                    out.append(Annular(v, inner, tuple(reversed(v))))
    return tuple(out)


@lru_cache(maxsize=None)
def _seqs_exact(c: int, q: int, min_len: int = 1) -> tuple[tuple[Pair, ...], ...]:
    """Pair sequences with ``c`` centers, list mass ``q`` and at least ``min_len`` pairs."""
    out: list[tuple[Pair, ...]] = []
    if c == 0:
        return ((),) if q == 0 and min_len == 0 else ()
    for c1 in range(1, c + 1):
        for q1 in range(q + 1):
            heads = _pairs_exact(c1, q1)
            if not heads:
                continue
            rest_c, rest_q = c - c1, q - q1
            if rest_c == 0:
                tails: tuple[tuple[Pair, ...], ...] = ((),) if rest_q == 0 and min_len <= 1 else ()
            else:
                tails = _seqs_exact(rest_c, rest_q, max(min_len - 1, 1))
            for h in heads:
                for t in tails:
                    out.append((h,) + t)
    return tuple(out)


def signatures_exact(n: int, q: int) -> list[Signature]:
    """All valid signatures with the given n and q, mirrored pairs included."""
    if n < 1 or n % 2 == 0:
        return []
    c = (n - 1) // 2
    if c == 0:
        return [Signature()] if q == 0 else []
    return [Signature(t) for t in _seqs_exact(c, q, 1)]


def _preorder_lists(pairs: Sequence[Pair]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for p in pairs:
        out.append(p.lower)
        if isinstance(p, Annular):
            out += _preorder_lists(p.inner)
    return out


def _count_annular(pairs: Sequence[Pair]) -> int:
    return sum(1 + _count_annular(p.inner) for p in pairs if isinstance(p, Annular))


def table_key(sig: Signature) -> tuple:
    """Sort key: n, q, nesting, then longer and larger lists first."""
    c = q = 0
    for p in sig.pairs:
        dc, dq = _pair_stats(p)
        c += dc
        q += dq
    lists = _preorder_lists(sig.pairs)
    return (
        2 * c + 1,
        q,
        _count_annular(sig.pairs),
        tuple(-len(v) for v in lists),
        tuple(tuple(-x for x in v) for v in lists),
        tuple(-ord(ch) for ch in serialize(sig)),
    )


@dataclass(frozen=True)
class MaxNQ:
    k: int

    def admits(self, n: int, q: int) -> bool:
        return n + q <= self.k


@dataclass(frozen=True)
class MaxN:
    m: int

    def admits(self, n: int, q: int) -> bool:
        return n + 2 * q <= self.m


Bound = Union[MaxNQ, MaxN]


def _shapes(bound: Bound) -> Iterator[tuple[int, int]]:
    n = 1
    while bound.admits(n, 0):
        q = 0
        while bound.admits(n, q):
            yield n, q
            q += 1
        n += 2


def enumerate_signatures(bound: Bound) -> list[Signature]:
    """Canonical signatures within the bound, one per mirror class, in table order."""
    if (isinstance(bound, MaxNQ) and bound.k < 1) or (isinstance(bound, MaxN) and bound.m < 1):
        raise ValueError("bound must be at least 1")
    seen: dict[str, Signature] = {}
    for n, q in _shapes(bound):
        for sig in signatures_exact(n, q):
            canon = canonicalize(sig)
            seen.setdefault(serialize(canon), canon)
    return sorted(seen.values(), key=table_key)


def enumerate_raw(bound: Bound) -> list[Signature]:
    """Like :func:`enumerate_signatures` but keeps both mirror images."""
    out: list[Signature] = []
    for n, q in _shapes(bound):
        out += signatures_exact(n, q)
    return sorted(out, key=table_key)
