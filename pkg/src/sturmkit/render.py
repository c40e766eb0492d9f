"""Meander arcs and deterministic SVG / DOT / JSON emitters."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import ConnectionGraph
from .lapsig import EquilibriumLabel
from .perm import as_permutation, inverse

UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True)
class Arc:
    start: int
    end: int
    side: str


@dataclass(frozen=True)
class Meander:
    n: int
    arcs: tuple[Arc, ...]
    markers: tuple[str, ...]


def _marker(lab: EquilibriumLabel) -> str:
    if lab.kind == "frozen":
        return "frozen-min" if lab.role == "min" else "frozen-max"
    return lab.kind


def meander_arcs(p: Sequence[int], labels: Sequence[EquilibriumLabel] | None = None) -> Meander:
    """Arcs joining pinv(j) to pinv(j+1), the first one upper and then alternating."""
    p = as_permutation(p)
    pinv = inverse(p)
    arcs = tuple(
        Arc(pinv[j], pinv[j + 1], UPPER if j % 2 == 0 else LOWER) for j in range(len(p) - 1)
    )
    if labels is None:
        markers = tuple("dot" for _ in p)
    else:
        if len(labels) != len(p):
            raise ValueError("labels do not match the permutation length")
        markers = tuple(_marker(lab) for lab in labels)
    return Meander(len(p), arcs, markers)


def mirror(m: Meander) -> Meander:
    """Point reflection of the drawing: x -> N+1-x, arcs change side and run backwards.

    This is the meander of the trivially equivalent permutation.
    """
    f = lambda x: m.n + 1 - x  # noqa: E731
    flip = {UPPER: LOWER, LOWER: UPPER}
    arcs = tuple(Arc(f(a.end), f(a.start), flip[a.side]) for a in reversed(m.arcs))
    return Meander(m.n, arcs, tuple(reversed(m.markers)))


def _num(x: float) -> str:
    s = f"{x:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _glyph(kind: str, x: int) -> list[str]:
    cx = _num(x)
    if kind == "saddle":
        return [f'<circle cx="{cx}" cy="0" fill="black" r="0.16"/>']
    if kind == "center":
        return [
            f'<circle cx="{cx}" cy="0" fill="white" r="0.18" stroke="black" stroke-width="0.04"/>',
            f'<circle cx="{cx}" cy="0" fill="black" r="0.06"/>',
        ]
    if kind == "frozen-min":
        return [f'<circle cx="{cx}" cy="0" fill="white" r="0.13" stroke="black" stroke-width="0.04"/>']
    if kind == "frozen-max":
        return [f'<line stroke="black" stroke-width="0.05" x1="{cx}" x2="{cx}" y1="-0.15" y2="0.15"/>']
    return [f'<circle cx="{cx}" cy="0" fill="black" r="0.08"/>']


def meander_svg(m: Meander, show_labels: bool = False) -> str:
    half = max(m.n / 2, 1.0) + 0.5
    width = m.n + 1
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg height="{_num(round(400 * 2 * half / width))}" version="1.1" '
        f'viewBox="0 {_num(-half)} {_num(width)} {_num(2 * half)}" '
        f'width="400" xmlns="http://www.w3.org/2000/svg">',
        f'<line stroke="gray" stroke-width="0.03" x1="0.5" x2="{_num(m.n + 0.5)}" y1="0" y2="0"/>',
    ]
    for arc in m.arcs:
        a, b = sorted((arc.start, arc.end))
        r = (b - a) / 2
        sweep = 1 if arc.side == UPPER else 0
        lines.append(
            f'<path d="M {_num(a)} 0 A {_num(r)} {_num(r)} 0 0 {sweep} {_num(b)} 0" '
            f'fill="none" stroke="black" stroke-width="0.05"/>'
        )
    for k, kind in enumerate(m.markers, start=1):
        lines += _glyph(kind, k)
        if show_labels:
            lines.append(f'<text font-size="0.3" text-anchor="middle" x="{_num(k)}" y="0.55">{k}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def meander_dot(m: Meander) -> str:
    lines = ["graph meander {", "  node [shape=point];"]
    for k, kind in enumerate(m.markers, start=1):
        lines.append(f'  {k} [kind="{kind}", pos="{k},0!"];')
    for arc in m.arcs:
        lines.append(f'  {arc.start} -- {arc.end} [side="{arc.side}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def meander_json(m: Meander) -> str:
    doc = {
        "N": m.n,
        "arcs": [{"from": a.start, "side": a.side, "to": a.end} for a in m.arcs],
        "markers": list(m.markers),
    }
    return json.dumps(doc, sort_keys=True) + "\n"


_SHAPES = {"saddle": "box", "center": "doublecircle", "wave": "ellipse", "frozen": "ellipse"}


def graph_dot(g: ConnectionGraph) -> str:
    """Top-to-bottom layout, one rank per Morse index, highest index on top."""
    lines = [f"digraph {g.bc} {{", "  rankdir=TB;"]
    for v in sorted(g.vertices, key=lambda v: v.id):
        shape = _SHAPES.get(v.kind, "circle")
        lines.append(f'  {v.id} [kind="{v.kind}", label="{v.id}\\ni={v.morse}", morse={v.morse}, shape={shape}];')
    for level in sorted({v.morse for v in g.vertices}, reverse=True):
        ids = " ".join(str(v.id) for v in sorted(g.vertices, key=lambda v: v.id) if v.morse == level)
        lines.append(f"  {{ rank=same; {ids}; }}")
    for a, b in g.sorted_edges():
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(g: ConnectionGraph) -> str:
    verts = []
    for v in sorted(g.vertices, key=lambda v: v.id):
        d = {"id": v.id, "kind": v.kind, "morse": v.morse}
        if v.lap is not None:
            d["lap"] = v.lap
        if len(v.members) > 1:
            d["members"] = list(v.members)
        verts.append(d)
    doc = {"bc": g.bc, "edges": [list(e) for e in g.sorted_edges()], "vertices": verts}
    return json.dumps(doc, sort_keys=True) + "\n"
