"""Connection graphs: Neumann construction by blocking, periodic quotient,
closure/reduction and a small isomorphism test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bijection import Pairing
from .census import is_sturm
from .errors import CycleError, InternalInvariantError, NotSturmError
from .lapsig import EquilibriumLabel
from .perm import as_permutation, morse_indices, zero_numbers

NEUMANN = "neumann"
PERIODIC = "periodic"


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str  # saddle | center | frozen | wave | equilibrium
    morse: int
    lap: int | None = None
    members: tuple[int, ...] = ()


@dataclass(frozen=True)
class ConnectionGraph:
    bc: str
    vertices: tuple[Vertex, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def morse(self) -> dict[int, int]:
        return {v.id: v.morse for v in self.vertices}

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for a, b in sorted(self.edges):
            out[a].append(b)
        return out

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "ConnectionGraph":
        return ConnectionGraph(self.bc, self.vertices, frozenset(edges))

    def is_graded(self) -> bool:
        m = self.morse()
        return all(m[a] > m[b] for a, b in self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def neumann_graph(p: Sequence[int], labels: Sequence[EquilibriumLabel] | None = None) -> ConnectionGraph:
    """Edge j -> j' iff i_j > i_j' and no k strictly between has z_jk = z_jj' = z_j'k."""
    p = as_permutation(p)
    if not is_sturm(p).sturm:
        raise NotSturmError(f"{p} is not a Sturm permutation")
    n = len(p)
    idx = morse_indices(p)
    z = zero_numbers(p)
    verts = []
    for j in range(1, n + 1):
        if labels is None:
            verts.append(Vertex(j, "equilibrium", idx[j - 1], None, (j,)))
        else:
            lab = labels[j - 1]
            if lab.morse_neumann != idx[j - 1]:
                raise InternalInvariantError(f"label Morse index disagrees at {j}")
            verts.append(Vertex(j, lab.kind, idx[j - 1], lab.lap, (j,)))
    edges = set()
    for j in range(1, n + 1):
        for jp in range(1, n + 1):
            if idx[j - 1] <= idx[jp - 1]:
                continue
            lo, hi = min(j, jp), max(j, jp)
            zjj = z[j, jp]
            if any(z[j, k] == zjj == z[jp, k] for k in range(lo + 1, hi)):
                continue
            edges.add((j, jp))
    g = ConnectionGraph(NEUMANN, tuple(verts), frozenset(edges))
    if not g.is_graded():
        raise InternalInvariantError("Neumann graph is not graded")
    return g


def quotient_periodic(g: ConnectionGraph, pairing: Pairing, labels: Sequence[EquilibriumLabel]) -> ConnectionGraph:
    """Collapse each min/max pair into a frozen wave and regrade with periodic indices."""
    if g.bc != NEUMANN:
        raise ValueError("quotient expects a Neumann graph")
    n = len(g.vertices)
    if len(labels) != n:
        raise ValueError("labels do not match the graph size")
    rep = {v.id: v.id for v in g.vertices}
    for a, b in pairing.pairs:
        if a not in rep or b not in rep:
            raise ValueError(f"pair {(a, b)} outside the graph")
        la, lb = labels[a - 1], labels[b - 1]
        if la.kind != "frozen" or lb.kind != "frozen" or la.lap != lb.lap:
            raise ValueError(f"pair {(a, b)} does not join matching frozen entries")
        rep[b] = a
    verts = []
    for lab in labels:
        pos = lab.position
        if rep[pos] != pos:
            continue
        if lab.kind == "frozen":
            members = tuple(sorted(k for k, r in rep.items() if r == pos))
            verts.append(Vertex(pos, "wave", lab.morse_periodic, lab.lap, members))
        elif lab.kind == "center":
            verts.append(Vertex(pos, "center", 2 * lab.morse_neumann - 1, None, (pos,)))
        else:
            verts.append(Vertex(pos, "saddle", 0, None, (pos,)))
    edges = {(rep[a], rep[b]) for a, b in g.edges if rep[a] != rep[b]}
    q = ConnectionGraph(PERIODIC, tuple(verts), frozenset(edges))
    if not q.is_graded():
        raise InternalInvariantError("periodic quotient is not graded")
    return q


def _topo_order(g: ConnectionGraph) -> list[int]:
    succ = g.successors()
    indeg = {v: 0 for v in succ}
    for a, b in g.edges:
        indeg[b] += 1
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != len(succ):
        raise CycleError("graph has a directed cycle")
    return order


def _descendants(g: ConnectionGraph) -> dict[int, set[int]]:
    succ = g.successors()
    reach: dict[int, set[int]] = {}
    for v in reversed(_topo_order(g)):
        acc: set[int] = set()
        for w in succ[v]:
            acc.add(w)
            acc |= reach[w]
        reach[v] = acc
    return reach


def is_acyclic(g: ConnectionGraph) -> bool:
    try:
        _topo_order(g)
    except CycleError:
        return False
    return True


def transitive_closure(g: ConnectionGraph) -> ConnectionGraph:
    reach = _descendants(g)
    return g.with_edges((a, b) for a, bs in reach.items() for b in bs)


def transitive_reduction(g: ConnectionGraph) -> ConnectionGraph:
    """Drop every edge implied by a longer path."""
    reach = _descendants(g)
    succ = g.successors()
    keep = set()
    for a, b in g.edges:
        if not any(b in reach[w] for w in succ[a] if w != b):
            keep.add((a, b))
    return g.with_edges(keep)


def _colors(vertices: Sequence[tuple], edges: set[tuple[int, int]], ids: list[int]) -> dict[int, object]:
    """Colour refinement seeded by (kind, morse, out-degree, in-degree)."""
    out = {v: [] for v in ids}
    inn = {v: [] for v in ids}
    for a, b in edges:
        out[a].append(b)
        inn[b].append(a)
    col = {v: (vertices[v], len(out[v]), len(inn[v])) for v in ids}
    for _ in range(len(ids)):
        new = {
            v: (col[v], tuple(sorted(map(repr, (col[w] for w in out[v])))), tuple(sorted(map(repr, (col[w] for w in inn[v])))))
            for v in ids
        }
        # compress to keep keys small
        table = {c: k for k, c in enumerate(sorted(set(map(repr, new.values()))))}
        new = {v: (vertices[v], table[repr(new[v])]) for v in ids}
        if len(set(map(repr, new.values()))) == len(set(map(repr, col.values()))):
            col = new
            break
        col = new
    return col


def graph_isomorphic(g1: ConnectionGraph, g2: ConnectionGraph) -> bool:
    """True iff some bijection preserves kind, Morse index and edges."""
    if g1.bc != g2.bc or len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    return find_isomorphism(g1, g2) is not None


def find_isomorphism(g1: ConnectionGraph, g2: ConnectionGraph) -> dict[int, int] | None:
    return match_graphs(
        {v.id: (v.kind, v.morse) for v in g1.vertices}, set(g1.edges),
        {v.id: (v.kind, v.morse) for v in g2.vertices}, set(g2.edges),
    )


def match_graphs(a_attr: dict, a_edges: set, b_attr: dict, b_edges: set) -> dict | None:
    """Backtracking isomorphism between attributed digraphs given as dicts."""
    if len(a_attr) != len(b_attr) or len(a_edges) != len(b_edges):
        return None
    # colour each side with a shared palette by refining the disjoint union
    tag_a = {("a", v): attr for v, attr in a_attr.items()}
    tag_b = {("b", v): attr for v, attr in b_attr.items()}
    attrs = {**tag_a, **tag_b}
    ids = list(attrs)
    edges = {(("a", x), ("a", y)) for x, y in a_edges} | {(("b", x), ("b", y)) for x, y in b_edges}
    col = _colors(attrs, edges, ids)
    ca = {v[1]: repr(col[v]) for v in tag_a}
    cb = {v[1]: repr(col[v]) for v in tag_b}
    if sorted(ca.values()) != sorted(cb.values()):
        return None
    order = sorted(a_attr, key=lambda v: (sum(1 for w in a_attr if ca[w] == ca[v]), repr(v)))
    mapping: dict = {}
    used: set = set()

    def consistent(v, w) -> bool:
        for x, y in mapping.items():
            if ((v, x) in a_edges) != ((w, y) in b_edges):
                return False
            if ((x, v) in a_edges) != ((y, w) in b_edges):
                return False
        return True

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in sorted(b_attr, key=repr):
            if w in used or cb[w] != ca[v] or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if rec(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if rec(0) else None
