from __future__ import annotations

import json

from hypothesis import given, strategies as st

from oracles import TWIN_CENTER_PERM, VAS_SIG
from sturmkit.bijection import signature_to_permutation
from sturmkit.census import census
from sturmkit.graph import neumann_graph, quotient_periodic, transitive_reduction
from sturmkit.lapsig import labels, parse_signature
from sturmkit.perm import reverse_trivial
from sturmkit.render import (
    LOWER,
    UPPER,
    Arc,
    graph_dot,
    graph_json,
    meander_arcs,
    meander_dot,
    meander_json,
    meander_svg,
    mirror,
)

STURM9 = census(9, "all").members


def periodic(text):
    sig = parse_signature(text)
    perm, pairing = signature_to_permutation(sig)
    labs = labels(sig)
    return transitive_reduction(quotient_periodic(neumann_graph(perm, labs), pairing, labs))


def test_arcs_examples():
    assert meander_arcs((1, 2, 3)).arcs == (Arc(1, 2, UPPER), Arc(2, 3, LOWER))
    assert meander_arcs((1, 4, 3, 2, 5)).arcs == (
        Arc(1, 4, UPPER), Arc(4, 3, LOWER), Arc(3, 2, UPPER), Arc(2, 5, LOWER),
    )
    m = meander_arcs(TWIN_CENTER_PERM)
    assert len(m.arcs) == 8 and [a.side for a in m.arcs] == [UPPER, LOWER] * 4


def test_markers_from_labels():
    sig = parse_signature("*({1}@{1})*")
    perm, _ = signature_to_permutation(sig)
    m = meander_arcs(perm, labels(sig))
    assert m.markers == ("saddle", "frozen-min", "center", "frozen-max", "saddle")


def test_svg_identity():
    svg = meander_svg(meander_arcs((1,)))
    assert svg.count("<path") == 0 and svg.count("<circle") == 1 and svg.count("<line") == 1


def test_svg_arc_orientation():
    svg = meander_svg(meander_arcs((1, 2, 3)))
    assert 'd="M 1 0 A 0.5 0.5 0 0 1 2 0"' in svg
    assert 'd="M 2 0 A 0.5 0.5 0 0 0 3 0"' in svg
    assert "<text" not in svg and "<text" in meander_svg(meander_arcs((1, 2, 3)), show_labels=True)


def test_outputs_deterministic():
    for p in STURM9[:10]:
        m = meander_arcs(p)
        assert meander_svg(m) == meander_svg(meander_arcs(p))
        assert meander_dot(m) == meander_dot(meander_arcs(p))
        assert meander_json(m) == meander_json(meander_arcs(p))
    g = periodic(VAS_SIG)
    assert graph_dot(g) == graph_dot(periodic(VAS_SIG))
    assert graph_json(g) == graph_json(periodic(VAS_SIG))


@given(st.sampled_from(STURM9))
def test_mirror_under_trivial_equivalence(p):
    assert meander_arcs(reverse_trivial(p)).arcs == mirror(meander_arcs(p)).arcs


def test_trivial_equivalence_swaps_sides():
    # a plain left-right flip keeping sides would not give the mirrored permutation
    m = meander_arcs((1, 4, 3, 2, 5))
    assert m.arcs[0] == Arc(1, 4, UPPER)
    assert Arc(5, 2, UPPER) not in meander_arcs(reverse_trivial((1, 4, 3, 2, 5))).arcs


def _ranks(dot: str) -> list[str]:
    return [line for line in dot.splitlines() if "rank=same" in line]


def test_graph_dot_ranks():
    ci2 = periodic("*({1}@{1})*")
    dot = graph_dot(ci2)
    assert len(_ranks(dot)) == 3 and dot.count("[kind=") == 4
    vas = graph_dot(periodic(VAS_SIG))
    assert len(_ranks(vas)) == 4 and vas.count("[kind=") == 9


def test_graph_json_schema():
    doc = json.loads(graph_json(neumann_graph((1, 4, 3, 2, 5))))
    assert doc["bc"] == "neumann"
    assert doc["vertices"][0] == {"id": 1, "kind": "equilibrium", "morse": 0}
    assert [3, 2] in doc["edges"]
