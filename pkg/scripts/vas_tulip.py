"""Run the full pipeline on the Vas tulip and write its graphs and meander."""

from __future__ import annotations

import argparse
from pathlib import Path

from sturmkit.bijection import signature_to_permutation
from sturmkit.graph import neumann_graph, quotient_periodic, transitive_reduction
from sturmkit.lapsig import labels, parse_signature
from sturmkit.perm import cycle_structure, format_perm
from sturmkit.render import graph_dot, graph_json, meander_arcs, meander_svg

VAS = "*({1,1}({1}@{1})*({1}@{1}){1,1})*"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Path("out/vas"))
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    sig = parse_signature(VAS)
    perm, pairing = signature_to_permutation(sig)
    labs = labels(sig)
    neu = neumann_graph(perm, labs)
    per = transitive_reduction(quotient_periodic(neu, pairing, labs))

    print("permutation", format_perm(perm))
    print("2-cycles   ", [c for c in cycle_structure(perm) if len(c) == 2])
    print("Morse i^N  ", [lab.morse_neumann for lab in labs])
    print("periodic   ", sorted(v.morse for v in per.vertices), f"{len(per.edges)} minimal edges")

    (args.out_dir / "neumann.dot").write_text(graph_dot(transitive_reduction(neu)))
    (args.out_dir / "periodic.dot").write_text(graph_dot(per))
    (args.out_dir / "periodic.json").write_text(graph_json(per))
    (args.out_dir / "meander.svg").write_text(meander_svg(meander_arcs(perm, labs), show_labels=True))
    print("wrote", *sorted(p.name for p in args.out_dir.iterdir()))


if __name__ == "__main__":
    main()
