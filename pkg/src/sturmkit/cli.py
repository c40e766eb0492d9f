"""Command-line front end (``sak``)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .bijection import permutation_to_signature, signature_to_permutation
from .census import census, is_integrable_involution
from .errors import (
    InternalInvariantError,
    LimitExceededError,
    NotIntegrableError,
    NotSturmError,
    ParseError,
    PermutationError,
    ValidationError,
)
from .graph import PERIODIC, neumann_graph, quotient_periodic, transitive_reduction
from .lapsig import (
    MaxN,
    MaxNQ,
    counts,
    enumerate_raw,
    enumerate_signatures,
    labels,
    parse_signature,
    parse_valid,
    serialize,
    validate,
)
from .perm import compose_paths, format_perm, parse_perm
from .pitchfork import find_pitchforks, fully_reducible, fully_reducible_exhaustive
from .render import graph_dot, graph_json, meander_arcs, meander_dot, meander_json, meander_svg

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class _Failure(Exception):
    """Predicate or validation failure reported with exit code 1."""


def _arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text().strip()
    return text


def _diag(msg: str) -> None:
    color = os.environ.get("SAK_COLOR", "1") != "0" and sys.stderr.isatty()
    sys.stderr.write(f"\x1b[31m{msg}\x1b[0m\n" if color else msg + "\n")


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def cmd_validate_sig(args) -> int:
    sig = parse_signature(_arg(args.text))
    bad = validate(sig)
    if bad:
        _emit(args, "\n".join(f"({ax}) {loc}" for ax, loc in bad))
        return EXIT_FAIL
    n, q, N, c = counts(sig)
    _emit(args, f"valid {serialize(sig)} n={n} q={q} N={N} centers={c}")
    return EXIT_OK


def cmd_validate_perm(args) -> int:
    rep = is_integrable_involution(parse_perm(_arg(args.perm)))
    lines = [f"{k}={_flag(v)}" for k, v in rep.as_dict().items() if k != "failures"]
    lines += [f"failure: {f}" for f in rep.failures]
    _emit(args, "\n".join(lines))
    return EXIT_OK if rep.sturm else EXIT_FAIL


def cmd_enumerate(args) -> int:
    bound = MaxNQ(args.max_nq) if args.max_nq is not None else MaxN(args.max_N)
    sigs = enumerate_raw(bound) if args.raw else enumerate_signatures(bound)
    if args.json:
        rows = []
        for s in sigs:
            n, q, N, _ = counts(s)
            rows.append(json.dumps({"signature": serialize(s), "n": n, "q": q, "N": N}))
        _emit(args, "\n".join(rows))
    else:
        _emit(args, "\n".join(serialize(s) for s in sigs))
    return EXIT_OK


def cmd_sig_to_perm(args) -> int:
    perm, pairing = signature_to_permutation(parse_valid(_arg(args.text)))
    out = format_perm(perm)
    if args.pairing:
        out += "\n" + " ".join(f"({a},{b})" for a, b in pairing.pairs)
    _emit(args, out)
    return EXIT_OK


def cmd_perm_to_sig(args) -> int:
    _emit(args, serialize(permutation_to_signature(parse_perm(_arg(args.perm)))))
    return EXIT_OK


def _resolve(args):
    """Permutation plus optional (signature, labels) from PERM and/or --sig."""
    sig = parse_valid(_arg(args.sig)) if args.sig else None
    perm = parse_perm(_arg(args.perm)) if args.perm else None
    if sig is not None:
        derived, _ = signature_to_permutation(sig)
        if perm is not None and perm != derived:
            raise _Failure(f"permutation {format_perm(perm)} is not the image of {serialize(sig)}")
        perm = derived
    if perm is None:
        raise _Failure("need a permutation or --sig")
    return perm, sig


def cmd_graph(args) -> int:
    perm, sig = _resolve(args)
    if args.bc == PERIODIC and sig is None:
        sig = permutation_to_signature(perm)
    labs = labels(sig) if sig is not None else None
    g = neumann_graph(perm, labs)
    if args.bc == PERIODIC:
        _, pairing = signature_to_permutation(sig)
        g = quotient_periodic(g, pairing, labs)
    if args.reduce:
        g = transitive_reduction(g)
    _emit(args, graph_dot(g) if args.format == "dot" else graph_json(g))
    return EXIT_OK


def cmd_meander(args) -> int:
    perm, sig = _resolve(args)
    m = meander_arcs(perm, labels(sig) if sig is not None else None)
    if args.format == "svg":
        text = meander_svg(m, show_labels=args.labels)
    elif args.format == "dot":
        text = meander_dot(m)
    else:
        text = meander_json(m)
    _emit(args, text)
    return EXIT_OK


def cmd_census(args) -> int:
    res = census(args.N, args.cls, jobs=args.jobs, limit=args.limit)
    report: dict = {"N": args.N}
    if args.dedup in ("none", "both"):
        report["raw"] = res.raw
    if args.dedup in ("trivial", "both"):
        report["uptoTrivial"] = res.upto_trivial
    text = json.dumps(report)
    if args.list:
        pool = res.members if args.dedup == "none" else res.representatives
        text += "\n" + "\n".join(format_perm(p) for p in pool)
    _emit(args, text)
    return EXIT_OK


def cmd_pitchfork(args) -> int:
    perm = parse_perm(_arg(args.perm))
    spots = find_pitchforks(perm) if len(perm) >= 3 else []
    if len(perm) > 1 and not spots:
        _emit(args, "no pitchfork")
        return EXIT_FAIL
    ok, trace = (fully_reducible_exhaustive if args.exhaustive else fully_reducible)(perm)
    lines = [f"pitchforks: {' '.join(map(str, spots))}" if spots else "pitchforks:"]
    if args.trace:
        lines.append(format_perm(perm))
        lines += [f"{format_perm(step.result)}  (at {step.position})" for step in trace]
    lines.append("reducible" if ok else f"stuck after {len(trace)} steps")
    _emit(args, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_compose_paths(args) -> int:
    _emit(args, format_perm(compose_paths(parse_perm(_arg(args.h0)), parse_perm(_arg(args.h1)))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sak", description="Lap signatures, Sturm permutations and connection graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("validate-sig", cmd_validate_sig, "check a signature against all axioms")
    p.add_argument("text")
    p = add("validate-perm", cmd_validate_perm, "report Sturm and integrability predicates")
    p.add_argument("perm")

    p = add("enumerate", cmd_enumerate, "list canonical signatures within a bound")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--max-nq", type=int, dest="max_nq")
    g.add_argument("--max-N", type=int, dest="max_N")
    p.add_argument("--json", action="store_true")
    p.add_argument("--raw", action="store_true", help="keep both mirror images")
    p.add_argument("--jobs", type=int, default=None, help="accepted for symmetry; enumeration is fast")

    p = add("sig-to-perm", cmd_sig_to_perm, "signature to integrable Sturm involution")
    p.add_argument("text")
    p.add_argument("--pairing", action="store_true", help="also print the min/max pairing")
    p = add("perm-to-sig", cmd_perm_to_sig, "integrable Sturm involution to signature")
    p.add_argument("perm")

    p = add("graph", cmd_graph, "connection graph of a Sturm permutation")
    p.add_argument("perm", nargs="?")
    p.add_argument("--sig")
    p.add_argument("--bc", choices=["neumann", "periodic"], default="neumann")
    p.add_argument("--reduce", action="store_true")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = add("meander", cmd_meander, "render the stylized meander")
    p.add_argument("perm", nargs="?")
    p.add_argument("--sig")
    p.add_argument("--format", choices=["svg", "dot", "json"], default="svg")
    p.add_argument("--labels", action="store_true")

    p = add("census", cmd_census, "count Sturm permutations of one length")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=["all", "involutions", "integrable"], default="all")
    p.add_argument("--dedup", choices=["none", "trivial", "both"], default="both")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--list", action="store_true", help="also print the permutations")

    p = add("pitchfork", cmd_pitchfork, "formal pitchfork reduction")
    p.add_argument("perm")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--exhaustive", action="store_true")

    p = add("compose-paths", cmd_compose_paths, "h0^{-1} o h1")
    p.add_argument("h0")
    p.add_argument("h1")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PermutationError) as exc:
        _diag(f"parse error: {exc}")
        return EXIT_PARSE
    except InternalInvariantError as exc:
        _diag(f"internal invariant violated: {exc}")
        return EXIT_INTERNAL
    except (ValidationError, NotSturmError, NotIntegrableError, LimitExceededError, _Failure) as exc:
        _diag(str(exc))
        return EXIT_FAIL
    except (OSError, ValueError) as exc:
        _diag(str(exc))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
