"""Print the n+q <= 7 signatures with their permutations and Morse vectors."""

from __future__ import annotations

import argparse

from sturmkit.bijection import signature_to_permutation
from sturmkit.lapsig import MaxNQ, counts, enumerate_signatures, labels, serialize
from sturmkit.perm import format_perm


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-nq", type=int, default=7)
    args = ap.parse_args()
    sigs = enumerate_signatures(MaxNQ(args.max_nq))
    print(f"{'n':>2} {'q':>2} {'N':>3}  signature / permutation / i^N")
    for sig in sigs:
        n, q, N, _ = counts(sig)
        perm, _ = signature_to_permutation(sig)
        morse = "".join(str(lab.morse_neumann) for lab in labels(sig))
        print(f"{n:>2} {q:>2} {N:>3}  {serialize(sig):<28} {format_perm(perm):<28} {morse}")
    print(f"{len(sigs)} signatures")


if __name__ == "__main__":
    main()
