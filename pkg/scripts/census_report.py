"""Sturm census by length and class, alongside signature-enumeration counts."""

from __future__ import annotations

import argparse
import json
import time

from sturmkit.census import census
from sturmkit.lapsig import MaxN, counts, enumerate_raw, enumerate_signatures


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-N", type=int, default=13)
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    raw_sigs = enumerate_raw(MaxN(args.max_N))
    canon_sigs = enumerate_signatures(MaxN(args.max_N))
    rows = []
    for n in range(1, args.max_N + 1, 2):
        row = {"N": n}
        for cls in ("all", "involutions", "integrable"):
            t0 = time.perf_counter()
            res = census(n, cls, jobs=args.jobs, limit=args.max_N)
            row[cls] = [res.raw, res.upto_trivial]
            row[f"{cls}_seconds"] = round(time.perf_counter() - t0, 3)
        row["signatures"] = [
            sum(1 for s in raw_sigs if counts(s)[2] == n),
            sum(1 for s in canon_sigs if counts(s)[2] == n),
        ]
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'N':>3} {'all':>12} {'involutions':>12} {'integrable':>12} {'signatures':>12}   (raw/uptoTrivial)")
    for r in rows:
        cells = ["{}/{}".format(*r[k]) for k in ("all", "involutions", "integrable", "signatures")]
        print(f"{r['N']:>3} " + " ".join(f"{c:>12}" for c in cells))
    small = [r for r in rows if r["N"] <= 9]
    print("N<=9 Sturm total:", sum(r["all"][0] for r in small), "raw,", sum(r["all"][1] for r in small), "up to trivial")


if __name__ == "__main__":
    main()
