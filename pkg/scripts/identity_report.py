#!/usr/bin/env python3
"""Exhaustively compare conjugated edge gates against their deleted-edge form.

For every multihyperedge e, weight m, and target vertex k at small (d, n),
CZ_e^m X_k CZ_e^{d-m} is the shift times an exact diagonal correction. The
deleted-edge form X_k CZ_{e minus k}^{m(d-1)} matches that correction iff the
target vertex carries exponent 1 (or m = 0, plus sporadic coincidences). This
script tallies the verdict per (d, s_k) and prints one example correction per
mismatching pair.
"""

from __future__ import annotations

import argparse
from collections import defaultdict

from quditgraphs.graphs import enumerate_multihyperedges
from quditgraphs.stabilizers import conjugation_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-d", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=2)
    args = parser.parse_args()

    for d in range(2, args.max_d + 1):
        for n in range(1, args.max_n + 1):
            tally = defaultdict(lambda: [0, 0])  # s_k -> [holds, total]
            example = {}
            for edge in enumerate_multihyperedges(n, d):
                for k in edge.vertices:
                    for m in range(d):
                        report = conjugation_report(edge, m, k, d, n)
                        s_k = report.target_exponent
                        tally[s_k][1] += 1
                        if report.holds:
                            tally[s_k][0] += 1
                        elif s_k not in example:
                            example[s_k] = report
            print(f"d={d} n={n}")
            for s_k in sorted(tally):
                holds, total = tally[s_k]
                status = "exact" if holds == total else f"{holds}/{total} hold"
                print(f"  target exponent {s_k}: deleted-edge form {status}")
                if s_k in example:
                    rep = example[s_k]
                    print(
                        f"    e.g. edge {rep.edge.vertices} exps {rep.edge.exponents} "
                        f"m={rep.power} k={rep.vertex}: exact diagonal "
                        f"{rep.exact_diagonal} vs deleted-edge {rep.printed_diagonal}"
                    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
