#!/usr/bin/env python3
# Copyright 2026 The morita-forms Authors
# SPDX-License-Identifier: Apache-2.0
"""Print SL2(p) as a permutation group on the nonzero vectors of GF(p)^2.

Points are numbered in the order (a, b) for a, b in 0..p-1, skipping (0, 0).
The generators are [[1, 1], [0, 1]] and [[0, -1], [1, 0]], acting on column
vectors. Output is the group object used by scenario files.
"""

import argparse
import json


def perm_cycles(images):
    seen, cycles = set(), []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = images[x]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("p", type=int)
    args = ap.parse_args()
    p = args.p
    points = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(points)}

    def act(m):
        return [index[((m[0][0] * a + m[0][1] * b) % p, (m[1][0] * a + m[1][1] * b) % p)] for a, b in points]

    gens = [act([[1, 1], [0, 1]]), act([[0, p - 1], [1, 0]])]
    print(json.dumps({"degree": len(points), "generators": [perm_cycles(g) for g in gens]}))


if __name__ == "__main__":
    main()
