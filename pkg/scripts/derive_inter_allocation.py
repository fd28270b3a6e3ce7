#!/usr/bin/env python3
"""Derive the frozen inter-corpus allocations in masip.fixtures.INTER_REGIONS.

The inter corpora need six domain structures that satisfy all fifteen
4-combination experiments at once.  Each domain contributes two nested
sets: its union set (all instructions any of its applications use) and its
core set (instructions every one of its applications uses).  A combination
is then described by the intersection of the involved cores and the union
of the involved union sets.

This solves the joint allocation as an integer feasibility problem over
symbol "regions": one variable per (union-pattern, core-pattern) pair with
core-pattern inside union-pattern, counting symbols with exactly that
membership.  Constraints pin per-domain union sizes and each combination's
intersection/union to the reference targets; the objective minimizes the
universe size.  Needs scipy (HiGHS); not a runtime dependency of the
package, which ships the solved allocation as data.

Usage:  python3 scripts/derive_inter_allocation.py
"""

from itertools import combinations

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from masip.fixtures import INTER_DOMAIN_ORDER, INTER_TARGETS

CATALOG_SIZES = {"arm-thumb": 78, "pisa": 72}


def subsets(seq):
    seq = list(seq)
    for r in range(len(seq) + 1):
        yield from (frozenset(c) for c in combinations(seq, r))


def solve(arch: str):
    ndom = len(INTER_DOMAIN_ORDER)
    sizes = INTER_TARGETS[arch]["sizes"]
    combo_targets = INTER_TARGETS[arch]["combos"]
    combos = list(combinations(range(ndom), 4))

    pairs = []
    for r in range(1, ndom + 1):
        for upat in combinations(range(ndom), r):
            upat = frozenset(upat)
            for cpat in subsets(upat):
                pairs.append((upat, cpat))

    rows, bounds_lo, bounds_hi = [], [], []

    def equality(coef, value):
        rows.append(coef)
        bounds_lo.append(value)
        bounds_hi.append(value)

    for i, domain in enumerate(INTER_DOMAIN_ORDER):
        coef = np.array([1.0 if i in upat else 0.0 for upat, _ in pairs])
        equality(coef, sizes[domain])

    for combo, (inter, union) in zip(combos, combo_targets):
        combo = set(combo)
        equality(np.array([1.0 if combo <= cpat else 0.0 for _, cpat in pairs]), inter)
        equality(np.array([1.0 if combo & upat else 0.0 for upat, _ in pairs]), union)

    rows.append(np.ones(len(pairs)))
    bounds_lo.append(0)
    bounds_hi.append(CATALOG_SIZES[arch])

    result = milp(
        c=np.ones(len(pairs)),
        constraints=LinearConstraint(np.array(rows), np.array(bounds_lo), np.array(bounds_hi)),
        integrality=np.ones(len(pairs)),
        bounds=Bounds(0, np.inf),
    )
    if not result.success:
        raise SystemExit(f"{arch}: no feasible allocation ({result.message})")
    counts = np.round(result.x).astype(int)
    regions = []
    for (upat, cpat), n in zip(pairs, counts):
        if n > 0:
            regions.append(
                (
                    tuple(INTER_DOMAIN_ORDER[i] for i in sorted(upat)),
                    tuple(INTER_DOMAIN_ORDER[i] for i in sorted(cpat)),
                    int(n),
                )
            )
    regions.sort()
    return regions


def main():
    for arch in CATALOG_SIZES:
        regions = solve(arch)
        total = sum(n for _, _, n in regions)
        print(f"    # {total} symbols across {len(regions)} regions")
        print(f'    "{arch}": (')
        for upat, cpat, n in regions:
            print(f"        ({upat!r}, {cpat!r}, {n}),")
        print("    ),")


if __name__ == "__main__":
    main()
