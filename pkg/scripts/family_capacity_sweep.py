#!/usr/bin/env python3
"""Sweep the three symmetric families: build each capacity-achieving scheme,
verify it, and tabulate rate vs. the closed-form capacity.

Usage: python scripts/family_capacity_sweep.py [--max-k 16] [--audit]
"""

import argparse
import sys
import time
from fractions import Fraction

sys.path.insert(0, "src")

from icx.bounds import symmetric_capacity
from icx.model import (
    gen_neighboring_antidotes,
    gen_neighboring_interference,
    gen_x_network,
)
from icx.scheme import dimension_audit, verify
from icx.symmetric import (
    build_antidote_scheme,
    build_interference_scheme,
    build_x_scheme,
)


def frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def sweep_antidotes(max_k, audit):
    rows = []
    for K in range(3, max_k + 1):
        for U in range(0, K):
            for D in range(U, K):
                if U + D > K - 3:
                    continue
                inst = gen_neighboring_antidotes(K, U, D)
                scheme = build_antidote_scheme(K, U, D)
                rep = verify(inst, scheme)
                cap = symmetric_capacity(inst)[0]
                rate = next(iter(set(rep.rates.values())))
                extra = ""
                if audit:
                    a = dimension_audit(inst, scheme)
                    extra = f" audit_slack={frac(a.final_slack)}"
                rows.append(
                    f"antidotes K={K:2d} U={U} D={D}  n={scheme.n:2d}  "
                    f"rate={frac(rate):>5} capacity={frac(cap):>5}  "
                    f"{'ok' if rep.valid and rate == cap else 'MISMATCH'}{extra}"
                )
    return rows


def sweep_interference(max_k):
    rows = []
    for K in range(2, max_k + 1):
        for D in range(0, 5):
            if K % (D + 1):
                continue
            for U in range(0, D + 1):
                if K < U + D + 1:
                    continue
                inst = gen_neighboring_interference(K, U, D)
                scheme = build_interference_scheme(K, U, D)
                rep = verify(inst, scheme)
                cap = symmetric_capacity(inst)[0]
                rate = next(iter(set(rep.rates.values())))
                rows.append(
                    f"interference K={K:2d} U={U} D={D}  n={scheme.n}  "
                    f"rate={frac(rate):>5} capacity={frac(cap):>5}  "
                    f"{'ok' if rep.valid and rate == cap else 'MISMATCH'}"
                )
    return rows


def sweep_x(max_k):
    rows = []
    for K in range(2, max_k + 1):
        for L in range(1, 5):
            if K % (L + 1) or K < 2 * L:
                continue
            inst = gen_x_network(K, L)
            scheme = build_x_scheme(K, L)
            rep = verify(inst, scheme)
            cap = symmetric_capacity(inst)[0]
            rate = next(iter(set(rep.rates.values())))
            rows.append(
                f"x-network    K={K:2d} L={L}    n={scheme.n:2d}  "
                f"rate={frac(rate):>5} capacity={frac(cap):>5}  "
                f"{'ok' if rep.valid and rate == cap else 'MISMATCH'}"
            )
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=16)
    ap.add_argument("--audit", action="store_true", help="include dimension-audit slack")
    args = ap.parse_args()

    t0 = time.time()
    rows = sweep_antidotes(min(args.max_k, 14), args.audit)
    rows += sweep_interference(args.max_k)
    rows += sweep_x(args.max_k)
    print("\n".join(rows))
    bad = sum("MISMATCH" in r for r in rows)
    print(f"\n{len(rows)} cases, {bad} mismatches, {time.time() - t0:.1f}s")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
