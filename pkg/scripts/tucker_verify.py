"""Exhaustive G-Tucker search over several (|G|, n) instances."""

from __future__ import annotations

import argparse

from strongcompat.algebra import cyclic_group
from strongcompat.tucker import search_counterexample


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", nargs="+", default=["2:2", "3:2", "4:2", "2:3", "3:3"],
                    help="order:n pairs")
    ap.add_argument("--budget-ms", type=int, default=60_000)
    a = ap.parse_args()
    for spec in a.instances:
        k, n = map(int, spec.split(":"))
        out = search_counterexample(cyclic_group(k), n, a.budget_ms)
        print(f"|G|={k} n={n}: {out.status:<13} nodes={out.nodes:<9} depth={out.depth_reached:<4} "
              f"{out.elapsed_ms / 1000:.2f}s")


if __name__ == "__main__":
    main()
