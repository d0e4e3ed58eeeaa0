"""Table of exact chromatic numbers of prec2 ladder strong graphs against min(|G|, n)."""

from __future__ import annotations

import argparse

from strongcompat.algebra import cyclic_group, ladder_poset
from strongcompat.chromatic import chromatic_number_exact
from strongcompat.compat import strong_compatibility_graph


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--n-max", type=int, default=6)
    a = ap.parse_args()
    ns = range(1, a.n_max + 1)
    print("|G| \\ n " + " ".join(f"{n:>4}" for n in ns))
    for k in a.orders:
        cells = []
        for n in ns:
            res = chromatic_number_exact(strong_compatibility_graph(ladder_poset(cyclic_group(k), n, "prec2")))
            mark = "" if res.chi == min(k, n) else "*"
            cells.append(f"{res.chi}{mark}".rjust(4))
        print(f"{k:>7} " + " ".join(cells))
    print("(* marks a mismatch with min(|G|, n))")


if __name__ == "__main__":
    main()
