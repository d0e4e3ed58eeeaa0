"""Why the part-size coloring of Hom_p(K_2, H) keeps the part index.

For each seed, compare the full key coloring with the one that forgets the
index of the part holding the smallest minimum-size vertex, and bracket the
true chromatic number of the strong compatibility graph.
"""

from __future__ import annotations

import argparse

from strongcompat.chromatic import chromatic_number_exact, improper_edge
from strongcompat.compat import strong_compatibility_graph
from strongcompat.hom import complete, gnp, hom_poset, lemma14_coloring, part_size_key, minimal_t, shift_action


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--budget-ms", type=int, default=10_000)
    a = ap.parse_args()
    print("seed t hom_size colors 2(t-1) 3(t-1) without_index chi")
    for seed in range(a.seeds):
        H = gnp(a.n, 0.5, seed)
        hp = hom_poset(complete(2), H)
        if hp.size == 0:
            continue
        C = strong_compatibility_graph(shift_action(hp))
        t = minimal_t(H, 2)
        colors, _ = lemma14_coloring(hp)
        short = [part_size_key(el)[:2] for el in hp.elements]
        rank = {k: i for i, k in enumerate(sorted(set(short)))}
        clash = improper_edge(C, [rank[k] for k in short])
        res = chromatic_number_exact(C, a.budget_ms)
        chi = str(res.chi) if res.exact else f"[{res.lower},{res.upper}]"
        print(f"{seed:>4} {t} {hp.size:>8} {len(set(colors)):>6} {2 * (t - 1):>6} {3 * (t - 1):>6} "
              f"{'improper' if clash else 'proper':>13} {chi}")


if __name__ == "__main__":
    main()
