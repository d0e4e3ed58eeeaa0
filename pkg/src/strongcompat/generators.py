"""Seeded random G-posets for property tests and experiment scripts.

All randomness comes from ``random.Random(seed)``.
"""

from __future__ import annotations

import random

from .algebra import FiniteGroup, GPoset, cyclic_group, make_gposet
from .errors import InvalidParameter


def random_free_z2_poset(half: int, density: float, seed: int) -> GPoset:
    """Random free Z_2-poset on ``2 * half`` elements.

    Element ``i + half`` is the mirror of ``i``. Relation orbits
    ``{(a, b), (-a, -b)}`` are offered in random order and kept with
    probability ``density`` unless they would close a cycle.
    """
    if half < 1:
        raise InvalidParameter("need at least one orbit")
    rng = random.Random(seed)
    m = 2 * half
    action = [list(range(m)), [(i + half) % m for i in range(m)]]
    return _grow_order(cyclic_group(2), action, m, density, rng)


def random_gposet(
    group_order: int,
    max_size: int,
    density: float,
    seed: int,
    free: bool = False,
) -> GPoset:
    """Random G-poset over ``Z_k`` with at most ``max_size`` elements.

    Orbits are cosets ``Z_k / Z_d`` for divisors ``d`` of ``k`` (only ``d = k``
    when ``free``). Candidate relation orbits are offered in random order and
    kept with probability ``density`` unless they would close a cycle.
    """
    if free and max_size < group_order:
        raise InvalidParameter(f"a free orbit needs {group_order} elements, max_size is {max_size}")
    rng = random.Random(seed)
    group = cyclic_group(group_order)
    sizes = [d for d in range(1, group_order + 1) if group_order % d == 0]
    if free:
        sizes = [group_order]
    orbit_sizes: list[int] = []
    total = 0
    target = rng.randint(1, max_size)
    while True:
        d = rng.choice(sizes)
        if total + d > target:
            break
        orbit_sizes.append(d)
        total += d
    if not orbit_sizes:
        orbit_sizes = [min(sizes)]
        total = orbit_sizes[0]
    start = []
    acc = 0
    for d in orbit_sizes:
        start.append(acc)
        acc += d
    owner = [o for o, d in enumerate(orbit_sizes) for _ in range(d)]
    action = [
        [start[owner[x]] + (x - start[owner[x]] + g) % orbit_sizes[owner[x]] for x in range(total)]
        for g in range(group_order)
    ]
    return _grow_order(group, action, total, density, rng)


def _grow_order(group: FiniteGroup, action: list[list[int]], m: int, density: float, rng: random.Random) -> GPoset:
    up = [0] * m
    kept: list[tuple[int, int]] = []
    candidates = [(a, b) for a in range(m) for b in range(m) if a != b]
    rng.shuffle(candidates)
    for a, b in candidates:
        if rng.random() >= density:
            continue
        batch = {(row[a], row[b]) for row in action}
        snapshot = list(up)
        ok = True
        for x, y in sorted(batch):
            if x == y or up[y] >> x & 1:
                ok = False
                break
            grow = (1 << y) | up[y]
            for z in range(m):
                if z == x or up[z] >> x & 1:
                    up[z] |= grow
        if ok:
            kept.extend(sorted(batch))
        else:
            up = snapshot
    return make_gposet(kept, group, action, size=m)
