"""Colorings: verification, greedy, exact chromatic number, and the
poset-derived colorings and maps.

Colorings are lists of positive integers indexed by vertex.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import bitset
from .algebra import GPoset, chain_heights, is_free, orbits
from .compat import Graph, strong_compatibility_graph
from .errors import InternalInvariantError, InvalidParameter, PreconditionViolation


def _check_size(g: Graph, c: Sequence[int]) -> None:
    if len(c) != g.vertex_count:
        raise InvalidParameter(f"coloring has {len(c)} entries, graph has {g.vertex_count} vertices")


def improper_edge(g: Graph, c: Sequence[int]) -> tuple[int, int] | None:
    """First monochromatic edge, or None."""
    _check_size(g, c)
    classes: dict[int, int] = {}
    for v, col in enumerate(c):
        classes[col] = classes.get(col, 0) | (1 << v)
    for u, col in enumerate(c):
        clash = g.adj[u] & classes[col]
        if clash:
            return (u, bitset.lowest(clash))
    return None


def verify_coloring(g: Graph, c: Sequence[int]) -> bool:
    return improper_edge(g, c) is None


def greedy_coloring(g: Graph, order: Sequence[int] | None = None) -> list[int]:
    """First-fit coloring; default order is descending degree, ties by index."""
    n = g.vertex_count
    if order is None:
        order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    elif sorted(order) != list(range(n)):
        raise InvalidParameter("order must be a permutation of the vertices")
    classes: list[int] = []
    colors = [0] * n
    for v in order:
        nb = g.adj[v]
        for i, cls in enumerate(classes):
            if not nb & cls:
                classes[i] |= 1 << v
                colors[v] = i + 1
                break
        else:
            classes.append(1 << v)
            colors[v] = len(classes)
    return colors


def dsatur_coloring(g: Graph) -> list[int]:
    """Brelaz's heuristic (no backtracking)."""
    n = g.vertex_count
    colors = [0] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    uncolored = set(range(n))
    deg = [g.degree(v) for v in range(n)]
    while uncolored:
        v = max(uncolored, key=lambda u: (len(seen[u]), deg[u], -u))
        c = 1
        while c in seen[v]:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in bitset.indices(g.adj[v]):
            seen[u].add(c)
    return colors


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique found by greedy extension from every start vertex."""
    n = g.vertex_count
    deg = [g.degree(v) for v in range(n)]
    best: list[int] = []
    for start in sorted(range(n), key=lambda v: (-deg[v], v)):
        if deg[start] + 1 <= len(best):
            break
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(bitset.indices(cand), key=lambda u: ((g.adj[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


@dataclass
class ChromaticResult:
    """``chi`` is set only when the search proved optimality.

    ``lower``/``upper`` always bracket the chromatic number and ``witness``
    is a proper coloring with ``upper`` colors.
    """

    lower: int
    upper: int
    witness: list[int]
    exact: bool
    nodes: int = 0
    refuted: list[int] = field(default_factory=list)

    @property
    def chi(self) -> int | None:
        return self.upper if self.exact else None


class _Budget(Exception):
    pass


class _KColorSearch:
    """DSATUR backtracking for one fixed number of colors ``k``.

    Clique vertices are pre-colored ``0..q-1``; a branch may only open the
    next unused color, which removes color-permutation symmetry.
    """

    def __init__(self, g: Graph, k: int, clique: list[int], deadline: float | None, nodes: int):
        self.n = g.vertex_count
        self.k = k
        self.nbrs = [bitset.indices(nb) for nb in g.adj]
        self.deg = [len(nb) for nb in self.nbrs]
        self.clique = clique
        self.deadline = deadline
        self.nodes = nodes
        self.full = (1 << k) - 1
        self.color = [-1] * self.n
        self.count = [[0] * k for _ in range(self.n)]
        self.forb = [0] * self.n
        self.sat = [0] * self.n
        self.uncolored = set(range(self.n))

    def _assign(self, v: int, c: int) -> bool:
        self.color[v] = c
        self.uncolored.discard(v)
        ok = True
        for u in self.nbrs[v]:
            cnt = self.count[u]
            cnt[c] += 1
            if cnt[c] == 1:
                self.forb[u] |= 1 << c
                self.sat[u] += 1
                if self.color[u] < 0 and self.forb[u] == self.full:
                    ok = False
        return ok

    def _unassign(self, v: int, c: int) -> None:
        for u in self.nbrs[v]:
            cnt = self.count[u]
            cnt[c] -= 1
            if cnt[c] == 0:
                self.forb[u] &= ~(1 << c)
                self.sat[u] -= 1
        self.color[v] = -1
        self.uncolored.add(v)

    def run(self) -> list[int] | None:
        if len(self.clique) > self.k:
            return None
        ok = True
        for c, v in enumerate(self.clique):
            ok = self._assign(v, c) and ok
        if ok and self._search(len(self.clique)):
            return [c + 1 for c in self.color]
        return None

    def _search(self, used: int) -> bool:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Budget
        if not self.uncolored:
            return True
        sat, deg = self.sat, self.deg
        v = max(self.uncolored, key=lambda u: (sat[u], deg[u], -u))
        forb = self.forb[v]
        for c in range(min(used + 1, self.k)):
            if forb >> c & 1:
                continue
            if self._assign(v, c) and self._search(max(used, c + 1)):
                return True
            self._unassign(v, c)
        return False


def chromatic_number_exact(g: Graph, budget_ms: int | None = None) -> ChromaticResult:
    """Exact chromatic number by DSATUR branch and bound.

    The lower bound starts at a greedy clique size and each number of colors
    below the best known coloring is refuted in increasing order. On budget
    exhaustion the proven interval is returned with ``exact=False``.
    """
    n = g.vertex_count
    if n < 1:
        raise InvalidParameter("chromatic number of the empty graph is not defined here")
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    clique = greedy_clique(g)
    best = min((greedy_coloring(g), dsatur_coloring(g)), key=max)
    lower, upper = len(clique), max(best)
    refuted: list[int] = []
    nodes = 0
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 1000))
    try:
        for k in range(lower, upper):
            search = _KColorSearch(g, k, clique, deadline, nodes)
            try:
                found = search.run()
            except _Budget:
                return ChromaticResult(lower, upper, best, False, search.nodes, refuted)
            nodes = search.nodes
            if found is not None:
                return ChromaticResult(k, k, found, True, nodes, refuted)
            refuted.append(k)
            lower = k + 1
    finally:
        sys.setrecursionlimit(limit)
    return ChromaticResult(upper, upper, best, True, nodes, refuted)


def chain_length_coloring(P: GPoset) -> list[int]:
    """Color ``p`` by the length of the longest chain starting at ``p``."""
    return chain_heights(P)


@dataclass(frozen=True)
class EquivariantLabeling:
    """``x -> (shift[x], level[x])`` into ``G x [target_levels]``."""

    level: tuple[int, ...]
    shift: tuple[int, ...]
    target_levels: int


def check_equivariance(P: GPoset, lab: EquivariantLabeling) -> tuple[int, int] | None:
    """First ``(g, x)`` where ``lab(g.x) != g.lab(x)``, or None."""
    grp = P.group
    for g in range(grp.order):
        row = P.action[g]
        for x in range(P.size):
            y = row[x]
            if lab.level[y] != lab.level[x] or lab.shift[y] != grp.mul(g, lab.shift[x]):
                return (g, x)
    return None


def check_simplex_condition(P: GPoset, lab: EquivariantLabeling) -> tuple[int, int] | None:
    """First comparable ``x < y`` with equal levels but different shifts."""
    for x in range(P.size):
        for y in bitset.indices(P.up[x]):
            if lab.level[x] == lab.level[y] and lab.shift[x] != lab.shift[y]:
                return (x, y)
    return None


def equivariant_map_from_coloring(P: GPoset, c: Sequence[int], graph: Graph | None = None) -> EquivariantLabeling:
    """Turn a proper coloring of the strong compatibility graph into a
    simplicial equivariant labeling ``P -> G x [m]``.

    Each orbit representative ``x`` gets ``(e, c(x))`` and ``g.x`` gets
    ``(g, c(x))``.
    """
    if not is_free(P):
        raise InvalidParameter("poset action is not free")
    g_strong = graph if graph is not None else strong_compatibility_graph(P)
    _check_size(g_strong, c)
    if min(c, default=1) < 1:
        raise InvalidParameter("colors must be positive integers")
    bad = improper_edge(g_strong, c)
    if bad is not None:
        raise PreconditionViolation(
            f"coloring is improper on the strong compatibility graph at {bad}", witness=bad
        )
    grp = P.group
    level = [0] * P.size
    shift = [0] * P.size
    for orb in orbits(P):
        x = orb.representative
        for g in grp.elements:
            y = P.action[g][x]
            level[y] = c[x]
            shift[y] = g
    lab = EquivariantLabeling(tuple(level), tuple(shift), max(c, default=0))
    wit = check_equivariance(P, lab)
    if wit is not None:
        raise InternalInvariantError(f"labeling not equivariant at {wit}", witness=wit)
    wit = check_simplex_condition(P, lab)
    if wit is not None:
        raise InternalInvariantError(f"chain pair {wit} maps outside a simplex", witness=wit)
    return lab


def find_noncomparable_image_pair(P: GPoset, Q: GPoset, lam: Sequence[int]) -> tuple[int, int] | None:
    """A pair ``x < y`` in ``P`` whose images are neither equal nor comparable
    in ``Q``; None if ``lam`` preserves comparability everywhere."""
    if P.group != Q.group:
        raise InvalidParameter("posets are over different groups")
    if len(lam) != P.size or any(not 0 <= v < Q.size for v in lam):
        raise InvalidParameter("map is not total into Q")
    for g in range(P.group.order):
        for x in range(P.size):
            if lam[P.action[g][x]] != Q.action[g][lam[x]]:
                raise InvalidParameter(f"map is not equivariant at g={g}, x={x}", witness=(g, x))
    for x in range(P.size):
        for y in bitset.indices(P.up[x]):
            if not Q.comparable(lam[x], lam[y]):
                return (x, y)
    return None
