"""Compatibility graphs of G-posets.

``x`` and ``y`` are joined in the compatibility graph when ``x`` and ``g.y``
are comparable for some ``g != e``; equality counts as comparable, so
distinct orbit-mates are always joined. The strong compatibility graph
additionally requires ``y`` outside the orbit of ``x``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from . import bitset
from .algebra import GPoset, is_free
from .errors import InvalidParameter, ValidationError


class TrivialGroupWarning(UserWarning):
    """Compatibility graph requested for a poset under the trivial group."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitset of ``v``."""

    vertex_count: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.vertex_count:
            raise ValidationError("adjacency length does not match vertex count")
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValidationError(f"loop at vertex {v}", witness=v)
            if nb >> self.vertex_count:
                raise ValidationError(f"vertex {v} has a neighbor out of range", witness=v)
            for u in bitset.indices(nb):
                if not self.adj[u] >> v & 1:
                    raise ValidationError(f"edge ({v}, {u}) is not symmetric", witness=(v, u))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValidationError(f"loop at vertex {u}", witness=u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range", witness=(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in bitset.indices(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bitset.indices(self.adj[v])

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.vertex_count == other.vertex_count and all(
            a & ~b == 0 for a, b in zip(self.adj, other.adj)
        )


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def _compat_adjacency(P: GPoset, strong: bool) -> tuple[int, ...]:
    grp = P.group
    if grp.order == 1:
        warnings.warn("trivial group: compatibility graph is edgeless", TrivialGroupWarning, stacklevel=3)
        return (0,) * P.size
    # y ~ x  iff  g.y in Comp(x) for some g != e  iff  y in g^-1 . Comp(x)
    inverse_rows = [P.action[grp.inv(g)] for g in grp.non_identity]
    adj = []
    for x in range(P.size):
        comp = bitset.indices(P.comparable_set(x))
        nb = 0
        for row in inverse_rows:
            nb |= bitset.from_indices(row[z] for z in comp)
        if strong:
            for row in P.action:
                nb &= ~(1 << row[x])
        else:
            nb &= ~(1 << x)
        adj.append(nb)
    return tuple(adj)


def compatibility_graph(P: GPoset) -> Graph:
    return Graph(P.size, _compat_adjacency(P, strong=False))


def strong_compatibility_graph(P: GPoset) -> Graph:
    return Graph(P.size, _compat_adjacency(P, strong=True))


def find_triangle(G: Graph) -> tuple[int, int, int] | None:
    for u in range(G.vertex_count):
        for v in bitset.indices(G.adj[u] >> (u + 1) << (u + 1)):
            common = G.adj[u] & G.adj[v]
            if common:
                return (u, v, bitset.lowest(common))
    return None


def is_triangle_free(G: Graph) -> bool:
    return find_triangle(G) is None


def lemma19_criterion(P: GPoset) -> bool:
    """True iff no ``x, y`` with ``x <= y`` and ``x <= -y`` in a free Z_2-poset."""
    if P.group.order != 2:
        raise InvalidParameter(f"criterion needs a Z_2-poset, group order is {P.group.order}")
    if not is_free(P):
        raise InvalidParameter("criterion needs a free Z_2-poset")
    flip = P.action[P.group.non_identity[0]]
    for x in range(P.size):
        above = P.up[x] | (1 << x)
        mirrored = bitset.from_indices(flip[y] for y in bitset.indices(above))
        if above & mirrored:
            return False
    return True
