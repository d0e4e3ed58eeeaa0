"""Hom-posets ``Hom_p(F, H)`` for ``F = K_r`` or ``C_r``, their free actions,
the colorings used to bound their strong compatibility graphs, and the
random-graph report.

Vertices of ``F`` are ``0..r-1``; ``C_r`` has edges ``{i, i+1}`` and
``{0, r-1}``. A Hom element is a tuple of ``r`` nonempty vertex bitsets of
``H``. Colors derived from vertex labels are ``vertex + 1``.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field
from typing import Literal, Sequence

from . import bitset
from .algebra import GPoset, _from_up, cyclic_group, dimension, is_free
from .chromatic import chromatic_number_exact, greedy_coloring, improper_edge
from .compat import Graph, complete_graph, strong_compatibility_graph
from .errors import CapacityError, InternalInvariantError, InvalidParameter, ValidationError

HomElement = tuple[int, ...]


@dataclass(frozen=True)
class Pattern:
    kind: Literal["K", "C"]
    r: int

    def __post_init__(self):
        if self.kind not in ("K", "C"):
            raise InvalidParameter(f"unknown pattern kind {self.kind!r}")
        if self.r < 2 or (self.kind == "C" and self.r < 3):
            raise InvalidParameter(f"pattern {self.kind}_{self.r} is too small")

    @property
    def edges(self) -> list[tuple[int, int]]:
        if self.kind == "K":
            return [(i, j) for i in range(self.r) for j in range(i + 1, self.r)]
        return [(i, i + 1) for i in range(self.r - 1)] + [(0, self.r - 1)]

    def earlier_neighbors(self, i: int) -> list[int]:
        return sorted(j for a, b in self.edges for j in ((a,) if b == i else (b,) if a == i else ()) if j < i)

    def __str__(self) -> str:
        return f"{self.kind}{self.r}"


def complete(r: int) -> Pattern:
    return Pattern("K", r)


def cycle(r: int) -> Pattern:
    return Pattern("C", r)


def is_hom_element(pattern: Pattern, H: Graph, parts: Sequence[int]) -> bool:
    if len(parts) != pattern.r or any(p == 0 for p in parts):
        return False
    if any(p >> H.vertex_count for p in parts):
        return False
    for i, j in pattern.edges:
        for x in bitset.indices(parts[i]):
            if parts[j] & ~H.adj[x]:
                return False
    return True


def _common_neighbors(H: Graph, part: int) -> int:
    acc = (1 << H.vertex_count) - 1
    for x in bitset.indices(part):
        acc &= H.adj[x]
    return acc


@dataclass(frozen=True)
class HomPoset:
    pattern: Pattern
    target: Graph
    elements: tuple[HomElement, ...]
    up: tuple[int, ...]
    covers: tuple[int, ...]
    index: dict[HomElement, int] = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)


def hom_poset(pattern: Pattern, H: Graph, cap: int = 50_000) -> HomPoset:
    """Enumerate ``Hom_p(pattern, H)`` by backtracking over parts.

    Part ``i`` ranges over the nonempty subsets (in increasing bitset order)
    of the common neighborhood of the earlier parts it is joined to.
    Raises CapacityError once more than ``cap`` elements are found.
    """
    if cap <= 0:
        raise InvalidParameter("cap must be positive")
    r = pattern.r
    full = (1 << H.vertex_count) - 1
    constraints = [pattern.earlier_neighbors(i) for i in range(r)]
    elements: list[HomElement] = []
    parts = [0] * r
    cn = [0] * r

    def rec(i: int) -> None:
        if i == r:
            elements.append(tuple(parts))
            if len(elements) > cap:
                raise CapacityError(f"Hom_p({pattern}, H) exceeds cap {cap}", len(elements))
            return
        allowed = full
        for j in constraints[i]:
            allowed &= cn[j]
        sub = 0
        while True:
            sub = (sub - allowed) & allowed
            if sub == 0:
                break
            parts[i] = sub
            cn[i] = _common_neighbors(H, sub)
            rec(i + 1)

    rec(0)
    index = {el: i for i, el in enumerate(elements)}
    covers = []
    for el in elements:
        c = 0
        for i, part in enumerate(el):
            for v in range(H.vertex_count):
                if not part >> v & 1:
                    j = index.get(el[:i] + (part | (1 << v),) + el[i + 1:])
                    if j is not None:
                        c |= 1 << j
        covers.append(c)
    # adding vertices one at a time stays inside Hom, so single additions generate the order
    order = sorted(range(len(elements)), key=lambda x: -sum(p.bit_count() for p in elements[x]))
    up = [0] * len(elements)
    for x in order:
        acc = 0
        for y in bitset.indices(covers[x]):
            acc |= (1 << y) | up[y]
        up[x] = acc
    return HomPoset(pattern, H, tuple(elements), tuple(up), tuple(covers), index)


def _attach(hp: HomPoset, group_order: int, images) -> GPoset:
    group = cyclic_group(group_order)
    action = [[hp.index[images(g, el)] for el in hp.elements] for g in range(group_order)]
    generators = [(x, y) for x in range(hp.size) for y in bitset.indices(hp.covers[x])]
    return _from_up(hp.up, group, action, generators, hp.elements, hp.covers)


def shift_action(hp: HomPoset) -> GPoset:
    """``Z_r`` acting by ``w^i.(A_1..A_r) = (A_{1+i}..A_{r+i})`` (indices mod r)."""
    if hp.pattern.kind != "K":
        raise InvalidParameter("cyclic shift action needs pattern K_r")
    r = hp.pattern.r
    P = _attach(hp, r, lambda g, el: el[g:] + el[:g])
    if not is_free(P):  # unreachable: parts are pairwise disjoint
        raise InternalInvariantError("shift action is not free")
    return P


def flip_action(hp: HomPoset) -> GPoset:
    """``Z_2`` acting by reversing the tuple."""
    if hp.pattern.kind != "C":
        raise InvalidParameter("flip action needs pattern C_r")
    P = _attach(hp, 2, lambda g, el: el[::-1] if g else el)
    if not is_free(P):
        raise ValidationError("flip action is not free")
    return P


def part_size_key(parts: HomElement) -> tuple[int, ...]:
    """``(m, |Gamma|, lambda)`` when some part is larger than the minimum,
    else ``(m,)``. ``lambda`` is the 1-based index of the part holding the
    smallest vertex among the minimum-size parts."""
    sizes = [p.bit_count() for p in parts]
    m = min(sizes)
    gamma = [i for i, s in enumerate(sizes) if s == m]
    if len(gamma) == len(parts):
        return (m,)
    union = 0
    for i in gamma:
        union |= parts[i]
    low = union & -union
    lam = next(i for i in gamma if parts[i] & low)
    return (m, len(gamma), lam + 1)


def lemma14_coloring(hp: HomPoset) -> tuple[list[int], list[tuple[int, ...]]]:
    """Colors (ranks of the realized keys, 1-based) and the sorted key table."""
    if hp.pattern.kind != "K":
        raise InvalidParameter("this coloring is defined on Hom_p(K_r, H)")
    keys = [part_size_key(el) for el in hp.elements]
    table = sorted(set(keys))
    rank = {k: i + 1 for i, k in enumerate(table)}
    return [rank[k] for k in keys], table


def first_part_coloring(hp: HomPoset) -> list[int]:
    """``min(A_1) + 1``."""
    return [bitset.lowest(el[0]) + 1 for el in hp.elements]


@dataclass(frozen=True)
class MultipartiteWitness:
    parts: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def is_multipartite_witness(H: Graph, w: MultipartiteWitness) -> bool:
    seen = 0
    for p in w.parts:
        if not p:
            return False
        bits = bitset.from_indices(p)
        if bits & seen or len(set(p)) != len(p) or max(p) >= H.vertex_count:
            return False
        seen |= bits
    for i, p in enumerate(w.parts):
        for q in w.parts[i + 1:]:
            qbits = bitset.from_indices(q)
            if any(qbits & ~H.adj[x] for x in p):
                return False
    return True


def find_balanced_multipartite(H: Graph, r: int, t: int) -> MultipartiteWitness | None:
    """``r`` disjoint ``t``-sets, pairwise completely joined, or None.

    Parts are produced in increasing order of their smallest vertex.
    """
    if r < 2 or t < 1:
        raise InvalidParameter("need r >= 2 and t >= 1")
    n = H.vertex_count

    def grow(done: list[list[int]], cand: int, cur: list[int], pool: int):
        if len(cur) == t:
            new_cand = cand
            for x in cur:
                new_cand &= H.adj[x]
            return place(done + [cur], new_cand)
        need = t - len(cur)
        for v in bitset.indices(pool):
            rest = pool >> v
            if rest.bit_count() < need:
                break
            res = grow(done, cand, cur + [v], pool & ~((2 << v) - 1))
            if res is not None:
                return res
        return None

    def place(done: list[list[int]], cand: int):
        if len(done) == r:
            return done
        if cand.bit_count() < (r - len(done)) * t:
            return None
        lo = done[-1][0] + 1 if done else 0
        return grow(done, cand, [], cand & ~((1 << lo) - 1))

    found = place([], (1 << n) - 1)
    if found is None:
        return None
    return MultipartiteWitness(tuple(tuple(p) for p in found))


def minimal_t(H: Graph, r: int) -> int:
    """Smallest ``t`` such that ``H`` has no balanced complete ``r``-partite ``K_{t,...,t}``."""
    t = 1
    while find_balanced_multipartite(H, r, t) is not None:
        t += 1
    return t


def multipartite_dimension_lower_bound(H: Graph, w: MultipartiteWitness) -> tuple[int, list[HomElement]]:
    """Chain in ``Hom_p(K_r, H)`` of length ``sum(l_i) - r``.

    Starts from the singletons of the smallest vertices and grows part 1,
    then part 2, ..., one vertex at a time.
    """
    if len(w.parts) < 2 or not is_multipartite_witness(H, w):
        raise InvalidParameter("not a complete multipartite subgraph of H", witness=w)
    pattern = complete(len(w.parts))
    ordered = [sorted(p) for p in w.parts]
    cur = [1 << p[0] for p in ordered]
    chain = [tuple(cur)]
    for i, p in enumerate(ordered):
        for v in p[1:]:
            cur[i] |= 1 << v
            chain.append(tuple(cur))
    for el in chain:
        if not is_hom_element(pattern, H, el):  # unreachable for a valid witness
            raise InternalInvariantError(f"chain element {el} is not in Hom_p", witness=el)
    return len(chain) - 1, chain


def example12_chain(r: int, n: int) -> list[HomElement]:
    """Chain of ``(r/2)(n-2)`` strict steps in ``Hom_p(C_r, K_n)`` for even ``r``.

    Starts at ``({1},{2},...,{1},{2})`` (vertices 0 and 1 here) and grows
    each odd position to everything except vertex 1, one vertex at a time.
    """
    if r % 2:
        raise InvalidParameter("odd cycle length is not supported")
    if r < 4:
        raise InvalidParameter("need r >= 4")
    if n < 3:
        raise InvalidParameter("need n >= 3")
    cur = [1 << 0 if i % 2 == 0 else 1 << 1 for i in range(r)]
    chain = [tuple(cur)]
    for i in range(0, r, 2):
        for v in range(2, n):
            cur[i] |= 1 << v
            chain.append(tuple(cur))

    K = complete_graph(n)
    pattern = cycle(r)
    for el in chain:
        if not is_hom_element(pattern, K, el):
            raise InternalInvariantError(f"chain element {el} is not in Hom_p", witness=el)
    for a, b in zip(chain, chain[1:]):
        if a == b or any(p & ~q for p, q in zip(a, b)):
            raise InternalInvariantError("chain is not strictly increasing")
    return chain


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample; one ``random.Random(seed).random()`` draw per pair
    ``(i, j)``, ``i < j``, in lexicographic order; the edge is kept when the
    draw is below ``p``."""
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@dataclass
class HomColoringReport:
    n: int
    r: int
    seed: int
    eps: float
    t: int
    hom_size: int
    colors_used: int | None
    provable_bound: int
    claimed_bound: int
    log_bound: float
    greedy_ub: int | None
    claimed_index_bound: int
    proper: bool | None
    partial: bool
    hom_dimension: int | None = None
    chi_lower: int | None = None
    chi_upper: int | None = None

    CSV_FIELDS = ("n", "r", "seed", "t", "hom_size", "colors_used", "provable_bound",
                  "claimed_bound", "log_bound", "greedy_ub")

    def csv_row(self) -> list:
        return [getattr(self, f) for f in self.CSV_FIELDS]

    def to_dict(self) -> dict:
        return asdict(self)


def theorem13_report(n: int, r: int, seed: int, eps: float = 0.1, cap: int = 50_000,
                     budget_ms: int | None = None) -> HomColoringReport:
    """Part-size coloring of ``Hom_p(K_r, G(n, 1/2))`` next to the bounds.

    ``provable_bound`` is ``(t-1)(r(r-1)+1)``; ``claimed_bound`` is
    ``(C(r,2)+1)(t-1)`` and is reported, not asserted. With ``budget_ms`` the
    chromatic number of the strong compatibility graph is also bracketed.
    """
    if r < 2:
        raise InvalidParameter("need r >= 2")
    H = gnp(n, 0.5, seed)
    t = minimal_t(H, r)
    provable = (t - 1) * (r * (r - 1) + 1)
    claimed = (math.comb(r, 2) + 1) * (t - 1)
    rhs = (r + 2 / (r - 1) + eps) * math.log2(n) if n > 0 else 0.0
    base = dict(n=n, r=r, seed=seed, eps=eps, t=t, provable_bound=provable, claimed_bound=claimed,
                log_bound=rhs, claimed_index_bound=claimed - 1)
    try:
        hp = hom_poset(complete(r), H, cap)
    except CapacityError as exc:
        return HomColoringReport(hom_size=exc.partial_count, colors_used=None, greedy_ub=None,
                               proper=None, partial=True, **base)
    if hp.size == 0:
        return HomColoringReport(hom_size=0, colors_used=0, greedy_ub=0, proper=True,
                               partial=False, **base)
    P = shift_action(hp)
    C = strong_compatibility_graph(P)
    colors, _ = lemma14_coloring(hp)
    greedy = greedy_coloring(C)
    chi = chromatic_number_exact(C, budget_ms) if budget_ms is not None else None
    return HomColoringReport(
        hom_size=hp.size,
        colors_used=len(set(colors)),
        greedy_ub=max(greedy),
        proper=improper_edge(C, colors) is None,
        partial=False,
        hom_dimension=dimension(P),
        chi_lower=chi.lower if chi else None,
        chi_upper=chi.upper if chi else None,
        **base,
    )
