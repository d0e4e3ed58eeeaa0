"""Finite groups given by multiplication tables, and G-posets.

Orders are stored transitively closed as strict up-sets: ``P.up[x]`` is the
bitset of all ``y`` with ``x < y``.

Element indexing of the named posets is fixed:

* ``ladder_poset``: the pair ``(g, level)`` with ``level`` in ``1..n`` sits at
  index ``(level - 1) * |G| + g``.
* ``tucker_domain``: a vector ``(x_1, ..., x_n)`` over ``G ∪ {0}`` is encoded
  digit-wise (``0`` for zero, ``g + 1`` for a group element), read as a
  base-``|G|+1`` number with ``x_1`` most significant, minus one (the zero
  vector is excluded).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Literal, Sequence

import numpy as np

from . import bitset
from .errors import InvalidParameter, ValidationError


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def non_identity(self) -> list[int]:
        return [g for g in range(self.order) if g != self.identity]


def cyclic_group(k: int) -> FiniteGroup:
    """Z_k with ``i * j = (i + j) mod k``."""
    if k < 1:
        raise InvalidParameter(f"cyclic group order must be >= 1, got {k}")
    table = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
    inverse = tuple((-i) % k for i in range(k))
    return FiniteGroup(k, table, 0, inverse)


def group_from_table(table: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> FiniteGroup:
    """Validate a Cayley table and locate the identity and inverses.

    Raises ValidationError naming the failed axiom; ``witness`` holds the
    offending row/column index or triple.
    """
    k = len(table)
    if k == 0:
        raise ValidationError("empty table")
    rows = []
    for i, row in enumerate(table):
        row = tuple(int(v) for v in row)
        if len(row) != k:
            raise ValidationError(f"table is not square: row {i} has {len(row)} entries", witness=i)
        for v in row:
            if not 0 <= v < k:
                raise ValidationError(f"entry {v} in row {i} is out of range", witness=i)
        rows.append(row)
    t = tuple(rows)
    full = set(range(k))
    for i in range(k):
        if set(t[i]) != full:
            raise ValidationError(f"latin square: row {i} is not a permutation", witness=("row", i))
        if {t[j][i] for j in range(k)} != full:
            raise ValidationError(f"latin square: column {i} is not a permutation", witness=("column", i))
    ident = next((e for e in range(k) if all(t[e][x] == x and t[x][e] == x for x in range(k))), None)
    if ident is None:
        raise ValidationError("identity: no two-sided identity element")
    for a, b, c in itertools.product(range(k), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise ValidationError(f"associativity fails on ({a}, {b}, {c})", witness=(a, b, c))
    inverse = []
    for g in range(k):
        h = next((h for h in range(k) if t[g][h] == ident and t[h][g] == ident), None)
        if h is None:  # unreachable for an associative latin square with identity
            raise ValidationError(f"inverse: element {g} has no inverse", witness=g)
        inverse.append(h)
    return FiniteGroup(k, t, ident, tuple(inverse), tuple(names) if names is not None else None)


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


@dataclass(frozen=True)
class Orbit:
    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class GPoset:
    size: int
    up: tuple[int, ...]
    group: FiniteGroup
    action: tuple[tuple[int, ...], ...]
    labels: tuple[Any, ...] | None = field(default=None, compare=False, repr=False)

    def is_less(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def leq(self, x: int, y: int) -> bool:
        return x == y or self.is_less(x, y)

    def comparable(self, x: int, y: int) -> bool:
        """Reflexive comparability: equal elements count as comparable."""
        return x == y or self.is_less(x, y) or self.is_less(y, x)

    def act(self, g: int, x: int) -> int:
        return self.action[g][x]

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.size
        for x in range(self.size):
            for y in bitset.indices(self.up[x]):
                down[y] |= 1 << x
        return tuple(down)

    def comparable_set(self, x: int) -> int:
        """Bitset of everything comparable with ``x``, including ``x``."""
        return self.up[x] | self.down[x] | (1 << x)

    def less_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.size) for y in bitset.indices(self.up[x])]

    @cached_property
    def covers(self) -> tuple[int, ...]:
        """Hasse diagram: ``covers[x]`` are the immediate successors of ``x``."""
        out = []
        for x in range(self.size):
            above = self.up[x]
            indirect = 0
            for y in bitset.indices(above):
                indirect |= self.up[y]
            out.append(above & ~indirect)
        return tuple(out)

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.size) for y in bitset.indices(self.covers[x])]

    def less_matrix(self) -> np.ndarray:
        mat = np.zeros((self.size, self.size), dtype=bool)
        for x, y in self.less_pairs():
            mat[x, y] = True
        return mat


def transitive_closure(size: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Strict up-set bitsets of the transitive closure of ``pairs``.

    Raises ValidationError if the closure is reflexive; ``witness`` is a
    directed cycle of elements.
    """
    succ: list[set[int]] = [set() for _ in range(size)]
    for x, y in pairs:
        if not (0 <= x < size and 0 <= y < size):
            raise ValidationError(f"relation pair ({x}, {y}) out of range", witness=(x, y))
        if x == y:
            raise ValidationError(f"reflexive after closure: {x} < {x}", witness=[x])
        succ[x].add(y)
    indeg = [0] * size
    for x in range(size):
        for y in succ[x]:
            indeg[y] += 1
    order = [x for x in range(size) if indeg[x] == 0]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                order.append(y)
    if len(order) < size:
        raise ValidationError("reflexive after closure: relation has a cycle", witness=_find_cycle(succ, set(order)))
    up = [0] * size
    for x in reversed(order):
        acc = 0
        for y in succ[x]:
            acc |= (1 << y) | up[y]
        up[x] = acc
    return tuple(up)


def _find_cycle(succ: list[set[int]], acyclic: set[int]) -> list[int]:
    # every node left over by Kahn's pass has a left-over predecessor
    pred: dict[int, list[int]] = {}
    for x in range(len(succ)):
        if x in acyclic:
            continue
        for y in succ[x]:
            if y not in acyclic:
                pred.setdefault(y, []).append(x)
    x = min(pred)
    seen: dict[int, int] = {}
    path = []
    while x not in seen:
        seen[x] = len(path)
        path.append(x)
        x = min(pred[x])
    return path[seen[x]:][::-1]


def _validate_action(size: int, group: FiniteGroup, action: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if len(action) != group.order:
        raise ValidationError(f"action has {len(action)} rows, group order is {group.order}")
    rows = []
    full = list(range(size))
    for g, row in enumerate(action):
        row = tuple(int(v) for v in row)
        if len(row) != size:
            raise ValidationError(f"action row {g} has {len(row)} entries, poset has {size}", witness=g)
        if sorted(row) != full:
            raise ValidationError(f"action row {g} is not a permutation", witness=g)
        rows.append(row)
    if rows[group.identity] != tuple(full):
        x = next(x for x in full if rows[group.identity][x] != x)
        raise ValidationError(f"identity moves element {x}", witness=(group.identity, x))
    for g in range(group.order):
        for h in range(group.order):
            gh = rows[group.mul(g, h)]
            rg, rh = rows[g], rows[h]
            for x in full:
                if rg[rh[x]] != gh[x]:
                    raise ValidationError(
                        f"not an action: {g}.({h}.{x}) != ({g}{h}).{x}", witness=(g, h, x)
                    )
    return tuple(rows)


def _check_order_preserved(up: Sequence[int], action: Sequence[Sequence[int]], pairs: Iterable[tuple[int, int]]) -> None:
    # generating pairs suffice: the closure of a preserved relation is preserved
    for x, y in pairs:
        for g, row in enumerate(action):
            if not up[row[x]] >> row[y] & 1:
                raise ValidationError(
                    f"order not preserved: {x} < {y} but {g}.{x}={row[x]} is not below {g}.{y}={row[y]}",
                    witness=(g, x, y),
                )


def _as_pairs(less: Any, size: int) -> list[tuple[int, int]]:
    if isinstance(less, np.ndarray) and less.dtype == bool:
        if less.shape != (size, size):
            raise ValidationError(f"relation matrix shape {less.shape} does not match size {size}")
        return [(int(x), int(y)) for x, y in zip(*np.nonzero(less))]
    less = list(less)
    if less and len(less[0]) and isinstance(less[0][0], (bool, np.bool_)):
        if len(less) != size or any(len(row) != size for row in less):
            raise ValidationError(f"relation matrix is not {size}x{size}")
        return [(x, y) for x in range(size) for y in range(size) if less[x][y]]
    out = []
    for p in less:
        if len(p) != 2:
            raise ValidationError(f"relation entry {p!r} is not a pair")
        out.append((int(p[0]), int(p[1])))
    return out


def make_gposet(
    less: Any,
    group: FiniteGroup,
    action: Sequence[Sequence[int]] | None = None,
    size: int | None = None,
    labels: Sequence[Any] | None = None,
) -> GPoset:
    """Build a validated G-poset.

    ``less`` is either a list of ``(x, y)`` pairs (any generating set of the
    strict order) or an ``m x m`` boolean matrix. It is transitively closed
    before validation. ``size`` defaults to the width of ``action``; with no
    action the group must be trivial.
    """
    if action is None:
        if group.order != 1:
            raise InvalidParameter("action required for a non-trivial group")
        if size is None:
            raise InvalidParameter("size required when no action is given")
        action = [list(range(size))]
    if size is None:
        size = len(action[0]) if len(action) else 0
    pairs = _as_pairs(less, size)
    rows = _validate_action(size, group, action)
    up = transitive_closure(size, pairs)
    _check_order_preserved(up, rows, pairs)
    return GPoset(size, up, group, rows, tuple(labels) if labels is not None else None)


def _from_up(up: Sequence[int], group: FiniteGroup, action: Sequence[Sequence[int]],
             generators: Iterable[tuple[int, int]], labels: Sequence[Any] | None = None,
             covers: Sequence[int] | None = None) -> GPoset:
    # internal: ``up`` is already closed; ``generators`` generate it.
    # ``covers``, when given, must be the exact Hasse diagram.
    size = len(up)
    rows = _validate_action(size, group, action)
    _check_order_preserved(up, rows, generators)
    P = GPoset(size, tuple(up), group, rows, tuple(labels) if labels is not None else None)
    if covers is not None:
        object.__setattr__(P, "covers", tuple(covers))
    return P


def with_action(P: GPoset, group: FiniteGroup, action: Sequence[Sequence[int]]) -> GPoset:
    """Same order, different (validated) action."""
    return _from_up(P.up, group, action, P.cover_pairs(), P.labels, P.covers)


def is_free(P: GPoset) -> bool:
    e = P.group.identity
    return all(
        P.action[g][x] != x for g in range(P.group.order) if g != e for x in range(P.size)
    )


def chain_heights(P: GPoset) -> list[int]:
    """``h[p]`` = cardinality of the longest chain starting at ``p`` (``p`` included)."""
    # x < y implies up[y] is a strict subset of up[x]
    order = sorted(range(P.size), key=lambda x: P.up[x].bit_count())
    h = [0] * P.size
    for x in order:
        above = bitset.indices(P.covers[x])
        h[x] = 1 + max((h[y] for y in above), default=0)
    return h


def dimension(P: GPoset) -> int:
    if P.size == 0:
        raise InvalidParameter("dimension of the empty poset is undefined")
    return max(chain_heights(P)) - 1


def orbits(P: GPoset) -> list[Orbit]:
    seen = [False] * P.size
    out = []
    for x in range(P.size):
        if seen[x]:
            continue
        members = sorted({row[x] for row in P.action})
        for y in members:
            seen[y] = True
        out.append(Orbit(x, tuple(members)))
    return out


def orbit_index(P: GPoset) -> list[int]:
    """Element -> position of its orbit in ``orbits(P)``."""
    idx = [0] * P.size
    for i, orb in enumerate(orbits(P)):
        for y in orb.members:
            idx[y] = i
    return idx


def ladder_index(group: FiniteGroup, g: int, level: int) -> int:
    return (level - 1) * group.order + g


def ladder_poset(group: FiniteGroup, n: int, variant: Literal["prec1", "prec2"] = "prec1") -> GPoset:
    """``G x [n]`` with ``h.(g, i) = (hg, i)``.

    ``prec1``: ``(h, x) < (g, y)`` iff ``x < y``.
    ``prec2``: ``(g, x) < (h, y)`` iff ``x < y`` and ``g = h``.
    """
    if n < 1:
        raise InvalidParameter(f"ladder needs n >= 1, got {n}")
    if variant not in ("prec1", "prec2"):
        raise InvalidParameter(f"unknown ladder variant {variant!r}")
    k = group.order
    size = n * k
    pairs = []
    for level in range(1, n):
        for g in range(k):
            if variant == "prec1":
                pairs.extend((ladder_index(group, g, level), ladder_index(group, h, level + 1)) for h in range(k))
            else:
                pairs.append((ladder_index(group, g, level), ladder_index(group, g, level + 1)))
    action = [[ladder_index(group, group.mul(h, i % k), i // k + 1) for i in range(size)] for h in range(k)]
    labels = [(i % k, i // k + 1) for i in range(size)]
    return make_gposet(pairs, group, action, size=size, labels=labels)


def tucker_index(group: FiniteGroup, vector: Sequence[int | None]) -> int:
    """Index of a vector whose entries are group elements or ``None`` for zero."""
    base = group.order + 1
    value = 0
    for c in vector:
        value = value * base + (0 if c is None else c + 1)
    if value == 0:
        raise InvalidParameter("the zero vector is not an element")
    return value - 1


def tucker_domain(group: FiniteGroup, n: int) -> GPoset:
    """``(G ∪ {0})^n`` minus the zero vector, ordered by ``x_i != 0 => x_i = y_i``.

    Labels are tuples with ``None`` in zero coordinates.
    """
    if n < 1:
        raise InvalidParameter(f"tucker domain needs n >= 1, got {n}")
    k = group.order
    digits = list(itertools.product(range(k + 1), repeat=n))[1:]
    vectors = [tuple(None if d == 0 else d - 1 for d in vec) for vec in digits]
    size = len(vectors)
    pairs = []
    for i, vec in enumerate(vectors):
        for j, c in enumerate(vec):
            if c is None:
                for g in range(k):
                    pairs.append((i, tucker_index(group, vec[:j] + (g,) + vec[j + 1:])))
    action = [
        [tucker_index(group, tuple(None if c is None else group.mul(g, c) for c in vec)) for vec in vectors]
        for g in range(k)
    ]
    P = make_gposet(pairs, group, action, size=size, labels=vectors)
    if k > 1 and not is_free(P):  # unreachable: g.x = x forces g = e on any nonzero coordinate
        raise ValidationError("tucker domain action is not free")
    return P
