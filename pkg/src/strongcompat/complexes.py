"""Abstract simplicial complexes with vertex-level group actions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import bitset
from .algebra import FiniteGroup, GPoset, _from_up, cyclic_group, trivial_group
from .errors import InvalidParameter, ValidationError


def _face_key(face: int) -> tuple[int, list[int]]:
    return face.bit_count(), bitset.indices(face)


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces are bitsets sorted by (cardinality, sorted vertex list)."""

    vertex_count: int
    faces: tuple[int, ...]
    group: FiniteGroup | None = None
    action: tuple[tuple[int, ...], ...] | None = None

    @property
    def facets(self) -> list[int]:
        return [f for f in self.faces if not any(f != h and f & h == f for h in self.faces)]

    @property
    def dimension(self) -> int:
        return max(f.bit_count() for f in self.faces) - 1

    def face_index(self) -> dict[int, int]:
        return {f: i for i, f in enumerate(self.faces)}


def make_complex(
    facets: Iterable[Iterable[int]],
    action: Sequence[Sequence[int]] | None = None,
    group: FiniteGroup | None = None,
    vertex_count: int | None = None,
) -> SimplicialComplex:
    """Downward closure of ``facets``.

    ``action[g]`` is a vertex permutation for each group element. When
    ``group`` is omitted it defaults to ``Z_k`` with ``k = len(action)``.
    """
    facet_bits = []
    for f in facets:
        f = list(f)
        if not f:
            raise InvalidParameter("facets must be nonempty")
        if any(v < 0 for v in f):
            raise InvalidParameter(f"negative vertex in facet {f}")
        facet_bits.append(bitset.from_indices(f))
    if not facet_bits:
        raise InvalidParameter("a complex needs at least one facet")
    top = max(b.bit_length() for b in facet_bits)
    if vertex_count is None:
        vertex_count = top
    elif vertex_count < top:
        raise InvalidParameter(f"facet vertex out of range {vertex_count}")

    faces: set[int] = set()
    for f in facet_bits:
        verts = bitset.indices(f)
        for size in range(1, len(verts) + 1):
            for sub in itertools.combinations(verts, size):
                faces.add(bitset.from_indices(sub))
    ordered = tuple(sorted(faces, key=_face_key))

    rows = None
    if action is not None:
        if group is None:
            group = cyclic_group(len(action))
        if len(action) != group.order:
            raise ValidationError(f"action has {len(action)} rows, group order is {group.order}")
        rows = []
        for g, row in enumerate(action):
            row = tuple(int(v) for v in row)
            if sorted(row) != list(range(vertex_count)):
                raise ValidationError(f"action row {g} is not a vertex permutation", witness=g)
            rows.append(row)
        rows = tuple(rows)
        for g, row in enumerate(rows):
            for f in ordered:
                image = bitset.permute(f, row)
                if image not in faces:
                    raise ValidationError(
                        f"group element {g} maps face {bitset.indices(f)} to non-face {bitset.indices(image)}",
                        witness=bitset.indices(f),
                    )
        for g in range(group.order):
            for h in range(group.order):
                gh = rows[group.mul(g, h)]
                if any(rows[g][rows[h][v]] != gh[v] for v in range(vertex_count)):
                    raise ValidationError(f"vertex action is not a group action at ({g}, {h})", witness=(g, h))
    elif group is not None and group.order != 1:
        raise InvalidParameter("group given without an action")
    return SimplicialComplex(vertex_count, ordered, group if rows is not None else None, rows)


def crosspolytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the (n+1)-dimensional cross-polytope, a triangulated n-sphere.

    Vertex ``i`` is ``+e_{i+1}`` and vertex ``n + 1 + i`` is its antipode, for
    ``i`` in ``0..n``. The Z_2 action swaps antipodes.
    """
    if n < 0:
        raise InvalidParameter(f"sphere dimension must be >= 0, got {n}")
    d = n + 1
    faces = []
    for signs in itertools.product((0, 1, -1), repeat=d):
        verts = [i if s == 1 else d + i for i, s in enumerate(signs) if s]
        if verts:
            faces.append(bitset.from_indices(verts))
    swap = tuple((v + d) % (2 * d) for v in range(2 * d))
    return SimplicialComplex(
        2 * d,
        tuple(sorted(faces, key=_face_key)),
        cyclic_group(2),
        (tuple(range(2 * d)), swap),
    )


def face_poset(K: SimplicialComplex) -> GPoset:
    """Nonempty faces ordered by strict inclusion, indexed like ``K.faces``.

    The action is induced facewise; without a complex action the group is
    trivial. Labels are the sorted vertex lists.
    """
    index = K.face_index()
    covers = []
    generators = []
    for i, f in enumerate(K.faces):
        c = 0
        for v in range(K.vertex_count):
            if not f >> v & 1:
                j = index.get(f | (1 << v))
                if j is not None:
                    c |= 1 << j
                    generators.append((i, j))
        covers.append(c)
    # faces are sorted by cardinality, so later faces never lie below earlier ones
    up = [0] * len(K.faces)
    for i in range(len(K.faces) - 1, -1, -1):
        acc = 0
        for j in bitset.indices(covers[i]):
            acc |= (1 << j) | up[j]
        up[i] = acc
    if K.action is None:
        group = trivial_group()
        action = [tuple(range(len(K.faces)))]
    else:
        group = K.group
        action = [tuple(index[bitset.permute(f, row)] for f in K.faces) for row in K.action]
    labels = [tuple(bitset.indices(f)) for f in K.faces]
    return _from_up(up, group, action, generators, labels, covers)


def is_free_complex_action(K: SimplicialComplex) -> bool:
    if K.action is None:
        raise InvalidParameter("complex has no group action")
    e = K.group.identity
    return all(
        bitset.permute(f, K.action[g]) != f
        for g in range(K.group.order) if g != e
        for f in K.faces
    )
