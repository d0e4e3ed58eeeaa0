"""Exhaustive search for counterexamples to the G-Tucker lemma.

A labeling assigns ``(shift, level)`` in ``G x [n-1]`` to each orbit
representative of the Tucker domain and is extended by
``label(g.x) = (g * shift, level)``, so every candidate is equivariant by
construction. Two comparable elements conflict when their levels agree and
their shifts differ.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Literal, Mapping, Sequence

from . import bitset
from .algebra import FiniteGroup, GPoset, ladder_index, ladder_poset, orbits, tucker_domain
from .errors import InvalidParameter

Label = tuple[int, int]


@dataclass(frozen=True)
class TuckerInstance:
    group: FiniteGroup
    n: int
    domain: GPoset
    target: GPoset
    orbit_reps: tuple[int, ...]
    # rep_of[x] = (position of x's orbit in orbit_reps, h) with x = h.rep
    rep_of: tuple[tuple[int, int], ...] = field(repr=False)
    levels: int = 0


def tucker_instance(group: FiniteGroup, n: int, levels: int | None = None) -> TuckerInstance:
    """Domain ``(G u {0})^n`` minus zero, target ``G x [levels]`` (default ``n - 1``)."""
    if n < 2:
        raise InvalidParameter("need n >= 2 so that the target is nonempty")
    if group.order < 2:
        raise InvalidParameter("need a non-trivial group")
    if levels is None:
        levels = n - 1
    if levels < 1:
        raise InvalidParameter("need at least one target level")
    P = tucker_domain(group, n)
    Q = ladder_poset(group, levels, "prec1")
    reps = sorted(
        (orb.representative for orb in orbits(P)),
        key=lambda x: (sum(c is not None for c in P.labels[x]), x),
    )
    rep_of: list[tuple[int, int]] = [(-1, -1)] * P.size
    for pos, x in enumerate(reps):
        for h in group.elements:
            rep_of[P.action[h][x]] = (pos, h)
    return TuckerInstance(group, n, P, Q, tuple(reps), tuple(rep_of), levels)


def _normalize(inst: TuckerInstance, labeling: Mapping[int, Label] | Sequence[Label]) -> list[Label]:
    if isinstance(labeling, Mapping):
        missing = [x for x in inst.orbit_reps if x not in labeling]
        if missing:
            raise InvalidParameter(f"labeling misses orbit representatives {missing}", witness=missing)
        labels = [tuple(labeling[x]) for x in inst.orbit_reps]
    else:
        if len(labeling) != len(inst.orbit_reps):
            raise InvalidParameter(
                f"labeling has {len(labeling)} entries, instance has {len(inst.orbit_reps)} orbits"
            )
        labels = [tuple(lab) for lab in labeling]
    for s, lvl in labels:
        if not (0 <= s < inst.group.order and 1 <= lvl <= inst.levels):
            raise InvalidParameter(f"label ({s}, {lvl}) outside G x [{inst.levels}]")
    return labels


def extend_labeling(inst: TuckerInstance, labeling) -> tuple[list[int], list[int]]:
    """Per-element ``(shifts, levels)`` of the equivariant extension."""
    labels = _normalize(inst, labeling)
    shifts, levels = [], []
    for pos, h in inst.rep_of:
        s, lvl = labels[pos]
        shifts.append(inst.group.mul(h, s))
        levels.append(lvl)
    return shifts, levels


def labeling_as_map(inst: TuckerInstance, labeling) -> list[int]:
    """The extension as a map into the target poset's element indices."""
    shifts, levels = extend_labeling(inst, labeling)
    return [ladder_index(inst.group, s, lvl) for s, lvl in zip(shifts, levels)]


def check_labeling(inst: TuckerInstance, labeling) -> tuple[int, int, int] | None:
    """A conflict ``(x, y, g)`` with ``x < y``, ``g != e`` and
    ``label(x) = g.label(y)``, or None."""
    shifts, levels = extend_labeling(inst, labeling)
    grp = inst.group
    for x in range(inst.domain.size):
        for y in bitset.indices(inst.domain.up[x]):
            if levels[x] == levels[y] and shifts[x] != shifts[y]:
                return (x, y, grp.mul(shifts[x], grp.inv(shifts[y])))
    return None


@dataclass
class SearchOutcome:
    status: Literal["verified", "counterexample", "indeterminate"]
    counterexample: list[Label] | None
    nodes: int
    elapsed_ms: float = field(compare=False)
    depth_reached: int = 0

    def to_dict(self, inst: TuckerInstance | None = None) -> dict:
        out = {
            "status": self.status,
            "nodes": self.nodes,
            "depth_reached": self.depth_reached,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "counterexample": None,
        }
        if self.counterexample is not None:
            reps = inst.orbit_reps if inst is not None else range(len(self.counterexample))
            out["counterexample"] = [
                {"representative": x, "shift": s, "level": lvl} for x, (s, lvl) in zip(reps, self.counterexample)
            ]
        if inst is not None:
            out["group_order"] = inst.group.order
            out["n"] = inst.n
        return out


class _Budget(Exception):
    pass


def _relative_shifts(inst: TuckerInstance) -> list[list[tuple[int, ...]]]:
    """``rel[p][q]`` (``q <= p``): the products ``h_p^-1 h_q`` over comparable
    pairs ``h_p.x_p ~ h_q.x_q``. With equal levels a conflict-free labeling
    needs ``s_p = d * s_q`` for every ``d`` listed."""
    grp = inst.group
    N = len(inst.orbit_reps)
    rel: list[list[set[int]]] = [[set() for _ in range(N)] for _ in range(N)]
    P = inst.domain
    for x in range(P.size):
        px, hx = inst.rep_of[x]
        for y in bitset.indices(P.up[x]):
            py, hy = inst.rep_of[y]
            if px >= py:
                rel[px][py].add(grp.mul(grp.inv(hx), hy))
            else:
                rel[py][px].add(grp.mul(grp.inv(hy), hx))
    return [[tuple(sorted(s)) for s in row] for row in rel]


def search_counterexample(group: FiniteGroup, n: int, budget_ms: int | None = None,
                          levels: int | None = None) -> SearchOutcome:
    """Backtrack over representative labels in (group index, level) order.

    ``verified`` means every equivariant labeling has a conflict.
    """
    inst = tucker_instance(group, n, levels)
    return search_instance(inst, budget_ms)


def search_instance(inst: TuckerInstance, budget_ms: int | None = None) -> SearchOutcome:
    grp = inst.group
    N = len(inst.orbit_reps)
    rel = _relative_shifts(inst)
    # constraints of position p against earlier positions (and itself)
    checks = [[(q, rel[p][q]) for q in range(p + 1) if rel[p][q]] for p in range(N)]
    values = [(g, lvl) for g in grp.elements for lvl in range(1, inst.levels + 1)]
    shift = [-1] * N
    level = [0] * N
    start = time.monotonic()
    deadline = None if budget_ms is None else start + budget_ms / 1000.0
    stats = {"nodes": 0, "depth": 0}

    def consistent(p: int, s: int, lvl: int) -> bool:
        for q, ds in checks[p]:
            if q == p:
                # comparable orbit-mates: any d != e is a conflict
                if any(d != grp.identity for d in ds):
                    return False
                continue
            if level[q] != lvl:
                continue
            sq = shift[q]
            for d in ds:
                if grp.mul(d, sq) != s:
                    return False
        return True

    def rec(p: int) -> bool:
        stats["nodes"] += 1
        if p > stats["depth"]:
            stats["depth"] = p
        if deadline is not None and stats["nodes"] & 1023 == 0 and time.monotonic() > deadline:
            raise _Budget
        if p == N:
            return True
        for s, lvl in values:
            if consistent(p, s, lvl):
                shift[p], level[p] = s, lvl
                if rec(p + 1):
                    return True
        shift[p], level[p] = -1, 0
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 2 * N + 1000))
    try:
        found = rec(0)
    except _Budget:
        return SearchOutcome("indeterminate", None, stats["nodes"], (time.monotonic() - start) * 1000, stats["depth"])
    finally:
        sys.setrecursionlimit(limit)
    elapsed = (time.monotonic() - start) * 1000
    if not found:
        return SearchOutcome("verified", None, stats["nodes"], elapsed, stats["depth"])
    labels = list(zip(shift, level))
    if check_labeling(inst, labels) is not None:  # re-validate before reporting
        raise AssertionError("search produced a conflicting labeling")
    return SearchOutcome("counterexample", labels, stats["nodes"], elapsed, stats["depth"])
