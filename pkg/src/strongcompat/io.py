"""File formats: group/poset/complex JSON, DIMACS ``.col`` graphs, JSON
adjacency lists, and colorings as JSON arrays.

* ``group.json``: ``{"order", "table", "names"?}``
* ``poset.json``: ``{"size", "less": [[i, j], ...], "group", "action"}``;
  ``group`` is an inline group object, ``"cyclic:k"``, or a path to a
  group file (relative to the poset file). ``less`` may be any generating
  set; the Hasse diagram is written.
* ``complex.json``: ``{"vertices", "facets", "action"?, "group"?}``; faces are
  regenerated on load.
* DIMACS: ``c`` comment lines, one ``p edge n m`` line, ``e u v`` lines with
  1-based vertices.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import FiniteGroup, GPoset, cyclic_group, group_from_table, make_gposet
from .compat import Graph
from .complexes import SimplicialComplex, make_complex
from .errors import ParseError, ValidationError
from . import bitset


def dumps(obj: Any) -> str:
    """Canonical JSON text (sorted keys, trailing newline)."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg} (column {exc.colno})", line=exc.lineno) from None


def load_json(path: str | Path) -> Any:
    return loads(Path(path).read_text())


def parse_group_spec(spec: str) -> FiniteGroup:
    """``cyclic:k`` or a path to a group file."""
    if spec.startswith("cyclic:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad group spec {spec!r}") from None
        return cyclic_group(k)
    return group_from_dict(load_json(spec))


def group_to_dict(G: FiniteGroup) -> dict:
    out: dict[str, Any] = {"order": G.order, "table": [list(row) for row in G.table]}
    if G.names is not None:
        out["names"] = list(G.names)
    return out


def group_from_dict(d: Any) -> FiniteGroup:
    if not isinstance(d, dict) or "table" not in d:
        raise ParseError("group object needs a 'table' field")
    G = group_from_table(d["table"], d.get("names"))
    if "order" in d and d["order"] != G.order:
        raise ValidationError(f"declared order {d['order']} does not match table size {G.order}")
    return G


def _resolve_group(ref: Any, base: Path | None) -> FiniteGroup:
    if isinstance(ref, dict):
        return group_from_dict(ref)
    if isinstance(ref, str):
        if ref.startswith("cyclic:"):
            return parse_group_spec(ref)
        path = Path(ref)
        if base is not None and not path.is_absolute():
            path = base / path
        return group_from_dict(load_json(path))
    raise ParseError("group must be an object, 'cyclic:k', or a file path")


def poset_to_dict(P: GPoset) -> dict:
    return {
        "size": P.size,
        "less": [list(p) for p in P.cover_pairs()],
        "group": group_to_dict(P.group),
        "action": [list(row) for row in P.action],
    }


def poset_from_dict(d: Any, base: Path | None = None) -> GPoset:
    if not isinstance(d, dict):
        raise ParseError("poset file must hold a JSON object")
    for key in ("size", "less"):
        if key not in d:
            raise ParseError(f"poset object missing '{key}'")
    size = d["size"]
    group = _resolve_group(d["group"], base) if "group" in d else cyclic_group(1)
    action = d.get("action")
    if action is None:
        action = [list(range(size))] if group.order == 1 else None
        if action is None:
            raise ValidationError("poset with a non-trivial group needs an 'action'")
    if not isinstance(action, list) or any(not isinstance(row, list) for row in action):
        raise ValidationError("action must be a k x m array")
    return make_gposet([tuple(p) for p in d["less"]], group, action, size=size)


def load_poset(path: str | Path) -> GPoset:
    path = Path(path)
    return poset_from_dict(load_json(path), path.parent)


def complex_to_dict(K: SimplicialComplex) -> dict:
    out: dict[str, Any] = {
        "vertices": K.vertex_count,
        "facets": [bitset.indices(f) for f in K.facets],
    }
    if K.action is not None:
        out["action"] = [list(row) for row in K.action]
        out["group"] = group_to_dict(K.group)
    return out


def complex_from_dict(d: Any, base: Path | None = None) -> SimplicialComplex:
    if not isinstance(d, dict) or "facets" not in d:
        raise ParseError("complex object needs 'facets'")
    group = _resolve_group(d["group"], base) if "group" in d else None
    return make_complex(d["facets"], d.get("action"), group, d.get("vertices"))


def load_complex(path: str | Path) -> SimplicialComplex:
    path = Path(path)
    return complex_from_dict(load_json(path), path.parent)


def write_dimacs(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {line}" for line in comment.splitlines())
    lines.append(f"p edge {G.vertex_count} {G.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second 'p' line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge N M', got {line!r}", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"non-integer in {line!r}", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p' line", lineno)
            if len(parts) != 3:
                raise ParseError(f"expected 'e U V', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge N M' line")
    return Graph.from_edges(n, edges)


def load_dimacs(path: str | Path) -> Graph:
    return read_dimacs(Path(path).read_text())


def graph_to_dict(G: Graph) -> dict:
    return {"vertices": G.vertex_count, "adjacency": [G.neighbors(v) for v in range(G.vertex_count)]}


def graph_from_dict(d: Any) -> Graph:
    if not isinstance(d, dict) or "adjacency" not in d:
        raise ParseError("graph object needs 'adjacency'")
    n = d.get("vertices", len(d["adjacency"]))
    if len(d["adjacency"]) != n:
        raise ValidationError("adjacency list length does not match 'vertices'")
    return Graph(n, tuple(bitset.from_indices(nb) for nb in d["adjacency"]))


def load_graph(path: str | Path) -> Graph:
    """DIMACS for ``.col``/``.dimacs``, JSON adjacency otherwise."""
    path = Path(path)
    if path.suffix in (".col", ".dimacs"):
        return load_dimacs(path)
    return graph_from_dict(load_json(path))


def coloring_to_json(colors: list[int]) -> str:
    return json.dumps(list(colors)) + "\n"


def coloring_from_json(text: str) -> list[int]:
    data = loads(text)
    if not isinstance(data, list) or any(not isinstance(c, int) or isinstance(c, bool) for c in data):
        raise ParseError("coloring must be a JSON array of integers")
    return data
