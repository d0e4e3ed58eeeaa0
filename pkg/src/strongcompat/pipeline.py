"""End-to-end constructions that emit certificates.

A certificate lists every check with its outcome. ``status`` is
``certified`` when all checks passed with exact results, ``partial`` when a
budget or cap downgraded a check to an interval or skipped it, and
``diagnostic`` when any check failed. Certificates hold no timestamps or
timings, so reruns with equal parameters write identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import bitset, io
from .algebra import FiniteGroup, dimension, ladder_index, ladder_poset
from .chromatic import ChromaticResult, chain_length_coloring, chromatic_number_exact, improper_edge
from .compat import Graph, compatibility_graph, complete_graph, find_triangle, lemma19_criterion, strong_compatibility_graph
from .complexes import crosspolytope_boundary, face_poset, is_free_complex_action
from .errors import CapacityError, InvalidParameter
from .hom import cycle, example12_chain, first_part_coloring, flip_action, hom_poset, is_hom_element


@dataclass
class Check:
    name: str
    passed: bool
    detail: Any = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Certificate:
    claim: str
    inputs: dict
    checks: list[Check] = field(default_factory=list)
    artifacts: dict[str, str] = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    partial: bool = False
    # file stem for the certificate; defaults to the claim
    stem: str | None = None
    # in-memory artifact payloads, keyed like ``artifacts``
    payloads: dict[str, str] = field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        if not self.ok:
            return "diagnostic"
        return "partial" if self.partial else "certified"

    def check(self, name: str, passed: bool, detail: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return passed

    def attach(self, key: str, filename: str, text: str) -> None:
        self.artifacts[key] = filename
        self.payloads[key] = text

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "inputs": self.inputs,
            "checks": [c.to_dict() for c in self.checks],
            "artifacts": self.artifacts,
            "results": self.results,
        }

    def write(self, output_dir: str | Path, name: str | None = None) -> Path:
        out = Path(output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for key, filename in self.artifacts.items():
            (out / filename).write_text(self.payloads[key])
        path = out / (name or f"{self.stem or self.claim}.certificate.json")
        path.write_text(io.dumps(self.to_dict()))
        return path


def _chi_detail(res: ChromaticResult) -> dict:
    return {"lower": res.lower, "upper": res.upper, "exact": res.exact, "nodes": res.nodes}


def corollary20_pipeline(n: int, budget_ms: int | None = None) -> Certificate:
    """Cross-polytope sphere -> face poset -> strong compatibility graph,
    certified triangle-free with chromatic number ``n + 1``."""
    if n < 1:
        raise InvalidParameter("need n >= 1")
    cert = Certificate("corollary20", {"n": n, "budget_ms": budget_ms}, stem=f"corollary20_n{n}")
    K = crosspolytope_boundary(n)
    P = face_poset(K)
    C = strong_compatibility_graph(P)
    cert.check("free_z2_complex", is_free_complex_action(K))
    tri = find_triangle(C)
    cert.check("strong_graph_triangle_free", tri is None, tri)
    tri = find_triangle(compatibility_graph(P))
    cert.check("compat_graph_triangle_free", tri is None, tri)
    cert.check("no_x_below_y_and_minus_y", lemma19_criterion(P))
    coloring = chain_length_coloring(P)
    bad = improper_edge(C, coloring)
    cert.check("chain_coloring_proper", bad is None, bad)
    cert.check("upper_bound", max(coloring) == n + 1, {"colors": max(coloring)})
    res = chromatic_number_exact(C, budget_ms)
    cert.check("lower_bound", res.lower <= n + 1 <= res.upper and (not res.exact or res.upper == n + 1), _chi_detail(res))
    cert.partial = not res.exact
    cert.results = {"vertices": C.vertex_count, "edges": C.edge_count, "dimension": dimension(P),
                    "chi_lower": res.lower, "chi_upper": res.upper, "exact": res.exact}
    stem = cert.stem
    cert.attach("graph", f"{stem}.col", io.write_dimacs(C, f"strong compatibility graph, cross-polytope n={n}"))
    cert.attach("coloring", f"{stem}.chain_coloring.json", io.coloring_to_json(coloring))
    if res.exact:
        cert.attach("witness", f"{stem}.witness.json", io.coloring_to_json(res.witness))
    return cert


def example10_pipeline(group: FiniteGroup, n_max: int, budget_ms: int | None = None) -> Certificate:
    """Exact chromatic numbers of the ``prec2`` ladders against ``min(|G|, n)``."""
    if n_max < 1:
        raise InvalidParameter("need n_max >= 1")
    k = group.order
    cert = Certificate("example10", {"group_order": k, "n_max": n_max, "budget_ms": budget_ms},
                       stem=f"example10_k{k}_n{n_max}")
    seq = []
    for n in range(1, n_max + 1):
        P = ladder_poset(group, n, "prec2")
        C = strong_compatibility_graph(P)
        m = min(k, n)
        clique = [ladder_index(group, i, i + 1) for i in range(m)]
        is_clique = all(C.has_edge(a, b) for i, a in enumerate(clique) for b in clique[i + 1:])
        cert.check(f"n{n}_clique", is_clique, clique)
        projection = [g + 1 for g, _level in P.labels]
        bad = improper_edge(C, projection)
        cert.check(f"n{n}_projection_coloring_proper", bad is None, bad)
        res = chromatic_number_exact(C, budget_ms)
        if not res.exact:
            cert.partial = True
        cert.check(f"n{n}_chi", res.lower <= m <= res.upper and (not res.exact or res.upper == m), _chi_detail(res))
        seq.append(res.upper if res.exact else [res.lower, res.upper])
    cert.results = {"chi": seq, "expected": [min(k, n) for n in range(1, n_max + 1)]}
    return cert


def example12_pipeline(r: int, n: int, cap: int = 50_000) -> Certificate:
    """Flip-action Hom poset of the cycle into ``K_n``: strong compatibility
    chromatic number at most ``n`` and dimension at least ``(r/2)(n-2)``."""
    if r % 2 or r < 4:
        raise InvalidParameter("need even r >= 4")
    if n < 3:
        raise InvalidParameter("need n >= 3")
    cert = Certificate("example12", {"r": r, "n": n, "cap": cap}, stem=f"example12_r{r}_n{n}")
    K = complete_graph(n)
    chain = example12_chain(r, n)
    steps = len(chain) - 1
    valid = all(is_hom_element(cycle(r), K, el) for el in chain)
    strict = all(a != b and all(p & ~q == 0 for p, q in zip(a, b)) for a, b in zip(chain, chain[1:]))
    cert.check("chain_valid", valid and strict)
    cert.check("chain_length", steps == (r // 2) * (n - 2), {"steps": steps})
    chain_json = [[bitset.indices(p) for p in el] for el in chain]
    cert.attach("chain", f"example12_r{r}_n{n}.chain.json", io.dumps(chain_json))
    cert.results = {"chain_steps": steps}
    try:
        hp = hom_poset(cycle(r), K, cap)
    except CapacityError as exc:
        cert.partial = True
        cert.results["hom_size"] = None
        cert.results["cap_reached_at"] = exc.partial_count
        return cert
    P = flip_action(hp)  # validated free and order-preserving
    cert.check("flip_action_free_order_preserving", True, {"elements": P.size})
    cert.check("chain_inside_poset", all(el in hp.index for el in chain))
    C = strong_compatibility_graph(P)
    colors = first_part_coloring(hp)
    bad = improper_edge(C, colors)
    cert.check("first_part_coloring_proper", bad is None, bad)
    cert.check("first_part_colors_at_most_n", max(colors) <= n, {"colors": len(set(colors))})
    dim = dimension(P)
    cert.check("dimension_at_least_chain", dim >= steps, {"dimension": dim})
    cert.results.update({"hom_size": hp.size, "dimension": dim, "colors": len(set(colors)),
                         "strong_edges": C.edge_count})
    cert.attach("coloring", f"example12_r{r}_n{n}.coloring.json", io.coloring_to_json(colors))
    return cert


def revalidate(certificate_path: str | Path) -> list[Check]:
    """Re-check a written certificate's graph/coloring/chain artifacts from disk."""
    path = Path(certificate_path)
    data = io.load_json(path)
    base = path.parent
    arts = data["artifacts"]
    out = []
    graph: Graph | None = None
    if "graph" in arts:
        graph = io.load_dimacs(base / arts["graph"])
        if data["claim"] == "corollary20":
            out.append(Check("graph_triangle_free", find_triangle(graph) is None))
            out.append(Check("graph_vertex_count", graph.vertex_count == 3 ** (data["inputs"]["n"] + 1) - 1))
    for key in ("coloring", "witness"):
        if key in arts and graph is not None:
            colors = io.coloring_from_json((base / arts[key]).read_text())
            out.append(Check(f"{key}_proper", improper_edge(graph, colors) is None))
            if data["claim"] == "corollary20":
                out.append(Check(f"{key}_colors", max(colors) == data["inputs"]["n"] + 1))
    if "chain" in arts:
        r, n = data["inputs"]["r"], data["inputs"]["n"]
        chain = [tuple(bitset.from_indices(p) for p in el) for el in io.load_json(base / arts["chain"])]
        K = complete_graph(n)
        ok = all(is_hom_element(cycle(r), K, el) for el in chain) and all(
            a != b and all(p & ~q == 0 for p, q in zip(a, b)) for a, b in zip(chain, chain[1:])
        )
        out.append(Check("chain_valid", ok))
        out.append(Check("chain_length", len(chain) - 1 == (r // 2) * (n - 2)))
    return out
