"""Command-line front end.

Exit status: 0 on success, 2 when a budget or cap made the result partial,
1 on any error (including usage errors).
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import sys
from pathlib import Path
from typing import Any

from . import io
from .algebra import _from_up, dimension, is_free, ladder_poset, orbits, trivial_group, tucker_domain
from .chromatic import (
    chain_length_coloring,
    chromatic_number_exact,
    equivariant_map_from_coloring,
    greedy_coloring,
    improper_edge,
)
from .compat import compatibility_graph, complete_graph, find_triangle, lemma19_criterion, strong_compatibility_graph
from .complexes import crosspolytope_boundary, face_poset
from .config import Caps, RunConfig
from .errors import CapacityError, StrongCompatError
from .hom import Pattern, HomColoringReport, hom_poset, theorem13_report
from .pipeline import corollary20_pipeline, example10_pipeline, example12_pipeline
from .tucker import check_labeling, search_instance, tucker_instance

EXIT_OK, EXIT_ERROR, EXIT_PARTIAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for partial results
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--output-dir", type=Path, default=None, help="write artifacts here")
    p.add_argument("--budget-ms", type=int, default=None, help="time budget for exact searches")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--cap", type=int, default=50_000, help="max Hom-poset elements")
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs are single-threaded")
    p.add_argument("--format", choices=("json", "csv", "dimacs"), default=None,
                   help="output format; graphs default to dimacs, everything else to json")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="strongcompat", description="Strong compatibility graphs of G-posets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(group, name, help_text):
        return group.add_parser(name, parents=[common], help=help_text, description=help_text)

    g = sub.add_parser("group", help="finite groups").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(g, "show", "print a group table as group.json")
    p.add_argument("--group", required=True, help="cyclic:k or a group.json path")
    p = leaf(g, "validate", "validate a group.json file")
    p.add_argument("file")

    g = sub.add_parser("poset", help="G-posets").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(g, "info", "size, dimension, freeness and orbit count of a poset.json")
    p.add_argument("--poset", required=True)
    p = leaf(g, "ladder", "G x [n] ladder poset (prec1: levels; prec2: per-group-element chains)")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=("prec1", "prec2"), default="prec1")
    p = leaf(g, "tucker-domain", "(G u {0})^n minus zero, with the Tucker order")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p = leaf(g, "face", "face poset of a complex.json or of the cross-polytope sphere")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--complex")
    src.add_argument("--crosspolytope", type=int, metavar="N")

    g = sub.add_parser("compat", help="compatibility graphs").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, text in (("plain", "compatibility graph of a poset"), ("strong", "strong compatibility graph of a poset")):
        p = leaf(g, name, text + " (DIMACS by default)")
        p.add_argument("--poset", required=True)
        p.add_argument("--out", type=Path, default=None)
    p = leaf(g, "triangle-free", "triangle test on a graph")
    p.add_argument("--graph", required=True)
    p = leaf(g, "lemma19", "free Z_2-poset test: no x <= y with x <= -y")
    p.add_argument("--poset", required=True)

    g = sub.add_parser("chromatic", help="colorings").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(g, "exact", "exact chromatic number (DSATUR branch and bound)")
    p.add_argument("--graph", required=True)
    p = leaf(g, "greedy", "first-fit coloring in descending degree order")
    p.add_argument("--graph", required=True)
    p = leaf(g, "verify", "check a coloring against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p = leaf(g, "chain", "longest-chain coloring of a poset")
    p.add_argument("--poset", required=True)
    p = leaf(g, "equivariant", "equivariant labeling G x [m] induced by a coloring of the strong graph")
    p.add_argument("--poset", required=True)
    p.add_argument("--coloring", default=None, help="defaults to the chain coloring")

    g = sub.add_parser("hom", help="Hom-posets").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(g, "build", "enumerate Hom_p(F, H) for F = K_r or C_r")
    p.add_argument("--pattern", required=True, help="K<r> or C<r>, e.g. K2, C4")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--complete", type=int, metavar="N")
    p = leaf(g, "report", "balanced-multipartite coloring bounds on Hom_p(K_r, G(n, 1/2))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--eps", type=float, default=0.1)

    g = sub.add_parser("tucker", help="G-Tucker verification").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(g, "verify", "exhaustive search for an equivariant conflict-free labeling")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p = leaf(g, "check", "check one labeling (JSON list of [shift, level] per orbit representative)")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--labeling", required=True)

    g = sub.add_parser("pipeline", help="certified constructions").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(g, "corollary20", "triangle-free graph with chromatic number n+1 from the n-sphere")
    p.add_argument("--n", type=int, required=True)
    p = leaf(g, "example10", "chromatic numbers of the prec2 ladders")
    p.add_argument("--group", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p = leaf(g, "example12", "flip-action Hom_p(C_r, K_n): color bound and long chain")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    g = sub.add_parser("report", help="experiment tables").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = leaf(g, "theorem13", "report rows over sizes and seeds (CSV or JSON lines)")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--seeds", default="0:20", help="start:stop range or comma list")
    p.add_argument("--eps", type=float, default=0.1)
    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        seed=args.seed,
        budget_ms=args.budget_ms,
        caps=Caps(max_hom_elements=args.cap),
        output_dir=args.output_dir or Path("out"),
        format=args.format or "json",
        threads=args.threads,
    )


def _emit(obj: Any) -> None:
    sys.stdout.write(io.dumps(obj))


def _write(args, filename: str, text: str) -> Path | None:
    if args.output_dir is None:
        return None
    args.output_dir.mkdir(parents=True, exist_ok=True)
    path = args.output_dir / filename
    path.write_text(text)
    return path


def _parse_pattern(text: str) -> Pattern:
    if len(text) < 2 or text[0] not in "KC" or not text[1:].isdigit():
        raise UsageError(f"bad pattern {text!r}; expected K<r> or C<r>")
    return Pattern(text[0], int(text[1:]))


def _parse_seeds(text: str) -> list[int]:
    if ":" in text:
        a, b = text.split(":", 1)
        return list(range(int(a), int(b)))
    return [int(s) for s in text.split(",") if s]


def _report_text(reports: list[HomColoringReport], fmt: str) -> str:
    if fmt == "csv":
        buf = _stdio.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(HomColoringReport.CSV_FIELDS)
        for rep in reports:
            w.writerow(rep.csv_row())
        return buf.getvalue()
    return io.dumps([rep.to_dict() for rep in reports])


def dispatch(args) -> int:
    cfg = _config(args)
    cmd, act = args.command, args.action

    if cmd == "group":
        G = io.parse_group_spec(args.group) if act == "show" else io.group_from_dict(io.load_json(args.file))
        _emit(io.group_to_dict(G) if act == "show" else {"valid": True, "order": G.order, "identity": G.identity})
        return EXIT_OK

    if cmd == "poset":
        if act == "info":
            P = io.load_poset(args.poset)
            _emit({"size": P.size, "dimension": dimension(P) if P.size else None, "free": is_free(P),
                   "orbits": len(orbits(P)), "group_order": P.group.order,
                   "comparable_pairs": len(P.less_pairs())})
            return EXIT_OK
        if act == "ladder":
            P = ladder_poset(io.parse_group_spec(args.group), args.n, args.variant)
        elif act == "tucker-domain":
            P = tucker_domain(io.parse_group_spec(args.group), args.n)
        else:
            K = io.load_complex(args.complex) if args.complex else crosspolytope_boundary(args.crosspolytope)
            P = face_poset(K)
        text = io.dumps(io.poset_to_dict(P))
        if _write(args, f"{act}.poset.json", text) is None:
            sys.stdout.write(text)
        return EXIT_OK

    if cmd == "compat":
        if act in ("plain", "strong"):
            P = io.load_poset(args.poset)
            C = strong_compatibility_graph(P) if act == "strong" else compatibility_graph(P)
            if args.format == "json":
                text, ext = io.dumps(io.graph_to_dict(C)), "json"
            else:
                text, ext = io.write_dimacs(C, f"{act} compatibility graph of {args.poset}"), "col"
            if args.out is not None:
                args.out.write_text(text)
            elif _write(args, f"{Path(args.poset).stem}.{act}.{ext}", text) is None:
                sys.stdout.write(text)
            return EXIT_OK
        if act == "triangle-free":
            tri = find_triangle(io.load_graph(args.graph))
            _emit({"triangle_free": tri is None, "triangle": tri})
            return EXIT_OK
        P = io.load_poset(args.poset)
        _emit({"criterion": lemma19_criterion(P)})
        return EXIT_OK

    if cmd == "chromatic":
        if act in ("exact", "greedy", "verify"):
            G = io.load_graph(args.graph)
            if act == "exact":
                res = chromatic_number_exact(G, cfg.budget_ms)
                _emit({"chi": res.chi, "lower": res.lower, "upper": res.upper, "exact": res.exact,
                       "nodes": res.nodes, "witness": res.witness})
                _write(args, f"{Path(args.graph).stem}.witness.json", io.coloring_to_json(res.witness))
                return EXIT_OK if res.exact else EXIT_PARTIAL
            if act == "greedy":
                colors = greedy_coloring(G)
                _emit({"colors": max(colors, default=0), "coloring": colors})
                return EXIT_OK
            colors = io.coloring_from_json(Path(args.coloring).read_text())
            bad = improper_edge(G, colors)
            _emit({"proper": bad is None, "conflict": bad})
            return EXIT_OK if bad is None else EXIT_ERROR
        P = io.load_poset(args.poset)
        colors = chain_length_coloring(P)
        if act == "chain":
            _emit({"colors": max(colors, default=0), "coloring": colors})
            return EXIT_OK
        if args.coloring:
            colors = io.coloring_from_json(Path(args.coloring).read_text())
        lab = equivariant_map_from_coloring(P, colors)
        _emit({"levels": lab.target_levels, "level": list(lab.level), "shift": list(lab.shift)})
        return EXIT_OK

    if cmd == "hom":
        if act == "build":
            pattern = _parse_pattern(args.pattern)
            H = io.load_graph(args.graph) if args.graph else complete_graph(args.complete)
            try:
                hp = hom_poset(pattern, H, cfg.caps.max_hom_elements)
            except CapacityError as exc:
                _emit({"pattern": str(pattern), "partial": True, "count_at_cap": exc.partial_count})
                return EXIT_PARTIAL
            P = _from_up(hp.up, trivial_group(), [tuple(range(hp.size))], [], covers=hp.covers)
            _emit({"pattern": str(pattern), "size": hp.size, "dimension": dimension(P) if hp.size else None,
                   "partial": False})
            return EXIT_OK
        rep = theorem13_report(args.n, args.r, cfg.require_seed(), args.eps, cfg.caps.max_hom_elements, cfg.budget_ms)
        text = _report_text([rep], args.format if args.format == "csv" else "json")
        ext = "csv" if args.format == "csv" else "json"
        _write(args, f"theorem13_n{args.n}_r{args.r}_s{rep.seed}.{ext}", text)
        sys.stdout.write(text)
        return EXIT_PARTIAL if rep.partial else EXIT_OK

    if cmd == "tucker":
        inst = tucker_instance(io.parse_group_spec(args.group), args.n)
        if act == "verify":
            out = search_instance(inst, cfg.budget_ms)
            text = io.dumps(out.to_dict(inst))
            _write(args, f"tucker_k{inst.group.order}_n{inst.n}.json", text)
            sys.stdout.write(text)
            return EXIT_PARTIAL if out.status == "indeterminate" else EXIT_OK
        labels = io.load_json(args.labeling)
        wit = check_labeling(inst, [tuple(x) for x in labels])
        _emit({"conflict": None if wit is None else {"x": wit[0], "y": wit[1], "g": wit[2]}})
        return EXIT_OK

    if cmd == "pipeline":
        if act == "corollary20":
            cert = corollary20_pipeline(args.n, cfg.budget_ms)
        elif act == "example10":
            cert = example10_pipeline(io.parse_group_spec(args.group), args.n_max, cfg.budget_ms)
        else:
            cert = example12_pipeline(args.r, args.n, cfg.caps.max_hom_elements)
        if args.output_dir is not None:
            cert.write(args.output_dir)
        _emit(cert.to_dict())
        return {"certified": EXIT_OK, "partial": EXIT_PARTIAL}.get(cert.status, EXIT_ERROR)

    if cmd == "report":
        seed_list = _parse_seeds(args.seeds)
        reports = [theorem13_report(n, args.r, s, args.eps, cfg.caps.max_hom_elements, cfg.budget_ms)
                   for n in args.n for s in seed_list]
        fmt = "csv" if args.format == "csv" else "json"
        text = _report_text(reports, fmt)
        _write(args, f"theorem13_r{args.r}.{fmt}", text)
        sys.stdout.write(text)
        return EXIT_PARTIAL if any(rep.partial for rep in reports) else EXIT_OK

    raise UsageError(f"unknown command {cmd}")  # unreachable: argparse restricts choices


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return dispatch(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except (StrongCompatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
