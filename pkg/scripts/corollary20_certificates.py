"""Write cross-polytope certificates (graph, colorings, checks) for several n."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from strongcompat.pipeline import corollary20_pipeline, revalidate


@dataclass(frozen=True)
class Config:
    ns: tuple[int, ...] = (1, 2, 3, 4)
    budget_ms: int | None = 600_000
    output_dir: Path = Path("out/corollary20")


def run(cfg: Config) -> None:
    for n in cfg.ns:
        cert = corollary20_pipeline(n, cfg.budget_ms)
        path = cert.write(cfg.output_dir)
        recheck = all(c.passed for c in revalidate(path))
        r = cert.results
        print(f"n={n} vertices={r['vertices']} edges={r['edges']} chi in [{r['chi_lower']}, {r['chi_upper']}] "
              f"status={cert.status} revalidated={recheck} -> {path}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=list(Config.ns))
    ap.add_argument("--budget-ms", type=int, default=Config.budget_ms)
    ap.add_argument("--output-dir", type=Path, default=Config.output_dir)
    a = ap.parse_args()
    run(Config(tuple(a.n), a.budget_ms, a.output_dir))


if __name__ == "__main__":
    main()
