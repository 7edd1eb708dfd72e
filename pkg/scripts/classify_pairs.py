"""Classify every subgroup at a list of voting pairs and summarise per pair/kind.

    python scripts/classify_pairs.py --pairs 3,2 4,2 3,3 --kinds anonymity symmetry
"""

from __future__ import annotations

import argparse
import json
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

from spfsym.classify import KINDS, classify_all
from spfsym.cli import parse_pair
from spfsym.config import configured


@dataclass
class Config:
    pairs: list[tuple[int, int]] = field(default_factory=lambda: [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)])
    kinds: list[str] = field(default_factory=lambda: list(KINDS))
    workers: int = 1
    seed: int = 0
    out: str | None = None


def run(cfg: Config) -> list[dict]:
    rows = []
    for pair in cfg.pairs:
        for kind in cfg.kinds:
            t = time.perf_counter()
            with configured(seed=cfg.seed):
                report = classify_all(pair, kind, workers=cfg.workers)
            methods = Counter(v.method for v in report.verdicts)
            rows.append(
                {
                    "pair": list(pair),
                    "kind": kind,
                    "subgroups": len(report.verdicts),
                    "realised": sum(v.decision for v in report.verdicts),
                    "fully": report.fully,
                    "methods": dict(sorted(methods.items())),
                    "not_realised": [v.group.literal() for v in report.verdicts if not v.decision],
                    "seconds": round(time.perf_counter() - t, 2),
                }
            )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", nargs="+", type=parse_pair)
    ap.add_argument("--kinds", nargs="+", choices=KINDS)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = Config(workers=args.workers, seed=args.seed, out=args.out)
    if args.pairs:
        cfg.pairs = args.pairs
    if args.kinds:
        cfg.kinds = args.kinds

    rows = run(cfg)
    print(f"{'pair':8} {'kind':11} {'subgroups':>9} {'realised':>8} {'fully':>6}  methods")
    for r in rows:
        methods = ", ".join(f"{k}:{v}" for k, v in r["methods"].items())
        print(f"{str(tuple(r['pair'])):8} {r['kind']:11} {r['subgroups']:9d} {r['realised']:8d} {str(r['fully']):>6}  {methods}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=1, ensure_ascii=False)


if __name__ == "__main__":
    main()
