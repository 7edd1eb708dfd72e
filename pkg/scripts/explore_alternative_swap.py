"""For which (h, n) is {id} x <(1 2)> a symmetry group?

At n = 2 this is the open question about {id} x S_2.  For each pair within bounds
the script prints R(U), |F^U|, the size of the union over regular minimal
overgroups, the number of SPFs with G(F) = U exactly, and the decision.
"""

from __future__ import annotations

import argparse
import math
import time
from dataclasses import dataclass

from spfsym.classify import is_symmetry_group
from spfsym.config import BoundExceeded
from spfsym.groups import parse_group
from spfsym.profiles import all_orbits


@dataclass
class Config:
    max_h: int = 6
    ns: tuple[int, ...] = (2, 3)


def explore(cfg: Config):
    for n in cfg.ns:
        for h in range(2, cfg.max_h + 1):
            try:
                u = parse_group((h, n), "(id|(1 2))")
                t = time.perf_counter()
                v = is_symmetry_group(u)
            except BoundExceeded as exc:
                yield (h, n, None, str(exc))
                continue
            yield (h, n, v, f"{time.perf_counter() - t:.1f}s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-h", type=int, default=Config.max_h)
    ap.add_argument("--ns", type=int, nargs="+", default=list(Config.ns))
    args = ap.parse_args()
    cfg = Config(args.max_h, tuple(args.ns))
    print(f"{'h':>2} {'n':>2} {'gcd(h,n!)':>9} {'R':>5} {'exact':>12}  decision  method")
    for h, n, v, note in explore(cfg):
        g = math.gcd(h, math.factorial(n))
        if v is None:
            print(f"{h:2d} {n:2d} {g:9d}  skipped: {note}")
            continue
        r = all_orbits(v.group).R
        exact = v.details.get("exact")
        shown = "-" if exact is None else (str(exact) if exact < 10**18 else f"~10^{len(str(exact)) - 1}")
        print(f"{h:2d} {n:2d} {g:9d} {r:5d} {shown:>12}  {str(v.decision):8}  {v.method} ({note})", flush=True)


if __name__ == "__main__":
    main()
