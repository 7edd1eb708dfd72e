"""Compare decided 2-representability with an exhaustive scan of Boolean functions.

Lists, for each subgroup V of S_h, whether V x {id} is an anonymity group at (h, 2),
whether the orbit-extension condition holds, and whether V occurs as the
invariance group of some Boolean function (h <= 4).
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from spfsym.boolean import MAX_ORACLE_ARITY, all_invariance_groups, check_O_necessary, is_2_representable
from spfsym.groups import describe, left_group, subgroups_of


@dataclass
class Config:
    arities: tuple[int, ...] = (2, 3, 4)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--arities", type=int, nargs="+", default=list(Config.arities))
    cfg = Config(tuple(ap.parse_args().arities))
    for h in cfg.arities:
        oracle = all_invariance_groups(h) if h <= MAX_ORACLE_ARITY else None
        subs = subgroups_of(left_group((h, 2)))
        agree = True
        print(f"h = {h}: {len(subs)} subgroups")
        for u in subs:
            v = is_2_representable(u)
            o_ok = check_O_necessary(u)
            in_oracle = None if oracle is None else u in oracle
            agree &= in_oracle is None or in_oracle == v.decision
            flag = "  <- O-condition holds but not representable" if o_ok and not v.decision else ""
            print(f"  {'yes' if v.decision else 'no ':3} O:{str(o_ok):5} scan:{str(in_oracle):5} {describe(u)}{flag}")
        if oracle is not None:
            print(f"  decisions agree with the exhaustive scan: {agree}")


if __name__ == "__main__":
    main()
