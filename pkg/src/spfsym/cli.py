"""Command-line entry point: ``spfsym <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 a size bound was exceeded,
4 an internal verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import boolean as bmod
from .classify import KINDS, classify_all, decide
from .config import BoundExceeded, VerificationError, configured
from .extension import big_W, orbit_extension
from .groups import PGroup, describe, parse_group
from .perm import format_cycles, format_perm_list, parse_order, parse_perm_list
from .profiles import all_orbits, format_index
from .regularity import is_regular, is_regular_by_definition, violating_elements
from .spf import (
    Spf,
    anonymity_group,
    builtin_constant,
    builtin_dictatorship,
    builtin_majority,
    dump,
    load,
    neutrality_group,
    symmetry_group,
    to_json,
)

EXIT_OK, EXIT_INVALID, EXIT_BOUND, EXIT_VERIFY = 0, 2, 3, 4


def parse_pair(text: str) -> tuple[int, int]:
    try:
        h, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"pair must look like 'h,n', got {text!r}") from None
    if h < 2 or n < 2:
        raise argparse.ArgumentTypeError(f"need h >= 2 and n >= 2, got ({h},{n})")
    return h, n


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _group_json(u: PGroup) -> dict:
    return {"generators": u.literal(), "order": len(u)}


def _bounds(args) -> dict:
    return {"max_group_order": args.max_group_order, "max_profiles": args.max_profiles}


# ---------------------------------------------------------------------------
# subcommands: each returns (json payload, text lines)


def cmd_orbits(args):
    u = parse_group(args.pair, args.group)
    part = all_orbits(u)
    shown = part.orbits()[: args.limit]
    orbits = [[format_index(int(i), u.pair) for i in members] for members in shown]
    payload = {"pair": list(u.pair), "group": _group_json(u), "R": part.R, "orbits": orbits}
    lines = [f"pair {u.pair}  U = {describe(u)}", f"R(U) = {part.R}"]
    brackets = u.pair[1] == 2
    for j, members in enumerate(orbits, 1):
        items = ", ".join(f"[{m}]" if brackets else f"({m})" for m in members)
        lines.append(f"O_{j} = {{{items}}}")
    if part.R > len(shown):
        lines.append(f"... {part.R - len(shown)} more orbits not listed")
    return payload, lines


def cmd_regular(args):
    u = parse_group(args.pair, args.group)
    verdict = is_regular(u)
    bad = violating_elements(u)
    amb = u.ambient
    shown = [str(amb.element(c)) for c in bad[:5]]
    payload = {
        "pair": list(u.pair),
        "group": _group_json(u),
        "regular": verdict,
        "method": "cycle-type criterion",
        "violations": shown,
    }
    lines = [f"pair {u.pair}  U = {describe(u)}", f"regular: {verdict}"]
    if shown:
        lines.append("violating elements: " + ", ".join(shown))
    if args.verify:
        payload["definition"] = is_regular_by_definition(u)
        lines.append(f"definition check: {payload['definition']}")
    return payload, lines


def _load_spf(args) -> Spf:
    if args.file:
        return load(args.file)
    if args.pair is None:
        raise ValueError("--builtin needs --pair")
    name, _, arg = args.builtin.partition(":")
    if name == "majority":
        return builtin_majority(args.pair)
    if name == "dictatorship":
        return builtin_dictatorship(args.pair, int(arg or 1))
    if name == "constant":
        return builtin_constant(args.pair, parse_order(arg or "", args.pair[1]))
    raise ValueError(f"unknown builtin {args.builtin!r}; use majority, dictatorship:i or constant:<order>")


def cmd_spf_groups(args):
    f = _load_spf(args)
    groups = {"G": symmetry_group(f), "G1": anonymity_group(f), "G2": neutrality_group(f)}
    payload = {"pair": list(f.pair), **{k: _group_json(g) for k, g in groups.items()}}
    lines = [f"pair {f.pair}"] + [f"{k}(F) = {describe(g)}" for k, g in groups.items()]
    return payload, lines


def cmd_classify(args):
    if args.all:
        report = classify_all(args.pair, args.kind, workers=args.workers)
        payload = report.to_json(include_witness=False)
        lines = [f"pair {args.pair}  kind {args.kind}"]
        for v in report.verdicts:
            lines.append(f"{'yes' if v.decision else 'no ':3}  {v.method:22} {describe(v.group)}")
        lines.append(
            f"{payload['realised']}/{payload['subgroups']} subgroups realised; "
            f"fully {args.kind}: {report.fully}"
        )
        return payload, lines
    if args.group is None:
        raise ValueError("classify needs --group or --all")
    u = parse_group(args.pair, args.group)
    v = decide(args.kind, u)
    payload = v.to_json(include_witness=args.show_witness)
    lines = [
        f"pair {u.pair}  U = {describe(u)}",
        f"{args.kind} group: {v.decision}  (method: {v.method})",
    ]
    d = v.details
    if "terms" in d:
        lines.append(f"R(U) = {d['R']}, |F^U| = {d['count_U']}, union over overgroups = {d['union']}")
        for t in d["terms"]:
            lines.append(f"  {t['coeff']:+d} x {u.ambient.nf}^{t['R']}  <{';'.join(t['group'])}>")
    if v.witness is not None:
        lines.append("witness: verified")
    return payload, lines


def cmd_orbit_extension(args):
    u = parse_group(args.pair, args.group)
    w = big_W(u)
    payload = {"pair": list(u.pair), "group": _group_json(u), "W": _group_json(w), "W_regular": is_regular(w)}
    lines = [f"pair {u.pair}  U = {describe(u)}", f"W(U) = {describe(w)}  regular: {payload['W_regular']}"]
    if is_regular(u):
        o = orbit_extension(u)
        payload["O"] = _group_json(o)
        payload["fixed"] = o == u
        lines.append(f"O(U) = {describe(o)}")
        lines.append(f"O(U) = U: {o == u}")
    else:
        payload["O"] = None
        payload["fixed"] = None
        lines.append("U is not regular; O(U) undefined")
    return payload, lines


def cmd_boolean(args):
    if args.invariance:
        f = bmod.load(args.invariance)
        group = sorted(bmod.invariance_group(f))
        payload = {"arity": f.arity, "k": f.k, "invariance_group": [format_cycles(p) for p in group]}
        lines = [f"arity {f.arity}, k = {f.k}", f"S(F) has order {len(group)}: " + ", ".join(payload["invariance_group"])]
        return payload, lines
    if args.arity is None:
        raise ValueError("boolean needs --arity (or --invariance FILE)")
    h = args.arity
    if args.oracle:
        groups = sorted(bmod.all_invariance_groups(h), key=PGroup.sort_key)
        payload = {"arity": h, "count": len(groups), "groups": [g.literal() for g in groups]}
        lines = [f"BGR_{h}(2): {len(groups)} groups"] + [describe(g) for g in groups]
        return payload, lines
    perms = parse_perm_list(args.group or "", h)
    if args.representable:
        v = bmod.is_2_representable(perms, h)
        payload = v.to_json()
        payload["O_fixed"] = bmod.check_O_necessary(perms, h)
        lines = [
            f"arity {h}  V = <{format_perm_list(perms) or 'id'}>",
            f"2-representable: {v.decision}  (method: {v.method})",
            f"O(V x id) = V x id: {payload['O_fixed']}",
        ]
        if v.function is not None:
            lines.append("witness table: " + "".join(map(str, v.function.table)))
        return payload, lines
    payload = {"arity": h, "O_fixed": bmod.check_O_necessary(perms, h)}
    return payload, [f"O(V x id) = V x id: {payload['O_fixed']}"]


def cmd_witness(args):
    u = parse_group(args.pair, args.group)
    v = decide(args.kind, u)
    payload = v.to_json(include_witness=False)
    lines = [f"pair {u.pair}  U = {describe(u)}", f"{args.kind} group: {v.decision}  (method: {v.method})"]
    if v.witness is None:
        lines.append("no witness available")
    elif args.out:
        dump(v.witness, args.out)
        payload["file"] = args.out
        lines.append(f"witness written to {args.out}")
    else:
        payload["witness"] = to_json(v.witness)
        lines.extend(f"{p} -> {o}" for p, o in payload["witness"]["map"].items())
    return payload, lines


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--verify", action="store_true", help="cross-check results against brute force")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-group-order", type=_positive, default=10_080)
    common.add_argument("--max-profiles", type=_positive, default=2**24)
    common.add_argument("--workers", type=_positive, default=1)

    parser = argparse.ArgumentParser(prog="spfsym", description="Symmetry groups of social preference functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("orbits", cmd_orbits, "list the orbits of a group on profiles")
    p.add_argument("--pair", type=parse_pair, required=True)
    p.add_argument("--group", default="")
    p.add_argument("--limit", type=_positive, default=64, help="maximum orbits listed")

    p = add("regular", cmd_regular, "decide regularity")
    p.add_argument("--pair", type=parse_pair, required=True)
    p.add_argument("--group", default="")

    p = add("spf-groups", cmd_spf_groups, "symmetry, anonymity and neutrality groups of an SPF")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--builtin", help="majority | dictatorship:i | constant:<order>")
    p.add_argument("--pair", type=parse_pair)

    p = add("classify", cmd_classify, "decide anonymity/neutrality/symmetry group membership")
    p.add_argument("--pair", type=parse_pair, required=True)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--group")
    p.add_argument("--all", action="store_true", help="classify every subgroup of the ambient")
    p.add_argument("--show-witness", action="store_true")

    p = add("orbit-extension", cmd_orbit_extension, "W(U), O(U) and whether O(U) = U")
    p.add_argument("--pair", type=parse_pair, required=True)
    p.add_argument("--group", default="")

    p = add("boolean", cmd_boolean, "invariance groups and 2-representability")
    p.add_argument("--arity", type=int)
    p.add_argument("--group", help="permutations of [arity], ';'-separated")
    p.add_argument("--representable", action="store_true")
    p.add_argument("--oracle", action="store_true", help="list BGR_h(2) by exhaustive scan")
    p.add_argument("--invariance", metavar="FILE", help="Boolean function JSON file")

    p = add("witness", cmd_witness, "emit a witness SPF")
    p.add_argument("--pair", type=parse_pair, required=True)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--group", default="")
    p.add_argument("--out")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with configured(
            verify=args.verify,
            seed=args.seed,
            max_group_order=args.max_group_order,
            max_profiles=args.max_profiles,
        ):
            payload, lines = args.func(args)
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.json:
        payload["bounds"] = _bounds(args)
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(f"bounds: max_group_order={args.max_group_order} max_profiles={args.max_profiles}")
        print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
