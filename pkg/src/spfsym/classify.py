"""Exact decisions for anonymity, neutrality and symmetry groups, with witnesses.

A subgroup U is a symmetry group when some SPF F has G(F) = U exactly.  Every F in
F^U has G(F) >= U, and G(F) > U forces G(F) to contain a regular minimal overgroup
of U.  So the SPFs realising U exactly number

    |F^U| - |union of F^V over the regular minimal overgroups V of U|,

and the union is counted by inclusion-exclusion, using F^A n F^B = F^<A,B> and
|F^J| = n!^R(J) for regular J (0 otherwise).  The decision never depends on the
witness search; the search only produces an SPF once the count says one exists.
"""

from __future__ import annotations

import concurrent.futures
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .config import VerificationError, settings
from .extension import is_O_fixed
from .groups import (
    Pair,
    PGroup,
    is_left,
    is_right,
    join,
    left_group,
    right_group,
    subgroups_of,
    full_group,
)
from .perm import parse_cycles, rank
from .profiles import all_orbits, constant_indices, space
from .regularity import is_regular, regular_minimal_overgroups
from .spf import (
    Spf,
    anonymity_group,
    assignment_for_points,
    builtin_constant,
    builtin_dictatorship,
    equivariant_mask,
    from_assignment,
    neutrality_group,
    symmetry_group,
    tables_from_assignments,
    to_json,
)

KINDS = ("anonymity", "neutrality", "symmetry")


@dataclass
class Verdict:
    kind: str
    group: PGroup
    decision: bool
    method: str
    witness: Spf | None = None
    details: dict = field(default_factory=dict)

    def to_json(self, include_witness: bool = True) -> dict:
        out = {
            "kind": self.kind,
            "pair": list(self.group.pair),
            "group": self.group.literal(),
            "order": len(self.group),
            "decision": self.decision,
            "method": self.method,
            "witness": to_json(self.witness) if include_witness and self.witness is not None else None,
        }
        if self.details:
            out["details"] = self.details
        return out


def realised_group(kind: str, f: Spf) -> PGroup:
    if kind == "anonymity":
        return anonymity_group(f)
    if kind == "neutrality":
        return neutrality_group(f)
    if kind == "symmetry":
        return symmetry_group(f)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def _verify_witness(kind: str, u: PGroup, f: Spf) -> Spf:
    got = realised_group(kind, f)
    if got != u:
        raise VerificationError(
            f"witness realises {got!r} as {kind} group, expected {u!r}"
        )
    return f


def _sigma_rank(n: int) -> int:
    """The fixed non-identity order used by the constructions: (1 2)."""
    return rank(parse_cycles("(1 2)", n))


# ---------------------------------------------------------------------------
# counting


@dataclass
class UnionCount:
    total: int
    terms: list[tuple[PGroup, int]]  # (join, signed multiplicity), regular joins only

    def term_sizes(self, n: int) -> list[tuple[int, int]]:
        nf = math.factorial(n)
        return [(c, nf ** all_orbits(g).R) for g, c in self.terms]


def symmetric_union_count(groups: list[PGroup]) -> UnionCount:
    """|F^{V_1} u ... u F^{V_k}| by inclusion-exclusion over joins.

    Joins are accumulated with signed multiplicities, so equal joins of different
    subsets collapse into one term and non-regular joins (empty F^J) drop out along
    with all their supersets.
    """
    if not groups:
        return UnionCount(0, [])
    nf = groups[0].ambient.nf
    coeff: dict[PGroup, int] = {}
    regular: dict[PGroup, bool] = {}

    def reg(g: PGroup) -> bool:
        if g not in regular:
            regular[g] = is_regular(g)
        return regular[g]

    for v in groups:
        update: dict[PGroup, int] = {}
        for j, c in coeff.items():
            k = join(j, v)
            if reg(k):
                update[k] = update.get(k, 0) - c
        if reg(v):
            update[v] = update.get(v, 0) + 1
        for k, c in update.items():
            coeff[k] = coeff.get(k, 0) + c
        coeff = {k: c for k, c in coeff.items() if c}
    terms = sorted(coeff.items(), key=lambda kv: kv[0].sort_key())
    total = sum(c * nf ** all_orbits(g).R for g, c in terms)
    return UnionCount(total, terms)


def exact_count(u: PGroup) -> tuple[int, UnionCount, list[PGroup]]:
    """Number of SPFs F with G(F) = U, plus the union breakdown used."""
    nf = u.ambient.nf
    overs = regular_minimal_overgroups(u)
    union = symmetric_union_count(overs)
    return nf ** all_orbits(u).R - union.total, union, overs


# ---------------------------------------------------------------------------
# witness construction


def constant_profile_surgery(f: Spf) -> Spf:
    """Reset F to id on the constant profiles.

    For F symmetric under some U <= S_h x {id}, the result keeps the same anonymity
    group and every element of its symmetry group has trivial alternative part.
    """
    table = f.table.copy()
    table[constant_indices(f.pair)] = 0
    return Spf(f.pair, table)


def trivial_group_witness(pair: Pair) -> Spf:
    """An SPF with trivial anonymity group.

    n >= 3: the order of the first individual ranking alternative 1 on top (id when
    nobody does).  n = 2: id on the ordered profiles id^j (12)^(h-j), j >= 1, and
    (12) elsewhere.
    """
    h, n = pair
    sp = space(pair)
    d = sp.digits
    if n >= 3:
        top_is_one = sp.ambient.sym_n.images[:, 0] == 0
        hit = top_is_one[d]
        first = hit.argmax(axis=1)
        chosen = d[np.arange(sp.size), first]
        table = np.where(hit.any(axis=1), chosen, 0)
    else:
        ordered = np.zeros(sp.size, dtype=bool)
        for j in range(1, h + 1):
            ordered[sp.index([0] * j + [1] * (h - j))] = True
        table = np.where(ordered, 0, 1)
    f = Spf(pair, table)
    if len(anonymity_group(f)) != 1:
        raise VerificationError(f"trivial-group construction failed at {pair}")
    return f


def _restricted_growth(h: int, max_blocks: int) -> Iterator[list[int]]:
    """Set partitions of [h] as restricted growth strings, lexicographically."""

    def rec(prefix: list[int], top: int):
        if len(prefix) == h:
            yield list(prefix)
            return
        for v in range(min(top + 2, max_blocks)):
            prefix.append(v)
            yield from rec(prefix, max(top, v))
            prefix.pop()

    yield from rec([0], 0)


def small_stabilizer_profile(u: PGroup) -> int | None:
    """Index of a profile p with Stab_{S_h x {id}}(p) <= U, or None.

    The stabilizer of p is the product of symmetric groups on the classes of
    individuals reporting equal orders, so only set partitions into at most n!
    classes need checking; the profile gives class b the order of rank b.
    """
    amb = u.ambient
    h = amb.h
    sp = space(u.pair)
    swaps = {}
    for a in range(1, h + 1):
        for b in range(a + 1, h + 1):
            swaps[(a, b)] = rank(parse_cycles(f"({a} {b})", h)) * amb.nf
    for rgs in _restricted_growth(h, min(h, amb.nf)):
        ok = True
        last_in_block: dict[int, int] = {}
        for i, blk in enumerate(rgs, 1):
            if blk in last_in_block and not u.mask[swaps[(last_in_block[blk], i)]]:
                ok = False
                break
            last_in_block[blk] = i
        if ok:
            return sp.index(rgs)
    return None


def stabilizer_witness(u: PGroup, p: int) -> Spf:
    """Anonymity witness from a profile whose S_h x {id}-stabilizer lies in U.

    F is id on p's U-orbit, (1 2) on the other U-orbits inside p's S_h x {id}-orbit,
    and id everywhere else.
    """
    amb = u.ambient
    sp = space(u.pair)
    if len(u) == amb.hf:
        return builtin_constant(u.pair, amb.sym_n[0])
    part = all_orbits(u)
    sigma = _sigma_rank(amb.n)
    own = int(part.orbit_of[p])
    big_orbit = {sp.apply_index(p, a * amb.nf) for a in range(amb.hf)}
    values = {int(part.reps[j]): sigma for j in {int(part.orbit_of[q]) for q in big_orbit} if j != own}
    return from_assignment(assignment_for_points(u, values))


def neutrality_witness(u: PGroup) -> tuple[Spf, str]:
    amb = u.ambient
    if len(u) == amb.nf:
        return builtin_dictatorship(u.pair, 1), "dictatorship"
    mult = amb.sym_n.mult
    w = [int(c) for c in u.elements]
    seen = np.zeros(amb.nf, dtype=bool)
    coset_reps = []
    for x in range(amb.nf):
        if not seen[x]:
            coset_reps.append(x)
            seen[mult[w, x]] = True
    sp = space(u.pair)
    # fixed profile: everyone reports id; its images under (id, x) are the constant profiles
    points = {sp.apply_index(0, x): 0 for x in coset_reps}
    return from_assignment(assignment_for_points(u, points)), "neutrality-construction"


class _Candidates:
    """Vectorized test of F^U tables against the regular minimal overgroups."""

    def __init__(self, u: PGroup, overs: list[PGroup]):
        self.u = u
        self.escape = [int(v.elements[~u.mask[v.elements]][0]) for v in overs]

    def good_rows(self, tables: np.ndarray) -> np.ndarray:
        ok = np.ones(len(tables), dtype=bool)
        for code in self.escape:
            ok &= ~equivariant_mask(tables, self.u.pair, code)
        return ok


def _constructive_candidates(u: PGroup) -> Iterator[Spf]:
    if is_left(u):
        if len(u) == 1:
            yield constant_profile_surgery(trivial_group_witness(u.pair))
        p = small_stabilizer_profile(u)
        if p is not None:
            yield constant_profile_surgery(stabilizer_witness(u, p))
    if is_right(u):
        yield neutrality_witness(u)[0]
    part = all_orbits(u)
    yield from_assignment(assignment_for_points(u, {int(i): 0 for i in part.reps}))


def search_witness(u: PGroup, overs: list[PGroup], seed: int | None = None) -> tuple[Spf | None, str]:
    """Find F in F^U with G(F) = U: constructions, then random, then exhaustive."""
    cand = _Candidates(u, overs)
    for f in _constructive_candidates(u):
        if cand.good_rows(f.table[None, :])[0]:
            return f, "constructive"
    nf = u.ambient.nf
    r = all_orbits(u).R
    rng = np.random.default_rng(settings.seed if seed is None else seed)
    q = rng.integers(0, nf, size=(settings.random_assignments, r))
    tables = tables_from_assignments(u, q)
    hits = np.flatnonzero(cand.good_rows(tables))
    if len(hits):
        return Spf(u.pair, tables[hits[0]]), "random"
    total = nf**r
    if total <= settings.max_exhaustive_assignments:
        weights = nf ** np.arange(r - 1, -1, -1, dtype=np.int64)
        chunk = 4096
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            q = (idx[:, None] // weights[None, :]) % nf
            tables = tables_from_assignments(u, q)
            hits = np.flatnonzero(cand.good_rows(tables))
            if len(hits):
                return Spf(u.pair, tables[hits[0]]), "exhaustive"
    return None, "exhausted"


# ---------------------------------------------------------------------------
# decisions


def is_symmetry_group(u: PGroup, seed: int | None = None) -> Verdict:
    kind = "symmetry"
    if not is_regular(u):
        return Verdict(kind, u, False, "non-regular")
    if not is_O_fixed(u):
        return Verdict(kind, u, False, "O(U)≠U")
    count, union, overs = exact_count(u)
    nf = u.ambient.nf
    details = {
        "R": all_orbits(u).R,
        "count_U": nf ** all_orbits(u).R,
        "union": union.total,
        "exact": count,
        "terms": [
            {"group": g.literal(), "order": len(g), "R": all_orbits(g).R, "coeff": c}
            for g, c in union.terms
        ],
    }
    if not overs:
        f = from_assignment(assignment_for_points(u, {}))
        return Verdict(kind, u, True, "regular-maximal", _verify_witness(kind, u, f), details)
    if count <= 0:
        return Verdict(kind, u, False, "inclusion-exclusion", None, details)
    f, how = search_witness(u, overs, seed)
    details["witness_search"] = how
    if f is None:
        return Verdict(kind, u, True, "counting-only", None, details)
    return Verdict(kind, u, True, "inclusion-exclusion", _verify_witness(kind, u, f), details)


def is_anonymity_group(u: PGroup, seed: int | None = None) -> Verdict:
    kind = "anonymity"
    if not is_left(u):
        raise ValueError(f"{u!r} is not a subgroup of S_h x {{id}}")
    h, n = u.pair
    nf = u.ambient.nf
    p = small_stabilizer_profile(u)
    if h <= nf and p is None:
        raise VerificationError(f"no profile with small stabilizer although h <= n! at {u.pair}")
    if p is not None:
        method = "h≤n!" if h <= nf else "stabilizer-condition"
        f = stabilizer_witness(u, p)
        return Verdict(kind, u, True, method, _verify_witness(kind, u, f), {"profile": p})
    if not is_O_fixed(u):
        return Verdict(kind, u, False, "O(U)≠U")
    sym = is_symmetry_group(u, seed)
    witness = _verify_witness(kind, u, sym.witness) if sym.witness is not None else None
    return Verdict(kind, u, sym.decision, sym.method, witness, sym.details)


def is_neutrality_group(u: PGroup) -> Verdict:
    kind = "neutrality"
    if not is_right(u):
        raise ValueError(f"{u!r} is not a subgroup of {{id}} x S_n")
    f, method = neutrality_witness(u)
    return Verdict(kind, u, True, method, _verify_witness(kind, u, f))


DECIDERS: dict[str, Callable[[PGroup], Verdict]] = {
    "anonymity": is_anonymity_group,
    "neutrality": is_neutrality_group,
    "symmetry": is_symmetry_group,
}


def decide(kind: str, u: PGroup) -> Verdict:
    if kind not in DECIDERS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return DECIDERS[kind](u)


def ambient_for(pair: Pair, kind: str) -> PGroup:
    if kind == "anonymity":
        return left_group(pair)
    if kind == "neutrality":
        return right_group(pair)
    if kind == "symmetry":
        return full_group(pair)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


@dataclass
class Report:
    pair: Pair
    kind: str
    verdicts: list[Verdict]

    @property
    def fully(self) -> bool:
        return all(v.decision for v in self.verdicts)

    def to_json(self, include_witness: bool = False) -> dict:
        return {
            "pair": list(self.pair),
            "kind": self.kind,
            "subgroups": len(self.verdicts),
            "realised": sum(v.decision for v in self.verdicts),
            "fully": self.fully,
            "verdicts": [v.to_json(include_witness) for v in self.verdicts],
        }


def classify_all(pair: Pair, kind: str, workers: int = 1) -> Report:
    """Verdict for every subgroup of S_h x {id}, {id} x S_n, or G (by kind)."""
    subs = subgroups_of(ambient_for(pair, kind))
    decider = DECIDERS[kind]
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(decider, subs))
    else:
        verdicts = [decider(u) for u in subs]
    return Report(tuple(pair), kind, verdicts)
