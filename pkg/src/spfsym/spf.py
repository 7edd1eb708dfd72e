"""Social preference functions as dense tables, and their symmetry groups.

An SPF at pair (h, n) is a table of length (n!)^h holding, for every profile index,
the rank of the chosen linear order.  F is U-symmetric when
``F(p^(phi, psi)) = psi * F(p)`` for every profile p and every (phi, psi) in U.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .config import BoundExceeded, VerificationError, settings
from .groups import (
    GElement,
    Pair,
    PGroup,
    ambient,
    from_elements,
)
from .perm import Permutation, format_order, parse_order, rank
from .profiles import (
    Profile,
    all_orbits,
    format_profile,
    parse_profile,
    profile_index,
    profile_unindex,
    space,
)
from .regularity import is_regular


class Spf:
    """Total map from profiles to linear orders, stored by order rank."""

    def __init__(self, pair: Pair, table):
        sp = space(pair)
        t = np.array(table, dtype=np.int64)
        if t.shape != (sp.size,):
            raise ValueError(f"table must have length {sp.size}, got shape {t.shape}")
        if len(t) and (t.min() < 0 or t.max() >= sp.nf):
            raise ValueError(f"table entries must be ranks in [0, {sp.nf})")
        t.flags.writeable = False
        self.pair: Pair = tuple(pair)
        self.table = t

    def __call__(self, p: Profile) -> Permutation:
        return evaluate(self, p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Spf)
            and self.pair == other.pair
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self) -> int:
        return hash((self.pair, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"Spf(pair={self.pair}, profiles={len(self.table)})"


@dataclass(frozen=True)
class OrbitAssignment:
    """Values q_j at the canonical orbit representatives of a regular group."""

    group: PGroup
    values: tuple[int, ...]  # order ranks, one per orbit

    def __post_init__(self):
        vals = tuple(v if isinstance(v, int) else rank(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        r = all_orbits(self.group).R
        if len(vals) != r:
            raise ValueError(f"assignment has {len(vals)} values for {r} orbits")

    @property
    def reps(self) -> np.ndarray:
        return all_orbits(self.group).reps


# ---------------------------------------------------------------------------
# construction from orbit assignments


def _require_regular(u: PGroup) -> None:
    if not is_regular(u):
        raise ValueError(f"{u!r} is not regular; it admits no symmetric SPF")


def tables_from_assignments(u: PGroup, values: np.ndarray) -> np.ndarray:
    """Vectorized construction: rows of ``values`` (m, R) become SPF tables (m, P)."""
    part = all_orbits(u)
    mult = u.ambient.sym_n.mult
    q = np.asarray(values, dtype=np.int64)
    return mult[part.trans_psi[None, :], q[:, part.orbit_of]].astype(np.int64)


def from_assignment(a: OrbitAssignment) -> Spf:
    """The unique U-symmetric SPF taking value q_j at the j-th representative."""
    u = a.group
    _require_regular(u)
    table = tables_from_assignments(u, np.array([a.values]))[0]
    f = Spf(u.pair, table)
    if settings.verify and not is_U_symmetric(f, u):
        raise VerificationError(f"assignment extension is not {u!r}-symmetric")
    return f


def assignment_for_points(u: PGroup, point_values: Mapping[int, int], default: int = 0) -> OrbitAssignment:
    """Assignment whose extension takes the given rank at the given profile indices.

    Orbits not mentioned get ``default`` at their representative.
    """
    part = all_orbits(u)
    sym = u.ambient.sym_n
    values = np.full(part.R, default, dtype=np.int64)
    fixed: dict[int, int] = {}
    for i, v in point_values.items():
        j = int(part.orbit_of[i])
        q = int(sym.mult[sym.inv[part.trans_psi[i]], v])
        if fixed.setdefault(j, q) != q:
            raise ValueError(f"conflicting values requested inside orbit {j}")
        values[j] = q
    return OrbitAssignment(u, tuple(int(x) for x in values))


def read_values(f: Spf, u: PGroup) -> OrbitAssignment:
    return OrbitAssignment(u, tuple(int(x) for x in f.table[all_orbits(u).reps]))


def count_symmetric(u: PGroup) -> int:
    """|F^U|: n!^R(U) when U is regular, else 0."""
    if not is_regular(u):
        return 0
    return math.factorial(u.pair[1]) ** all_orbits(u).R


def enumerate_symmetric(u: PGroup, limit: int | None = None) -> np.ndarray:
    """All tables of F^U as an (n!^R, P) matrix, in lexicographic order of assignments."""
    _require_regular(u)
    nf = u.ambient.nf
    r = all_orbits(u).R
    total = nf**r
    cap = settings.max_exhaustive_assignments if limit is None else limit
    if total > cap:
        raise BoundExceeded(f"|F^U| = {total} exceeds the enumeration cap {cap}")
    q = np.array(list(itertools.product(range(nf), repeat=r)), dtype=np.int64).reshape(total, r)
    return tables_from_assignments(u, q)


# ---------------------------------------------------------------------------
# evaluation and symmetry tests


def evaluate(f: Spf, p: Profile) -> Permutation:
    if tuple(p.pair) != f.pair:
        raise ValueError(f"profile pair {p.pair} does not match SPF pair {f.pair}")
    return ambient(f.pair).sym_n[int(f.table[profile_index(p)])]


def equivariant_mask(tables: np.ndarray, pair: Pair, code: int) -> np.ndarray:
    """For each row F of ``tables``: does F(p^g) = psi_g F(p) hold for all p?"""
    sp = space(pair)
    perm = sp.action(int(code))
    psi = int(code) % sp.nf
    mult = sp.ambient.sym_n.mult
    t = np.atleast_2d(tables)
    return (t[:, perm] == mult[psi][t]).all(axis=1)


def is_equivariant(f: Spf, g: GElement | int) -> bool:
    code = g if isinstance(g, (int, np.integer)) else ambient(f.pair).code(g)
    return bool(equivariant_mask(f.table, f.pair, int(code))[0])


def is_U_symmetric(f: Spf, u: PGroup) -> bool:
    if u.pair != f.pair:
        raise ValueError(f"pair mismatch: {u.pair} vs {f.pair}")
    return all(is_equivariant(f, int(c)) for c in u.elements)


def _group_of(f: Spf, codes: Iterable[int]) -> PGroup:
    return from_elements(f.pair, [c for c in codes if is_equivariant(f, int(c))])


def symmetry_group(f: Spf) -> PGroup:
    """G(F): every (phi, psi) under which F is equivariant, by brute force over G."""
    return _group_of(f, range(ambient(f.pair).order))


def anonymity_group(f: Spf) -> PGroup:
    """G_1(F) = G(F) restricted to S_h x {id}."""
    amb = ambient(f.pair)
    return _group_of(f, range(0, amb.order, amb.nf))


def neutrality_group(f: Spf) -> PGroup:
    """G_2(F) = G(F) restricted to {id} x S_n."""
    return _group_of(f, range(ambient(f.pair).nf))


def symmetry_groups_of_tables(tables: np.ndarray, pair: Pair) -> list[bytes]:
    """Element-set keys of G(F) for every row F (vectorized over rows)."""
    amb = ambient(pair)
    t = np.atleast_2d(tables)
    member = np.stack([equivariant_mask(t, pair, c) for c in range(amb.order)], axis=1)
    return [np.flatnonzero(row).astype(np.int64).tobytes() for row in member]


def conjugate_spf(f: Spf, g: GElement | int) -> Spf:
    """F_g(p) = psi_g F(p^(g^-1))."""
    amb = ambient(f.pair)
    code = int(g) if isinstance(g, (int, np.integer)) else amb.code(g)
    sp = space(f.pair)
    perm_inv = sp.action(int(amb.inv[code]))
    psi = code % amb.nf
    return Spf(f.pair, amb.sym_n.mult[psi][f.table[perm_inv]])


# ---------------------------------------------------------------------------
# built-in SPFs


def builtin_dictatorship(pair: Pair, i: int) -> Spf:
    h, _ = pair
    if not 1 <= i <= h:
        raise ValueError(f"dictator {i} not in [1, {h}]")
    return Spf(pair, space(pair).digits[:, i - 1])


def builtin_constant(pair: Pair, sigma: Permutation) -> Spf:
    sp = space(pair)
    if sigma.degree != pair[1]:
        raise ValueError(f"order {sigma} has degree {sigma.degree}, expected {pair[1]}")
    return Spf(pair, np.full(sp.size, rank(sigma)))


def builtin_majority(pair: Pair) -> Spf:
    """Simple majority on two alternatives, ties broken in favour of 1>2."""
    h, n = pair
    if n != 2:
        raise ValueError("majority SPF is defined for n = 2 only")
    d = space(pair).digits
    supporters = (d == 0).sum(axis=1)  # individuals reporting 1>2
    return Spf(pair, np.where(2 * supporters < h, 1, 0))


# ---------------------------------------------------------------------------
# JSON


def to_json(f: Spf) -> dict:
    amb = ambient(f.pair)
    mapping = {
        format_profile(profile_unindex(i, f.pair)): format_order(amb.sym_n[int(v)])
        for i, v in enumerate(f.table)
    }
    return {"pair": list(f.pair), "map": mapping}


def from_json(data: dict) -> Spf:
    h, n = (int(x) for x in data["pair"])
    pair = (h, n)
    sp = space(pair)
    table = np.full(sp.size, -1, dtype=np.int64)
    for key, value in data["map"].items():
        i = profile_index(parse_profile(key, pair))
        if table[i] >= 0:
            raise ValueError(f"profile {key!r} listed twice")
        table[i] = rank(parse_order(value, n))
    missing = np.flatnonzero(table < 0)
    if len(missing):
        first = format_profile(profile_unindex(int(missing[0]), pair))
        raise ValueError(f"SPF is not total: {len(missing)} profiles missing, e.g. {first!r}")
    return Spf(pair, table)


def dump(f: Spf, path) -> None:
    with open(path, "w") as fh:
        json.dump(to_json(f), fh, indent=1)


def load(path) -> Spf:
    with open(path) as fh:
        return from_json(json.load(fh))
