"""Preference profiles, the action of S_h x S_n on them, orbits and stabilizers.

Profiles are indexed in mixed radix base n!: the rank of individual 1's order is the
most significant digit.  For g = (phi, psi) the image profile is
``(p^g)_i = psi * p_{phi^-1(i)}``; :meth:`ProfileSpace.action` returns that map as an
index permutation over all (n!)^h profiles.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import BoundExceeded, settings
from .groups import Ambient, GElement, Pair, PGroup, ambient, from_elements
from .perm import Permutation, format_order, parse_order, rank


@dataclass(frozen=True)
class Profile:
    pair: Pair
    prefs: tuple[Permutation, ...]

    def __post_init__(self):
        h, n = self.pair
        if len(self.prefs) != h:
            raise ValueError(f"profile has {len(self.prefs)} entries, expected {h}")
        for p in self.prefs:
            if p.degree != n:
                raise ValueError(f"order {p} has degree {p.degree}, expected {n}")

    def __getitem__(self, i: int) -> Permutation:
        """1-based access to individual i's order."""
        return self.prefs[i - 1]

    def __str__(self) -> str:
        return format_profile(self)


@dataclass(frozen=True)
class OrbitPartition:
    group: PGroup
    orbit_of: np.ndarray  # profile index -> orbit id
    reps: np.ndarray  # orbit id -> minimum profile index in the orbit
    trans_psi: np.ndarray  # rank of psi_t for some t in U with p = rep^t

    @property
    def R(self) -> int:
        return len(self.reps)

    def sizes(self) -> np.ndarray:
        return np.bincount(self.orbit_of, minlength=self.R)

    def members(self, j: int) -> np.ndarray:
        return np.flatnonzero(self.orbit_of == j)

    def orbits(self) -> list[np.ndarray]:
        order = np.argsort(self.orbit_of, kind="stable")
        bounds = np.cumsum(self.sizes())[:-1]
        return np.split(order, bounds)


class ProfileSpace:
    """Index arithmetic and action tables for the profiles of one voting pair."""

    def __init__(self, amb: Ambient):
        self.ambient = amb
        self.h, self.n = amb.pair
        self.nf = amb.nf
        self.size = self.nf**self.h
        self.weights = self.nf ** np.arange(self.h - 1, -1, -1, dtype=np.int64)
        self._orbit_cache: dict[bytes, OrbitPartition] = {}

    @functools.cached_property
    def digits(self) -> np.ndarray:
        """(P, h) matrix of order ranks; column i is individual i+1."""
        idx = np.arange(self.size, dtype=np.int64)
        return (idx[:, None] // self.weights[None, :]) % self.nf

    def index(self, ranks: Sequence[int]) -> int:
        return int(np.dot(np.asarray(ranks, dtype=np.int64), self.weights))

    def ranks(self, i: int) -> list[int]:
        if not 0 <= i < self.size:
            raise ValueError(f"profile index {i} out of range [0, {self.size})")
        return [(i // int(w)) % self.nf for w in self.weights]

    @functools.lru_cache(maxsize=8192)
    def action(self, code: int) -> np.ndarray:
        """Index permutation p -> p^g for the element with the given code."""
        amb = self.ambient
        a, b = divmod(int(code), self.nf)
        phi_inv = amb.sym_h.images[amb.sym_h.inv[a]]  # 0-based images of phi^-1
        mult_psi = amb.sym_n.mult[b].astype(np.int64)
        d = self.digits
        out = np.zeros(self.size, dtype=np.int64)
        for i in range(self.h):
            out += mult_psi[d[:, phi_inv[i]]] * self.weights[i]
        out.flags.writeable = False
        return out

    def apply_index(self, i: int, code: int) -> int:
        amb = self.ambient
        a, b = divmod(int(code), self.nf)
        phi_inv = amb.sym_h.images[amb.sym_h.inv[a]]
        r = self.ranks(i)
        mult = amb.sym_n.mult
        return self.index([int(mult[b, r[phi_inv[k]]]) for k in range(self.h)])

    def orbits(self, u: PGroup) -> OrbitPartition:
        cached = self._orbit_cache.get(u.key)
        if cached is not None:
            return cached
        part = self._compute_orbits(u)
        self._orbit_cache.setdefault(u.key, part)
        return part

    def _compute_orbits(self, u: PGroup) -> OrbitPartition:
        gens = u.canonical_generators
        perms = [self.action(c) for c in gens]
        label = np.arange(self.size, dtype=np.int64)
        # forward edges suffice: in a finite group every generator's inverse is a power of it
        while True:
            new = label
            for perm in perms:
                new = np.minimum(new, new[perm])
            new = new[new]
            if np.array_equal(new, label):
                break
            label = new
        reps = np.flatnonzero(label == np.arange(self.size))
        orbit_id = np.searchsorted(reps, label)

        mult = self.ambient.sym_n.mult
        trans = np.full(self.size, -1, dtype=np.int64)
        trans[reps] = 0
        psis = [c % self.nf for c in gens]
        while (trans < 0).any():
            for perm, psi in zip(perms, psis):
                src = np.flatnonzero(trans >= 0)
                dst = perm[src]
                fresh = trans[dst] < 0
                trans[dst[fresh]] = mult[psi, trans[src[fresh]]]
        for arr in (orbit_id, reps, trans):
            arr.flags.writeable = False
        return OrbitPartition(u, orbit_id, reps, trans)


@functools.lru_cache(maxsize=None)
def _space(h: int, n: int) -> ProfileSpace:
    return ProfileSpace(ambient((h, n)))


def space(pair: Pair) -> ProfileSpace:
    h, n = pair
    size = math.factorial(n) ** h
    if size > settings.max_profiles:
        raise BoundExceeded(f"(n!)^h = {size} profiles exceeds max_profiles={settings.max_profiles}")
    ambient(pair)
    return _space(h, n)


# ---------------------------------------------------------------------------
# profiles as values


def make_profile(pair: Pair, prefs: Sequence[Permutation]) -> Profile:
    return Profile(tuple(pair), tuple(prefs))


def profile_index(p: Profile) -> int:
    _, n = p.pair
    nf = math.factorial(n)
    i = 0
    for o in p.prefs:
        i = i * nf + rank(o)
    return i


def profile_unindex(i: int, pair: Pair) -> Profile:
    sp = space(pair)
    amb = sp.ambient
    return Profile(tuple(pair), tuple(amb.sym_n[r] for r in sp.ranks(i)))


def apply(p: Profile, g: GElement) -> Profile:
    """p^g with (p^g)_i = psi * p_{phi^-1(i)}."""
    h, n = p.pair
    if g.phi.degree != h or g.psi.degree != n:
        raise ValueError(f"element {g} does not act on profiles of pair {p.pair}")
    phi_inv = ~g.phi
    return Profile(p.pair, tuple(g.psi * p[phi_inv(i)] for i in range(1, h + 1)))


def all_orbits(u: PGroup) -> OrbitPartition:
    return space(u.pair).orbits(u)


def orbit_count(u: PGroup) -> int:
    return all_orbits(u).R


def orbit_indices(i: int, u: PGroup) -> np.ndarray:
    part = all_orbits(u)
    return np.flatnonzero(part.orbit_of == part.orbit_of[i])


def orbit(p: Profile, u: PGroup) -> set[Profile]:
    return {profile_unindex(int(j), p.pair) for j in orbit_indices(profile_index(p), u)}


def stabilizer(p: Profile, u: PGroup) -> PGroup:
    sp = space(u.pair)
    i = profile_index(p)
    fixed = [int(c) for c in u.elements if sp.apply_index(i, int(c)) == i]
    return from_elements(u.pair, fixed)


def representatives(u: PGroup) -> list[Profile]:
    return [profile_unindex(int(i), u.pair) for i in all_orbits(u).reps]


def is_constant(p: Profile) -> bool:
    return all(o == p.prefs[0] for o in p.prefs)


def constant_profiles(pair: Pair) -> list[Profile]:
    h, n = pair
    amb = ambient(pair)
    return [Profile(tuple(pair), (s,) * h) for s in amb.sym_n.perms]


def constant_indices(pair: Pair) -> np.ndarray:
    sp = space(pair)
    return np.arange(sp.nf, dtype=np.int64) * int(sp.weights.sum())


# ---------------------------------------------------------------------------
# text forms


def parse_profile(text: str | Sequence[str], pair: Pair) -> Profile:
    """``"1>2, 2>1, 1>2"`` or a list of order strings."""
    h, n = pair
    items = text.split(",") if isinstance(text, str) else list(text)
    items = [s for s in (t.strip() for t in items) if s]
    if len(items) != h:
        raise ValueError(f"profile {text!r} has {len(items)} orders, expected {h}")
    return Profile(tuple(pair), tuple(parse_order(s, n) for s in items))


def format_profile(p: Profile) -> str:
    return ", ".join(format_order(o) for o in p.prefs)


def bitstring(p: Profile) -> str:
    """n = 2 only: 0 for 1>2, 1 for 2>1, individual 1 first."""
    if p.pair[1] != 2:
        raise ValueError("bit-string form needs n = 2")
    return "".join("0" if o.is_identity() else "1" for o in p.prefs)


def format_index(i: int, pair: Pair, bits: bool | None = None) -> str:
    p = profile_unindex(i, pair)
    if bits is None:
        bits = pair[1] == 2
    return bitstring(p) if bits else format_profile(p)
