"""Subgroups of G = S_h x S_n held as dense, closed element sets.

An element (phi, psi) of G is encoded as the integer ``rank(phi) * n! + rank(psi)``;
a :class:`PGroup` is the sorted array of its codes.  Equality and hashing use that
array, so two groups with different generators but equal element sets coincide.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .config import BoundExceeded, VerificationError, settings
from .perm import (
    Permutation,
    SymTables,
    format_cycles,
    parse_cycles,
    rank,
    sym_tables,
)

Pair = tuple[int, int]


@dataclass(frozen=True)
class GElement:
    phi: Permutation
    psi: Permutation

    def __mul__(self, other: GElement) -> GElement:
        return GElement(self.phi * other.phi, self.psi * other.psi)

    def inverse(self) -> GElement:
        return GElement(~self.phi, ~self.psi)

    def __str__(self) -> str:
        return f"({format_cycles(self.phi)}|{format_cycles(self.psi)})"


class Ambient:
    """Lookup tables for G = S_h x S_n at a fixed voting pair."""

    def __init__(self, h: int, n: int):
        if h < 2 or n < 2:
            raise ValueError(f"voting pair needs h, n >= 2, got ({h}, {n})")
        self.h = h
        self.n = n
        self.pair: Pair = (h, n)
        self.sym_h: SymTables = sym_tables(h)
        self.sym_n: SymTables = sym_tables(n)
        self.hf = self.sym_h.order
        self.nf = self.sym_n.order
        self.order = self.hf * self.nf
        codes = np.arange(self.order, dtype=np.int64)
        self.phi_of = codes // self.nf
        self.psi_of = codes % self.nf
        self.inv = self.sym_h.inv[self.phi_of] * self.nf + self.sym_n.inv[self.psi_of]

    def code(self, g: GElement) -> int:
        if g.phi.degree != self.h or g.psi.degree != self.n:
            raise ValueError(
                f"element {g} has degrees ({g.phi.degree}, {g.psi.degree}), "
                f"expected ({self.h}, {self.n})"
            )
        return rank(g.phi) * self.nf + rank(g.psi)

    def element(self, code: int) -> GElement:
        a, b = divmod(int(code), self.nf)
        return GElement(self.sym_h[a], self.sym_n[b])

    def mul(self, a, b):
        """Product of codes (arrays broadcast)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        phi = self.sym_h.mult[a // self.nf, b // self.nf].astype(np.int64)
        psi = self.sym_n.mult[a % self.nf, b % self.nf].astype(np.int64)
        return phi * self.nf + psi

    def __repr__(self) -> str:
        return f"Ambient{self.pair}"


@functools.lru_cache(maxsize=None)
def _ambient(h: int, n: int) -> Ambient:
    return Ambient(h, n)


def ambient(pair: Pair) -> Ambient:
    h, n = pair
    if max(h, n) > settings.max_degree:
        raise BoundExceeded(f"pair {pair} exceeds max_degree={settings.max_degree}")
    order = math.factorial(h) * math.factorial(n)
    if order > settings.max_group_order:
        raise BoundExceeded(
            f"|S_{h} x S_{n}| = {order} exceeds max_group_order={settings.max_group_order}"
        )
    return _ambient(h, n)


class PGroup:
    """A subgroup of S_h x S_n.  Immutable; identity is the element set."""

    def __init__(self, amb: Ambient, elements: np.ndarray, generators: Sequence[int] = ()):
        els = np.unique(np.asarray(elements, dtype=np.int64))
        els.flags.writeable = False
        self.ambient = amb
        self.elements = els
        self.generators = tuple(int(g) for g in generators)
        self._key = els.tobytes()
        self._hash = hash((amb.pair, self._key))
        self._mask = None

    @property
    def pair(self) -> Pair:
        return self.ambient.pair

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            m = np.zeros(self.ambient.order, dtype=bool)
            m[self.elements] = True
            m.flags.writeable = False
            self._mask = m
        return self._mask

    @property
    def key(self) -> bytes:
        return self._key

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PGroup)
            and self.ambient.pair == other.ambient.pair
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return self._hash

    def __contains__(self, g) -> bool:
        if isinstance(g, GElement):
            g = self.ambient.code(g)
        return bool(self.mask[int(g)])

    def __le__(self, other: PGroup) -> bool:
        return contains(other, self)

    def __lt__(self, other: PGroup) -> bool:
        return len(self) < len(other) and contains(other, self)

    def __iter__(self) -> Iterator[GElement]:
        return (self.ambient.element(c) for c in self.elements)

    def sort_key(self):
        return (len(self.elements), tuple(self.elements.tolist()))

    @functools.cached_property
    def canonical_generators(self) -> tuple[int, ...]:
        """Greedy generating set: scan elements in code order, keep those not yet generated."""
        gens: list[int] = []
        current = np.zeros(self.ambient.order, dtype=bool)
        current[0] = True
        for c in self.elements:
            if not current[c]:
                gens.append(int(c))
                current = _closure_mask(self.ambient, gens)
        return tuple(gens)

    def generator_elements(self) -> list[GElement]:
        return [self.ambient.element(c) for c in self.canonical_generators]

    def literal(self) -> list[str]:
        """Canonical generators in the ``(<phi>|<psi>)`` literal form."""
        return [str(g) for g in self.generator_elements()]

    def __repr__(self) -> str:
        gens = ";".join(self.literal()) or "trivial"
        return f"PGroup(pair={self.pair}, order={len(self)}, gens={gens!r})"


def _closure_mask(amb: Ambient, gens: Sequence[int], start: np.ndarray | None = None) -> np.ndarray:
    mask = np.zeros(amb.order, dtype=bool) if start is None else start.copy()
    mask[0] = True
    gens = np.array(sorted(set(int(g) for g in gens)), dtype=np.int64)
    frontier = np.flatnonzero(mask)
    while len(frontier) and len(gens):
        prods = amb.mul(frontier[:, None], gens[None, :]).ravel()
        new = np.unique(prods[~mask[prods]])
        mask[new] = True
        frontier = new
    return mask


def _from_mask(amb: Ambient, mask: np.ndarray, gens: Sequence[int] = ()) -> PGroup:
    g = PGroup(amb, np.flatnonzero(mask), gens)
    if len(g) > settings.max_group_order:
        raise BoundExceeded(f"group order {len(g)} exceeds max_group_order")
    return g


def from_elements(pair: Pair, codes: Iterable[int]) -> PGroup:
    """Wrap a set of element codes known to be a subgroup (asserted in verify mode)."""
    amb = ambient(pair)
    g = PGroup(amb, np.fromiter((int(c) for c in codes), dtype=np.int64))
    if settings.verify:
        check_subgroup(g)
    return g


def check_subgroup(g: PGroup) -> None:
    amb = g.ambient
    if len(g) == 0 or not g.mask[0]:
        raise VerificationError("element set lacks the identity")
    prods = amb.mul(g.elements[:, None], g.elements[None, :])
    if not g.mask[prods].all():
        raise VerificationError("element set is not closed under products")


# ---------------------------------------------------------------------------
# construction


def closure(pair: Pair, generators: Iterable[GElement | int]) -> PGroup:
    amb = ambient(pair)
    codes = [g if isinstance(g, (int, np.integer)) else amb.code(g) for g in generators]
    return _from_mask(amb, _closure_mask(amb, codes), codes)


def join(u: PGroup, v: PGroup) -> PGroup:
    if u.pair != v.pair:
        raise ValueError(f"pair mismatch: {u.pair} vs {v.pair}")
    if contains(u, v):
        return u
    if contains(v, u):
        return v
    amb = u.ambient
    gens = list(u.canonical_generators) + list(v.canonical_generators)
    return _from_mask(amb, _closure_mask(amb, gens, start=u.mask), gens)


def join_element(u: PGroup, code: int) -> PGroup:
    """<u, g> for a single element code."""
    if u.mask[code]:
        return u
    amb = u.ambient
    gens = list(u.canonical_generators) + [int(code)]
    return _from_mask(amb, _closure_mask(amb, gens, start=u.mask), gens)


def join_all(groups: Iterable[PGroup], pair: Pair) -> PGroup:
    result = trivial(pair)
    for g in groups:
        result = join(result, g)
    return result


def conjugate_group(u: PGroup, g: GElement | int) -> PGroup:
    """{g u g^-1 : u in U}."""
    amb = u.ambient
    c = g if isinstance(g, (int, np.integer)) else amb.code(g)
    return PGroup(amb, amb.mul(amb.mul(c, u.elements), amb.inv[c]))


def project1(u: PGroup) -> frozenset[Permutation]:
    amb = u.ambient
    return frozenset(amb.sym_h[int(a)] for a in np.unique(u.elements // amb.nf))


def project2(u: PGroup) -> frozenset[Permutation]:
    amb = u.ambient
    return frozenset(amb.sym_n[int(b)] for b in np.unique(u.elements % amb.nf))


def is_direct_product(u: PGroup) -> bool:
    amb = u.ambient
    a = np.unique(u.elements // amb.nf)
    b = np.unique(u.elements % amb.nf)
    return len(u) == len(a) * len(b)


def contains(u: PGroup, v: PGroup) -> bool:
    """True when V is a subgroup of U."""
    if u.pair != v.pair:
        raise ValueError(f"pair mismatch: {u.pair} vs {v.pair}")
    return len(v) <= len(u) and bool(u.mask[v.elements].all())


def intersect(u: PGroup, v: PGroup) -> PGroup:
    return PGroup(u.ambient, u.elements[v.mask[u.elements]])


def left_factor(u: PGroup) -> PGroup:
    """U intersected with S_h x {id}."""
    return PGroup(u.ambient, u.elements[u.elements % u.ambient.nf == 0])


def right_factor(u: PGroup) -> PGroup:
    """U intersected with {id} x S_n."""
    return PGroup(u.ambient, u.elements[u.elements < u.ambient.nf])


def is_left(u: PGroup) -> bool:
    """U <= S_h x {id}."""
    return bool((u.elements % u.ambient.nf == 0).all())


def is_right(u: PGroup) -> bool:
    """U <= {id} x S_n."""
    return bool((u.elements < u.ambient.nf).all())


# ---------------------------------------------------------------------------
# named subgroups


def full_group(pair: Pair) -> PGroup:
    amb = ambient(pair)
    return PGroup(amb, np.arange(amb.order))


def trivial(pair: Pair) -> PGroup:
    return PGroup(ambient(pair), np.array([0]))


def left_group(pair: Pair) -> PGroup:
    """S_h x {id}."""
    amb = ambient(pair)
    return PGroup(amb, np.arange(amb.hf) * amb.nf)


def right_group(pair: Pair) -> PGroup:
    """{id} x S_n."""
    amb = ambient(pair)
    return PGroup(amb, np.arange(amb.nf))


def v_times_w(pair: Pair, v: Iterable[Permutation], w: Iterable[Permutation]) -> PGroup:
    """V x W from generators (or full element lists) of V <= S_h and W <= S_n."""
    h, n = pair
    gens = [GElement(a, Permutation.identity(n)) for a in v]
    gens += [GElement(Permutation.identity(h), b) for b in w]
    return closure(pair, gens)


def left_from_perms(pair: Pair, v: Iterable[Permutation]) -> PGroup:
    return v_times_w(pair, v, ())


def right_from_perms(pair: Pair, w: Iterable[Permutation]) -> PGroup:
    return v_times_w(pair, (), w)


def _cyc(degree: int, *points: int) -> Permutation:
    return parse_cycles("(" + " ".join(map(str, points)) + ")", degree)


def alternating_left(pair: Pair) -> PGroup:
    """A_h x {id}."""
    h, _ = pair
    return left_from_perms(pair, [_cyc(h, 1, 2, i) for i in range(3, h + 1)])


def klein_left(n: int = 2) -> PGroup:
    """K x {id} at (4, n), K = {id, (12)(34), (13)(24), (14)(23)}."""
    return left_from_perms(
        (4, n), [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)]
    )


def diagonal(pair: Pair) -> PGroup:
    """U_{N in H} = {(phi, psi) : phi(i) = psi(i) for i in [n]}."""
    h, n = pair
    if n > h:
        raise ValueError(f"diagonal group needs n <= h, got {pair}")
    gens = []
    for i in range(1, n):
        gens.append(GElement(_cyc(h, i, i + 1), _cyc(n, i, i + 1)))
    for i in range(n + 1, h):
        gens.append(GElement(_cyc(h, i, i + 1), Permutation.identity(n)))
    return closure(pair, gens)


def young_generators(h: int, blocks: Iterable[Iterable[int]]) -> list[Permutation]:
    """Transpositions generating the product of symmetric groups on the blocks."""
    gens = []
    for block in blocks:
        pts = sorted(block)
        gens.extend(_cyc(h, a, b) for a, b in zip(pts, pts[1:]))
    return gens


def complete_intransitive(pair: Pair, partition: Iterable[Iterable[int]]) -> PGroup:
    """(S_{H_1} x ... x S_{H_k}) x {id} for a partition {H_1, ..., H_k} of [h]."""
    h, _ = pair
    blocks = [sorted(int(x) for x in b) for b in partition]
    pts = sorted(x for b in blocks for x in b)
    if pts != list(range(1, h + 1)) or any(not b for b in blocks):
        raise ValueError(f"{blocks} is not a partition of [{h}]")
    return left_from_perms(pair, young_generators(h, blocks))


# ---------------------------------------------------------------------------
# lattice


def cyclic_subgroups(pair: Pair) -> list[PGroup]:
    amb = ambient(pair)
    seen: dict[bytes, PGroup] = {}
    for c in range(amb.order):
        g = _from_mask(amb, _closure_mask(amb, [c]), [c])
        seen.setdefault(g.key, g)
    return sorted(seen.values(), key=PGroup.sort_key)


def subgroups_of(u: PGroup) -> list[PGroup]:
    """Every subgroup of U exactly once, by bottom-up extension with cyclic subgroups."""
    amb = u.ambient
    cyclics: dict[bytes, PGroup] = {}
    for c in u.elements:
        g = _from_mask(amb, _closure_mask(amb, [int(c)]), [int(c)])
        cyclics.setdefault(g.key, g)
    cyc = sorted(cyclics.values(), key=PGroup.sort_key)
    found: dict[bytes, PGroup] = {g.key: g for g in cyc}
    frontier = list(cyc)
    while frontier:
        nxt = []
        for s in frontier:
            for c in cyc:
                if contains(s, c):
                    continue
                j = join(s, c)
                if j.key not in found:
                    found[j.key] = j
                    nxt.append(j)
        frontier = nxt
    return sorted(found.values(), key=PGroup.sort_key)


def all_subgroups(pair: Pair) -> list[PGroup]:
    return subgroups_of(full_group(pair))


def minimal_overgroups(u: PGroup, within: PGroup | None = None) -> list[PGroup]:
    """All V with U < V <= within (default G) and nothing strictly between.

    Every minimal overgroup has the form <U, g> for some g outside U, so it is
    enough to take the inclusion-minimal members of that family.  <U, g> only
    depends on the double coset UgU, so one g per double coset suffices.
    """
    amb = u.ambient
    top = within if within is not None else full_group(u.pair)
    candidates: dict[bytes, PGroup] = {}
    done = u.mask.copy()
    for c in top.elements:
        if done[c]:
            continue
        v = join_element(u, int(c))
        candidates.setdefault(v.key, v)
        done[amb.mul(amb.mul(u.elements[:, None], int(c)), u.elements[None, :]).ravel()] = True
    cands = sorted(candidates.values(), key=PGroup.sort_key)
    minimal = [
        v for v in cands
        if not any(len(w) < len(v) and contains(v, w) for w in cands)
    ]
    return minimal


def parse_group(pair: Pair, text: str | Sequence[str]) -> PGroup:
    """Parse a group literal: ``"((1 2)(3 4)|id);((1 3)(2 4)|id)"`` or a list of items."""
    h, n = pair
    items = text.split(";") if isinstance(text, str) else list(text)
    gens = []
    for item in items:
        s = item.strip()
        if not s:
            continue
        if not (s.startswith("(") and s.endswith(")")) or s.count("|") != 1:
            raise ValueError(f"malformed group element {item!r}; expected '(<phi>|<psi>)'")
        phi_text, psi_text = s[1:-1].split("|")
        gens.append(GElement(parse_cycles(phi_text, h), parse_cycles(psi_text, n)))
    return closure(pair, gens)


def format_group(u: PGroup) -> str:
    return ";".join(u.literal())


def describe(u: PGroup) -> str:
    """Short human label: order plus canonical generators."""
    gens = format_group(u) or "trivial"
    return f"<{gens}> (order {len(u)})"


def elements_as_perm_pairs(u: PGroup) -> list[tuple[str, str]]:
    return [(format_cycles(g.phi), format_cycles(g.psi)) for g in u]


def product_elements(pair: Pair, v: Iterable[Permutation], w: Iterable[Permutation]) -> PGroup:
    """V x W given as full element sets (no closure performed beyond the product)."""
    amb = ambient(pair)
    a = [rank(x) for x in v]
    b = [rank(y) for y in w]
    codes = [x * amb.nf + y for x, y in itertools.product(a, b)]
    return from_elements(pair, codes)
