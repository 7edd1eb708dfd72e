"""Permutations of [k] = {1, ..., k}, cycle types, and the text notations.

A permutation is stored by its image sequence: ``images[i - 1]`` is the image of
``i``.  The same object doubles as a linear order on [n]: ``images[r - 1]`` is the
alternative ranked in position ``r``, so ``3>2>4>1`` is the permutation (1 3 4).

Products follow the right-to-left convention ``(a * b)(x) = a(b(x))``.
"""

from __future__ import annotations

import functools
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import BoundExceeded, settings


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a bijection of [{len(images)}]")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, 1))

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


@dataclass(frozen=True)
class CycleType:
    """Unordered multiset of cycle lengths, kept sorted in decreasing order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError("cycle type parts must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"


# ---------------------------------------------------------------------------
# arithmetic


def _check_same_degree(a: Permutation, b: Permutation) -> None:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a * b``, the permutation x -> a(b(x))."""
    _check_same_degree(a, b)
    return Permutation(tuple(a.images[y - 1] for y in b.images))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.degree
    for i, x in enumerate(a.images, 1):
        inv[x - 1] = i
    return Permutation(tuple(inv))


def conjugate(a: Permutation, by: Permutation) -> Permutation:
    """Return ``by * a * by^-1``."""
    _check_same_degree(a, by)
    return compose(compose(by, a), inverse(by))


def power(a: Permutation, m: int) -> Permutation:
    result = Permutation.identity(a.degree)
    base = a if m >= 0 else inverse(a)
    for _ in range(abs(m)):
        result = compose(base, result)
    return result


def cycles(a: Permutation) -> list[tuple[int, ...]]:
    """All cycles of ``a`` (fixed points included), each rotated to its smallest point."""
    seen = set()
    out = []
    for start in range(1, a.degree + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = a(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = a(x)
        out.append(tuple(cyc))
    return out


def cycle_type(a: Permutation) -> CycleType:
    return CycleType(tuple(len(c) for c in cycles(a)))


def type_gcd(t: CycleType) -> int:
    return math.gcd(*t.parts)


def type_lcm(t: CycleType) -> int:
    return math.lcm(*t.parts)


def order(a: Permutation) -> int:
    return type_lcm(cycle_type(a))


def r_part(k: int, r: int) -> int:
    """Largest power of the prime ``r`` dividing ``k``."""
    if k < 1:
        raise ValueError("r_part needs k >= 1")
    part = 1
    while k % r == 0:
        k //= r
        part *= r
    return part


def prime_factors(k: int) -> list[int]:
    """Distinct primes dividing ``k``, by trial division."""
    primes = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            primes.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        primes.append(k)
    return primes


# ---------------------------------------------------------------------------
# text notations

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse ``"id"`` or a product of disjoint cycles like ``"(1 2)(3,4)"``."""
    s = text.strip()
    if s == "id":
        return Permutation.identity(degree)
    if not s:
        raise ValueError("empty permutation text (use 'id')")
    images = list(range(1, degree + 1))
    used: set[int] = set()
    pos = 0
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise ValueError(f"malformed cycle text {text!r}")
        pos = m.end()
        tokens = [t for t in re.split(r"[\s,]+", m.group(1).strip()) if t]
        if not tokens:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"malformed cycle text {text!r}") from None
        for x in points:
            if not 1 <= x <= degree:
                raise ValueError(f"point {x} out of range [1, {degree}]")
            if x in used:
                raise ValueError(f"point {x} repeated in {text!r}")
            used.add(x)
        for x, y in zip(points, points[1:] + points[:1]):
            images[x - 1] = y
    if s[pos:].strip() or pos == 0:
        raise ValueError(f"malformed cycle text {text!r}")
    return Permutation(tuple(images))


def format_cycles(a: Permutation) -> str:
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(a) if len(c) > 1]
    return "".join(parts) if parts else "id"


def parse_order(text: str, n: int) -> Permutation:
    """Parse a ranking ``"3>2>4>1"`` into the permutation r -> r-th listed alternative."""
    tokens = [t.strip() for t in text.split(">")]
    try:
        alts = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"malformed order {text!r}") from None
    if len(alts) != n:
        raise ValueError(f"order {text!r} lists {len(alts)} alternatives, expected {n}")
    for x in alts:
        if not 1 <= x <= n:
            raise ValueError(f"alternative {x} out of range [1, {n}]")
    if len(set(alts)) != n:
        raise ValueError(f"duplicate alternative in {text!r}")
    return Permutation(tuple(alts))


def format_order(o: Permutation) -> str:
    return ">".join(map(str, o.images))


# ---------------------------------------------------------------------------
# enumeration in lexicographic order of image sequences


def all_permutations(k: int) -> list[Permutation]:
    if k > settings.max_degree:
        raise BoundExceeded(f"degree {k} exceeds max_degree={settings.max_degree}")
    return [Permutation(p) for p in itertools.permutations(range(1, k + 1))]


def rank(a: Permutation) -> int:
    """Lexicographic rank of the image sequence (Lehmer code); rank(id) = 0."""
    k = a.degree
    remaining = list(range(1, k + 1))
    r = 0
    for i, x in enumerate(a.images):
        j = remaining.index(x)
        r += j * math.factorial(k - 1 - i)
        remaining.pop(j)
    return r


def unrank(i: int, k: int) -> Permutation:
    if not 0 <= i < math.factorial(k):
        raise ValueError(f"rank {i} out of range for degree {k}")
    remaining = list(range(1, k + 1))
    images = []
    for pos in range(k):
        f = math.factorial(k - 1 - pos)
        j, i = divmod(i, f)
        images.append(remaining.pop(j))
    return Permutation(tuple(images))


class SymTables:
    """Dense lookup tables for S_k indexed by lexicographic rank."""

    def __init__(self, k: int):
        if k > settings.max_degree:
            raise BoundExceeded(f"degree {k} exceeds max_degree={settings.max_degree}")
        self.k = k
        self.order = math.factorial(k)
        self.perms = all_permutations(k)
        self.images = np.array([p.images for p in self.perms], dtype=np.int64) - 1
        self._codes = self._encode(self.images)
        self.inv = self.rank_of_images(np.argsort(self.images, axis=1))
        self.cycle_types = [cycle_type(p) for p in self.perms]
        self.type_gcd = np.array([type_gcd(t) for t in self.cycle_types], dtype=np.int64)
        self.orders = np.array([type_lcm(t) for t in self.cycle_types], dtype=np.int64)
        self._mult = None

    def _encode(self, imgs: np.ndarray) -> np.ndarray:
        weights = self.k ** np.arange(self.k - 1, -1, -1, dtype=np.int64)
        return imgs @ weights

    def rank_of_images(self, imgs: np.ndarray) -> np.ndarray:
        """Ranks of rows of 0-based image sequences."""
        return np.searchsorted(self._codes, self._encode(imgs))

    @property
    def mult(self) -> np.ndarray:
        """``mult[a, b]`` is the rank of perms[a] * perms[b]."""
        if self._mult is None:
            dtype = np.int16 if self.order < 2**15 else np.int32
            table = np.empty((self.order, self.order), dtype=dtype)
            for a in range(self.order):
                table[a] = self.rank_of_images(self.images[a][self.images])
            self._mult = table
        return self._mult

    def rank(self, p: Permutation) -> int:
        if p.degree != self.k:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.k}")
        return rank(p)

    def __getitem__(self, r: int) -> Permutation:
        return self.perms[r]


@functools.lru_cache(maxsize=None)
def sym_tables(k: int) -> SymTables:
    return SymTables(k)


def closure_of(gens: Iterable[Permutation], degree: int) -> frozenset[Permutation]:
    """Subgroup of S_degree generated by ``gens`` (plain set-based closure)."""
    ident = Permutation.identity(degree)
    gens = [g for g in gens]
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"degree mismatch: {g.degree} vs {degree}")
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def parse_perm_list(text: str, degree: int) -> list[Permutation]:
    """Parse ``"(1 2)(3 4);(1 3)(2 4)"`` into a list; empty text gives []."""
    return [parse_cycles(t, degree) for t in text.split(";") if t.strip()]


def format_perm_list(perms: Sequence[Permutation]) -> str:
    return ";".join(format_cycles(p) for p in perms)
