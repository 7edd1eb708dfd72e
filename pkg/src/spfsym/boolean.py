"""k-valued Boolean functions, their invariance groups, and the link to SPFs.

A function on {0,1}^h is stored as a table of length 2^h; index i encodes the bit
string of i with position 1 as the most significant bit.  With 0 = 1>2 and
1 = 2>1 this is exactly the profile indexing at n = 2, so the bit action
x^phi = (x_{phi^-1(1)}, ..., x_{phi^-1(h)}) is the profile action of (phi, id).

Values 0..k-1 are identified with orders of S_n as follows: 0 is id, 1 is (1 2),
and the remaining values take the remaining permutations in rank order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .classify import Verdict, is_anonymity_group
from .config import BoundExceeded, VerificationError, settings
from .extension import is_O_fixed
from .groups import PGroup, from_elements, left_from_perms, left_group, subgroups_of
from .perm import Permutation, parse_cycles, rank, sym_tables
from .profiles import space
from .spf import Spf, anonymity_group, to_json as spf_to_json

MAX_ORACLE_ARITY = 4


@dataclass(frozen=True)
class BooleanFunction:
    arity: int
    k: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be positive")
        if self.k < 2:
            raise ValueError("value count k must be at least 2")
        t = tuple(int(x) for x in self.table)
        if len(t) != 2**self.arity:
            raise ValueError(f"table has length {len(t)}, expected {2**self.arity}")
        if any(not 0 <= x < self.k for x in t):
            raise ValueError(f"table entries must lie in [0, {self.k})")
        object.__setattr__(self, "table", t)

    def __call__(self, bits: str | Iterable[int]) -> int:
        return self.table[bits_to_index(bits)]

    def to_json(self) -> dict:
        return {"arity": self.arity, "k": self.k, "table": list(self.table)}

    @classmethod
    def from_json(cls, data: dict) -> BooleanFunction:
        return cls(int(data["arity"]), int(data["k"]), tuple(data["table"]))


def bits_to_index(bits: str | Iterable[int]) -> int:
    digits = [int(b) for b in bits]
    if any(b not in (0, 1) for b in digits):
        raise ValueError(f"not a bit string: {bits!r}")
    i = 0
    for b in digits:
        i = 2 * i + b
    return i


def index_to_bits(i: int, h: int) -> str:
    return format(i, f"0{h}b")


def act_bits(bits: str, phi: Permutation) -> str:
    """x^phi, whose position i holds x_{phi^-1(i)}."""
    inv = ~phi
    return "".join(bits[inv(i) - 1] for i in range(1, phi.degree + 1))


def _bit_action(h: int, phi_rank: int) -> np.ndarray:
    return space((h, 2)).action(phi_rank * 2)


def invariance_group(f: BooleanFunction) -> frozenset[Permutation]:
    """S(F) = {phi : F(x^phi) = F(x) for all x}."""
    sym = sym_tables(f.arity)
    t = np.asarray(f.table)
    return frozenset(
        sym[a] for a in range(len(sym.perms)) if np.array_equal(t[_bit_action(f.arity, a)], t)
    )


def invariance_left_group(f: BooleanFunction) -> PGroup:
    """S(F) x {id} as a subgroup at pair (h, 2)."""
    return left_from_perms((f.arity, 2), invariance_group(f))


def value_ranks(n: int, k: int) -> list[int]:
    """Order ranks standing for the values 0..k-1."""
    sym = sym_tables(n)
    if k > len(sym.perms):
        raise ValueError(f"k = {k} exceeds n! = {len(sym.perms)}")
    swap = rank(parse_cycles("(1 2)", n))
    rest = [r for r in range(len(sym.perms)) if r not in (0, swap)]
    return ([0, swap] + rest)[:k]


def spf_from_boolean(f: BooleanFunction, n: int) -> Spf:
    """An SPF at (h, n) agreeing with F on {0,1}^h and with G_1 = S(F) x {id}.

    Profiles outside {0,1}^h all receive F(1...1); the all-ones profile is fixed by
    S_h x {id}, so this is constant on the remaining orbits and keeps F' symmetric.
    """
    h = f.arity
    ident = np.array(value_ranks(n, f.k), dtype=np.int64)
    sp = space((h, n))
    d = sp.digits
    swap = int(ident[1])
    binary = ((d == 0) | (d == swap)).all(axis=1)
    bit_index = (d == swap).astype(np.int64) @ (2 ** np.arange(h - 1, -1, -1, dtype=np.int64))
    t = np.asarray(f.table, dtype=np.int64)
    table = np.where(binary, ident[t[bit_index]], ident[t[-1]])
    out = Spf((h, n), table)
    if settings.verify and anonymity_group(out) != left_from_perms((h, n), invariance_group(f)):
        raise VerificationError("embedded SPF has the wrong anonymity group")
    return out


def boolean_from_spf(f: Spf) -> BooleanFunction:
    h, n = f.pair
    if n != 2:
        raise ValueError(f"Boolean reading needs n = 2, got n = {n}")
    return BooleanFunction(h, 2, tuple(int(x) for x in f.table))


def _left_at_two(v: Iterable[Permutation] | PGroup, h: int | None) -> PGroup:
    if isinstance(v, PGroup):
        if v.pair[1] != 2:
            raise ValueError("expected a group at n = 2")
        return v
    perms = list(v)
    if h is None:
        if not perms:
            raise ValueError("arity needed for an empty generator list")
        h = perms[0].degree
    return left_from_perms((h, 2), perms)


@dataclass
class RepresentabilityVerdict:
    verdict: Verdict
    function: BooleanFunction | None

    @property
    def decision(self) -> bool:
        return self.verdict.decision

    @property
    def method(self) -> str:
        return self.verdict.method

    def to_json(self) -> dict:
        out = self.verdict.to_json(include_witness=False)
        out["kind"] = "2-representability"
        out["witness"] = self.function.to_json() if self.function is not None else None
        return out


def is_2_representable(v: Iterable[Permutation] | PGroup, h: int | None = None) -> RepresentabilityVerdict:
    """Decide V in BGR_h(2) as the anonymity question for V x {id} at (h, 2)."""
    u = _left_at_two(v, h)
    verdict = is_anonymity_group(u)
    fn = boolean_from_spf(verdict.witness) if verdict.witness is not None else None
    if fn is not None and invariance_left_group(fn) != u:
        raise VerificationError(f"Boolean witness has invariance group other than {u!r}")
    return RepresentabilityVerdict(verdict, fn)


def check_O_necessary(v: Iterable[Permutation] | PGroup, h: int | None = None) -> bool:
    """O(V x {id}) = V x {id} at (h, 2); necessary for 2-representability."""
    return is_O_fixed(_left_at_two(v, h))


def all_invariance_groups(h: int, chunk: int = 1 << 14) -> set[PGroup]:
    """BGR_h(2) by scanning all 2^(2^h) Boolean functions."""
    if h > MAX_ORACLE_ARITY:
        raise BoundExceeded(f"exhaustive scan limited to arity <= {MAX_ORACLE_ARITY}")
    size = 2**h
    total = 2**size
    sym = sym_tables(h)
    actions = np.stack([_bit_action(h, a) for a in range(len(sym.perms))])
    shifts = np.arange(size - 1, -1, -1, dtype=np.int64)
    seen: set[bytes] = set()
    for start in range(0, total, chunk):
        ids = np.arange(start, min(total, start + chunk), dtype=np.int64)
        tables = (ids[:, None] >> shifts[None, :]) & 1
        member = np.stack([(tables[:, act] == tables).all(axis=1) for act in actions], axis=1)
        seen.update(np.packbits(row).tobytes() for row in np.unique(member, axis=0))
    out = set()
    nf = 2
    for key in seen:
        bits = np.unpackbits(np.frombuffer(key, dtype=np.uint8))[: len(sym.perms)]
        out.add(from_elements((h, 2), [int(a) * nf for a in np.flatnonzero(bits)]))
    return out


def representable_subgroups(h: int) -> set[PGroup]:
    """Subgroups V x {id} at (h, 2) decided 2-representable."""
    return {u for u in subgroups_of(left_group((h, 2))) if is_anonymity_group(u).decision}


def dump(f: BooleanFunction, path) -> None:
    with open(path, "w") as fh:
        json.dump(f.to_json(), fh)


def load(path) -> BooleanFunction:
    with open(path) as fh:
        return BooleanFunction.from_json(json.load(fh))


def witness_json(v: RepresentabilityVerdict) -> dict:
    """Both views of the witness: Boolean table and SPF map."""
    return {
        "boolean": v.function.to_json() if v.function else None,
        "spf": spf_to_json(v.verdict.witness) if v.verdict.witness is not None else None,
    }
