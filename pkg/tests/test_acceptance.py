"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import KLEIN, X32, Y32, Z32, named, random_tables, subgroups  # noqa: E402
from spfsym.boolean import all_invariance_groups, representable_subgroups  # noqa: E402
from spfsym.classify import (  # noqa: E402
    is_anonymity_group,
    is_neutrality_group,
    is_symmetry_group,
    symmetric_union_count,
    trivial_group_witness,
)
from spfsym.config import configured  # noqa: E402
from spfsym.extension import big_W, orbit_extension  # noqa: E402
from spfsym.groups import (  # noqa: E402
    alternating_left,
    complete_intransitive,
    conjugate_group,
    full_group,
    join,
    left_group,
    right_group,
    subgroups_of,
)
from spfsym.profiles import all_orbits, format_index, space  # noqa: E402
from spfsym.regularity import is_regular, is_regular_by_criterion, is_regular_by_definition  # noqa: E402
from spfsym.spf import (  # noqa: E402
    Spf,
    anonymity_group,
    builtin_dictatorship,
    builtin_majority,
    conjugate_spf,
    count_symmetric,
    enumerate_symmetric,
    is_U_symmetric,
    neutrality_group,
    symmetry_group,
    symmetry_groups_of_tables,
)


def klein_orbits():
    t = time.perf_counter()
    part = all_orbits(named((4, 2), KLEIN))
    got = {frozenset(format_index(int(i), (4, 2)) for i in o) for o in part.orbits()}
    elapsed = time.perf_counter() - t
    expected = {
        frozenset({"1111"}),
        frozenset({"0000"}),
        frozenset({"1110", "0111", "1011", "1101"}),
        frozenset({"1000", "0100", "0010", "0001"}),
        frozenset({"1100", "0011"}),
        frozenset({"1010", "0101"}),
        frozenset({"0110", "1001"}),
    }
    assert part.R == 7 and got == expected
    assert elapsed < 1.0, f"took {elapsed:.2f}s"


def regularity_equivalence():
    mismatches = [
        (pair, u)
        for pair in [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)]
        for u in subgroups(pair)
        if is_regular_by_criterion(u) != is_regular_by_definition(u)
    ]
    assert not mismatches, mismatches
    for h in range(2, 6):
        for n in range(2, 6):
            if math.factorial(h) * math.factorial(n) > 10_080:
                continue
            g = full_group((h, n))
            assert is_regular_by_criterion(g) == (math.gcd(h, math.factorial(n)) == 1), (h, n)


def counting_law():
    pair = (3, 2)
    u = right_group(pair)
    assert all_orbits(u).R == 4
    assert count_symmetric(u) == 16
    sp = space(pair)
    all_tables = ((np.arange(2**sp.size)[:, None] >> np.arange(sp.size - 1, -1, -1)) & 1).astype(np.int64)
    assert len(all_tables) == 256
    assert sum(is_U_symmetric(Spf(pair, t), u) for t in all_tables) == 16


def section9_reproduction():
    pair = (3, 2)
    u = right_group(pair)
    x, y, z = (named(pair, s) for s in (X32, Y32, Z32))
    g = full_group(pair)
    assert [all_orbits(v).R for v in (u, x, y, z, g)] == [4, 3, 3, 3, 2]
    union = symmetric_union_count([x, y, z])
    assert union.terms == sorted([(x, 1), (y, 1), (z, 1), (g, -2)], key=lambda t: t[0].sort_key())
    assert union.total == 2**3 + 2**3 + 2**3 - 2 * 2**2 == 16
    v = is_symmetry_group(u)
    assert v.decision is False and v.method == "inclusion-exclusion"
    assert v.details["count_U"] == v.details["union"] == 16
    w = is_symmetry_group(right_group((2, 2)))
    assert w.decision is True and w.method == "regular-maximal"


def klein_classification():
    k2 = named((4, 2), KLEIN)
    assert not is_anonymity_group(k2).decision
    assert not is_symmetry_group(k2).decision
    k3 = named((4, 3), KLEIN)
    v = is_anonymity_group(k3)
    assert v.decision and anonymity_group(v.witness) == k3


def orbit_extension_values():
    k = named((4, 2), KLEIN)
    assert orbit_extension(k) == k
    assert orbit_extension(alternating_left((3, 2))) == left_group((3, 2))
    assert orbit_extension(alternating_left((3, 3))) == alternating_left((3, 3))
    w = big_W(right_group((2, 2)))
    assert w == full_group((2, 2)) and not is_regular(w)


def intersection_identity():
    checked = 0
    for pair in [(2, 2), (3, 2)]:
        for u in subgroups(pair):
            if not is_regular(u) or count_symmetric(u) > 2**16:
                continue
            member = np.ones(u.ambient.order, dtype=bool)
            for key in symmetry_groups_of_tables(enumerate_symmetric(u), pair):
                row = np.zeros(u.ambient.order, dtype=bool)
                row[np.frombuffer(key, dtype=np.int64)] = True
                member &= row
            assert np.flatnonzero(member).tolist() == orbit_extension(u).elements.tolist(), u
            checked += 1
    assert checked > 0


def builtin_groups():
    for pair in [(3, 2), (3, 3)]:
        h, _ = pair
        for i in range(1, h + 1):
            d = builtin_dictatorship(pair, i)
            v = complete_intransitive(pair, [[i], [j for j in range(1, h + 1) if j != i]])
            assert anonymity_group(d) == v
            assert neutrality_group(d) == right_group(pair)
            assert symmetry_group(d) == join(v, right_group(pair))
    m4 = builtin_majority((4, 2))
    assert anonymity_group(m4) == left_group((4, 2)) == symmetry_group(m4)
    assert len(neutrality_group(m4)) == 1
    assert symmetry_group(builtin_majority((3, 2))) == full_group((3, 2))


def neutrality_completeness():
    subs = subgroups_of(right_group((3, 3)))
    assert len(subs) == 6
    for u in subs:
        v = is_neutrality_group(u)
        assert v.decision and neutrality_group(v.witness) == u


def boolean_oracle():
    for h in (3, 4):
        t = time.perf_counter()
        assert all_invariance_groups(h) == representable_subgroups(h)
        assert time.perf_counter() - t < 60


def conjugation_law():
    pair = (3, 2)
    rng = np.random.default_rng(0)
    tables = random_tables(pair, 100, seed=0)
    codes = rng.integers(0, full_group(pair).ambient.order, 100)
    for t, g in zip(tables, codes):
        f = Spf(pair, t)
        fg = conjugate_spf(f, int(g))
        assert symmetry_group(fg) == conjugate_group(symmetry_group(f), int(g))
        assert anonymity_group(fg) == conjugate_group(anonymity_group(f), int(g))


def trivial_witnesses():
    for pair in [(3, 3), (4, 2)]:
        assert len(anonymity_group(trivial_group_witness(pair))) == 1


CRITERIA = [
    (1, "Klein orbits at (4,2)", klein_orbits),
    (2, "regularity criterion = definition; G regular iff gcd(h,n!)=1", regularity_equivalence),
    (3, "counting law |F^U| = n!^R at (3,2)", counting_law),
    (4, "{id}xS_2 at (3,2) and (2,2) decisions and breakdown", section9_reproduction),
    (5, "Klein group anonymity/symmetry at (4,2) and (4,3)", klein_classification),
    (6, "orbit extension values and W at (2,2)", orbit_extension_values),
    (7, "intersection of G(F) over F^U equals O(U)", intersection_identity),
    (8, "dictatorship and majority groups", builtin_groups),
    (9, "every {id}xW at (3,3) is a neutrality group", neutrality_completeness),
    (10, "2-representability matches exhaustive Boolean scan", boolean_oracle),
    (11, "conjugation law on 100 seeded samples", conjugation_law),
    (12, "trivial-group witnesses at (3,3) and (4,2)", trivial_witnesses),
]


def run_criterion(number, title, fn) -> tuple[bool, str]:
    t = time.perf_counter()
    try:
        with configured(verify=True):
            fn()
        ok, note = True, ""
    except AssertionError as exc:
        ok, note = False, f"  ({exc})" if str(exc) else ""
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  [{time.perf_counter() - t:.2f}s]{note}"
    return ok, line


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ok, line = run_criterion(number, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
