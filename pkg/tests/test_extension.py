from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import KLEIN, element_codes, named, subgroups
from spfsym.groups import alternating_left, conjugate_group, full_group, is_left, join, left_group, right_group, subgroups_of
from spfsym.extension import (
    big_W,
    is_O_fixed,
    leq_P,
    orbit_equivalent,
    orbit_extension,
    regular_orbit_overgroups,
)
from spfsym.regularity import is_regular
from spfsym.spf import enumerate_symmetric, count_symmetric, symmetry_groups_of_tables


def test_leq_P_examples():
    assert orbit_equivalent(alternating_left((3, 2)), left_group((3, 2)))
    assert not leq_P(left_group((3, 3)), alternating_left((3, 3)))
    assert leq_P(alternating_left((3, 3)), left_group((3, 3)))


def test_big_W_examples():
    w = big_W(right_group((2, 2)))
    assert w == full_group((2, 2)) and not is_regular(w)
    assert big_W(alternating_left((3, 2))) == left_group((3, 2))


def test_orbit_extension_examples():
    k = named((4, 2), KLEIN)
    assert orbit_extension(k) == k and is_O_fixed(k)
    assert orbit_extension(alternating_left((3, 2))) == left_group((3, 2))
    assert not is_O_fixed(alternating_left((3, 2)))
    assert orbit_extension(alternating_left((3, 3))) == alternating_left((3, 3))
    assert orbit_extension(right_group((3, 2))) == right_group((3, 2))


def test_non_regular_rejected():
    with pytest.raises(ValueError):
        orbit_extension(full_group((2, 2)))


@pytest.mark.parametrize("pair", [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)])
def test_sandwich_and_equivalences(pair):
    for u in subgroups(pair):
        w = big_W(u)
        assert u <= w
        if not is_regular(u):
            continue
        o = orbit_extension(u)
        assert u <= o <= w
        assert is_regular(o)
        assert orbit_equivalent(u, o)
        assert is_regular(w) == (w == o)
        if is_left(u):
            assert w == o and is_left(o)


@pytest.mark.parametrize("pair", [(2, 2), (3, 2), (3, 3)])
def test_generator_description_matches_definition(pair):
    subs = subgroups(pair)
    for u in subs:
        if not is_regular(u):
            continue
        family = regular_orbit_overgroups(u, list(subs))
        expected = u
        for v in family:
            expected = join(expected, v)
        assert orbit_extension(u) == expected


@pytest.mark.parametrize("pair", [(2, 2), (3, 2)])
def test_intersection_of_symmetry_groups(pair):
    for u in subgroups(pair):
        if not is_regular(u) or count_symmetric(u) > 2**16:
            continue
        keys = symmetry_groups_of_tables(enumerate_symmetric(u), pair)
        member = np.ones(u.ambient.order, dtype=bool)
        for key in keys:
            row = np.zeros(u.ambient.order, dtype=bool)
            row[np.frombuffer(key, dtype=np.int64)] = True
            member &= row
        assert np.flatnonzero(member).tolist() == orbit_extension(u).elements.tolist()
        # F^U = F^O(U)
        assert count_symmetric(orbit_extension(u)) == count_symmetric(u)


@given(st.data())
def test_extension_commutes_with_conjugation(data):
    pair = (3, 3)
    u = data.draw(st.sampled_from([s for s in subgroups(pair) if is_regular(s)]))
    g = data.draw(element_codes(pair))
    assert orbit_extension(conjugate_group(u, g)) == conjugate_group(orbit_extension(u), g)


@pytest.mark.parametrize("pair", [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3), (5, 2)])
def test_alternative_only_groups_are_fixed(pair):
    for u in subgroups_of(right_group(pair)):
        assert is_O_fixed(u)
