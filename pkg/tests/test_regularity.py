from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from conftest import element_codes, named, subgroups
from spfsym.groups import (
    alternating_left,
    conjugate_group,
    diagonal,
    full_group,
    left_group,
    right_group,
    subgroups_of,
    trivial,
    v_times_w,
)
from spfsym.perm import parse_cycles, parse_perm_list
from spfsym.regularity import (
    is_regular,
    is_regular_by_criterion,
    is_regular_by_definition,
    is_regular_maximal,
    violating_elements,
)

PAIRS = [(2, 2), (3, 2), (2, 3), (4, 2), (3, 3)]


def test_definition_examples():
    for u in subgroups_of(left_group((3, 3))):
        assert is_regular_by_definition(u)
    assert not is_regular_by_definition(full_group((3, 3)))
    assert is_regular_by_definition(trivial((3, 3)))


def test_criterion_examples():
    a4s2 = v_times_w((4, 2), parse_perm_list("(1 2 3);(2 3 4)", 4), [parse_cycles("(1 2)", 2)])
    assert len(a4s2) == 24 and not is_regular_by_criterion(a4s2)
    assert any(str(a4s2.ambient.element(c)) == "((1 2)(3 4)|(1 2))" for c in violating_elements(a4s2))
    assert not is_regular_by_criterion(named((3, 3), "((1 2 3)|id);(id|(1 2 3))"))
    fixing = v_times_w((4, 3), parse_perm_list("(1 2 3)", 4), parse_perm_list("(1 2);(2 3)", 3))
    assert is_regular_by_criterion(fixing)


def test_is_regular_examples():
    assert is_regular(full_group((5, 3)))
    for h in (2, 3):
        assert not is_regular(diagonal((h, h)))
    assert is_regular(diagonal((3, 2)))


def test_regular_maximal_examples():
    assert is_regular_maximal(right_group((2, 2)))
    assert is_regular_maximal(left_group((4, 2)))
    assert not is_regular_maximal(trivial((5, 3)))


@pytest.mark.parametrize("pair", PAIRS)
def test_criterion_matches_definition(pair):
    mismatches = [u for u in subgroups(pair) if is_regular_by_criterion(u) != is_regular_by_definition(u)]
    assert mismatches == []


def test_full_group_regular_iff_coprime():
    for h in range(2, 6):
        for n in range(2, 6):
            if math.factorial(h) * math.factorial(n) > 10_080:
                continue
            g = full_group((h, n))
            expected = math.gcd(h, math.factorial(n)) == 1
            assert is_regular_by_criterion(g) == expected, (h, n)
            if math.factorial(n) ** h <= 2**16:
                assert is_regular_by_definition(g) == expected, (h, n)


def test_alternating_left_is_regular():
    assert is_regular(alternating_left((4, 3)))


@given(st.data())
def test_subgroup_closed(data):
    pair = (3, 3)
    u = data.draw(st.sampled_from([s for s in subgroups(pair) if is_regular(s)]))
    for w in subgroups(pair):
        if w <= u:
            assert is_regular(w)


@given(st.data())
def test_conjugacy_closed(data):
    pair = data.draw(st.sampled_from([(3, 3), (4, 2)]))
    u = data.draw(st.sampled_from(subgroups(pair)))
    g = data.draw(element_codes(pair))
    assert is_regular(conjugate_group(u, g)) == is_regular(u)


@pytest.mark.parametrize("pair", [(2, 2), (3, 2)])
def test_regular_maximal_conjugacy_closed(pair):
    for u in subgroups(pair):
        if is_regular_maximal(u):
            for g in range(u.ambient.order):
                assert is_regular_maximal(conjugate_group(u, g))
