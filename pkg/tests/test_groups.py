from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from conftest import KLEIN, X32, Y32, Z32, element_codes, named, subgroups
from spfsym.config import BoundExceeded, configured
from spfsym.groups import (
    GElement,
    alternating_left,
    ambient,
    closure,
    complete_intransitive,
    conjugate_group,
    contains,
    diagonal,
    full_group,
    is_direct_product,
    join,
    klein_left,
    left_from_perms,
    minimal_overgroups,
    parse_group,
    project1,
    project2,
    right_group,
    trivial,
    v_times_w,
)
from spfsym.perm import Permutation, parse_cycles


def test_closure_examples():
    assert len(closure((3, 2), [])) == 1
    g = GElement(parse_cycles("(1 2)", 3), parse_cycles("(1 2)", 2))
    assert len(closure((3, 2), [g])) == 2
    k = named((4, 2), KLEIN)
    assert len(k) == 4 and k == klein_left(2)
    assert {str(x.phi) for x in k} == {"id", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"}


def test_join_examples():
    pair = (3, 3)
    u = named(pair, "((1 2 3)|id)")
    v = named(pair, "(id|(1 2 3))")
    assert join(u, u) == u
    assert len(join(u, v)) == 9
    assert join(named((3, 2), X32), named((3, 2), Y32)) == full_group((3, 2))


def test_conjugate_group_examples():
    k = klein_left(2)
    assert conjugate_group(k, 0) == k
    g = GElement(parse_cycles("(1 2)", 4), Permutation.identity(2))
    assert conjugate_group(k, g) == k


def test_direct_product():
    pair = (3, 2)
    assert is_direct_product(named(pair, X32))
    assert not is_direct_product(named(pair, "((1 2)|(1 2))"))
    assert not is_direct_product(diagonal((3, 2)))


def test_minimal_overgroups():
    pair = (3, 2)
    assert minimal_overgroups(full_group(pair)) == []
    u = named(pair, "((1 2)|(1 2))")
    v = named(pair, "((1 2)|id);(id|(1 2))")
    assert v in minimal_overgroups(u)
    # the exhaustive scan also finds A_3 x S_2 (index 3 over {id} x S_2)
    mins = set(minimal_overgroups(right_group(pair)))
    xyz = {named(pair, t) for t in (X32, Y32, Z32)}
    assert xyz < mins
    assert mins - xyz == {named(pair, "((1 2 3)|id);(id|(1 2))")}


def test_minimal_overgroups_against_lattice():
    pair = (3, 2)
    subs = subgroups(pair)
    for u in subs:
        above = [v for v in subs if u < v]
        expected = {v for v in above if not any(u < w < v for w in above)}
        assert set(minimal_overgroups(u)) == expected


@pytest.mark.parametrize("pair,count", [((2, 2), 5), ((3, 2), 16), ((2, 3), 16), ((4, 2), 98), ((3, 3), 60)])
def test_subgroup_counts(pair, count):
    subs = subgroups(pair)
    assert len(subs) == count
    assert trivial(pair) in subs and full_group(pair) in subs


def test_named_constructors():
    for h in (2, 3, 4):
        assert len(diagonal((h, h))) == math.factorial(h)
    assert len(complete_intransitive((4, 2), [[1, 2], [3, 4]])) == 4
    assert len(alternating_left((4, 2))) == 12
    with pytest.raises(ValueError):
        complete_intransitive((4, 2), [[1, 2], [2, 3, 4]])


def test_parse_errors_and_bounds():
    with pytest.raises(ValueError):
        parse_group((3, 2), "((1 2)|id")
    with pytest.raises(ValueError):
        parse_group((3, 2), "((1 4)|id)")
    with configured(max_group_order=100), pytest.raises(BoundExceeded):
        ambient((5, 2))


@pytest.mark.parametrize("pair", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_lagrange_and_projection_bound(pair):
    amb = ambient(pair)
    for u in subgroups(pair):
        assert amb.order % len(u) == 0
        if pair in ((2, 2), (3, 2)):
            box = v_times_w(pair, project1(u), project2(u))
            assert u <= box


@given(st.data())
def test_join_and_contains(data):
    subs = subgroups((3, 2))
    u = data.draw(st.sampled_from(subs))
    v = data.draw(st.sampled_from(subs))
    j = join(u, v)
    assert u <= j and v <= j
    assert contains(j, u) and contains(j, v)
    assert (u <= v) == set(u.elements.tolist()).issubset(v.elements.tolist())


@given(st.data())
def test_conjugation_is_an_action(data):
    pair = (3, 3)
    u = data.draw(st.sampled_from(subgroups(pair)))
    g = data.draw(element_codes(pair))
    ug = conjugate_group(u, g)
    assert len(ug) == len(u)
    assert conjugate_group(ug, int(ambient(pair).inv[g])) == u


def test_left_from_perms_is_left():
    u = left_from_perms((4, 2), [parse_cycles("(1 2 3 4)", 4)])
    assert len(u) == 4 and all(x.psi.is_identity() for x in u)
