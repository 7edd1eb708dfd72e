from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from conftest import permutations
from spfsym.config import BoundExceeded, configured
from spfsym.perm import (
    Permutation,
    all_permutations,
    closure_of,
    compose,
    conjugate,
    cycle_type,
    format_cycles,
    format_order,
    inverse,
    order,
    parse_cycles,
    parse_order,
    power,
    prime_factors,
    r_part,
    rank,
    sym_tables,
    type_gcd,
    type_lcm,
    unrank,
)


def P(text, k):
    return parse_cycles(text, k)


def test_compose_examples():
    assert compose(P("(1 2)", 3), P("(1 2)", 3)).is_identity()
    assert compose(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 2 3)", 3)
    a = P("(1 3 2)", 4)
    assert a * Permutation.identity(4) == a


def test_inverse_examples():
    assert inverse(Permutation.identity(3)).is_identity()
    assert ~P("(1 2 3)", 3) == P("(1 3 2)", 3)
    assert ~P("(1 2)(3 4)", 4) == P("(1 2)(3 4)", 4)


def test_conjugate_examples():
    a = P("(1 2 3)", 4)
    assert conjugate(a, Permutation.identity(4)) == a
    assert conjugate(P("(1 2)", 3), P("(2 3)", 3)) == P("(1 3)", 3)


def test_cycle_types():
    assert cycle_type(P("(1 2)(3 4)", 4)).parts == (2, 2)
    assert cycle_type(Permutation.identity(3)).parts == (1, 1, 1)
    assert cycle_type(P("(1 2 3)", 4)).parts == (3, 1)
    assert type_gcd(cycle_type(P("(1 2)(3 4)", 4))) == 2
    assert type_lcm(cycle_type(P("(1 2 3)", 4))) == 3
    assert order(Permutation.identity(5)) == 1


def test_r_part_and_primes():
    assert r_part(12, 2) == 4
    assert r_part(12, 3) == 3
    assert r_part(5, 2) == 1
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []


def test_parse_cycles():
    assert P("(1 2)(3 4)", 4).images == (2, 1, 4, 3)
    assert P("id", 3).is_identity()
    assert P("(1 3 4)", 4).images == (3, 2, 4, 1)
    with pytest.raises(ValueError):
        P("(1 1)", 3)
    with pytest.raises(ValueError):
        P("(1 5)", 4)


def test_parse_order():
    s = parse_order("3>2>4>1", 4)
    assert s.images == (3, 2, 4, 1)
    assert s == P("(1 3 4)", 4)
    assert parse_order("1>2", 2).is_identity()
    assert parse_order("2>1", 2) == P("(1 2)", 2)
    with pytest.raises(ValueError):
        parse_order("1>1>2", 3)


def test_enumeration():
    assert all_permutations(2) == [Permutation.identity(2), P("(1 2)", 2)]
    assert len(all_permutations(3)) == 6
    for k in range(1, 6):
        assert [rank(unrank(i, k)) for i in range(math.factorial(k))] == list(range(math.factorial(k)))
    with configured(max_degree=4), pytest.raises(BoundExceeded):
        all_permutations(5)


def test_canonical_format():
    assert format_cycles(P("(3 1 2)(5 4)", 5)) == "(1 2 3)(4 5)"
    assert format_cycles(Permutation.identity(4)) == "id"


def test_sym_tables_match_objects():
    t = sym_tables(4)
    for a in range(0, 24, 5):
        for b in range(0, 24, 7):
            assert t[int(t.mult[a, b])] == t[a] * t[b]
        assert t[int(t.inv[a])] == ~t[a]


def test_closure_of():
    assert len(closure_of([P("(1 2)", 4), P("(1 2 3 4)", 4)], 4)) == 24
    assert len(closure_of([], 3)) == 1


@given(st.data())
def test_group_axioms(data):
    k = data.draw(st.integers(1, 6))
    a, b, c = (data.draw(permutations(degree=k)) for _ in range(3))
    e = Permutation.identity(k)
    assert (a * b) * c == a * (b * c)
    assert a * e == a == e * a
    assert (a * ~a).is_identity() and (~a * a).is_identity()


@given(st.data())
def test_cycle_type_conjugation_invariant(data):
    k = data.draw(st.integers(1, 6))
    a, b = data.draw(permutations(degree=k)), data.draw(permutations(degree=k))
    t = cycle_type(conjugate(a, b))
    assert t == cycle_type(a)
    assert sum(t.parts) == k


@given(permutations(max_degree=6))
def test_order_is_least_power(a):
    m = 1
    while not power(a, m).is_identity():
        m += 1
    assert order(a) == m


@given(permutations(max_degree=7))
def test_text_round_trips(a):
    assert parse_cycles(format_cycles(a), a.degree) == a
    assert parse_order(format_order(a), a.degree) == a
    assert unrank(rank(a), a.degree) == a
