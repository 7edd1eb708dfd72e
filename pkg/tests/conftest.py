from __future__ import annotations

import functools

import numpy as np
import pytest
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from spfsym.config import configured
from spfsym.groups import GElement, all_subgroups, ambient, parse_group
from spfsym.perm import Permutation, all_permutations

hsettings.register_profile("default", max_examples=60, deadline=None)
hsettings.load_profile("default")


@pytest.fixture(autouse=True)
def _verify_mode():
    """Well-definedness and criterion-vs-definition checks stay on under test."""
    with configured(verify=True):
        yield


@st.composite
def permutations(draw, min_degree: int = 1, max_degree: int = 6, degree: int | None = None):
    k = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    images = draw(st.permutations(range(1, k + 1)))
    return Permutation(tuple(images))


@st.composite
def elements(draw, pair):
    h, n = pair
    return GElement(draw(permutations(degree=h)), draw(permutations(degree=n)))


def element_codes(pair):
    return st.integers(0, ambient(pair).order - 1)


@functools.lru_cache(maxsize=None)
def subgroups(pair):
    return tuple(all_subgroups(pair))


def named(pair, text):
    return parse_group(pair, text)


# (3,2): the three overgroups of {id} x S_2 used throughout
X32 = "((1 2)|id);(id|(1 2))"
Y32 = "((2 3)|id);(id|(1 2))"
Z32 = "((1 3)|id);(id|(1 2))"
KLEIN = "((1 2)(3 4)|id);((1 3)(2 4)|id)"


def random_tables(pair, count, seed=0):
    from spfsym.profiles import space

    sp = space(pair)
    return np.random.default_rng(seed).integers(0, sp.nf, size=(count, sp.size))


def perm_list(k):
    return all_permutations(k)
