"""Orbit containment between subgroups, W(U), and the orbit extension O(U).

O(U) is generated by the regular overgroups V of U whose orbits all lie inside
U-orbits.  Instead of enumerating those V, note that g belongs to one of them iff
<U, g> itself qualifies, and <U, g> has its orbits inside U-orbits iff
<U, g> <= W(U).  As W(U) is a subgroup containing U, the second condition holds for
every g in W(U), so

    O(U) = < g in W(U) : <U, g> is regular >.
"""

from __future__ import annotations

import numpy as np

from .config import VerificationError
from .groups import PGroup, join_element, from_elements, closure
from .profiles import all_orbits, space
from .regularity import is_regular


def leq_P(u: PGroup, v: PGroup) -> bool:
    """Every U-orbit lies inside a V-orbit."""
    if u.pair != v.pair:
        raise ValueError(f"pair mismatch: {u.pair} vs {v.pair}")
    pu = all_orbits(u)
    pv = all_orbits(v)
    return bool((pv.orbit_of == pv.orbit_of[pu.reps[pu.orbit_of]]).all())


def orbit_equivalent(u: PGroup, v: PGroup) -> bool:
    return leq_P(u, v) and leq_P(v, u)


def big_W(u: PGroup) -> PGroup:
    """All g in G keeping every profile inside its own U-orbit."""
    sp = space(u.pair)
    orbit_of = all_orbits(u).orbit_of
    keep = [c for c in range(sp.ambient.order) if np.array_equal(orbit_of[sp.action(c)], orbit_of)]
    w = from_elements(u.pair, keep)
    # W(U) is closed under products; a failure here means the orbit data is wrong
    if closure(u.pair, w.canonical_generators) != w:
        raise VerificationError("W(U) failed the closure check")
    return w


def extension_generators(u: PGroup, w: PGroup | None = None) -> list[int]:
    """Codes g in W(U) with <U, g> regular, one per double coset UgU."""
    if w is None:
        w = big_W(u)
    amb = u.ambient
    done = u.mask.copy()
    gens = []
    for c in w.elements:
        if done[c]:
            continue
        done[amb.mul(amb.mul(u.elements[:, None], int(c)), u.elements[None, :]).ravel()] = True
        if is_regular(join_element(u, int(c))):
            gens.append(int(c))
    return gens


def orbit_extension(u: PGroup) -> PGroup:
    if not is_regular(u):
        raise ValueError(f"orbit extension is defined for regular groups only; {u!r} is not")
    w = big_W(u)
    if is_regular(w):
        # every <U, g> inside a regular W is regular
        return w
    ext = closure(u.pair, list(u.canonical_generators) + extension_generators(u, w))
    if not is_regular(ext):
        raise VerificationError(f"orbit extension of {u!r} came out non-regular")
    return ext


def is_O_fixed(u: PGroup) -> bool:
    return orbit_extension(u) == u


def regular_orbit_overgroups(u: PGroup, subgroups: list[PGroup]) -> list[PGroup]:
    """The regular overgroups V of U with V <=_P U, drawn from an explicit subgroup list.

    This is the direct definition; :func:`orbit_extension` avoids the enumeration.
    """
    return [v for v in subgroups if u <= v and is_regular(v) and leq_P(v, u)]
