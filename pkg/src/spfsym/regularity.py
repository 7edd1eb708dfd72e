"""Regular subgroups: no profile is fixed by an element that moves the alternatives.

Two independent routes decide regularity.  The cycle-type criterion only looks at
group elements: U is regular iff for every (phi, psi) in U with psi != id and every
prime r dividing |psi|, the r-part of |psi| does not divide gcd of phi's cycle type.
The definition route enumerates profiles and is kept as the oracle.
"""

from __future__ import annotations

import numpy as np

from .config import VerificationError, settings
from .groups import PGroup, minimal_overgroups
from .perm import prime_factors, r_part
from .profiles import space


def _psi_prime_parts(order: int) -> list[int]:
    return [r_part(order, r) for r in prime_factors(order)]


def violating_elements(u: PGroup) -> list[int]:
    """Codes of elements (phi, psi), psi != id, breaking the cycle-type criterion."""
    amb = u.ambient
    bad = []
    parts_cache: dict[int, list[int]] = {}
    for c in u.elements:
        a, b = divmod(int(c), amb.nf)
        if b == 0:
            continue
        o = int(amb.sym_n.orders[b])
        parts = parts_cache.get(o)
        if parts is None:
            parts = parts_cache[o] = _psi_prime_parts(o)
        g = int(amb.sym_h.type_gcd[a])
        if any(g % ra == 0 for ra in parts):
            bad.append(int(c))
    return bad


def is_regular_by_criterion(u: PGroup) -> bool:
    amb = u.ambient
    for c in u.elements:
        a, b = divmod(int(c), amb.nf)
        if b == 0:
            continue
        g = int(amb.sym_h.type_gcd[a])
        if g == 1:
            continue
        if any(g % ra == 0 for ra in _psi_prime_parts(int(amb.sym_n.orders[b]))):
            return False
    return True


def is_regular_by_definition(u: PGroup) -> bool:
    """Every profile stabilizer in U lies in S_h x {id}."""
    sp = space(u.pair)
    ids = np.arange(sp.size)
    for c in u.elements:
        if int(c) % sp.nf == 0:
            continue
        if (sp.action(int(c)) == ids).any():
            return False
    return True


def is_regular(u: PGroup) -> bool:
    verdict = is_regular_by_criterion(u)
    if settings.verify:
        oracle = is_regular_by_definition(u)
        if oracle != verdict:
            raise VerificationError(
                f"regularity mismatch for {u!r}: criterion={verdict}, definition={oracle}"
            )
    return verdict


def regular_minimal_overgroups(u: PGroup) -> list[PGroup]:
    return [v for v in minimal_overgroups(u) if is_regular(v)]


def is_regular_maximal(u: PGroup) -> bool:
    """Regular with no regular proper overgroup.

    Regular subgroups are closed under taking subgroups, so a regular proper
    overgroup exists iff some minimal overgroup is regular.
    """
    return is_regular(u) and not regular_minimal_overgroups(u)
