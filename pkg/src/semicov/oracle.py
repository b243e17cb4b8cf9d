"""Brute-force reference implementations.

Everything here works straight from the definitions (dynamic programming,
subset enumeration, plain intersection) and only shares the
:class:`NumericalSemigroup` value type with the rest of the package. These
are correctness anchors for the tests and for ``semicov oracle verify``;
inputs are capped so that they finish in seconds.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import BoundExceeded, EvenFrobenius, NotAMember
from .semigroup import NumericalSemigroup

MAX_GENUS = 16
MAX_COE_FROBENIUS = 17
MAX_RANK_GROUND = 22


def brute_membership(gens: Iterable[int], n: int) -> bool:
    """Is ``n`` a nonnegative combination of ``gens``? Table fill up to ``n``."""
    if n < 0:
        return False
    gens = [g for g in set(gens) if g > 0]
    reach = [False] * (n + 1)
    reach[0] = True
    for k in range(1, n + 1):
        reach[k] = any(g <= k and reach[k - g] for g in gens)
    return reach[n]


def _closed(members: set[int], top: int) -> bool:
    # members: elements of [0, top]; everything above top is a member
    for a in members:
        for b in members:
            if a + b <= top and a + b not in members:
                return False
    return True


def brute_oversemigroups(delta: NumericalSemigroup, max_genus: int = MAX_GENUS) -> set[NumericalSemigroup]:
    """All semigroups containing ``delta``: additively closed unions of ``delta`` with a gap subset."""
    gaps = list(delta.gaps)
    if len(gaps) > max_genus:
        raise BoundExceeded(f"genus {len(gaps)} exceeds the oracle bound {max_genus}")
    top = delta.frobenius
    base = {k for k in range(top + 1) if k in delta}
    out = set()
    for r in range(len(gaps) + 1):
        for extra in itertools.combinations(gaps, r):
            members = base | set(extra)
            if _closed(members, top):
                out.add(NumericalSemigroup.from_gaps(set(gaps) - set(extra)))
    return out


def brute_semigroups(max_genus: int) -> list[NumericalSemigroup]:
    """Every numerical semigroup of genus at most ``max_genus``.

    Such a semigroup has Frobenius number below ``2g``, so it contains
    ``{0, 2g, →}``; filter that semigroup's oversemigroups by genus.
    """
    if max_genus == 0:
        return [NumericalSemigroup.from_gaps([])]
    top = NumericalSemigroup.from_gaps(range(1, 2 * max_genus))
    found = [s for s in brute_oversemigroups(top, 2 * max_genus - 1) if s.genus <= max_genus]
    return sorted(found, key=NumericalSemigroup.sort_key)


def is_coe_by_definition(s: NumericalSemigroup) -> bool:
    """Every odd member ``x`` has ``x-1`` and ``x+1`` in ``s`` (full table scan)."""
    return all(
        x - 1 in s and x + 1 in s
        for x in range(1, s.frobenius + 3, 2)
        if x in s
    )


def brute_coe(frobenius: int) -> set[NumericalSemigroup]:
    if frobenius <= 0 or frobenius % 2 == 0:
        raise EvenFrobenius(f"no coe-semigroup has Frobenius number {frobenius}")
    if frobenius > MAX_COE_FROBENIUS:
        raise BoundExceeded(f"F={frobenius} exceeds the oracle bound {MAX_COE_FROBENIUS}")
    floor = NumericalSemigroup.from_gaps(range(1, frobenius + 1))
    return {
        s
        for s in brute_oversemigroups(floor, MAX_COE_FROBENIUS)
        if s.frobenius == frobenius and is_coe_by_definition(s)
    }


def _family_minimum(members: Sequence[NumericalSemigroup]) -> NumericalSemigroup:
    low = max(members, key=lambda s: s.genus)
    if not all(all(k in t for k in low.small_members) for t in members):
        raise ValueError("members have no common minimum")
    return low


def brute_closure(members: Sequence[NumericalSemigroup], xs: Iterable[int]) -> NumericalSemigroup | None:
    """Intersection of all members containing ``xs``; ``None`` if there is none."""
    xs = list(xs)
    containing = [s for s in members if all(x in s for x in xs)]
    if not containing:
        return None
    top = max(s.frobenius for s in containing) + 1
    gaps = [k for k in range(top + 1) if not all(k in s for s in containing)]
    return NumericalSemigroup.from_gaps(gaps)


def _ground(members: Sequence[NumericalSemigroup], s: NumericalSemigroup) -> tuple[NumericalSemigroup, list[int]]:
    if s not in members:
        raise NotAMember(f"{s} is not among the members")
    low = _family_minimum(members)
    ground = [k for k in range(1, low.frobenius + 1) if k in s and k not in low]
    if len(ground) > MAX_RANK_GROUND:
        raise BoundExceeded(f"{len(ground)} candidate elements exceed the oracle bound {MAX_RANK_GROUND}")
    return low, ground


def brute_rank(members: Sequence[NumericalSemigroup], s: NumericalSemigroup) -> int:
    _, ground = _ground(members, s)
    for r in range(len(ground) + 1):
        for xs in itertools.combinations(ground, r):
            if brute_closure(members, xs) == s:
                return r
    raise AssertionError(f"{s} is not the closure of any subset")


def brute_minimal_fsets(members: Sequence[NumericalSemigroup], s: NumericalSemigroup) -> set[frozenset[int]]:
    """All inclusion-minimal sets whose closure is ``s``."""
    _, ground = _ground(members, s)
    found: list[frozenset[int]] = []
    for r in range(len(ground) + 1):
        for xs in itertools.combinations(ground, r):
            cand = frozenset(xs)
            if any(f <= cand for f in found):
                continue
            if brute_closure(members, xs) == s:
                found.append(cand)
    return set(found)
