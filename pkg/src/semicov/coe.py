"""Coe-semigroups: every odd member x comes with x-1 and x+1.

``C(F)`` is the family of coe-semigroups with Frobenius number ``F``; it is
nonempty only for odd ``F`` and its minimum is ``{0, F+1, →}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .engine import Family, FamilyTree, enumerate_family, mu
from .errors import ContainsZero, EvenFrobenius, NotAMember, NotAnFSet, OutOfRange
from .semigroup import AperySet, NumericalSemigroup, monoid_contains, ordinary, submonoid_bits


def is_coe(s: NumericalSemigroup) -> bool:
    """Check the coating condition on the odd minimal generators only."""
    return all(x - 1 in s and x + 1 in s for x in s.msg if x % 2)


def small_generators(apery: AperySet, frobenius: int) -> list[int]:
    """Minimal generators below ``F`` read off ``Ap(S, F+1)``."""
    ws = [w for w in apery.elements() if w != 0]
    wset = set(ws)
    return [
        w for w in ws
        if w < frobenius and not any(w - v in wset for v in ws if v != w)
    ]


@dataclass(frozen=True)
class CoatSet:
    base: tuple[int, ...]
    coated: tuple[int, ...]


def coat(xs: Iterable[int]) -> CoatSet:
    base = sorted(set(xs))
    if 0 in base:
        raise ContainsZero("0 cannot be coated")
    if base and base[0] < 0:
        raise OutOfRange("coated sets hold positive integers")
    coated = set(base)
    for x in base:
        if x % 2:
            coated.update((x - 1, x + 1))
    return CoatSet(tuple(base), tuple(sorted(coated)))


def _check_frobenius(frobenius: int) -> None:
    if frobenius <= 0 or frobenius % 2 == 0:
        raise EvenFrobenius(f"C({frobenius}) is empty: the Frobenius number must be a positive odd integer")


class CoeFamily(Family):
    def __init__(self, frobenius: int) -> None:
        _check_frobenius(frobenius)
        self.frobenius = frobenius
        super().__init__(ordinary(frobenius))

    @property
    def apery_modulus(self) -> int:
        return self.frobenius + 1

    def is_member(self, s: NumericalSemigroup) -> bool:
        return s.frobenius == self.frobenius and is_coe(s)

    def accepts_child(self, parent, x, child, child_apery) -> bool:
        if x == self.frobenius:
            return False
        for g in small_generators(child_apery, self.frobenius):
            if g % 2 and not (child_apery.semigroup_contains(g - 1) and child_apery.semigroup_contains(g + 1)):
                return False
        return mu(self, child) == x


def coe_family(frobenius: int) -> CoeFamily:
    return CoeFamily(frobenius)


def enumerate_coe(frobenius: int, limit: int | None = None) -> FamilyTree:
    return enumerate_family(CoeFamily(frobenius), limit)


def removable_generator(s: NumericalSemigroup) -> int:
    """A minimal generator whose removal keeps ``s`` inside its ``C(F)``.

    An odd generator below ``F`` when one exists, the multiplicity otherwise.
    """
    small = [x for x in s.msg if x < s.frobenius]
    if not small:
        raise NotAMember(f"{s} is the minimum of its family")
    odd = [x for x in small if x % 2]
    return odd[0] if odd else s.multiplicity


def _check_subset(frobenius: int, xs: Iterable[int]) -> list[int]:
    xs = sorted(set(xs))
    if any(x <= 0 or x >= frobenius for x in xs):
        raise OutOfRange(f"{xs} is not contained in [1, {frobenius - 1}]")
    return xs


def coe_is_fset(frobenius: int, xs: Iterable[int]) -> bool:
    _check_frobenius(frobenius)
    xs = _check_subset(frobenius, xs)
    return not monoid_contains(coat(xs).coated, frobenius)


def coe_closure(frobenius: int, xs: Iterable[int]) -> NumericalSemigroup:
    """``<C(X)> ∪ {F+1, →}``."""
    if not coe_is_fset(frobenius, xs):
        raise NotAnFSet(f"{sorted(set(xs))} generates {frobenius} once coated")
    bits = submonoid_bits(coat(xs).coated, frobenius) | (1 << (frobenius + 1))
    return NumericalSemigroup._make(frobenius, bits)


def coe_msg(frobenius: int, s: NumericalSemigroup) -> list[int]:
    _check_frobenius(frobenius)
    if s.frobenius != frobenius or not is_coe(s):
        raise NotAMember(f"{s} is not in C({frobenius})")
    gens = set(s.msg)
    return [
        x for x in s.msg
        if x < frobenius and (x % 2 or not {x - 1, x + 1} & gens)
    ]


def floor_mod_test(x: int, frobenius: int) -> bool:
    """Whether ``F`` is outside ``<x-1, x, x+1>``, via a floor/remainder inequality."""
    if x % 2 == 0 or frobenius % 2 == 0 or not 3 <= x <= frobenius - 2:
        raise OutOfRange(f"need odd x in [3, F-2] and odd F, got x={x}, F={frobenius}")
    return 2 * (frobenius // (x - 1)) < frobenius % (x - 1)


def coe_rank1(frobenius: int) -> list[NumericalSemigroup]:
    _check_frobenius(frobenius)
    tail = 1 << (frobenius + 1)
    found = set()
    for x in range(2, frobenius, 2):
        found.add(NumericalSemigroup._make(frobenius, submonoid_bits([x], frobenius) | tail))
    for x in range(3, frobenius - 1, 2):
        if floor_mod_test(x, frobenius):
            bits = submonoid_bits([x - 1, x, x + 1], frobenius) | tail
            found.add(NumericalSemigroup._make(frobenius, bits))
    return sorted(found, key=NumericalSemigroup.sort_key)
