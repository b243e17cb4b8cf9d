"""The family of all numerical semigroups containing a fixed semigroup Δ."""

from __future__ import annotations

from typing import Iterable

from .engine import Family, FamilyTree, enumerate_family
from .errors import NotAMember, NotThetaSet
from .semigroup import AperySet, NumericalSemigroup, ones, semigroup_sum


def min_outside(s: NumericalSemigroup, delta: NumericalSemigroup) -> int:
    """``min(S \\ Δ)`` for ``Δ ⊊ S``."""
    diff = s.extended_bits(delta.frobenius + 1) & ~delta.bits & ones(0, delta.frobenius)
    if not diff:
        raise ValueError(f"{s} adds nothing to {delta}")
    return (diff & -diff).bit_length() - 1


class ThetaFamily(Family):
    """Oversemigroups of ``delta``.

    The parent of a member is obtained by dropping its least element outside
    ``delta``, so ``S ∪ {x}`` is a child of ``S`` exactly when ``x`` is a
    special gap below every element of ``S \\ delta``.
    """

    def is_member(self, s: NumericalSemigroup) -> bool:
        return self.minimum.issubset(s)

    def children_candidates(self, s: NumericalSemigroup, apery: AperySet) -> list[int]:
        gaps = apery.special_gaps()
        if s == self.minimum:
            return gaps
        bound = min_outside(s, self.minimum)
        return [x for x in gaps if x < bound]

    def accepts_child(self, parent, x, child, child_apery) -> bool:
        return True


def theta_family(delta: NumericalSemigroup) -> ThetaFamily:
    return ThetaFamily(delta)


def enumerate_theta(delta: NumericalSemigroup, limit: int | None = None) -> FamilyTree:
    return enumerate_family(ThetaFamily(delta), limit)


def theta_mu(delta: NumericalSemigroup, s: NumericalSemigroup) -> int:
    return min_outside(s, delta)


def theta_closure(delta: NumericalSemigroup, xs: Iterable[int]) -> NumericalSemigroup:
    """Least oversemigroup of ``delta`` containing ``xs``: ``Δ + <X>``."""
    xs = sorted(set(xs))
    bad = [x for x in xs if x < 0 or x in delta]
    if bad:
        raise NotThetaSet(f"{bad} not gaps of {delta}")
    return semigroup_sum(delta, xs)


def theta_msg(delta: NumericalSemigroup, s: NumericalSemigroup) -> list[int]:
    if not delta.issubset(s):
        raise NotAMember(f"{s} does not contain {delta}")
    return [x for x in s.msg if x not in delta]


def theta_rank1(delta: NumericalSemigroup) -> list[tuple[int, NumericalSemigroup]]:
    """One rank-one member per gap ``x`` of ``delta``, namely ``Δ + <x>``."""
    return [(x, theta_closure(delta, [x])) for x in delta.gaps]
