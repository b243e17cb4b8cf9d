"""Numerical semigroups stored as a membership bitset over ``[0, F+1]``.

Bit ``k`` of the table is set iff ``k`` belongs to the semigroup; every
integer above the Frobenius number belongs implicitly, so two semigroups are
equal exactly when their Frobenius numbers and tables agree.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    GcdNotOne,
    NoGaps,
    NotAMember,
    NotMinimalGenerator,
    NotSpecialGap,
    OutOfRange,
    SemigroupError,
)


def ones(lo: int, hi: int) -> int:
    """Mask with bits ``lo..hi`` set; empty when ``hi < lo``."""
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << lo


def bit_positions(bits: int) -> list[int]:
    """Positions of the set bits of a nonnegative int, ascending."""
    out = []
    s = bin(bits)[:1:-1]
    i = s.find("1")
    while i != -1:
        out.append(i)
        i = s.find("1", i + 1)
    return out


def _comb(step: int, length: int) -> int:
    # bits at 0, step, 2*step, ... below `length`
    comb, count = 1, 1
    while count * step < length:
        comb |= comb << (count * step)
        count *= 2
    return comb & ones(0, length - 1)


def submonoid_bits(gens: Iterable[int], top: int) -> int:
    """Membership table of the submonoid ``<gens>`` restricted to ``[0, top]``.

    ``gens`` may have any gcd; zero entries are ignored.
    """
    window = ones(0, top)
    reach = 1
    for g in sorted(set(gens)):
        if g < 0:
            raise OutOfRange(f"negative generator {g}")
        if g == 0 or g > top:
            continue
        shift = g
        while shift <= top:
            reach = (reach | (reach << shift)) & window
            shift *= 2
    return reach


def monoid_contains(gens: Iterable[int], n: int) -> bool:
    """Whether ``n`` is a nonnegative integer combination of ``gens``."""
    if n < 0:
        return False
    return bool((submonoid_bits(gens, n) >> n) & 1)


@dataclass(frozen=True)
class AperySet:
    """Least members of each residue class modulo ``modulus``.

    ``witnesses[i]`` is the least member congruent to ``i``. The witnesses
    determine the semigroup completely: ``k`` is a member iff
    ``k >= witnesses[k % modulus]``.
    """

    modulus: int
    witnesses: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.modulus
        if n < 1 or len(self.witnesses) != n:
            raise SemigroupError(f"Apery set needs exactly {n} witnesses")
        if self.witnesses[0] != 0:
            raise SemigroupError("witness of residue 0 must be 0")
        for i, w in enumerate(self.witnesses):
            if w < 0 or w % n != i:
                raise SemigroupError(f"witness {w} is not congruent to {i} mod {n}")

    def __len__(self) -> int:
        return self.modulus

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.witnesses))

    def elements(self) -> list[int]:
        return sorted(self.witnesses)

    @property
    def frobenius(self) -> int:
        return max(self.witnesses) - self.modulus

    def semigroup_contains(self, k: int) -> bool:
        return k >= 0 and k >= self.witnesses[k % self.modulus]

    @cached_property
    def _bits(self) -> int:
        b = 0
        for w in self.witnesses:
            b |= 1 << w
        return b

    def pseudo_frobenius(self) -> list[int]:
        """``w - n`` for the witnesses ``w`` maximal under ``a <= b iff b - a in S``.

        For the trivial semigroup this yields ``[-1]``.
        """
        full = self._bits
        nonzero = full & ~1
        not_maximal = 0
        for a in bit_positions(nonzero):
            not_maximal |= (full >> a) & full
        maximal = full & ~not_maximal
        return [w - self.modulus for w in bit_positions(maximal)]

    def special_gaps(self) -> list[int]:
        return [x for x in self.pseudo_frobenius() if x > 0 and self.semigroup_contains(2 * x)]

    def minimal_generators(self) -> list[int]:
        nonzero = self._bits & ~1
        sums = 0
        for a in bit_positions(nonzero):
            sums |= nonzero << a
        gens = bit_positions(nonzero & ~sums)
        n = self.modulus
        # the modulus itself is never in the Apery set but may be a generator
        if n > 1 and not any(
            self.semigroup_contains(s) and self.semigroup_contains(n - s) for s in range(1, n)
        ):
            gens.append(n)
        elif n == 1:
            gens.append(1)
        return sorted(gens)

    def adjoin(self, x: int) -> AperySet:
        """Apery set of ``S ∪ {x}`` for a special gap ``x`` of ``S``."""
        n = self.modulus
        r = x % n
        if x < 0 or r == 0 or self.witnesses[r] != x + n:
            raise NotSpecialGap(f"{x} cannot be adjoined to the semigroup with Apery set {self.elements()}")
        w = list(self.witnesses)
        w[r] = x
        return AperySet(n, tuple(w))

    def to_semigroup(self) -> NumericalSemigroup:
        n = self.modulus
        f = self.frobenius
        top = f + 1
        comb = _comb(n, top + 1)
        bits = 0
        for w in self.witnesses:
            if w <= top:
                bits |= comb << w
        s = NumericalSemigroup._make(f, bits & ones(0, top))
        s._apery_cache[n] = self
        return s


@dataclass(frozen=True)
class Invariants:
    multiplicity: int
    frobenius: int
    genus: int
    embedding_dimension: int
    type: int


class NumericalSemigroup:
    """A cofinite additive submonoid of the nonnegative integers.

    Instances are immutable. Build them with :meth:`from_generators`,
    :meth:`from_gaps` or :func:`ordinary`.
    """

    def __init__(self, frobenius: int, bits: int) -> None:
        if frobenius < -1:
            raise SemigroupError("frobenius must be >= -1")
        if bits != bits & ones(0, frobenius + 1) or not bits & 1 or not (bits >> (frobenius + 1)) & 1:
            raise SemigroupError("membership table must contain 0 and F+1 and end at F+1")
        if frobenius >= 0 and (bits >> frobenius) & 1:
            raise SemigroupError("the Frobenius number cannot be a member")
        window = ones(0, frobenius)
        for a in bit_positions(bits & window & ~1):
            if (bits << a) & window & ~bits:
                raise SemigroupError("membership table is not additively closed")
        self._frobenius = frobenius
        self._bits = bits
        self._apery_cache: dict[int, AperySet] = {}

    @classmethod
    def _make(cls, frobenius: int, bits: int) -> NumericalSemigroup:
        # trusted constructor: skips the closure check
        self = cls.__new__(cls)
        self._frobenius = frobenius
        self._bits = bits
        self._apery_cache = {}
        return self

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> NumericalSemigroup:
        gens = sorted(set(gens))
        if not gens or gens[0] < 1:
            raise OutOfRange("generators must be a nonempty set of positive integers")
        if math.gcd(*gens) != 1:
            raise GcdNotOne(f"gcd{tuple(gens)} = {math.gcd(*gens)}")
        m = gens[0]
        # shortest paths over residues mod m give the Apery set of m
        dist = [0] + [-1] * (m - 1)
        heap = [(0, 0)]
        while heap:
            d, r = heapq.heappop(heap)
            if d != dist[r]:
                continue
            for g in gens[1:]:
                nd = d + g
                nr = nd % m
                if dist[nr] == -1 or nd < dist[nr]:
                    dist[nr] = nd
                    heapq.heappush(heap, (nd, nr))
        return AperySet(m, tuple(dist)).to_semigroup()

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> NumericalSemigroup:
        gaps = set(gaps)
        if any(g < 1 for g in gaps):
            raise OutOfRange("gaps must be positive integers")
        f = max(gaps, default=-1)
        bits = ones(0, f + 1)
        for g in gaps:
            bits &= ~(1 << g)
        return cls(f, bits)

    @property
    def frobenius(self) -> int:
        return self._frobenius

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def is_natural(self) -> bool:
        return self._frobenius == -1

    @property
    def small_members(self) -> tuple[int, ...]:
        return tuple(bit_positions(self._bits))

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(bit_positions(~self._bits & ones(0, self._frobenius)))

    @property
    def genus(self) -> int:
        return self._frobenius + 2 - self._bits.bit_count()

    @property
    def multiplicity(self) -> int:
        if self.is_natural:
            return 1
        rest = self._bits & ~1
        return (rest & -rest).bit_length() - 1

    @cached_property
    def msg(self) -> tuple[int, ...]:
        """Minimal generators, ascending."""
        return tuple(self.apery(self.multiplicity).minimal_generators())

    @property
    def embedding_dimension(self) -> int:
        return len(self.msg)

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int):
            return False
        if n < 0:
            return False
        if n > self._frobenius:
            return True
        return bool((self._bits >> n) & 1)

    def contains_all(self, xs: Iterable[int]) -> bool:
        return all(x in self for x in xs)

    def extended_bits(self, top: int) -> int:
        """Membership table over ``[0, top]`` for ``top >= F + 1``."""
        return self._bits | ones(self._frobenius + 1, top)

    def issubset(self, other: NumericalSemigroup) -> bool:
        if other._frobenius > self._frobenius:
            return False
        return not self._bits & ~other.extended_bits(self._frobenius + 1)

    __le__ = issubset

    def __lt__(self, other: NumericalSemigroup) -> bool:
        return self != other and self.issubset(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._frobenius == other._frobenius and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._frobenius, self._bits))

    def __repr__(self) -> str:
        return f"NumericalSemigroup(msg={list(self.msg)}, frobenius={self._frobenius})"

    def __str__(self) -> str:
        head = ",".join(map(str, self.small_members))
        return "{" + head + ",→}"

    def sort_key(self) -> tuple:
        return (-self.genus, self.small_members)

    def apery(self, n: int) -> AperySet:
        if n < 1 or n not in self:
            raise NotAMember(f"{n} is not a positive member of {self}")
        ap = self._apery_cache.get(n)
        if ap is None:
            w = []
            for i in range(n):
                k = i
                while k not in self:
                    k += n
                w.append(k)
            ap = AperySet(n, tuple(w))
            self._apery_cache[n] = ap
        return ap

    def pseudo_frobenius(self) -> list[int]:
        if self.is_natural:
            raise NoGaps("the semigroup of all nonnegative integers has no gaps")
        return self.apery(self.multiplicity).pseudo_frobenius()

    @property
    def type(self) -> int:
        if self.is_natural:
            return 1
        return len(self.pseudo_frobenius())

    def special_gaps(self) -> list[int]:
        if self.is_natural:
            raise NoGaps("the semigroup of all nonnegative integers has no gaps")
        return self.apery(self.multiplicity).special_gaps()

    def invariants(self) -> Invariants:
        return Invariants(
            self.multiplicity, self._frobenius, self.genus, self.embedding_dimension, self.type
        )

    def adjoin(self, x: int, check: bool = True) -> NumericalSemigroup:
        """``S ∪ {x}``; ``x`` must be a special gap."""
        if check and (self.is_natural or x not in self.special_gaps()):
            raise NotSpecialGap(f"{x} is not a special gap of {self}")
        bits = self._bits | (1 << x)
        f = self._frobenius
        if x == f:
            f = (~bits & ones(0, x)).bit_length() - 1
            bits &= ones(0, f + 1)
        return NumericalSemigroup._make(f, bits)

    def remove(self, x: int, check: bool = True) -> NumericalSemigroup:
        """``S \\ {x}``; ``x`` must be a minimal generator."""
        if check and x not in self.msg:
            raise NotMinimalGenerator(f"{x} is not a minimal generator of {self}")
        if x > self._frobenius:
            return NumericalSemigroup._make(x, self.extended_bits(x + 1) & ~(1 << x))
        return NumericalSemigroup._make(self._frobenius, self._bits & ~(1 << x))

    def intersect(self, other: NumericalSemigroup) -> NumericalSemigroup:
        f = max(self._frobenius, other._frobenius)
        bits = self.extended_bits(f + 1) & other.extended_bits(f + 1)
        return NumericalSemigroup._make(f, bits)

    def __and__(self, other: NumericalSemigroup) -> NumericalSemigroup:
        return self.intersect(other)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def natural() -> NumericalSemigroup:
    return NumericalSemigroup._make(-1, 1)


def ordinary(frobenius: int) -> NumericalSemigroup:
    """``{0, F+1, →}``; ``F = -1`` gives the whole of N."""
    if frobenius == 0 or frobenius < -1:
        raise OutOfRange(f"no semigroup {{0,{frobenius + 1},→}}")
    if frobenius == -1:
        return natural()
    return NumericalSemigroup._make(frobenius, 1 | (1 << (frobenius + 1)))


def intersect(s: NumericalSemigroup, t: NumericalSemigroup) -> NumericalSemigroup:
    return s.intersect(t)


def semigroup_sum(m: NumericalSemigroup, extra: Iterable[int]) -> NumericalSemigroup:
    """The monoid ``M + <A>``, i.e. ``<msg(M) ∪ A>``."""
    extra = set(extra)
    if any(a < 0 for a in extra):
        raise OutOfRange("generators must be nonnegative")
    extra.discard(0)
    if not extra:
        return m
    return NumericalSemigroup.from_generators(set(m.msg) | extra)
