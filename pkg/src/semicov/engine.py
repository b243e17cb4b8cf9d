"""Generic machinery for semi-covarieties.

A semi-covariety is a finite family of numerical semigroups with a minimum,
closed under intersection, in which every non-minimal member loses some
minimal generator and stays in the family. Removing the least such generator
(``mu``) defines a parent for every member, so the family is a tree rooted at
the minimum; :func:`enumerate_family` grows that tree breadth-first.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import (
    FamilyAxiomViolation,
    IsMinimum,
    LimitExceeded,
    NoRemovableGenerator,
    NotAMember,
    NotAnFSet,
)
from .semigroup import AperySet, NumericalSemigroup


class Family(ABC):
    """Contract a family must meet to be enumerated.

    Subclasses provide the minimum and a membership predicate. The default
    child test is the general one (adjoin a special gap, stay in the family,
    and be the removal ``mu`` picks); families with a cheaper description
    override :meth:`children_candidates` and :meth:`accepts_child`.
    """

    def __init__(self, minimum: NumericalSemigroup) -> None:
        self.minimum = minimum

    @abstractmethod
    def is_member(self, s: NumericalSemigroup) -> bool: ...

    @property
    def apery_modulus(self) -> int:
        """Fixed modulus of the Apery sets carried through enumeration."""
        return self.minimum.multiplicity

    def children_candidates(self, s: NumericalSemigroup, apery: AperySet) -> list[int]:
        return apery.special_gaps()

    def accepts_child(
        self, parent: NumericalSemigroup, x: int, child: NumericalSemigroup, child_apery: AperySet
    ) -> bool:
        return self.is_member(child) and mu(self, child) == x


def mu(family: Family, s: NumericalSemigroup) -> int:
    """Least minimal generator whose removal keeps ``s`` in the family."""
    if s == family.minimum:
        raise IsMinimum(f"{s} is the minimum of the family")
    for x in s.msg:
        if family.is_member(s.remove(x, check=False)):
            return x
    raise NoRemovableGenerator(
        f"no minimal generator of {s} can be removed inside the family; "
        "the family is not a semi-covariety"
    )


def f_sequence(family: Family, s: NumericalSemigroup) -> list[NumericalSemigroup]:
    """The chain ``s = S_0 ⊋ S_1 ⊋ ... ⊋ S_k = minimum``."""
    if not family.is_member(s):
        raise NotAMember(f"{s} is not in the family")
    chain = [s]
    while chain[-1] != family.minimum:
        cur = chain[-1]
        chain.append(cur.remove(mu(family, cur), check=False))
    return chain


@dataclass
class TreeNode:
    semigroup: NumericalSemigroup
    apery: AperySet
    parent: int | None = None
    adjoined: int | None = None
    depth: int = 0
    # x values producing children, ascending (the H-set of the node)
    child_gaps: list[int] = field(default_factory=list)


class FamilyTree:
    """Members of a family in breadth-first order with their parent links."""

    def __init__(self, family: Family, nodes: list[TreeNode]) -> None:
        self.family = family
        self.nodes = nodes
        self._index = {node.semigroup: i for i, node in enumerate(nodes)}

    @property
    def minimum(self) -> NumericalSemigroup:
        return self.nodes[0].semigroup

    @property
    def members(self) -> list[NumericalSemigroup]:
        return [node.semigroup for node in self.nodes]

    @property
    def edges(self) -> list[tuple[int, int]]:
        """``(child_index, parent_index)`` pairs."""
        return [(i, node.parent) for i, node in enumerate(self.nodes) if node.parent is not None]

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[NumericalSemigroup]:
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self._index

    def index(self, s: NumericalSemigroup) -> int:
        try:
            return self._index[s]
        except KeyError:
            raise NotAMember(f"{s} is not in the family") from None

    def node(self, s: NumericalSemigroup) -> TreeNode:
        return self.nodes[self.index(s)]

    def path_to_root(self, i: int) -> list[int]:
        path = [i]
        while self.nodes[path[-1]].parent is not None:
            path.append(self.nodes[path[-1]].parent)
        return path

    def layers(self) -> list[list[NumericalSemigroup]]:
        out: list[list[NumericalSemigroup]] = []
        for node in self.nodes:
            if node.depth == len(out):
                out.append([])
            out[node.depth].append(node.semigroup)
        return out


def enumerate_family(family: Family, limit: int | None = None) -> FamilyTree:
    """Build the tree of the family layer by layer from its minimum.

    Children of a node are visited in ascending order of the adjoined gap, so
    the node order is fully determined by the family.
    """
    root = family.minimum
    if not family.is_member(root):
        raise FamilyAxiomViolation(f"the minimum {root} fails the membership test")
    nodes = [TreeNode(root, root.apery(family.apery_modulus))]
    seen = {root}
    layer = [0]
    while layer:
        nxt = []
        for i in layer:
            node = nodes[i]
            s, ap = node.semigroup, node.apery
            for x in sorted(family.children_candidates(s, ap)):
                child_ap = ap.adjoin(x)
                child = s.adjoin(x, check=False)
                if not family.accepts_child(s, x, child, child_ap):
                    continue
                if child in seen:
                    raise FamilyAxiomViolation(f"{child} reached twice; the family graph is not a tree")
                seen.add(child)
                child._apery_cache.setdefault(child_ap.modulus, child_ap)
                node.child_gaps.append(x)
                nxt.append(len(nodes))
                nodes.append(TreeNode(child, child_ap, i, x, node.depth + 1))
                if limit is not None and len(nodes) > limit:
                    raise LimitExceeded(f"family has more than {limit} members")
        layer = nxt
    return FamilyTree(family, nodes)


def check_axioms(tree: FamilyTree) -> None:
    """Verify the minimum and intersection axioms on an enumerated family.

    Raises :class:`FamilyAxiomViolation` naming the offending members.
    """
    members = tree.members
    low = tree.minimum
    for s in members:
        if not low.issubset(s):
            raise FamilyAxiomViolation(f"{s} does not contain the minimum {low}")
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a.intersect(b) not in tree:
                raise FamilyAxiomViolation(f"{a} ∩ {b} is not in the family")


@dataclass(frozen=True)
class FSet:
    """A finite set disjoint from the minimum and contained in some member."""

    elements: tuple[int, ...]

    @classmethod
    def of(cls, tree: FamilyTree, xs: Iterable[int]) -> FSet:
        elements = tuple(sorted(set(xs)))
        if any(x in tree.minimum for x in elements):
            raise NotAnFSet(f"{list(elements)} meets the minimum {tree.minimum}")
        if not any(s.contains_all(elements) for s in tree):
            raise NotAnFSet(f"no member contains {list(elements)}")
        return cls(elements)


def closure(tree: FamilyTree, xs: Iterable[int] | FSet) -> NumericalSemigroup:
    """Least member containing ``xs``: the intersection of all such members."""
    elements = xs.elements if isinstance(xs, FSet) else tuple(sorted(set(xs)))
    if any(x in tree.minimum for x in elements):
        raise NotAnFSet(f"{list(elements)} meets the minimum {tree.minimum}")
    containing = [s for s in tree if s.contains_all(elements)]
    if not containing:
        raise NotAnFSet(f"no member contains {list(elements)}")
    return reduce(NumericalSemigroup.intersect, containing)


def removable_generators(family: Family, s: NumericalSemigroup) -> list[int]:
    return [x for x in s.msg if family.is_member(s.remove(x, check=False))]


def f_rank(family: Family, s: NumericalSemigroup, tree: FamilyTree | None = None) -> int:
    """Least size of a set whose closure in the family is ``s``.

    Every removable minimal generator must belong to any such set, so the
    search only adds elements on top of those, never beyond ``e(s)`` elements.
    """
    if tree is None:
        tree = enumerate_family(family)
    if s not in tree:
        raise NotAMember(f"{s} is not in the family")
    if s == tree.minimum:
        return 0
    forced = removable_generators(family, s)
    minimum = tree.minimum
    ground = [
        y
        for y in range(1, minimum.frobenius + 1)
        if y in s and y not in minimum and y not in forced
    ]
    for k in range(len(forced), s.embedding_dimension + 1):
        for extra in itertools.combinations(ground, k - len(forced)):
            if closure(tree, forced + list(extra)) == s:
                return k
    raise FamilyAxiomViolation(f"no generating set of size <= e(S) found for {s}")


def rank1_members(family: Family, tree: FamilyTree | None = None) -> list[NumericalSemigroup]:
    if tree is None:
        tree = enumerate_family(family)
    out = [s for s in tree.members[1:] if closure(tree, [mu(family, s)]) == s]
    return sorted(out, key=NumericalSemigroup.sort_key)


def sorted_members(members: Sequence[NumericalSemigroup]) -> list[NumericalSemigroup]:
    return sorted(members, key=NumericalSemigroup.sort_key)
