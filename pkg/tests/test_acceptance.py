"""Exit criteria, one test per criterion.

A PASS/FAIL line per criterion is printed in the terminal summary (see
conftest.py).
"""

import subprocess
import sys
import time
from pathlib import Path

from golden_commands import GOLDEN
from semicov import oracle, verify
from semicov.coe import coe_family, coe_msg, enumerate_coe
from semicov.engine import check_axioms, f_rank, mu, rank1_members
from semicov.semigroup import NumericalSemigroup, from_generators, natural
from semicov.theta import enumerate_theta, theta_family, theta_msg, theta_mu, theta_rank1

GOLDEN_DIR = Path(__file__).parent / "golden"


def test_ac1_theta_378_worked_example():
    delta = from_generators([3, 7, 8])

    def w(*xs):
        return NumericalSemigroup.from_gaps(set(delta.gaps) - set(xs))

    start = time.perf_counter()
    tree = enumerate_theta(delta)
    elapsed = time.perf_counter() - start
    expected = {
        # member: (Ap(S, 3), H(S))
        w(): ([0, 7, 8], [4, 5]),
        w(4): ([0, 4, 8], []),
        w(5): ([0, 5, 7], [4]),
        w(4, 5): ([0, 4, 5], [2]),
        w(2, 4, 5): ([0, 2, 4], [1]),
        natural(): ([0, 1, 2], []),
    }
    assert set(tree.members) == set(expected) and len(tree) == 6
    for node in tree.nodes:
        apery, h = expected[node.semigroup]
        assert node.apery.modulus == 3
        assert node.apery.elements() == apery
        assert node.child_gaps == h
    assert elapsed < 1.0


def test_ac2_coe_7_worked_example():
    def w(*xs):
        return NumericalSemigroup.from_gaps(set(range(1, 8)) - set(xs))

    start = time.perf_counter()
    tree = enumerate_coe(7)
    elapsed = time.perf_counter() - start
    expected = {
        w(): ([0, 9, 10, 11, 12, 13, 14, 15], {4, 6}),
        w(4): ([0, 4, 9, 10, 11, 13, 14, 15], set()),
        w(6): ([0, 6, 9, 10, 11, 12, 13, 15], {4}),
        w(4, 6): ([0, 4, 6, 9, 10, 11, 13, 15], {5, 2}),
        w(2, 4, 6): ([0, 2, 4, 6, 9, 11, 13, 15], set()),
        w(4, 5, 6): ([0, 4, 5, 6, 9, 10, 11, 15], set()),
    }
    assert set(tree.members) == set(expected) and len(tree) == 6
    for node in tree.nodes:
        apery, h = expected[node.semigroup]
        assert node.apery.modulus == 8
        assert node.apery.elements() == apery
        assert set(node.child_gaps) == h
    assert elapsed < 1.0


def test_ac3_theta_579_rank_one_census():
    delta = from_generators([5, 7, 9])
    expected = {
        1: natural(),
        2: from_generators([2, 5]),
        3: from_generators([3, 5, 7]),
        4: from_generators([4, 5, 7]),
        6: from_generators([5, 6, 7, 9]),
        8: from_generators([5, 7, 8, 9]),
        11: from_generators([5, 7, 9, 11]),
        13: from_generators([5, 7, 9, 13]),
    }
    pairs = theta_rank1(delta)
    assert dict(pairs) == expected
    assert len(pairs) == delta.genus == 8
    engine = rank1_members(theta_family(delta))
    assert set(engine) == set(expected.values()) and len(engine) == 8


def test_ac4_relative_generators_and_ranks():
    d57 = from_generators([5, 7])
    s = from_generators([3, 4, 5])
    assert theta_msg(d57, s) == [3, 4]
    assert f_rank(theta_family(d57), s) == 2
    t = from_generators([4, 5, 6])
    assert coe_msg(7, t) == [5]
    assert f_rank(coe_family(7), t) == 1


def test_ac5_oracle_equivalence():
    start = time.perf_counter()
    theta = verify.check_theta_enumeration(8)
    coe = verify.check_coe_enumeration(13)
    elapsed = time.perf_counter() - start
    assert theta.cases == 156 and coe.cases == 7
    assert theta.mismatches == [] and coe.mismatches == []
    assert elapsed < 60.0


def test_ac6_closure_formulas():
    coe = verify.check_coe_closure(11, 3)
    theta = verify.check_theta_closure([from_generators(g) for g in ([3, 7, 8], [5, 7, 9], [5, 7])], 3)
    assert coe.cases > 0 and theta.cases > 0
    assert coe.mismatches == [] and theta.mismatches == []


def test_ac7_floor_mod_sweep():
    start = time.perf_counter()
    res = verify.check_floor_mod(101)
    elapsed = time.perf_counter() - start
    assert res.cases == sum(len(range(3, f - 1, 2)) for f in range(5, 102, 2))
    assert res.mismatches == []
    assert elapsed < 5.0


def _structural_checks(tree, family):
    low = tree.minimum
    members = tree.members
    # each member once, every node reaches the root in g(min) - g(node) steps
    assert len(set(members)) == len(members)
    for i, node in enumerate(tree.nodes):
        path = tree.path_to_root(i)
        assert path[-1] == 0
        assert len(path) - 1 == low.genus - node.semigroup.genus
        ap = node.apery
        assert len(ap) == ap.modulus == len(set(ap.witnesses))
        s = node.semigroup
        m = s.multiplicity
        assert len(s.apery(m)) == m
        rank = f_rank(family, s, tree)
        assert rank <= s.embedding_dimension
        assert (rank == 0) == (s == low)
    for child, parent in tree.edges:
        c, p = members[child], members[parent]
        assert p == c.remove(mu(family, c))
        assert c.genus == p.genus - 1 and p <= c
    check_axioms(tree)


def test_ac8_structural_properties(universe):
    for delta in universe:
        tree = enumerate_theta(delta)
        fam = tree.family
        for s in tree.members[1:]:
            assert mu(fam, s) == theta_mu(delta, s)
        _structural_checks(tree, fam)
        assert set(tree.members) == oracle.brute_oversemigroups(delta)
    for f in range(1, 14, 2):
        tree = enumerate_coe(f)
        _structural_checks(tree, tree.family)


def test_ac9_cli_determinism():
    for name, cmd in sorted(GOLDEN.items()):
        argv = [sys.executable, "-m", "semicov", *cmd.split()]
        first = subprocess.run(argv, capture_output=True, check=True).stdout
        second = subprocess.run(argv, capture_output=True, check=True).stdout
        assert first == second, name
        assert first == (GOLDEN_DIR / f"{name}.txt").read_bytes(), name
