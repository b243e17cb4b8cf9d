"""Cross-checks of the fast paths against the brute-force oracle.

Each check returns a list of human-readable mismatch descriptions; an empty
list means the check passed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import oracle
from .coe import coe_closure, coe_is_fset, enumerate_coe, floor_mod_test
from .engine import closure
from .theta import enumerate_theta, theta_closure


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.mismatches)} mismatches"


def check_theta_enumeration(max_genus: int) -> CheckResult:
    res = CheckResult(f"theta enumeration vs oversemigroup search, genus <= {max_genus}")
    for delta in oracle.brute_semigroups(max_genus):
        res.cases += 1
        got = set(enumerate_theta(delta).members)
        want = oracle.brute_oversemigroups(delta)
        if got != want:
            res.mismatches.append(f"{delta}: enumerated {len(got)}, oracle {len(want)}")
    return res


def check_coe_enumeration(max_frobenius: int) -> CheckResult:
    res = CheckResult(f"coe enumeration vs filtered search, odd F <= {max_frobenius}")
    for f in range(1, max_frobenius + 1, 2):
        res.cases += 1
        got = set(enumerate_coe(f).members)
        want = oracle.brute_coe(f)
        if got != want:
            res.mismatches.append(f"F={f}: enumerated {len(got)}, oracle {len(want)}")
    return res


def check_coe_closure(max_frobenius: int, max_size: int = 3) -> CheckResult:
    res = CheckResult(f"coe closure formula vs intersection, odd F <= {max_frobenius}, |X| <= {max_size}")
    for f in range(1, max_frobenius + 1, 2):
        tree = enumerate_coe(f)
        for r in range(max_size + 1):
            for xs in itertools.combinations(range(1, f), r):
                fset = coe_is_fset(f, xs)
                contained = any(s.contains_all(xs) for s in tree)
                if fset != contained:
                    res.mismatches.append(f"F={f}, X={list(xs)}: set test {fset}, members containing X {contained}")
                    continue
                if not fset:
                    continue
                res.cases += 1
                if coe_closure(f, xs) != closure(tree, xs):
                    res.mismatches.append(f"F={f}, X={list(xs)}")
    return res


def check_theta_closure(deltas, max_size: int = 3) -> CheckResult:
    res = CheckResult(f"theta closure formula vs intersection, |X| <= {max_size}")
    for delta in deltas:
        tree = enumerate_theta(delta)
        for r in range(1, max_size + 1):
            for xs in itertools.combinations(delta.gaps, r):
                res.cases += 1
                if theta_closure(delta, xs) != closure(tree, xs):
                    res.mismatches.append(f"{delta}, X={list(xs)}")
    return res


def check_floor_mod(max_frobenius: int) -> CheckResult:
    res = CheckResult(f"floor/mod test vs membership table, odd F <= {max_frobenius}")
    for f in range(5, max_frobenius + 1, 2):
        for x in range(3, f - 1, 2):
            res.cases += 1
            if floor_mod_test(x, f) != (not oracle.brute_membership([x - 1, x, x + 1], f)):
                res.mismatches.append(f"x={x}, F={f}")
    return res
