"""Numerical semigroups and semi-covarieties: oversemigroup families and coe-semigroups."""

from .coe import (
    coat,
    coe_closure,
    coe_family,
    coe_is_fset,
    coe_msg,
    coe_rank1,
    enumerate_coe,
    is_coe,
    floor_mod_test,
)
from .engine import (
    Family,
    FamilyTree,
    FSet,
    check_axioms,
    closure,
    enumerate_family,
    f_rank,
    f_sequence,
    mu,
    rank1_members,
)
from .semigroup import (
    AperySet,
    NumericalSemigroup,
    from_generators,
    intersect,
    natural,
    ordinary,
    semigroup_sum,
)
from .theta import enumerate_theta, theta_closure, theta_family, theta_msg, theta_rank1

__all__ = [
    "AperySet", "FSet", "check_axioms", "Family", "FamilyTree", "NumericalSemigroup",
    "closure", "coat", "coe_closure", "coe_family", "coe_is_fset", "coe_msg", "coe_rank1",
    "enumerate_coe", "enumerate_family", "enumerate_theta", "f_rank", "f_sequence",
    "from_generators", "intersect", "is_coe", "floor_mod_test", "mu", "natural", "ordinary",
    "rank1_members", "semigroup_sum", "theta_closure", "theta_family", "theta_msg", "theta_rank1",
]
