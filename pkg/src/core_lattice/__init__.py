"""Numerical sets, simultaneous core partitions and lattice points of core polytopes."""

from .antiatom import anti_atom, gamma, p_value
from .apery import AperyTuple, apery_of, conjugate_apery, set_from_apery, size_of
from .errors import BudgetExceededError, NotASemigroupError
from .numset import (
    NumericalSemigroup,
    NumericalSet,
    atom_monoid,
    dual,
    is_symmetric,
    missing_pairs,
    semigroup_from_generators,
)
from .partition import Partition, conjugate, hooks, phi, phi_inverse
from .polytope import SizeStats, core_polytope, core_stats, count_oversemigroups
from .tree import build_tree

__version__ = "0.1.0"

__all__ = [
    "AperyTuple",
    "BudgetExceededError",
    "NotASemigroupError",
    "NumericalSemigroup",
    "NumericalSet",
    "Partition",
    "SizeStats",
    "anti_atom",
    "apery_of",
    "atom_monoid",
    "build_tree",
    "conjugate",
    "conjugate_apery",
    "core_polytope",
    "core_stats",
    "count_oversemigroups",
    "dual",
    "gamma",
    "hooks",
    "is_symmetric",
    "missing_pairs",
    "p_value",
    "phi",
    "phi_inverse",
    "set_from_apery",
    "semigroup_from_generators",
    "size_of",
]
