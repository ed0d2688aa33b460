"""Exact-arithmetic Dynkin indices for the simple Lie algebras.

The package computes indices of representations (from highest weights) and
of the sl2-subalgebras attached to nilpotent orbits (from partitions), each
by several independent routes, plus the supporting root-system, orbit-poset
and identity machinery.  Everything is exact: integers and Fractions only.
"""

from .identities import IdentityInstance, instance, lhs, rhs_sl, rhs_so, rhs_sp, sweep
from .orbits import (
    OrbitPoset,
    build_poset,
    degeneration_moves,
    dominance_leq,
    enumerate_orbits,
    monotonicity_holds,
    partitions_of,
    poset_dot,
)
from .reps import (
    RepIndexReport,
    adjoint_index,
    dynkin_index,
    embedding_index,
    index_chain_rule_holds,
    simplest_embedding_index,
    weyl_dimension,
)
from .rootsystems import LieType, Root, RootSystem, build, classical_type
from .sl2 import (
    IndexReport,
    McKayData,
    branch_adjoint,
    branch_vector_rep,
    classical_index,
    clebsch_gordan,
    index_via_adjoint,
    index_via_simplest_rep,
    mckay_data,
    module_dimension,
    module_index,
    partition_is_admissible,
    principal_index,
    principal_minus_subregular,
    subregular_module,
    sym2,
    wedge2,
)
from .verify import VerifyConfig, run_checks

__version__ = "0.1.0"

__all__ = [
    "IdentityInstance",
    "IndexReport",
    "LieType",
    "McKayData",
    "OrbitPoset",
    "RepIndexReport",
    "Root",
    "RootSystem",
    "VerifyConfig",
    "adjoint_index",
    "branch_adjoint",
    "branch_vector_rep",
    "build",
    "build_poset",
    "classical_index",
    "classical_type",
    "clebsch_gordan",
    "degeneration_moves",
    "dominance_leq",
    "dynkin_index",
    "embedding_index",
    "enumerate_orbits",
    "index_chain_rule_holds",
    "index_via_adjoint",
    "index_via_simplest_rep",
    "instance",
    "lhs",
    "mckay_data",
    "module_dimension",
    "module_index",
    "monotonicity_holds",
    "partition_is_admissible",
    "partitions_of",
    "poset_dot",
    "principal_index",
    "principal_minus_subregular",
    "rhs_sl",
    "rhs_so",
    "rhs_sp",
    "run_checks",
    "simplest_embedding_index",
    "subregular_module",
    "sweep",
    "sym2",
    "wedge2",
    "weyl_dimension",
]
