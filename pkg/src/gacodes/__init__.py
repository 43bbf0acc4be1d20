"""Two-block group-algebra quantum CSS codes over finite groups and prime fields."""

from __future__ import annotations

from .algebra import AlgebraElement, ga_add, ga_hat, ga_mul, ga_scale, ga_trace, left_matrix, right_matrix
from .distance import DistanceResult, classical_dual_distance, exact_dX, exact_dZ, random_dX_upper, random_dZ_upper
from .fmat import FMatrix, m_idempotents, m_nullspace, m_rank
from .gf import PrimeField, gf_inv, gf_new
from .groups import GroupTable, group_cyclic, group_dihedral, group_direct_product, group_from_permutations
from .groups import group_metacyclic
from .harness import DistancePolicy, EnumerationJob, code_report, enumerate_codes
from .parse import parse_algebra_elem, parse_group_spec
from .twoblock import CodeReport, TwoBlockCode, build, dimension, structure_params

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "CodeReport",
    "DistancePolicy",
    "DistanceResult",
    "EnumerationJob",
    "FMatrix",
    "GroupTable",
    "PrimeField",
    "TwoBlockCode",
    "build",
    "classical_dual_distance",
    "code_report",
    "dimension",
    "enumerate_codes",
    "exact_dX",
    "exact_dZ",
    "ga_add",
    "ga_hat",
    "ga_mul",
    "ga_scale",
    "ga_trace",
    "gf_inv",
    "gf_new",
    "group_cyclic",
    "group_dihedral",
    "group_direct_product",
    "group_from_permutations",
    "group_metacyclic",
    "left_matrix",
    "m_idempotents",
    "m_nullspace",
    "m_rank",
    "parse_algebra_elem",
    "parse_group_spec",
    "random_dX_upper",
    "random_dZ_upper",
    "right_matrix",
    "structure_params",
]
