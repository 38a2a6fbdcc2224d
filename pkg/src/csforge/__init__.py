"""Exact Chern-Simons potentials of ``Tr (dω + ω²)^n`` via cyclic words and integration by parts."""

__version__ = "0.1.0"

from .words import FormSum, canonicalize, exterior_derivative, rotation_sign, cyclic_class_size, is_even  # noqa: E402
from .expansion import PartitionSet, enumerate_partition_sets, pd_expansion, coefficient_table  # noqa: E402
from .ibp import IbpEquation, ibp_at, generate_equations  # noqa: E402
from .linalg import RatMatrix, NoNormalizedRow, left_null_space, rank, solve_ones_normalization  # noqa: E402
from .assembler import (  # noqa: E402
    CsPotential,
    InconsistentEquation,
    PartitionSystem,
    assemble,
    build_system,
    independent_equation_count,
    partition_contribution,
    verify,
)

__all__ = [
    "FormSum", "canonicalize", "exterior_derivative", "rotation_sign", "cyclic_class_size", "is_even",
    "PartitionSet", "enumerate_partition_sets", "pd_expansion", "coefficient_table",
    "IbpEquation", "ibp_at", "generate_equations",
    "RatMatrix", "NoNormalizedRow", "left_null_space", "rank", "solve_ones_normalization",
    "CsPotential", "InconsistentEquation", "PartitionSystem", "assemble", "build_system",
    "independent_equation_count", "partition_contribution", "verify",
]
