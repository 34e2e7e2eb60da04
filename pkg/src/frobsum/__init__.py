"""Line-bundle direct summands of Frobenius pushforwards on partial flag varieties."""

from .errors import ConfigurationError, DomainError, FrobsumError, PreconditionError, UsageError
from .frobenius import (
    DecompositionReport,
    FrobeniusQuery,
    SummandEntry,
    decompose,
    enumerate_summands,
    gros_kaneda_multiplicity,
    is_summand,
    multiplicity_of_trivial,
    padic_split,
    serre_dual_weight,
    stable_line_summands_of_structure_sheaf,
)
from .oracle import bounded_compositions, decompose_product_of_lines, decompose_projective_space
from .parabolic import ParabolicData, build_parabolic, in_XP
from .rootsys import RootSystemData, build_root_system, pairing, weyl_dimension

__version__ = "0.1.0"
