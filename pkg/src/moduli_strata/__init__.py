"""Integer dimension calculus for stratified moduli of abelian varieties.

The package computes, with exact integer arithmetic: set-partition
combinatorics and canonical intersection-matrix types; dimensions and
boundary codimensions of Siegel, unitary and curve moduli; strata of the
repeated-factor locus with their minimal codimension; the partition-indexed
symplectic subgroup calculus with its exhaustively verified maximum; and a
planner for complete families of indecomposable abelian varieties with
prescribed connected monodromy group.
"""

__version__ = "0.1.0"

from .errors import (
    DimensionCalculusError,
    GenusTooSmall,
    GroundMismatch,
    GroundTooSmall,
    InvalidShape,
    NoCompactificationRule,
    NotProper,
    RankTooSmall,
    RuleNotProven,
    SpecInvalid,
    TargetTooLarge,
    UnitaryBoundViolated,
    UnrealizableTarget,
    VaryingDimTooSmall,
)
from .hecke_groups import (
    GammaSubgroup,
    MaxProductDim,
    gamma_dim,
    gamma_gamma_codim,
    gamma_subgroup,
    max_product_dim,
    max_product_dim_by_pairs,
    product_dim,
    product_dim_from_matrix,
    sp_total_dim,
)
from .moduli import (
    BoundaryCodim,
    CurveModuli,
    GroupExpr,
    Siegel,
    SpAtom,
    SUFormAtom,
    UnitarySpace,
    boundary_codim,
    dim_space,
    group_dim,
    sp_product,
    su_form,
    torelli_codim,
)
from .partitions import (
    IntersectionMatrix,
    SetPartition,
    bell_number,
    enumerate_matrix_types,
    enumerate_proper_partitions,
    intersection_matrix,
    meet,
    realize_matrix,
)
from .planner import (
    EndAlgebra,
    EndFactor,
    FamilySpec,
    FieldKind,
    KodairaReport,
    PlanReport,
    SymplecticFamily,
    UnitaryFamily,
    derived_mt,
    kodaira_budget,
    ns_rank,
    plan_family,
    polarized_isogeny_closed,
    realize_group,
    validate_spec,
)
from .strata import (
    DecompositionShape,
    MinCodim,
    Stratum,
    mdec_codim_fixedpart,
    mdec_codim_product,
    mdec_codim_unitary,
    mdec_codim_unitary_fixedpart,
    strata_of_product,
    strata_of_shape,
    strata_of_unitary,
)
from .verify import CHECKS, CaseRecord, VerificationRun, run_check

__all__ = [
    "__version__",
    # errors
    "DimensionCalculusError", "GenusTooSmall", "GroundMismatch", "GroundTooSmall",
    "InvalidShape", "NoCompactificationRule", "NotProper", "RankTooSmall",
    "RuleNotProven", "SpecInvalid", "TargetTooLarge", "UnitaryBoundViolated",
    "UnrealizableTarget", "VaryingDimTooSmall",
    # partitions
    "SetPartition", "IntersectionMatrix", "bell_number", "enumerate_proper_partitions",
    "enumerate_matrix_types", "intersection_matrix", "meet", "realize_matrix",
    # moduli
    "Siegel", "UnitarySpace", "CurveModuli", "BoundaryCodim", "GroupExpr",
    "SpAtom", "SUFormAtom", "dim_space", "boundary_codim", "torelli_codim",
    "group_dim", "sp_product", "su_form",
    # strata
    "Stratum", "DecompositionShape", "MinCodim", "strata_of_product",
    "strata_of_shape", "strata_of_unitary", "mdec_codim_product",
    "mdec_codim_fixedpart", "mdec_codim_unitary", "mdec_codim_unitary_fixedpart",
    # hecke groups
    "GammaSubgroup", "MaxProductDim", "gamma_dim", "gamma_subgroup", "product_dim",
    "product_dim_from_matrix", "max_product_dim", "max_product_dim_by_pairs",
    "gamma_gamma_codim", "sp_total_dim",
    # planner
    "SymplecticFamily", "UnitaryFamily", "FamilySpec", "PlanReport", "KodairaReport",
    "EndAlgebra", "EndFactor", "FieldKind", "validate_spec", "plan_family",
    "derived_mt", "realize_group", "kodaira_budget", "polarized_isogeny_closed",
    "ns_rank",
    # verification
    "CHECKS", "CaseRecord", "VerificationRun", "run_check",
]
