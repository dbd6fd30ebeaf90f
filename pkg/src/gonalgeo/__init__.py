"""Exact monodromy-tuple census and surface geography of the families
supported by simple branched covers of the line.

The package enumerates transposition tuples with identity product and
transitive span, classifies the degenerations where two branch points
collide, evaluates the numerical invariants of the fibered surfaces the
families carry, and verifies the asymptotic thresholds, all in exact
arithmetic.
"""

from .asymptotics import (
    ConjecturedEstimates,
    DeltaCertificate,
    EstimatedPositivity,
    GonalityCase,
    PlaneCurveBase,
    PositivityReport,
    ThresholdReport,
    delta_search,
    estimated_positivity,
    maximal_gonality,
    positivity_report,
    positivity_threshold,
    threshold_polynomial,
)
from .cache import (
    census_path,
    census_payload,
    load_or_compute,
    read_census,
    resolve_cache_dir,
    write_census,
)
from .characters import (
    CharacterTable,
    character_table,
    connected_count,
    disconnected_count,
    partitions_of,
)
from .covers import (
    MonodromyTuple,
    TupleCensus,
    are_conjugate,
    canonical_form,
    class_count,
    class_count_via_oracle,
    class_representatives,
    conjugate_tuple,
    count_tuples,
    cover_genus,
    iter_tuples,
    tuple_stabilizer,
    validate_cover_shape,
    verify_free_action,
)
from .degeneration import (
    CentralProfile,
    DegenerationCensus,
    NodeType,
    SplitProfile,
    TwistOrbitReport,
    census,
    classify_node,
    full_census,
    full_twist,
    refine_type_one,
    verify_twist_orbits,
)
from .errors import (
    BudgetExceeded,
    CapacityError,
    GonalGeoError,
    InvariantViolation,
    ParameterError,
)
from .invariants import (
    AuditReport,
    FamilyParams,
    SurfaceInvariants,
    audit_chain,
    chi_holomorphic,
    euler_characteristic,
    genus_y,
    index_excess,
    k_squared,
    ratio_and_slope,
    rational_payload,
    surface_invariants,
)
from .version import TOOL_VERSION as __version__

__all__ = [
    "AuditReport",
    "BudgetExceeded",
    "CapacityError",
    "CentralProfile",
    "CharacterTable",
    "ConjecturedEstimates",
    "DegenerationCensus",
    "DeltaCertificate",
    "EstimatedPositivity",
    "FamilyParams",
    "GonalGeoError",
    "GonalityCase",
    "InvariantViolation",
    "MonodromyTuple",
    "NodeType",
    "ParameterError",
    "PlaneCurveBase",
    "PositivityReport",
    "SplitProfile",
    "SurfaceInvariants",
    "ThresholdReport",
    "TupleCensus",
    "TwistOrbitReport",
    "__version__",
    "are_conjugate",
    "audit_chain",
    "canonical_form",
    "census",
    "census_path",
    "census_payload",
    "character_table",
    "chi_holomorphic",
    "class_count",
    "class_count_via_oracle",
    "class_representatives",
    "classify_node",
    "conjugate_tuple",
    "connected_count",
    "count_tuples",
    "cover_genus",
    "delta_search",
    "disconnected_count",
    "estimated_positivity",
    "euler_characteristic",
    "full_census",
    "full_twist",
    "genus_y",
    "index_excess",
    "iter_tuples",
    "k_squared",
    "load_or_compute",
    "maximal_gonality",
    "partitions_of",
    "positivity_report",
    "positivity_threshold",
    "ratio_and_slope",
    "rational_payload",
    "read_census",
    "refine_type_one",
    "resolve_cache_dir",
    "surface_invariants",
    "threshold_polynomial",
    "tuple_stabilizer",
    "validate_cover_shape",
    "verify_free_action",
    "verify_twist_orbits",
    "write_census",
]
