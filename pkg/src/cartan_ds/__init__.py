"""Exact combinatorics of the discrete-series existence criterion.

The package computes, in exact rational arithmetic, the combinatorial side
of the criterion for a real reductive Lie algebra to admit discrete-series-
type representations: root systems and Weyl groups, Cartan involutions and
restricted root systems, the compact-Cartan membership test, strong
regularity in the extended Weyl group, the square-integrability cone
condition on formal exponents, and the translation-principle pipeline that
regularizes a weakly-regular datum.
"""

from .catalog import (
    ENV_CATALOG_DIR,
    CatalogEntry,
    build_default_catalog,
    catalog_form,
    default_catalog_ids,
    entry_involution,
    entry_root_system,
    entry_to_document,
    load_catalog,
    packaged_catalog_dir,
    resolve_catalog_dir,
    write_catalog,
)
from .criterion import (
    CriterionVerdict,
    ExtendedElement,
    ExtendedStabilizerReport,
    ExtendedWeylGroup,
    StrongRegularityConsequence,
    apply_extended,
    compact_cartan_verdict,
    extended_stabilizer,
    extended_weyl_group,
    sr_implies_compact_cartan,
    theta_in_weyl,
)
from .errors import (
    BadParameters,
    CapExceeded,
    CartanDSError,
    ConsistencyError,
    HypothesisFailed,
    InputError,
    InvalidDatum,
    InvalidType,
    NoAdmissibleDirection,
    NotDominantIntegral,
    NotInvolution,
    NotIsometric,
    NotRootPreserving,
    ParseError,
    PreconditionFailed,
    RankMismatch,
    ResourceError,
    SearchExhausted,
    UnknownForm,
)
from .exponents import (
    ConePosition,
    DualChamber,
    FormalDSDatum,
    L2Report,
    SignedSqrt,
    cone_position,
    dominates,
    dual_chamber,
    l2_check,
    leading_exponents,
    monoid_member,
    orbit_plus,
    orbit_restrictions,
    sorted_exponents,
    validate_datum,
)
from .realform import (
    CartanInvolution,
    ExactSequenceReport,
    RestrictedRootSystem,
    classify_restricted_type,
    multiplicity_identity_holds,
    restricted_roots,
    validate_involution,
    verify_exact_sequence,
)
from .rootdata import (
    DEFAULT_CAP,
    RootSystem,
    StabilizerInfo,
    Weight,
    WeylElement,
    apply,
    build_root_system,
    dominant_representative,
    enumerate_weyl,
    format_cartan_type,
    longest_element,
    parse_cartan_type,
    stabilizer_generators,
    weyl_orbit,
    weyl_order,
)
from .translation import (
    SearchBest,
    SplittingReport,
    TensorL2Report,
    TranslationCertificates,
    TranslationConfig,
    TranslationResult,
    TranslationStep,
    strong_regularization,
    tensor_l2_condition,
    translate_line,
    verify_sum_splitting,
    weight_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "ENV_CATALOG_DIR",
    "BadParameters",
    "CapExceeded",
    "CartanDSError",
    "CartanInvolution",
    "CatalogEntry",
    "ConePosition",
    "ConsistencyError",
    "CriterionVerdict",
    "DEFAULT_CAP",
    "DualChamber",
    "ExactSequenceReport",
    "ExtendedElement",
    "ExtendedStabilizerReport",
    "ExtendedWeylGroup",
    "FormalDSDatum",
    "HypothesisFailed",
    "InputError",
    "InvalidDatum",
    "InvalidType",
    "L2Report",
    "NoAdmissibleDirection",
    "NotDominantIntegral",
    "NotInvolution",
    "NotIsometric",
    "NotRootPreserving",
    "ParseError",
    "PreconditionFailed",
    "RankMismatch",
    "ResourceError",
    "RestrictedRootSystem",
    "RootSystem",
    "SearchBest",
    "SearchExhausted",
    "SignedSqrt",
    "SplittingReport",
    "StabilizerInfo",
    "StrongRegularityConsequence",
    "TensorL2Report",
    "TranslationCertificates",
    "TranslationConfig",
    "TranslationResult",
    "TranslationStep",
    "UnknownForm",
    "Weight",
    "WeylElement",
    "apply",
    "apply_extended",
    "build_default_catalog",
    "build_root_system",
    "catalog_form",
    "classify_restricted_type",
    "compact_cartan_verdict",
    "cone_position",
    "default_catalog_ids",
    "dominant_representative",
    "dominates",
    "dual_chamber",
    "entry_involution",
    "entry_root_system",
    "entry_to_document",
    "enumerate_weyl",
    "extended_stabilizer",
    "extended_weyl_group",
    "format_cartan_type",
    "l2_check",
    "leading_exponents",
    "load_catalog",
    "longest_element",
    "monoid_member",
    "multiplicity_identity_holds",
    "orbit_plus",
    "orbit_restrictions",
    "packaged_catalog_dir",
    "parse_cartan_type",
    "resolve_catalog_dir",
    "restricted_roots",
    "sorted_exponents",
    "sr_implies_compact_cartan",
    "stabilizer_generators",
    "strong_regularization",
    "tensor_l2_condition",
    "theta_in_weyl",
    "translate_line",
    "validate_datum",
    "validate_involution",
    "verify_exact_sequence",
    "verify_sum_splitting",
    "weight_spectrum",
    "weyl_orbit",
    "weyl_order",
    "write_catalog",
]
