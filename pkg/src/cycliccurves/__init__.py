"""Curves with a cyclic automorphism group of order at least 2g + 1.

Exact-arithmetic classification of the curve families admitting such a
group in odd characteristic (and the classical characteristic-0 case),
enumeration of their ramification signatures, and independent
verification of genera and automorphism structure by finite-field point
counting and zeta-function inference.
"""

from .ramification import (
    FiltrationProfile,
    Inconsistent,
    InvalidFiltration,
    NotADivisor,
    OrbitDatum,
    Signature,
    different_exponent,
    kummer_branch_valid,
    quotient_is_branched,
    rh_genus_tame,
    rh_genus_wild,
    validate_filtration,
)
from .families import (
    ASPower,
    ASRational,
    AutomorphismDescriptor,
    CurveModel,
    DegenerateModel,
    Homma,
    Hyperelliptic,
    Kummer,
    NotPrimitive,
    PrimitivePair,
    cyclic_order,
    generator,
    genus,
    identity_descriptor,
    kummer_genus,
    kummer_signature,
)
from .classify import (
    BadGenus,
    ClassificationEntry,
    ClassifyQuery,
    SasakiReport,
    UnsupportedCharacteristic,
    canonical_pair,
    classify,
    enumerate_signatures,
    primitive_pairs,
    verify_sasaki_bound,
)
from .fforacle import (
    FieldTooLarge,
    FiniteField,
    HasseWeilViolation,
    InsufficientCounts,
    NotAnAutomorphism,
    OrbitReport,
    OrderMismatch,
    PlaceCountSeries,
    PreconditionViolated,
    affine_points,
    count_places,
    count_places_naive,
    count_series,
    expected_affine_fixed,
    field,
    verify_automorphism,
    zeta_genus,
)

__version__ = "0.1.0"
