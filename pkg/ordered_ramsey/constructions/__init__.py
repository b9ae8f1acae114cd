"""Combinators and explicit Ramsey-graph constructions."""

from ordered_ramsey.constructions.combinators import (
    build_caterpillar,
    build_caterpillar_segment,
    caterpillar_prefix,
    concatenate,
    hang,
    left_star,
    monotone_matching,
    monotone_path,
    pad_isolated,
    right_star,
    union_intervally,
)
from ordered_ramsey.constructions.determiners import (
    DeterminerSide,
    DeterminerSpec,
    GoodColoring,
    good_coloring_of,
    left_determiner,
    right_determiner,
    verify_determiner,
)
from ordered_ramsey.constructions.families import (
    FamilyResult,
    canonical_h_coloring,
    family_Fj,
    family_Fst,
    find_family_member,
)
from ordered_ramsey.constructions.forests import (
    Construction,
    VerificationStatus,
    build_forest_ramsey,
    build_pseudoforest_ramsey_monP3,
)
from ordered_ramsey.constructions.unavoidable import UnavoidableConstruction, build_f_n, build_gamma_n

__all__ = [
    "Construction",
    "DeterminerSide",
    "DeterminerSpec",
    "FamilyResult",
    "GoodColoring",
    "UnavoidableConstruction",
    "VerificationStatus",
    "build_caterpillar",
    "build_caterpillar_segment",
    "build_f_n",
    "build_forest_ramsey",
    "build_gamma_n",
    "build_pseudoforest_ramsey_monP3",
    "canonical_h_coloring",
    "caterpillar_prefix",
    "concatenate",
    "family_Fj",
    "family_Fst",
    "find_family_member",
    "good_coloring_of",
    "hang",
    "left_determiner",
    "left_star",
    "monotone_matching",
    "monotone_path",
    "pad_isolated",
    "right_determiner",
    "right_star",
    "union_intervally",
    "verify_determiner",
]
