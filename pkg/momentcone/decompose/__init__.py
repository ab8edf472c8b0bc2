"""Reduction, signed decomposition and cone membership on finite ground sets."""

from momentcone.decompose.ground_set import GroundSet
from momentcone.decompose.membership import (
    MembershipCertificate,
    Verdict,
    cara_countable,
    cone_rows,
    evaluate_function,
    membership,
    min_atoms,
    minimal_support,
    require_member,
)
from momentcone.decompose.richter import reduce, signed_decompose

__all__ = [
    "GroundSet",
    "MembershipCertificate",
    "Verdict",
    "cara_countable",
    "cone_rows",
    "evaluate_function",
    "membership",
    "min_atoms",
    "minimal_support",
    "reduce",
    "require_member",
    "signed_decompose",
]
