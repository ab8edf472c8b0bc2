"""Function systems, points and the moment curve."""

from momentcone.basis.points import Chart, Point
from momentcone.basis.system import (
    FunctionSystem,
    MonomialOrder,
    SystemKind,
    affine_system,
    gapped_system,
    graded_exponents,
    homogeneous_exponents,
    make_system,
    moment_curve,
    partials,
    projective_system,
    system_size,
    validate_independence,
)

__all__ = [
    "Chart",
    "FunctionSystem",
    "MonomialOrder",
    "Point",
    "SystemKind",
    "affine_system",
    "gapped_system",
    "graded_exponents",
    "homogeneous_exponents",
    "make_system",
    "moment_curve",
    "partials",
    "projective_system",
    "system_size",
    "validate_independence",
]
