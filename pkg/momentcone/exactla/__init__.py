"""Exact arithmetic over Q(sqrt 2), dense linear algebra and linear programming."""

from momentcone.exactla.matrix import ColumnSpace, Matrix, det, integral_primitive, kernel, rank, rref, solve
from momentcone.exactla.scalar import ONE, SQRT2, ZERO, Scalar, all_rational, demote, exact_sign
from momentcone.exactla.simplex import LPProblem, LPResult, LPStatus, RowSense, lp_solve, verify_certificate

__all__ = [
    "ColumnSpace",
    "LPProblem",
    "LPResult",
    "LPStatus",
    "Matrix",
    "ONE",
    "RowSense",
    "SQRT2",
    "Scalar",
    "ZERO",
    "all_rational",
    "demote",
    "det",
    "exact_sign",
    "integral_primitive",
    "kernel",
    "lp_solve",
    "rank",
    "rref",
    "solve",
    "verify_certificate",
]
