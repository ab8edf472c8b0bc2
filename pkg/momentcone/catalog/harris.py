"""
Harris' nonnegative ternary form of degree 10 and its 30 projective zeros.

h = 16 (x0^10 + ...) - 36 (x0^8 x1^2 + ...) + 20 (x0^6 x1^4 + ...)
    + 57 (x0^6 x1^2 x2^2 + ...) - 38 (x0^4 x1^4 x2^2 + ...),

every sum running over the distinct permutations of the exponents.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from momentcone.basis.points import Point
from momentcone.basis.system import FunctionSystem, gapped_system, projective_system
from momentcone.catalog.polynomial import NamedPolynomial
from momentcone.exactla.matrix import ColumnSpace
from momentcone.exactla.scalar import Scalar
from momentcone.momentmap.moment_map import atom_columns

logger = logging.getLogger(__name__)

# coefficient by exponent pattern (sorted descending)
_HARRIS_COEFFICIENTS = {
    (10, 0, 0): 16,
    (8, 2, 0): -36,
    (6, 4, 0): 20,
    (6, 2, 2): 57,
    (4, 4, 2): -38,
}

_HARRIS_ZEROS = [
    ("1", "1", "0"), ("1", "-1", "0"), ("1", "0", "1"), ("1", "0", "-1"), ("0", "1", "1"),
    ("0", "1", "-1"),
    ("1", "1", "1/2"), ("1", "1", "-1/2"), ("1", "-1", "1/2"), ("1", "-1", "-1/2"),
    ("1", "1/2", "1"), ("1", "1/2", "-1"), ("1", "-1/2", "1"), ("1", "-1/2", "-1"),
    ("1/2", "1", "1"), ("1/2", "1", "-1"), ("1/2", "-1", "1"), ("1/2", "-1", "-1"),
    ("1", "1", "sqrt2"), ("1", "1", "-sqrt2"), ("1", "-1", "sqrt2"), ("1", "-1", "-sqrt2"),
    ("1", "sqrt2", "1"), ("1", "sqrt2", "-1"), ("1", "-sqrt2", "1"), ("1", "-sqrt2", "-1"),
    ("sqrt2", "1", "1"), ("sqrt2", "1", "-1"), ("sqrt2", "-1", "1"), ("sqrt2", "-1", "-1"),
]

# rank of the total derivative at the first k zeros, k = 1..30
TABLE1_RANKS = (
    3, 6, 9, 12, 15, 18, 21, 24, 27, 30,
    33, 36, 39, 42, 45, 48, 51, 54, 57, 60,
    62, 63, 65, 65, 65, 65, 65, 65, 65, 65,
)


def harris_zeros() -> Tuple[Point, ...]:
    """z_1, ..., z_30 in normal form (first nonzero coordinate 1)."""
    return tuple(Point.projective(*z) for z in _HARRIS_ZEROS)


def harris(system: Optional[FunctionSystem] = None) -> NamedPolynomial:
    """
    The Harris polynomial over B_{2,10}.

    Args:
        system: A projective degree-10 system in three coordinates; the
            graded lex B_{2,10} when omitted.
    """
    system = system or projective_system(2, 10)
    coefficients = [
        Scalar(_HARRIS_COEFFICIENTS.get(tuple(sorted(alpha, reverse=True)), 0))
        for alpha in system.exponents
    ]
    return NamedPolynomial("harris", system, tuple(coefficients), harris_zeros())


def table1(zeros: Optional[Sequence[Point]] = None) -> List[int]:
    """
    Ranks of DS_{k,B_{2,10}}(1, Z_k) for the prefixes Z_k of the zero list.

    Columns of each new zero are added to one growing span, so each prefix
    costs only the reduction of its three new columns.
    """
    system = projective_system(2, 10)
    zeros = harris_zeros() if zeros is None else zeros
    span = ColumnSpace(system.size)
    ranks = []
    for z in zeros:
        for column in atom_columns(system, 1, z):
            span.add(column)
        ranks.append(span.rank)
        logger.debug("harris prefix: %d zeros give rank %d", len(ranks), span.rank)
    return ranks


def increments(ranks: Sequence[int]) -> List[int]:
    """Rank increase per prefix, starting from 0."""
    return [b - a for a, b in zip([0] + list(ranks[:-1]), ranks)]


def boundary_polynomial(a) -> NamedPolynomial:
    """
    p_a = x^6 - 3a^4 x^2 + 2a^6 = (x-a)^2 (x+a)^2 (x^2 + 2a^2) over {1, x, x^2, x^6}.

    It is nonnegative on the line and vanishes exactly at a and -a.
    """
    a = Scalar.coerce(a)
    system = gapped_system([0, 1, 2, 6])
    coefficients = (2 * a ** 6, Scalar(0), -3 * a ** 4, Scalar(1))
    zeros = (Point.affine(a), Point.affine(-a)) if a else (Point.affine(a),)
    return NamedPolynomial(f"p_{a}", system, coefficients, zeros)
