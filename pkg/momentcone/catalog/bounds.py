"""
Counting bounds around Carathéodory numbers.

Everything here is closed-form arithmetic on binomial coefficients; the
theorems behind the bounds are named in each entry's ``source``.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, prod
from typing import List, Sequence, Tuple, Union

from momentcone.basis.system import FunctionSystem
from momentcone.catalog.grids import grid_rank_count
from momentcone.exactla.scalar import Exact, Scalar
from momentcone.exceptions import InvalidArgumentError
from momentcone.momentmap.moment_map import na_formula


class Space(str, Enum):
    """Where the monomial system lives."""

    AFFINE = "affine"
    PROJECTIVE = "projective"
    CUBE = "cube"
    LINE = "line"


@dataclass(frozen=True)
class FlatExtensionCounts:
    """
    How far a flat extension of the moment matrix has to grow.

    Attributes:
        matrix_size: Side of the moment matrix of the given data, C(d+n, n).
        degree: Smallest D with C(D+n, n) >= atoms + 1.
        lower: Fewest moments to add, C(2(D-1)+n, n) - C(2d+n, n).
        upper: Most moments to add, C(2D+n, n) - C(2d+n, n).
    """

    matrix_size: int
    degree: int
    lower: int
    upper: int


@dataclass(frozen=True)
class Bound:
    kind: str
    value: Union[int, Fraction]
    source: str


@dataclass(frozen=True)
class CaraBounds:
    """
    Known bounds on the Carathéodory number C_A of a monomial system.

    Attributes:
        lower: Largest known lower bound.
        upper: Smallest known upper bound.
        sard_lower: ceil(m / (n+1)) <= N_A <= C_A.
        signed_upper: Bound on the signed Carathéodory number.
        entries: Every bound that applies, with its source.
    """

    n: int
    degree: int
    space: Space
    m: int
    lower: int
    upper: int
    sard_lower: int
    signed_upper: int
    entries: Tuple[Bound, ...]


def flat_extension_counts(n: int, d: int, atoms: int) -> FlatExtensionCounts:
    """
    Moments to add before a flat extension of A_{n,2d} data can carry ``atoms`` atoms.

    A flat moment matrix of degree D has at most C(D+n, n) atoms, so the
    extension must reach the first such D with room for atoms + 1.
    """
    if n < 1 or d < 0 or atoms < 0:
        raise InvalidArgumentError(f"invalid arguments n={n}, d={d}, atoms={atoms}")
    given = comb(2 * d + n, n)
    degree = 0
    while comb(degree + n, n) < atoms + 1:
        degree += 1
    lower = max(0, comb(2 * (degree - 1) + n, n) - given) if degree else 0
    upper = max(0, comb(2 * degree + n, n) - given)
    return FlatExtensionCounts(matrix_size=comb(d + n, n), degree=degree, lower=lower, upper=upper)


def square_dimension(system: FunctionSystem) -> int:
    """dim lin A^2: the number of distinct exponent sums alpha + beta."""
    if not system.is_monomial:
        raise InvalidArgumentError("square dimension needs a monomial system")
    exponents = system.exponents
    sums = {
        tuple(a + b for a, b in zip(alpha, beta))
        for i, alpha in enumerate(exponents)
        for beta in exponents[i:]
    }
    return len(sums)


def pythagoras_lower(system: FunctionSystem) -> int:
    """ceil(dim lin A^2 / |A|), a lower bound on the Pythagoras number of A^2."""
    return -(-square_dimension(system) // system.size)


def tensor_rank_lower(dims: Sequence[int]) -> int:
    """ceil(n_1 ... n_d / (n_1 + ... + n_d - d + 1)), a lower bound on real tensor rank."""
    if not dims or any(n < 1 for n in dims):
        raise InvalidArgumentError(f"tensor dimensions must be positive, got {list(dims)}")
    return -(-prod(dims) // (sum(dims) - len(dims) + 1))


def quadratic_cone_member(s: Sequence[Union[Exact, str]]) -> bool:
    """
    Membership in the moment cone of {1, x, x^2} on the real line.

    s is a moment sequence iff s = 0, or s_0 > 0 and s_1^2 <= s_0 s_2.
    """
    if len(s) != 3:
        raise InvalidArgumentError("quadratic moment sequences have three entries")
    s0, s1, s2 = (Scalar.coerce(v) for v in s)
    if not (s0 or s1 or s2):
        return True
    return s0 > 0 and s1 * s1 <= s0 * s2


def cara_bounds(n: int, degree: int, space: Union[Space, str] = Space.AFFINE) -> CaraBounds:
    """
    Collect the bounds on C_A for A_{n,degree} (or B_{n,degree}) that apply.

    Args:
        n: Number of variables.
        degree: Degree of the system (the full degree, e.g. 10 for B_{2,10}).
        space: affine (R^n), projective (P^n), cube ([0,1]^n) or line (R).
    """
    space = Space(space)
    if n < 1 or degree < 1:
        raise InvalidArgumentError(f"n and degree must be at least 1, got n={n}, degree={degree}")
    if space == Space.LINE and n != 1:
        raise InvalidArgumentError("the line has n = 1")
    m = comb(n + degree, n)
    sard = -(-m // (n + 1))
    entries: List[Bound] = [
        Bound("lower", sard, "Sard: ceil(m/(n+1)) <= N_A <= C_A"),
        Bound("upper", m, "Richter: C_A <= m"),
    ]
    if n == 1 and space in (Space.LINE, Space.AFFINE):
        exact = -(-(degree + 1) // 2)
        entries.append(Bound("lower", exact, "one variable: C_A = ceil((d+1)/2)"))
        entries.append(Bound("upper", exact, "one variable: C_A = ceil((d+1)/2)"))
    else:
        entries.append(Bound("upper", m - 1, "connected curve image: C_A <= m - 1"))

    half, odd = divmod(degree, 2)
    if space == Space.PROJECTIVE and not odd:
        entries.append(Bound("upper", m - n, "projective even degree: C_A <= C(n+2d, n) - n"))
        if n == 2 and half >= 5:
            entries.append(Bound("upper", 3 * half * (half - 1) // 2 + 2, "plane projective: 3/2 d(d-1) + 2"))
    if space == Space.AFFINE and n == 2 and odd:
        top = (degree + 1) // 2
        entries.append(Bound("upper", 3 * top * (top - 1) // 2 + 1, "plane odd degree 2d-1: 3/2 d(d-1) + 1"))
    if space == Space.AFFINE and n > 1 and not odd:
        entries.append(Bound("lower", grid_rank_count(n, degree, half), "zeros of p: face dimension of {0..d-1}^n"))
    if space == Space.CUBE and not odd:
        entries.append(Bound("lower", grid_rank_count(n, degree, half + 1), "zeros of q: face dimension of {0..d}^n"))

    na = na_formula(n, degree)
    entries.append(Bound("lower", na, "generic rank: N_A <= C_A"))
    lower = max(b.value for b in entries if b.kind == "lower")
    upper = min(b.value for b in entries if b.kind == "upper")
    return CaraBounds(
        n=n,
        degree=degree,
        space=space,
        m=m,
        lower=lower,
        upper=upper,
        sard_lower=sard,
        signed_upper=min(2 * na, m - 1),
        entries=tuple(entries),
    )

