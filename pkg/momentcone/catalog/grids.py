"""
The grid polynomials p (zeros {0..d-1}^n) and q (zeros {0..d}^n) and the
face dimensions of their zero sets under A_{n,2d}.
"""

import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple

from momentcone.basis.system import affine_system
from momentcone.catalog.polynomial import NamedPolynomial, poly_mul
from momentcone.config import settings
from momentcone.decompose.ground_set import GroundSet
from momentcone.exactla.matrix import Matrix, rank
from momentcone.exactla.scalar import Scalar
from momentcone.exceptions import BudgetExceededError, InvalidArgumentError

logger = logging.getLogger(__name__)

# (n, largest d) for every row block of the full table
TABLE2_LAYOUT = ((3, 15), (4, 8), (5, 7), (6, 5), (7, 4), (8, 3), (9, 3), (10, 2))


class RankMethod(str, Enum):
    AUTO = "auto"
    ELIMINATION = "elimination"
    NORMAL_FORM = "normal-form"


@dataclass(frozen=True)
class TableRow:
    """
    One cell of the grid table.

    Attributes:
        n: Number of variables.
        d: Half degree; the system is A_{n,2d}.
        primed: True for the q grid {0..d}^n, False for the p grid {0..d-1}^n.
        m: |A_{n,2d}|.
        zeros: Size of the grid.
        rank: Face dimension of the grid's curve points.
        method: How the rank was obtained.
    """

    n: int
    d: int
    primed: bool
    m: int
    zeros: int
    rank: int
    method: RankMethod = field(default=RankMethod.NORMAL_FORM, compare=False)

    @property
    def w(self) -> Fraction:
        """rank / m."""
        return Fraction(self.rank, self.m)

    @property
    def z(self) -> Fraction:
        """rank / |Z|."""
        return Fraction(self.rank, self.zeros)

    def csv(self) -> str:
        """n,d,m,|Z|,rank,rank/m,rank/|Z| with the ratios left unreduced."""
        r = self.rank
        return f"{self.n},{self.d},{self.m},{self.zeros},{r},{r}/{self.m},{r}/{self.zeros}"


@dataclass(frozen=True)
class Trend:
    """An inequality observed (or not) across computed table cells."""

    name: str
    holds: bool
    comparisons: int
    violations: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]


def _grid_factors(d: int, primed: bool) -> List[int]:
    """Ascending coefficients of the univariate factor of p or q."""
    if not primed:
        factor = [1]
        for j in range(d):
            factor = poly_mul(factor, [j * j, -2 * j, 1])
        return factor
    factor = [0, 1]
    for j in range(1, d):
        factor = poly_mul(factor, [j * j, -2 * j, 1])
    return poly_mul(factor, [d, -1])


def _grid_polynomial(name: str, n: int, d: int, primed: bool) -> NamedPolynomial:
    if n < 1 or d < 1:
        raise InvalidArgumentError(f"n and d must be at least 1, got n={n}, d={d}")
    system = affine_system(n, 2 * d)
    index = {alpha: i for i, alpha in enumerate(system.exponents)}
    coefficients = [0] * system.size
    for i in range(n):
        for power, c in enumerate(_grid_factors(d, primed)):
            if c:
                alpha = tuple(power if j == i else 0 for j in range(n))
                coefficients[index[alpha]] += c
    values = range(d + 1) if primed else range(d)
    zeros = tuple(GroundSet.grid(n, values).points)
    return NamedPolynomial(name, system, tuple(Scalar(c) for c in coefficients), zeros)


def frak_p(n: int, d: int) -> NamedPolynomial:
    """p = sum_i prod_{j=0}^{d-1} (x_i - j)^2, zero exactly on {0,...,d-1}^n."""
    return _grid_polynomial(f"p_{n},{d}", n, d, primed=False)


def frak_q(n: int, d: int) -> NamedPolynomial:
    """q = sum_i x_i prod_{j=1}^{d-1} (x_i - j)^2 (d - x_i), zero on {0,...,d}^n and nonnegative on [0,d]^n."""
    return _grid_polynomial(f"q_{n},{d}", n, d, primed=True)


def grid_rank_count(n: int, degree: int, values: int) -> int:
    """
    Rank of the curve points of a product grid under A_{n,degree}.

    With ``values`` points per coordinate the grid's vanishing ideal has a
    Groebner basis of univariate polynomials of degree ``values``, so the
    rank is the number of exponents alpha with |alpha| <= degree and every
    alpha_i < values.
    """
    counts = [1]
    for _ in range(n):
        following = [0] * (len(counts) + values - 1)
        for total, c in enumerate(counts):
            for e in range(values):
                following[total + e] += c
        counts = following
    return sum(counts[: degree + 1])


def r_prime_n2(n: int) -> int:
    """Face dimension of {0,1}^n under A_{n,2}: C(n+2, 2) - n = (n^2 + n + 2) / 2."""
    if n < 1:
        raise InvalidArgumentError(f"n must be at least 1, got {n}")
    return (n * n + n + 2) // 2


def _elimination_rank(n: int, d: int, values: int) -> int:
    system = affine_system(n, 2 * d)
    grid = GroundSet.grid(n, range(values))
    return rank(Matrix([system.values(p.coordinates) for p in grid]))


def table2(
    n: int,
    d: int,
    primed: bool = False,
    budget: Optional[int] = None,
    method: RankMethod = RankMethod.AUTO,
    elimination_limit: Optional[int] = None,
) -> TableRow:
    """
    Face dimension of Z(p) (or Z(q) when primed) under A_{n,2d}.

    Args:
        n: Number of variables.
        d: Half degree.
        primed: Use the q grid {0,...,d}^n.
        budget: Largest grid size; defaults to ``settings.budget``.
        method: ``elimination`` ranks the grid evaluation matrix exactly,
            ``normal-form`` counts standard monomials, ``auto`` picks
            elimination when the matrix has at most ``elimination_limit``
            entries.
        elimination_limit: Defaults to ``settings.elimination_limit``.

    Raises:
        BudgetExceededError: If the grid is larger than the budget.
    """
    if n < 1 or d < 1:
        raise InvalidArgumentError(f"n and d must be at least 1, got n={n}, d={d}")
    budget = settings.budget if budget is None else budget
    limit = settings.elimination_limit if elimination_limit is None else elimination_limit
    method = RankMethod(method)

    values = d + 1 if primed else d
    zeros = values ** n
    m = comb(n + 2 * d, n)
    if zeros > budget:
        logger.info("skipping n=%d d=%d primed=%s: %d zeros exceed budget %d", n, d, primed, zeros, budget)
        raise BudgetExceededError(
            f"grid of {zeros} points exceeds the budget {budget}",
            {"n": n, "d": d, "primed": primed, "zeros": zeros, "budget": budget},
        )
    if method == RankMethod.AUTO:
        method = RankMethod.ELIMINATION if zeros * m <= limit else RankMethod.NORMAL_FORM

    started = time.perf_counter()
    if method == RankMethod.ELIMINATION:
        r = _elimination_rank(n, d, values)
    else:
        r = grid_rank_count(n, 2 * d, values)
    logger.debug("grid cell n=%d d=%d primed=%s by %s: rank %d in %.3fs",
                 n, d, primed, method.value, r, time.perf_counter() - started)
    return TableRow(n=n, d=d, primed=primed, m=m, zeros=zeros, rank=r, method=method)


def table2_cells() -> Iterable[Tuple[int, int]]:
    for n, top in TABLE2_LAYOUT:
        for d in range(1, top + 1):
            yield n, d


def table2_grid(
    primed: bool = False,
    budget: Optional[int] = None,
    method: RankMethod = RankMethod.AUTO,
) -> List[TableRow]:
    """Every cell of the full layout within the budget, in (n, d) order."""
    rows = []
    for n, d in table2_cells():
        try:
            rows.append(table2(n, d, primed=primed, budget=budget, method=method))
        except BudgetExceededError:
            continue
    return rows


def _compare(
    cells: Dict[Tuple[int, int], Fraction],
    pairs: Iterable[Tuple[Tuple[int, int], Tuple[int, int]]],
    increasing: bool,
) -> Tuple[int, list]:
    count, violations = 0, []
    for a, b in pairs:
        if a in cells and b in cells:
            count += 1
            ok = cells[a] < cells[b] if increasing else cells[a] > cells[b]
            if not ok:
                violations.append((a, b))
    return count, violations


def observed_trends(rows: Iterable[TableRow]) -> List[Trend]:
    """
    Check the monotonicity pattern of the table on the given cells.

    Consecutive cells are compared (n, d) -> (n, d+1) and (n, d) -> (n+1, d);
    nothing is asserted, each trend reports whether it held.
    """
    plain: Dict[str, Dict[Tuple[int, int], Fraction]] = {"w": {}, "z": {}, "w'": {}, "z'": {}}
    for row in rows:
        suffix = "'" if row.primed else ""
        plain["w" + suffix][(row.n, row.d)] = row.w
        plain["z" + suffix][(row.n, row.d)] = row.z

    def along_d(cells, d_from=1, n_filter=lambda n: True):
        return [((n, d), (n, d + 1)) for n, d in cells if d >= d_from and n_filter(n)]

    def along_n(cells):
        return [((n, d), (n + 1, d)) for n, d in cells if n >= 3]

    specs = [
        ("w increases with d", "w", along_d(plain["w"]), True),
        ("w increases with n", "w", along_n(plain["w"]), True),
        ("z decreases with d", "z", along_d(plain["z"]), False),
        ("z decreases with n", "z", along_n(plain["z"]), False),
        ("w' decreases with d for n = 3", "w'", along_d(plain["w'"], n_filter=lambda n: n == 3), False),
        ("w' increases with d for d >= 2, n >= 4", "w'", along_d(plain["w'"], 2, lambda n: n >= 4), True),
        ("w' increases with n", "w'", along_n(plain["w'"]), True),
        ("z' decreases with d", "z'", along_d(plain["z'"]), False),
        ("z' decreases with n", "z'", along_n(plain["z'"]), False),
    ]
    trends = []
    for name, key, pairs, increasing in specs:
        count, violations = _compare(plain[key], sorted(pairs), increasing)
        trends.append(Trend(name, not violations, count, tuple(violations)))
    return trends
