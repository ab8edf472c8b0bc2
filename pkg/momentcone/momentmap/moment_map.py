"""
The moment map S_{k,A}(C, X) = sum_i c_i s_A(x_i) and its total derivative.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from math import ceil, comb
from typing import List, Optional

import numpy as np

from momentcone.basis.points import Chart, Point
from momentcone.basis.system import FunctionSystem
from momentcone.config import settings
from momentcone.exactla.matrix import Matrix, rank
from momentcone.exactla.scalar import Exact, demote
from momentcone.exceptions import InvalidArgumentError, NotDifferentiableError
from momentcone.momentmap.measure import AtomicMeasure, MomentSequence, sum_columns

logger = logging.getLogger(__name__)

# (n, d) -> N_{A_{n,d}} where the generic count fails
_NA_EXCEPTIONS = {(4, 3): 8, (2, 4): 6, (3, 4): 10, (4, 4): 15}


class Regularity(str, Enum):
    REGULAR = "regular"
    SINGULAR = "singular"


@dataclass(frozen=True)
class NAEstimate:
    """
    Result of the randomized search for N_A.

    Attributes:
        count: Smallest k at which a sampled measure reached full rank.
        witness: The measure (unit masses) proving N_A <= count.
        trials: Number of sampled measures across all k.
        first_sampled: Smallest k that was sampled; below it k(n+1) < m
            columns rule out full rank.
    """

    count: int
    witness: AtomicMeasure
    trials: int
    first_sampled: int


def moments(system: FunctionSystem, measure: AtomicMeasure) -> MomentSequence:
    """
    Moment sequence of an atomic measure.

    Raises:
        ChartMismatchError: If an atom lives in another chart.
        DomainError: If an atom is outside a custom system's domain.
    """
    columns = []
    for point in measure.points:
        system.check_point(point)
        columns.append(system.values(point.coordinates))
    return MomentSequence(system, sum_columns(columns, measure.masses, system.size))


def atom_columns(system: FunctionSystem, mass: Exact, point: Point) -> List[list]:
    """
    Jacobian columns contributed by one atom.

    Affine systems give s_A(x) followed by c * d/dx_j s_A(x) for j = 1..n.
    Projective systems give c * d/dx_j s_A(x) for all n+1 homogeneous
    coordinates; the mass column is a combination of these by Euler's
    identity and is left out.
    """
    if not system.differentiable:
        raise NotDifferentiableError(f"{system!r} has no derivative handles")
    system.check_point(point)
    c = demote(mass)
    rows = system.gradient_values(point.coordinates)
    columns = []
    if system.chart == Chart.AFFINE:
        columns.append(system.values(point.coordinates))
    for j in range(system.point_dim):
        columns.append([demote(c * row[j]) if row[j] else row[j] for row in rows])
    return columns


def jacobian(system: FunctionSystem, measure: AtomicMeasure) -> Matrix:
    """Total derivative DS_{k,A}(C, X) as an m x k(n+1) matrix, atom by atom."""
    columns: List[list] = []
    for mass, point in measure:
        columns.extend(atom_columns(system, mass, point))
    return Matrix.from_columns(columns, rows=system.size)


def classify(system: FunctionSystem, measure: AtomicMeasure) -> Regularity:
    """Regular when the total derivative has full rank m."""
    r = rank(jacobian(system, measure))
    logger.debug("rank of DS for %d atoms: %d of %d", len(measure), r, system.size)
    return Regularity.REGULAR if r == system.size else Regularity.SINGULAR


def _distinct_points(system: FunctionSystem, k: int, rng: np.random.Generator, box: int) -> List[Point]:
    points: List[Point] = []
    seen = set()
    while len(points) < k:
        p = system.sample_point(rng, box)
        if p not in seen:
            seen.add(p)
            points.append(p)
    return points


def estimate_NA(
    system: FunctionSystem,
    seed: Optional[int] = None,
    max_trials: Optional[int] = None,
    box: Optional[int] = None,
) -> NAEstimate:
    """
    Search for the smallest k with a full-rank total derivative.

    For each k, up to ``max_trials`` measures with unit masses on k distinct
    random integer points are ranked exactly; trial t at size k draws from
    the seed sequence (seed, k, t), so results do not depend on run order.

    The returned count is an upper bound with a witness. Failure of all
    trials below it is probabilistic evidence only, except for k with
    k(n+1) < m, which cannot reach rank m and are not sampled.

    Args:
        system: A differentiable system.
        seed: Base seed; defaults to ``settings.seed``.
        max_trials: Trials per k; defaults to ``settings.na_max_trials``.
        box: Coordinate range [-box, box]; defaults to ``settings.na_box``.
    """
    if not system.differentiable:
        raise NotDifferentiableError(f"{system!r} has no derivative handles")
    seed = settings.seed if seed is None else seed
    max_trials = settings.na_max_trials if max_trials is None else max_trials
    box = settings.na_box if box is None else box
    if max_trials < 1:
        raise InvalidArgumentError(f"max_trials must be positive, got {max_trials}")

    m = system.size
    first = max(1, ceil(m / (system.n + 1)))
    trials = 0
    for k in range(first, m + 1):
        for t in range(max_trials):
            rng = np.random.default_rng([seed, k, t])
            measure = AtomicMeasure.unit(_distinct_points(system, k, rng, box))
            trials += 1
            if rank(jacobian(system, measure)) == m:
                logger.debug("N_A <= %d found on trial %d", k, t)
                return NAEstimate(count=k, witness=measure, trials=trials, first_sampled=first)
        logger.debug("no full-rank measure with %d atoms in %d trials", k, max_trials)
    raise InvalidArgumentError(f"no full-rank measure found for {system!r} with up to {m} atoms")


def na_formula(n: int, d: int) -> int:
    """
    N_A for A_{n,d}: ceil(C(n+d, n) / (n+1)) except for quadrics and four
    exceptional pairs.
    """
    if n < 1 or d < 1:
        raise InvalidArgumentError(f"n and d must be at least 1, got n={n}, d={d}")
    if d == 2:
        return n + 1
    if (n, d) in _NA_EXCEPTIONS:
        return _NA_EXCEPTIONS[(n, d)]
    return -(-comb(n + d, n) // (n + 1))
