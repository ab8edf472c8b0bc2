"""
Carathéodory-type reduction of atomic measures.

``reduce`` shrinks a positive measure to at most m atoms without changing
its moments by walking along kernel directions of the point-evaluation
matrix until one mass hits zero. ``signed_decompose`` writes any sequence as
a signed combination of at most m curve points of a ground set.
"""

import logging
from typing import List, Union

from momentcone.basis.system import FunctionSystem
from momentcone.decompose.ground_set import GroundSet
from momentcone.exactla.matrix import ColumnSpace, Matrix, kernel, solve
from momentcone.exactla.scalar import Exact, Scalar
from momentcone.exceptions import CertificateError, GroundSetError, InvalidMeasureError
from momentcone.momentmap.measure import AtomicMeasure, MomentSequence, as_sequence
from momentcone.momentmap.moment_map import moments

logger = logging.getLogger(__name__)


def _step(masses: List[Scalar], direction: List[Scalar]):
    """Largest t >= 0 with masses - t*direction >= 0, or None if unbounded."""
    best = None
    for c, w in zip(masses, direction):
        if w > 0:
            t = c / w
            if best is None or t < best:
                best = t
    return best


def reduce(system: FunctionSystem, measure: AtomicMeasure) -> AtomicMeasure:
    """
    Reduce a positive measure to linearly independent curve points.

    Args:
        system: The function system.
        measure: An unsigned measure.

    Returns:
        A measure with the same moments, support inside the original one,
        strictly positive masses and at most rank{s_A(x_i)} <= m atoms.

    Raises:
        InvalidMeasureError: If the measure is signed.
    """
    if measure.signed:
        raise InvalidMeasureError("reduction needs an unsigned measure")
    target = moments(system, measure)

    points = list(measure.points)
    masses = list(measure.masses)
    columns = [system.values(p.coordinates) for p in points]
    passes = 0
    while points:
        directions = kernel(Matrix.from_columns(columns, rows=system.size))
        if not directions:
            break
        w = list(directions[0])
        forward = _step(masses, w)
        backward = _step(masses, [-v for v in w])
        if forward is None or (backward is not None and backward < forward):
            t, w = backward, [-v for v in w]
        else:
            t = forward
        masses = [c - t * v for c, v in zip(masses, w)]
        keep = [i for i, c in enumerate(masses) if c]
        logger.debug("reduction pass %d: step %s removes %d atoms", passes, t, len(points) - len(keep))
        points = [points[i] for i in keep]
        masses = [masses[i] for i in keep]
        columns = [columns[i] for i in keep]
        passes += 1

    reduced = AtomicMeasure(zip(masses, points))
    if moments(system, reduced) != target:
        raise CertificateError("reduction changed the moments")
    return reduced


def signed_decompose(
    system: FunctionSystem,
    s: Union[MomentSequence, List[Exact]],
    ground: GroundSet,
) -> AtomicMeasure:
    """
    Signed representing measure on at most m points of a ground set.

    Points are picked greedily in ground-set order whenever they raise the
    rank; the masses then come from one exact solve.

    Raises:
        GroundSetError: If the curve points of the ground set do not span R^m.
    """
    s = as_sequence(system, s)
    if s.is_zero():
        return AtomicMeasure(signed=True)

    span = ColumnSpace(system.size)
    chosen, columns = [], []
    for point, column in zip(ground, ground.evaluate(system)):
        if span.add(column):
            chosen.append(point)
            columns.append(column)
            if span.rank == system.size:
                break
    if span.rank < system.size:
        raise GroundSetError(
            f"ground set spans a subspace of dimension {span.rank} < {system.size}",
            {"rank": span.rank},
        )

    masses = solve(Matrix.from_columns(columns), s.values)
    measure = AtomicMeasure(zip(masses, chosen), signed=True)
    if moments(system, measure) != s:
        raise CertificateError("signed decomposition does not reproduce the sequence")
    return measure
