"""
Worked example systems for the interplay of C_A = N_A and
"interior iff regular", plus the small non-polynomial system used for
maximal masses.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from momentcone.basis.points import Point
from momentcone.basis.system import (
    FunctionSystem,
    MonomialOrder,
    SystemKind,
    affine_system,
    gapped_system,
    make_system,
    projective_system,
)
from momentcone.catalog.harris import boundary_polynomial
from momentcone.decompose.ground_set import GroundSet
from momentcone.exactla.matrix import det, kernel, rank
from momentcone.exactla.scalar import Scalar
from momentcone.exceptions import InvalidArgumentError
from momentcone.momentmap.measure import AtomicMeasure, MomentSequence
from momentcone.momentmap.moment_map import jacobian

logger = logging.getLogger(__name__)

_MULTI_POINTS = (
    (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1),
    (0, 1, 1), (1, -1, 0), (1, 0, -1), (1, 1, 1), (1, -1, 1),
)


@dataclass(frozen=True)
class ExampleSystem:
    """
    A function system with the points and functional that make it interesting.

    Attributes:
        name: Catalog key.
        system: The function system.
        points: Atoms of the singular (or regular) measure under discussion.
        functional: Coefficients of a p in lin A certifying singularity, if any.
        cara: The Carathéodory number C_A.
        na: N_A.
        cara_equals_na: Whether C_A = N_A.
        interior_iff_regular: Whether interior points of the moment cone are
            exactly the regular moment sequences.
        description: One line on what the example shows.
    """

    name: str
    system: FunctionSystem
    points: Tuple[Point, ...]
    functional: Optional[Tuple[Scalar, ...]]
    cara: int
    na: int
    cara_equals_na: bool
    interior_iff_regular: bool
    description: str

    def measure(self) -> AtomicMeasure:
        return AtomicMeasure.unit(self.points)

    def jacobian_rank(self) -> int:
        """Rank of the total derivative at unit masses on ``points``."""
        return rank(jacobian(self.system, self.measure()))

    def functional_at(self, *coordinates) -> Scalar:
        """Value of the functional at raw coordinates."""
        if self.functional is None:
            raise InvalidArgumentError(f"example {self.name} has no functional")
        values = self.system.evaluate_coordinates(coordinates)
        return sum((c * v for c, v in zip(self.functional, values) if c), Scalar(0))


def _left_kernel_functional(system: FunctionSystem, points: Tuple[Point, ...]) -> Tuple[Scalar, ...]:
    """The first integral primitive p with p and its gradient vanishing at every point."""
    relations = kernel(jacobian(system, AtomicMeasure.unit(points)).T)
    logger.debug("left kernel of DS for %r at %d points has dimension %d", system, len(points), len(relations))
    if not relations:
        raise InvalidArgumentError(f"the total derivative of {system!r} at these points has full rank")
    return relations[0]


def complete_example(d: int = 4) -> ExampleSystem:
    k = -(-(d + 1) // 2)
    return ExampleSystem(
        name="complete",
        system=affine_system(1, d),
        points=tuple(Point.affine(i) for i in range(k)),
        functional=None,
        cara=k,
        na=k,
        cara_equals_na=True,
        interior_iff_regular=True,
        description=f"all monomials up to x^{d}: C_A = N_A = ceil((d+1)/2)",
    )


def inter_singular_example() -> ExampleSystem:
    system = gapped_system([0, 2, 3, 5, 6])
    points = (Point.affine(1), Point.affine(2))
    return ExampleSystem(
        name="inter-singular",
        system=system,
        points=points,
        functional=_left_kernel_functional(system, points),
        cara=3,
        na=3,
        cara_equals_na=True,
        interior_iff_regular=False,
        description="singular measure whose moments lie in the interior of the cone",
    )


def boundary_singular_example() -> ExampleSystem:
    p = boundary_polynomial(1)
    return ExampleSystem(
        name="boundary-singular",
        system=p.system,
        points=p.zeros,
        functional=p.coefficients,
        cara=3,
        na=2,
        cara_equals_na=False,
        interior_iff_regular=True,
        description="singular exactly at atoms a, -a, where p_a >= 0 puts the moments on the boundary",
    )


def inter_singular_multi_example() -> ExampleSystem:
    system = projective_system(2, 6, order=MonomialOrder.TRAILING)
    points = tuple(Point.projective(*z) for z in _MULTI_POINTS)
    return ExampleSystem(
        name="inter-singular-multi",
        system=system,
        points=points,
        functional=_left_kernel_functional(system, points),
        cara=11,
        na=10,
        cara_equals_na=False,
        interior_iff_regular=False,
        description="ternary sextics: ten atoms with rank 27 < 28 and an indefinite kernel functional",
    )


_EXAMPLES: Dict[str, Callable[[], ExampleSystem]] = {
    "complete": complete_example,
    "inter-singular": inter_singular_example,
    "boundary-singular": boundary_singular_example,
    "inter-singular-multi": inter_singular_multi_example,
}


def example_systems(d: int = 4) -> List[ExampleSystem]:
    """The four combinations of C_A = N_A and "interior iff regular", in catalog order."""
    return [complete_example(d), inter_singular_example(), boundary_singular_example(), inter_singular_multi_example()]


def example_system(name: str) -> ExampleSystem:
    try:
        return _EXAMPLES[name]()
    except KeyError:
        raise InvalidArgumentError(f"unknown example {name!r}; choose from {sorted(_EXAMPLES)}") from None


def boundary_determinant(x, y) -> Tuple[Scalar, Scalar]:
    """
    det DS_2(1, (x, y)) for {1, x, x^2, x^6} next to its factored form
    2 (x - y)^4 (x + y) (2x^2 + xy + 2y^2).
    """
    system = gapped_system([0, 1, 2, 6])
    x, y = Scalar.coerce(x), Scalar.coerce(y)
    if x == y:
        raise InvalidArgumentError("the two atoms must differ")
    computed = det(jacobian(system, AtomicMeasure.unit([Point.affine(x), Point.affine(y)])))
    factored = 2 * (x - y) ** 4 * (x + y) * (2 * x * x + x * y + 2 * y * y)
    return computed, factored


def kappa_system(alpha: int = 1) -> FunctionSystem:
    """{1, x, f_alpha} on the line with f_alpha(x) = x^alpha for x > 0 and 0 otherwise."""
    if alpha < 1:
        raise InvalidArgumentError(f"alpha must be a positive integer, got {alpha}")

    def f(coords):
        x = coords[0]
        return x ** alpha if x > 0 else 0

    return make_system(
        SystemKind.CUSTOM,
        n=1,
        functions=[lambda c: 1, lambda c: c[0], f],
        labels=["1", "x", f"f{alpha}"],
        name=f"kappa_{alpha}",
    )


def kappa_example(alpha: int = 1) -> Tuple[FunctionSystem, GroundSet, MomentSequence, Point]:
    """s = s_A(0) + s_A(-2) on X = {-2, 0, 1}, evaluated at x = -2."""
    system = kappa_system(alpha)
    ground = GroundSet([Point.affine(-2), Point.affine(0), Point.affine(1)])
    s = MomentSequence(system, [2, -2, 0])
    return system, ground, s, Point.affine(-2)


def named_system(name: str) -> FunctionSystem:
    """Catalog systems addressable by name from the CLI and the API."""
    if name == "harris":
        return projective_system(2, 10)
    if name.startswith("kappa"):
        suffix = name[len("kappa"):].lstrip("_-")
        if suffix and not suffix.isdigit():
            raise InvalidArgumentError(f"unknown system {name!r}")
        return kappa_system(int(suffix) if suffix else 1)
    return example_system(name).system
