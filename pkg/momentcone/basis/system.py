"""
Function systems A = (a_1, ..., a_m) and their moment curves.

A system is either a list of monomials (affine, projective or a gapped
univariate list) or a list of user supplied callables. Monomial systems are
evaluated with per-coordinate power tables; callables receive the point's
coordinates as a tuple of Scalars.
"""

import logging
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from momentcone.basis.points import Chart, Point
from momentcone.exactla.matrix import Matrix, rank
from momentcone.exactla.scalar import Exact, Scalar, demote
from momentcone.exceptions import (
    ChartMismatchError,
    DomainError,
    InvalidArgumentError,
    NotDifferentiableError,
    SystemDefinitionError,
)

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Coordinates = Tuple[Scalar, ...]
Handle = Callable[[Coordinates], Exact]
DomainPredicate = Callable[[Coordinates], bool]

_ONE = Fraction(1)
_ZERO = Fraction(0)


class SystemKind(str, Enum):
    """How a system was described."""

    AFFINE_MONOMIAL = "affine-monomial"
    PROJECTIVE_MONOMIAL = "projective-monomial"
    GAPPED_1D = "gapped-1d"
    CUSTOM = "custom"


class MonomialOrder(str, Enum):
    """Order of a generated monomial list.

    ``grlex`` sorts by total degree, then by exponent tuple in descending
    lexicographic order. ``trailing`` is meant for homogeneous lists: it
    sorts by the exponent of the last coordinate ascending, then by the
    remaining exponents in descending lexicographic order, which lists
    B_{2,6} as x0^6, x0^5 x1, ..., x1^6, x0^5 x2, ..., x2^6.
    """

    GRLEX = "grlex"
    TRAILING = "trailing"


def _compositions(total: int, parts: int) -> Iterator[Exponent]:
    """Exponent tuples of length ``parts`` summing to ``total``, descending lex."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def graded_exponents(n: int, d: int) -> List[Exponent]:
    """All exponents of A_{n,d} in graded lex order."""
    exponents: List[Exponent] = []
    for degree in range(d + 1):
        exponents.extend(_compositions(degree, n))
    return exponents


def homogeneous_exponents(n: int, d: int, order: MonomialOrder = MonomialOrder.GRLEX) -> List[Exponent]:
    """All exponents of B_{n,d} (n+1 coordinates, total degree d)."""
    exponents = list(_compositions(d, n + 1))
    if MonomialOrder(order) == MonomialOrder.TRAILING:
        exponents.sort(key=lambda alpha: (alpha[-1], tuple(-e for e in alpha[:-1])))
    return exponents


def monomial_label(alpha: Exponent, first_index: int = 1) -> str:
    """Render ``x1^2*x3`` style labels; univariate exponents use plain ``x``."""
    if not any(alpha):
        return "1"
    factors = []
    for i, e in enumerate(alpha):
        if not e:
            continue
        name = "x" if len(alpha) == 1 else f"x{i + first_index}"
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


class FunctionSystem:
    """
    An ordered, linearly independent list of real functions.

    Attributes:
        kind: How the system was described.
        n: Dimension of the ambient space.
        chart: Affine or projective.
        degree: Largest total degree for monomial systems, else None.
        order: Generation order of monomial lists.
        labels: One human-readable label per function.
        exponents: Exponent tuples for monomial systems, else None.
    """

    def __init__(
        self,
        kind: SystemKind,
        n: int,
        chart: Chart,
        labels: Sequence[str],
        exponents: Optional[Sequence[Exponent]] = None,
        functions: Optional[Sequence[Handle]] = None,
        derivatives: Optional[Sequence[Sequence[Handle]]] = None,
        domain: Optional[DomainPredicate] = None,
        degree: Optional[int] = None,
        order: MonomialOrder = MonomialOrder.GRLEX,
        name: Optional[str] = None,
    ):
        self.kind = SystemKind(kind)
        self.n = n
        self.chart = Chart(chart)
        self.labels = tuple(labels)
        self.exponents = tuple(tuple(a) for a in exponents) if exponents is not None else None
        self.degree = degree
        self.order = MonomialOrder(order)
        self.name = name
        self._functions = tuple(functions) if functions is not None else None
        self._derivatives = tuple(tuple(row) for row in derivatives) if derivatives is not None else None
        self._domain = domain

        if self.exponents is not None:
            width = self.point_dim
            self._max_power = [max((a[i] for a in self.exponents), default=0) for i in range(width)]

    @property
    def size(self) -> int:
        """Number m of functions."""
        return len(self.labels)

    def __len__(self) -> int:
        return self.size

    @property
    def point_dim(self) -> int:
        """Number of coordinates of a point: n, or n+1 for projective systems."""
        return self.n + 1 if self.chart == Chart.PROJECTIVE else self.n

    @property
    def is_monomial(self) -> bool:
        return self.exponents is not None

    @property
    def differentiable(self) -> bool:
        return self.is_monomial or self._derivatives is not None

    def __repr__(self) -> str:
        tag = self.name or self.kind.value
        return f"FunctionSystem({tag}, n={self.n}, m={self.size}, chart={self.chart.value})"

    def check_point(self, point: Point) -> None:
        """
        Check that a point can be fed to this system.

        Raises:
            ChartMismatchError: If the chart or coordinate count disagrees.
            DomainError: If a custom system's domain predicate rejects it.
        """
        if point.chart != self.chart:
            raise ChartMismatchError(
                f"{point} is a {point.chart.value} point but the system is {self.chart.value}"
            )
        if len(point) != self.point_dim:
            raise ChartMismatchError(
                f"{point} has {len(point)} coordinates, the system expects {self.point_dim}"
            )
        if self._domain is not None and not self._domain(point.coordinates):
            raise DomainError(f"{point} lies outside the domain of {self!r}")

    def make_point(self, coordinates: Sequence[Union[Exact, str]]) -> Point:
        """Build a point in this system's chart and check it."""
        point = Point(coordinates, self.chart)
        self.check_point(point)
        return point

    def _power_tables(self, coords: Sequence[Exact]) -> List[list]:
        tables = []
        for c, top in zip(coords, self._max_power):
            c = demote(c)
            table = [_ONE]
            for _ in range(top):
                table.append(demote(table[-1] * c))
            tables.append(table)
        return tables

    def values(self, coords: Sequence[Exact]) -> list:
        """Evaluate every function at raw coordinates; entries are Fractions or Scalars.

        No chart normalization or domain check happens here.
        """
        if self.exponents is not None:
            tables = self._power_tables(coords)
            out = []
            for alpha in self.exponents:
                v = _ONE
                for table, e in zip(tables, alpha):
                    if e:
                        v = v * table[e]
                out.append(demote(v))
            return out
        point = tuple(Scalar.coerce(c) for c in coords)
        return [demote(Scalar.coerce(f(point))) for f in self._functions]

    def evaluate(self, point: Point) -> Tuple[Scalar, ...]:
        """The moment curve s_A(x) = (a_1(x), ..., a_m(x))."""
        self.check_point(point)
        return tuple(Scalar.coerce(v) for v in self.values(point.coordinates))

    def evaluate_coordinates(self, coordinates: Sequence[Union[Exact, str]]) -> Tuple[Scalar, ...]:
        """Evaluate at a raw coordinate vector without projective normalization."""
        coords = [Scalar.coerce(c) for c in coordinates]
        if len(coords) != self.point_dim:
            raise ChartMismatchError(f"expected {self.point_dim} coordinates, got {len(coords)}")
        return tuple(Scalar.coerce(v) for v in self.values(coords))

    def gradient_values(self, coords: Sequence[Exact]) -> List[list]:
        """Rows ``[d/dx_j a_i(x) for j]`` at raw coordinates."""
        if self.exponents is not None:
            tables = self._power_tables(coords)
            rows = []
            for alpha in self.exponents:
                row = []
                for j, ej in enumerate(alpha):
                    if not ej:
                        row.append(_ZERO)
                        continue
                    v = Fraction(ej)
                    for i, (table, e) in enumerate(zip(tables, alpha)):
                        power = e - 1 if i == j else e
                        if power:
                            v = v * table[power]
                    row.append(demote(v))
                rows.append(row)
            return rows
        if self._derivatives is None:
            raise NotDifferentiableError(f"{self!r} has no derivative handles")
        point = tuple(Scalar.coerce(c) for c in coords)
        return [[demote(Scalar.coerce(h(point))) for h in row] for row in self._derivatives]

    def gradient(self, point: Point) -> Matrix:
        """The m x point_dim matrix of partial derivatives at a point."""
        if not self.differentiable:
            raise NotDifferentiableError(f"{self!r} has no derivative handles")
        self.check_point(point)
        return Matrix(self.gradient_values(point.coordinates), cols=self.point_dim)

    def apply(self, coefficients: Sequence[Exact], point: Point) -> Scalar:
        """Value p(x) of p = sum_i coefficients[i] * a_i."""
        if len(coefficients) != self.size:
            raise InvalidArgumentError(
                f"{len(coefficients)} coefficients given for a system of size {self.size}"
            )
        total = Scalar(0)
        for c, v in zip(coefficients, self.evaluate(point)):
            if c:
                total = total + Scalar.coerce(c) * v
        return total

    def sample_point(self, rng: np.random.Generator, box: int, rational: bool = False) -> Point:
        """
        Draw a random point with coordinates in [-box, box].

        Integer coordinates by default; with ``rational`` each coordinate is
        divided by a random denominator in [1, box]. Custom systems retry
        until the domain predicate accepts the draw.
        """
        for _ in range(1000):
            coords = []
            for _ in range(self.point_dim):
                numerator = int(rng.integers(-box, box + 1))
                if rational:
                    coords.append(Fraction(numerator, int(rng.integers(1, box + 1))))
                else:
                    coords.append(Fraction(numerator))
            if self.chart == Chart.PROJECTIVE and not any(coords):
                continue
            point = Point(coords, self.chart)
            if self._domain is None or self._domain(point.coordinates):
                return point
        raise DomainError(f"could not sample a point in the domain of {self!r}")


def make_system(
    kind: Union[SystemKind, str],
    n: Optional[int] = None,
    d: Optional[int] = None,
    exponents: Optional[Sequence[Union[int, Sequence[int]]]] = None,
    functions: Optional[Sequence[Handle]] = None,
    derivatives: Optional[Sequence[Sequence[Handle]]] = None,
    domain: Optional[DomainPredicate] = None,
    labels: Optional[Sequence[str]] = None,
    order: Union[MonomialOrder, str] = MonomialOrder.GRLEX,
    name: Optional[str] = None,
) -> FunctionSystem:
    """
    Build a function system.

    Args:
        kind: affine-monomial, projective-monomial, gapped-1d or custom.
        n: Ambient dimension (not needed for gapped-1d).
        d: Degree; generates all monomials of A_{n,d} or B_{n,d}.
        exponents: Explicit exponent list instead of ``d``; kept in the
            given order. Plain integers are accepted for gapped-1d.
        functions: Callables for custom systems.
        derivatives: Per function, one callable per coordinate.
        domain: Predicate on coordinates for custom systems.
        labels: Optional labels, one per function.
        order: Order of generated monomial lists.
        name: Optional display name.

    Returns:
        The FunctionSystem.

    Raises:
        SystemDefinitionError: For empty lists, duplicate or malformed
            exponents, or inconsistent degrees.
    """
    kind = SystemKind(kind)
    order = MonomialOrder(order)

    if kind == SystemKind.CUSTOM:
        if not functions:
            raise SystemDefinitionError("a custom system needs at least one function")
        n = 1 if n is None else n
        if n < 1:
            raise SystemDefinitionError(f"ambient dimension must be at least 1, got {n}")
        if derivatives is not None:
            if len(derivatives) != len(functions) or any(len(row) != n for row in derivatives):
                raise SystemDefinitionError("derivatives need one row of n handles per function")
        if labels is None:
            labels = [f"f{i + 1}" for i in range(len(functions))]
        if len(labels) != len(functions):
            raise SystemDefinitionError("one label per function is required")
        return FunctionSystem(
            kind, n, Chart.AFFINE, labels, functions=functions, derivatives=derivatives,
            domain=domain, name=name,
        )

    if kind == SystemKind.GAPPED_1D:
        if not exponents:
            raise SystemDefinitionError("a gapped system needs a nonempty exponent list")
        listed = [tuple(e) if isinstance(e, (list, tuple)) else (e,) for e in exponents]
        if any(len(a) != 1 for a in listed):
            raise SystemDefinitionError("gapped-1d exponents must be single integers")
        n, chart = 1, Chart.AFFINE
    else:
        if n is None or n < 1:
            raise SystemDefinitionError(f"ambient dimension must be at least 1, got {n}")
        chart = Chart.PROJECTIVE if kind == SystemKind.PROJECTIVE_MONOMIAL else Chart.AFFINE
        if exponents is None:
            if d is None or d < 0:
                raise SystemDefinitionError(f"degree must be nonnegative, got {d}")
            if chart == Chart.PROJECTIVE:
                listed = homogeneous_exponents(n, d, order)
            else:
                listed = graded_exponents(n, d)
        else:
            if not exponents:
                raise SystemDefinitionError("empty exponent list")
            listed = [tuple(int(e) for e in alpha) for alpha in exponents]
            width = n + 1 if chart == Chart.PROJECTIVE else n
            if any(len(a) != width for a in listed):
                raise SystemDefinitionError(f"every exponent needs {width} entries")
            if chart == Chart.PROJECTIVE:
                degrees = {sum(a) for a in listed}
                if len(degrees) != 1 or (d is not None and degrees != {d}):
                    raise SystemDefinitionError("projective exponents must share one total degree")

    if any(e < 0 for a in listed for e in a):
        raise SystemDefinitionError("exponents must be nonnegative")
    if len(set(listed)) != len(listed):
        raise SystemDefinitionError("duplicate exponents")

    first_index = 0 if chart == Chart.PROJECTIVE else 1
    if labels is None:
        labels = [monomial_label(a, first_index) for a in listed]
    if len(labels) != len(listed):
        raise SystemDefinitionError("one label per function is required")
    degree = max(sum(a) for a in listed)
    return FunctionSystem(
        kind, n, chart, labels, exponents=listed, degree=degree, order=order, name=name,
    )


def affine_system(n: int, d: int) -> FunctionSystem:
    """A_{n,d}: all monomials of degree at most d in n variables."""
    return make_system(SystemKind.AFFINE_MONOMIAL, n=n, d=d, name=f"A_{n},{d}")


def projective_system(n: int, d: int, order: Union[MonomialOrder, str] = MonomialOrder.GRLEX) -> FunctionSystem:
    """B_{n,d}: all monomials of degree exactly d in n+1 homogeneous variables."""
    return make_system(SystemKind.PROJECTIVE_MONOMIAL, n=n, d=d, order=order, name=f"B_{n},{d}")


def gapped_system(exponents: Sequence[int]) -> FunctionSystem:
    """Univariate monomials x^k for the listed k."""
    label = "{" + ",".join(str(k) for k in exponents) + "}"
    return make_system(SystemKind.GAPPED_1D, exponents=exponents, name=f"x^{label}")


def system_size(n: int, d: int) -> int:
    """|A_{n,d}| = |B_{n,d}| = C(n+d, n)."""
    return comb(n + d, n)


def moment_curve(system: FunctionSystem, point: Point) -> Tuple[Scalar, ...]:
    """s_A(x) for a point in the system's chart."""
    return system.evaluate(point)


def partials(system: FunctionSystem, point: Point) -> Matrix:
    """m x point_dim matrix of partial derivatives; projective systems use all homogeneous coordinates."""
    return system.gradient(point)


def validate_independence(
    system: FunctionSystem,
    seed: int = 0,
    retries: int = 3,
    box: int = 50,
) -> bool:
    """
    Check linear independence of a system on random rational points.

    Evaluates the system at m random points and ranks the m x m matrix; a
    rank deficit can be bad luck, so up to ``retries`` fresh draws are made.

    Returns:
        True as soon as one draw has full rank.
    """
    m = system.size
    for attempt in range(retries):
        rng = np.random.default_rng([seed, attempt])
        points = [system.sample_point(rng, box, rational=True) for _ in range(m)]
        r = rank(Matrix([system.values(p.coordinates) for p in points]))
        logger.debug("independence check %s attempt %d: rank %d of %d", system, attempt, r, m)
        if r == m:
            return True
    return False
