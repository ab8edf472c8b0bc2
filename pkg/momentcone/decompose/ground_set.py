"""
Finite ground sets X.
"""

from itertools import product
from typing import Iterable, Iterator, List, Sequence, Union

from momentcone.basis.points import Chart, Point
from momentcone.basis.system import FunctionSystem
from momentcone.exactla.scalar import Exact
from momentcone.exceptions import GroundSetError


class GroundSet:
    """
    An ordered, duplicate-free, nonempty list of points in one chart.

    Duplicates are detected after projective normalization and dropped,
    keeping the first occurrence.
    """

    __slots__ = ("_points", "_index")

    def __init__(self, points: Iterable[Point]):
        ordered: List[Point] = []
        index = {}
        for p in points:
            if not isinstance(p, Point):
                raise GroundSetError(f"{p!r} is not a Point")
            if p not in index:
                index[p] = len(ordered)
                ordered.append(p)
        if not ordered:
            raise GroundSetError("a ground set needs at least one point")
        if len({(p.chart, len(p)) for p in ordered}) > 1:
            raise GroundSetError("ground set mixes charts or dimensions")
        self._points = tuple(ordered)
        self._index = index

    @classmethod
    def grid(cls, n: int, values: Sequence[Union[Exact, str]]) -> "GroundSet":
        """The product grid values^n in lexicographic order."""
        return cls(Point(coords) for coords in product(values, repeat=n))

    @property
    def points(self) -> tuple:
        return self._points

    @property
    def chart(self) -> Chart:
        return self._points[0].chart

    def index(self, point: Point) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise GroundSetError(f"{point} is not in the ground set") from None

    def __contains__(self, point: object) -> bool:
        return point in self._index

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __getitem__(self, i: int) -> Point:
        return self._points[i]

    def subset(self, indices: Iterable[int]) -> "GroundSet":
        return GroundSet(self._points[i] for i in indices)

    def evaluate(self, system: FunctionSystem) -> List[list]:
        """s_A(x) for every point, as lists of Fractions/Scalars (one list per point)."""
        columns = []
        for p in self._points:
            system.check_point(p)
            columns.append(system.values(p.coordinates))
        return columns

    def __repr__(self) -> str:
        return f"GroundSet({len(self._points)} {self.chart.value} points)"
