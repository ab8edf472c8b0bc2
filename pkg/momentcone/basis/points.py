"""
Points of affine space and of projective space.
"""

from enum import Enum
from typing import Iterator, Sequence, Tuple, Union

from momentcone.exactla.scalar import Exact, Scalar
from momentcone.exceptions import ChartMismatchError


class Chart(str, Enum):
    """Ambient space of a function system."""

    AFFINE = "affine"
    PROJECTIVE = "projective"


class Point:
    """Exact point; projective points are stored in normal form.

    The normal form of a projective point scales its first nonzero
    coordinate to 1, so two representatives of the same point compare equal.
    """

    __slots__ = ("_coordinates", "_chart")

    def __init__(
        self,
        coordinates: Sequence[Union[Exact, str]],
        chart: Union[Chart, str] = Chart.AFFINE,
    ):
        coords = tuple(Scalar.coerce(c) for c in coordinates)
        chart = Chart(chart)
        if not coords:
            raise ChartMismatchError("a point needs at least one coordinate")
        if chart == Chart.PROJECTIVE:
            lead = next((c for c in coords if c), None)
            if lead is None:
                raise ChartMismatchError("the zero vector is not a projective point")
            if lead != 1:
                coords = tuple(c / lead for c in coords)
        self._coordinates = coords
        self._chart = chart

    @classmethod
    def affine(cls, *coordinates: Union[Exact, str]) -> "Point":
        return cls(coordinates, Chart.AFFINE)

    @classmethod
    def projective(cls, *coordinates: Union[Exact, str]) -> "Point":
        return cls(coordinates, Chart.PROJECTIVE)

    @property
    def coordinates(self) -> Tuple[Scalar, ...]:
        return self._coordinates

    @property
    def chart(self) -> Chart:
        return self._chart

    @property
    def dimension(self) -> int:
        """Dimension n of the ambient space (projective points have n+1 coordinates)."""
        if self._chart == Chart.PROJECTIVE:
            return len(self._coordinates) - 1
        return len(self._coordinates)

    def __len__(self) -> int:
        return len(self._coordinates)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self._coordinates)

    def __getitem__(self, index: int) -> Scalar:
        return self._coordinates[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self._chart == other._chart and self._coordinates == other._coordinates

    def __hash__(self) -> int:
        return hash((self._chart.value, self._coordinates))

    def __repr__(self) -> str:
        return f"Point({[str(c) for c in self._coordinates]}, {self._chart.value!r})"

    def __str__(self) -> str:
        if self._chart == Chart.PROJECTIVE:
            return "[" + " : ".join(str(c) for c in self._coordinates) + "]"
        return "(" + ", ".join(str(c) for c in self._coordinates) + ")"
