"""
Finitely atomic measures and moment sequences.
"""

from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from momentcone.basis.points import Point
from momentcone.basis.system import FunctionSystem
from momentcone.exactla.scalar import ZERO, Exact, Scalar
from momentcone.exceptions import InvalidArgumentError, InvalidMeasureError

Atom = Tuple[Scalar, Point]


class AtomicMeasure:
    """
    A finite sum of point masses ``sum_j c_j * delta_{x_j}``.

    Atoms at the same point are merged by adding their masses; atoms keep
    the order in which their point first appeared. Unsigned measures need
    strictly positive masses; signed measures drop atoms whose mass is zero.
    """

    __slots__ = ("_atoms", "signed")

    def __init__(self, atoms: Iterable[Tuple[Union[Exact, str], Point]] = (), signed: bool = False):
        merged: Dict[Point, Scalar] = {}
        for mass, point in atoms:
            if not isinstance(point, Point):
                raise InvalidMeasureError(f"atom point {point!r} is not a Point")
            merged[point] = merged.get(point, ZERO) + Scalar.coerce(mass)

        charts = {p.chart for p in merged}
        dims = {len(p) for p in merged}
        if len(charts) > 1 or len(dims) > 1:
            raise InvalidMeasureError("all atoms must live in one chart and dimension")

        if signed:
            self._atoms = tuple((c, p) for p, c in merged.items() if c)
        else:
            for p, c in merged.items():
                if c <= 0:
                    raise InvalidMeasureError(f"mass {c} at {p} is not positive")
            self._atoms = tuple((c, p) for p, c in merged.items())
        self.signed = signed

    @classmethod
    def dirac(cls, point: Point, mass: Union[Exact, str] = 1) -> "AtomicMeasure":
        return cls([(mass, point)])

    @classmethod
    def unit(cls, points: Sequence[Point]) -> "AtomicMeasure":
        """Unit masses on the given points."""
        return cls([(1, p) for p in points])

    @property
    def atoms(self) -> Tuple[Atom, ...]:
        return self._atoms

    @property
    def masses(self) -> Tuple[Scalar, ...]:
        return tuple(c for c, _ in self._atoms)

    @property
    def points(self) -> Tuple[Point, ...]:
        return tuple(p for _, p in self._atoms)

    @property
    def support(self) -> Tuple[Point, ...]:
        return self.points

    def mass_at(self, point: Point) -> Scalar:
        for c, p in self._atoms:
            if p == point:
                return c
        return ZERO

    def __len__(self) -> int:
        return len(self._atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self._atoms)

    def __add__(self, other: "AtomicMeasure") -> "AtomicMeasure":
        if not isinstance(other, AtomicMeasure):
            return NotImplemented
        return AtomicMeasure(self._atoms + other._atoms, signed=self.signed or other.signed)

    def scale(self, factor: Union[Exact, str]) -> "AtomicMeasure":
        factor = Scalar.coerce(factor)
        if not self.signed and factor <= 0:
            raise InvalidMeasureError("an unsigned measure can only be scaled by a positive factor")
        return AtomicMeasure([(factor * c, p) for c, p in self._atoms], signed=self.signed)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AtomicMeasure):
            return NotImplemented
        return self.signed == other.signed and dict((p, c) for c, p in self._atoms) == dict(
            (p, c) for c, p in other._atoms
        )

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{c}@{p}" for c, p in self._atoms)
        return f"AtomicMeasure([{body}], signed={self.signed})"


class MomentSequence:
    """
    A vector s of length m attached to a function system.

    The sequence doubles as the Riesz functional L_s(p) = <coeff(p), s> on
    lin A.
    """

    __slots__ = ("values", "system")

    def __init__(self, system: FunctionSystem, values: Sequence[Union[Exact, str]]):
        values = tuple(Scalar.coerce(v) for v in values)
        if len(values) != system.size:
            raise InvalidArgumentError(
                f"sequence of length {len(values)} does not match system size {system.size}"
            )
        self.system = system
        self.values = values

    @classmethod
    def zero(cls, system: FunctionSystem) -> "MomentSequence":
        return cls(system, [0] * system.size)

    def riesz(self, coefficients: Sequence[Union[Exact, str]]) -> Scalar:
        """L_s(p) for p given by its coefficient vector."""
        if len(coefficients) != len(self.values):
            raise InvalidArgumentError("coefficient vector does not match the sequence length")
        total = ZERO
        for c, s in zip(coefficients, self.values):
            c = Scalar.coerce(c)
            if c and s:
                total = total + c * s
        return total

    def _check(self, other: "MomentSequence") -> None:
        if len(other.values) != len(self.values):
            raise InvalidArgumentError("sequences belong to different systems")

    def __add__(self, other: "MomentSequence") -> "MomentSequence":
        if not isinstance(other, MomentSequence):
            return NotImplemented
        self._check(other)
        return MomentSequence(self.system, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "MomentSequence") -> "MomentSequence":
        if not isinstance(other, MomentSequence):
            return NotImplemented
        self._check(other)
        return MomentSequence(self.system, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, factor: Union[Exact, str]) -> "MomentSequence":
        factor = Scalar.coerce(factor)
        return MomentSequence(self.system, [factor * v for v in self.values])

    def is_zero(self) -> bool:
        return not any(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.values)

    def __getitem__(self, index: int) -> Scalar:
        return self.values[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MomentSequence):
            return self.values == other.values
        if isinstance(other, (tuple, list)):
            return len(other) == len(self.values) and all(
                a == Scalar.coerce(b) for a, b in zip(self.values, other)
            )
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        return f"MomentSequence({[str(v) for v in self.values]})"


def as_sequence(system: FunctionSystem, s: Union[MomentSequence, Sequence[Union[Exact, str]]]) -> MomentSequence:
    """Accept a MomentSequence or a plain vector."""
    if isinstance(s, MomentSequence):
        if len(s) != system.size:
            raise InvalidArgumentError("sequence does not match the system size")
        return s
    return MomentSequence(system, s)


def sum_columns(columns: Sequence[Sequence[Exact]], weights: Sequence[Exact], size: int) -> List[Scalar]:
    """sum_j weights[j] * columns[j]."""
    total = [ZERO] * size
    for w, column in zip(weights, columns):
        w = Scalar.coerce(w)
        if not w:
            continue
        total = [t + w * v if v else t for t, v in zip(total, column)]
    return total
