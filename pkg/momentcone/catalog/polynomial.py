"""
Named nonnegative polynomials with a declared zero set.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from momentcone.basis.points import Point
from momentcone.basis.system import FunctionSystem
from momentcone.exactla.scalar import Scalar


def poly_mul(left: Sequence[int], right: Sequence[int]) -> List[int]:
    """Product of univariate integer polynomials given by ascending coefficients."""
    out = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a:
            for j, b in enumerate(right):
                out[i + j] += a * b
    return out


@dataclass(frozen=True)
class NamedPolynomial:
    """
    A polynomial p in lin A with its known zeros.

    Attributes:
        name: Display name.
        system: The function system p is expanded in.
        coefficients: Coefficients of p in the system's order.
        zeros: Declared zeros of p.
    """

    name: str
    system: FunctionSystem
    coefficients: Tuple[Scalar, ...]
    zeros: Tuple[Point, ...]

    def __call__(self, point: Point) -> Scalar:
        return self.system.apply(self.coefficients, point)

    def at(self, *coordinates) -> Scalar:
        """Value at raw coordinates, without projective normalization."""
        values = self.system.evaluate_coordinates(coordinates)
        return sum((c * v for c, v in zip(self.coefficients, values) if c), Scalar(0))

    def vanishes_on_zeros(self) -> bool:
        return all(not self(z) for z in self.zeros)

    def sample_nonnegative(self, count: int = 100, seed: int = 0, box: int = 20) -> bool:
        """Sanity check at random rational points; not a certificate."""
        rng = np.random.default_rng(seed)
        return all(self(self.system.sample_point(rng, box, rational=True)) >= 0 for _ in range(count))

    def terms(self) -> List[Tuple[str, Scalar]]:
        """Nonzero (label, coefficient) pairs."""
        return [(label, c) for label, c in zip(self.system.labels, self.coefficients) if c]
