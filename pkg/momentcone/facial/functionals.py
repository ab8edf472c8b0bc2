"""
Functions in lin A described by their values on a finite ground set.

Positivity on X is a sign condition on the value vector (p(x))_{x in X}, so
LPs over nonnegative functions are posed over value vectors constrained to
the image of the evaluation map. The image is cut out by the left kernel of
the evaluation matrix; solutions are lifted back to coefficients with one
exact solve.
"""

from typing import List, Optional, Sequence, Tuple

from momentcone.basis.points import Point
from momentcone.basis.system import FunctionSystem
from momentcone.exactla.matrix import Matrix, integral_primitive, kernel, solve
from momentcone.exactla.scalar import ZERO, Exact, Scalar
from momentcone.exceptions import CertificateError


def tangency_rows(system: FunctionSystem, points: Sequence[Point]) -> List[list]:
    """Rows D with (D p)_{w,j} = d/dx_j p(w), one block per point."""
    rows: List[list] = []
    for w in points:
        system.check_point(w)
        gradient = system.gradient_values(w.coordinates)
        for j in range(system.point_dim):
            rows.append([row[j] for row in gradient])
    return rows


class EvaluationSpace:
    """
    Value vectors of functions p in a subspace P of lin A.

    Args:
        system: The function system.
        columns: Curve points s_A(x) of the ground set, one list per point.
        functionals: Extra linear forms on coefficients (for instance a
            moment sequence s, giving L_s(p)); their values are appended after
            the point values.
        constraints: Rows D; P = {p : D p = 0}. All of lin A when omitted.
    """

    def __init__(
        self,
        system: FunctionSystem,
        columns: Sequence[Sequence[Exact]],
        functionals: Sequence[Sequence[Exact]] = (),
        constraints: Optional[Sequence[Sequence[Exact]]] = None,
    ):
        m = system.size
        self.system = system
        self.num_points = len(columns)
        self.num_functionals = len(functionals)
        if constraints:
            basis = kernel(Matrix(constraints, cols=m))
            self._basis = Matrix.from_columns(basis, rows=m)
        else:
            self._basis = Matrix.identity(m)
        self._evaluation = Matrix(list(columns) + list(functionals), cols=m) @ self._basis
        self.relations = kernel(self._evaluation.T)

    @property
    def dimension(self) -> int:
        """Dimension of P."""
        return self._basis.ncols

    def value_constraints(self, functional_values: Sequence[Exact] = ()) -> Tuple[List[list], List[Scalar]]:
        """
        Linear equations on the point values v.

        A vector v (with the functionals fixed at ``functional_values``) is
        the value vector of some p in P iff ``rows @ v == rhs``.
        """
        k = self.num_points
        fixed = [Scalar.coerce(x) for x in functional_values]
        rows, rhs = [], []
        for w in self.relations:
            rows.append(list(w[:k]))
            total = ZERO
            for coefficient, value in zip(w[k:], fixed):
                total = total - coefficient * value
            rhs.append(total)
        return rows, rhs

    def lift(self, values: Sequence[Exact], functional_values: Sequence[Exact] = ()) -> Tuple[Scalar, ...]:
        """
        Coefficients of a p in P with the given values.

        Raises:
            CertificateError: If the values are not attained by any p in P.
        """
        t = solve(self._evaluation, list(values) + list(functional_values))
        if t is None:
            raise CertificateError("value vector is outside the image of the evaluation map")
        return self._basis @ t

    def vanishing(self) -> Optional[Tuple[Scalar, ...]]:
        """A nonzero p in P with all point and functional values zero, if one exists."""
        directions = kernel(self._evaluation)
        if not directions:
            return None
        return integral_primitive(self._basis @ directions[0])
