"""
Tests for exact arithmetic, linear algebra and linear programming.
"""

from fractions import Fraction

import pytest

from momentcone.exactla import (
    ONE,
    SQRT2,
    ColumnSpace,
    LPProblem,
    LPStatus,
    Matrix,
    Scalar,
    det,
    integral_primitive,
    kernel,
    lp_solve,
    rank,
    rref,
    solve,
    verify_certificate,
)
from momentcone.exceptions import ScalarParseError


class TestScalar:
    """Test cases for numbers of Q(sqrt 2)."""

    def test_parse_and_render(self):
        """Test exact strings parse and render back."""
        value = Scalar.parse("1/2+1/1*sqrt2")
        assert value == Scalar(Fraction(1, 2), 1)
        assert str(value) == "1/2+1/1*sqrt2"
        assert Scalar.parse(str(value)) == value

    def test_parse_variants(self):
        """Test the accepted spellings of the root."""
        assert Scalar.parse("sqrt2") == SQRT2
        assert Scalar.parse("-3*sqrt2") == Scalar(0, -3)
        assert Scalar.parse("sqrt2/2") == Scalar(0, Fraction(1, 2))
        assert Scalar.parse("0.5") == Scalar(Fraction(1, 2))
        assert Scalar.parse("√2") == SQRT2

    def test_rejects_floats_and_garbage(self):
        """Test that inexact input is refused."""
        with pytest.raises(ScalarParseError):
            Scalar.coerce(0.5)
        with pytest.raises(ScalarParseError):
            Scalar.parse("abc")
        with pytest.raises(ScalarParseError):
            Scalar.parse("")

    def test_field_operations(self):
        """Test multiplication and division in the field."""
        assert SQRT2 * SQRT2 == 2
        assert ONE / (1 + SQRT2) == SQRT2 - 1
        assert (1 + SQRT2) ** 2 == 3 + 2 * SQRT2
        assert Scalar(3, 1).conjugate() == Scalar(3, -1)
        assert Scalar(3, 1).norm() == 7

    def test_exact_sign(self):
        """Test ordering when the parts disagree in sign."""
        assert Scalar(3, -2) > 0
        assert Scalar(1, -1) < 0
        assert Scalar(-3, 2) < 0
        assert not Scalar(0)
        assert sorted([SQRT2, Scalar(Fraction(3, 2)), ONE]) == [ONE, SQRT2, Scalar(Fraction(3, 2))]

    def test_float_is_approximate_only(self):
        """Test the float rendering."""
        assert abs(float(SQRT2) - 1.41421356) < 1e-8


class TestMatrix:
    """Test cases for exact dense linear algebra."""

    def test_rank(self):
        """Test rank of rational and irrational matrices."""
        assert rank(Matrix([[1, 2], [2, 4]])) == 1
        assert rank(Matrix([[1, 0], [0, 1]])) == 2
        assert rank(Matrix([[SQRT2, 2], [1, SQRT2]])) == 1

    def test_det(self):
        """Test exact determinants."""
        assert det(Matrix([[1, 2], [3, 4]])) == -2
        assert det(Matrix([[SQRT2, 1], [1, SQRT2]])) == 1
        assert det(Matrix([[0, 1], [1, 0]])) == -1

    def test_kernel_is_integral_and_oriented(self):
        """Test kernel basis normalization."""
        basis = kernel(Matrix([[1, 1, 1]]))
        assert basis == [(1, -1, 0), (1, 0, -1)]

    def test_kernel_of_empty_matrix(self):
        """Test that a matrix without rows has the unit vectors as kernel."""
        assert kernel(Matrix([], cols=2)) == [(1, 0), (0, 1)]

    def test_solve(self):
        """Test consistent and inconsistent systems."""
        assert solve(Matrix([[1, 1], [1, -1]]), [3, 1]) == (2, 1)
        assert solve(Matrix([[1], [1]]), [1, 2]) is None

    def test_rref(self):
        """Test reduced row echelon form."""
        form, pivots = rref(Matrix([[2, 4], [1, 3]]))
        assert form == Matrix.identity(2)
        assert pivots == [0, 1]

    def test_integral_primitive(self):
        """Test scaling to integer vectors with content 1."""
        assert integral_primitive([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
        assert integral_primitive([Fraction(-1, 2), Fraction(1, 3)]) == (3, -2)
        assert integral_primitive([Fraction(-1, 2), Fraction(1, 3)], orient=False) == (-3, 2)

    def test_column_space(self):
        """Test incremental rank."""
        span = ColumnSpace(2)
        assert span.add([1, 0])
        assert not span.add([2, 0])
        assert span.add([0, 1])
        assert span.rank == 2

    def test_matrix_vector_product(self):
        """Test multiplication by a vector."""
        assert Matrix([[1, 2], [3, 4]]) @ [1, 1] == (3, 7)
        assert Matrix.from_columns([[1, 3], [2, 4]]) == Matrix([[1, 2], [3, 4]])


class TestLinearProgramming:
    """Test cases for the exact simplex method."""

    def test_optimal(self):
        """Test an optimum at a fractional vertex."""
        problem = LPProblem.build([1, 1], [[1, 2], [3, 1]], [4, 6], senses=["<=", "<="])
        result = lp_solve(problem)
        assert result.status == LPStatus.OPTIMAL
        assert result.value == Fraction(14, 5)
        assert result.primal == (Fraction(8, 5), Fraction(6, 5))
        assert verify_certificate(problem, result)

    def test_infeasible_has_farkas_certificate(self):
        """Test that infeasibility is certified."""
        problem = LPProblem.build([0], [[1]], [-1])
        result = lp_solve(problem)
        assert result.status == LPStatus.INFEASIBLE
        assert result.farkas is not None
        assert verify_certificate(problem, result)

    def test_unbounded(self):
        """Test an unbounded direction."""
        problem = LPProblem.build([1, 0], [[1, -1]], [1], senses=["<="])
        result = lp_solve(problem)
        assert result.status == LPStatus.UNBOUNDED
        assert verify_certificate(problem, result)

    def test_free_variable_minimum(self):
        """Test minimization over a free variable."""
        problem = LPProblem.build([1], [[1]], [-3], senses=[">="], free=[True], maximize=False)
        result = lp_solve(problem)
        assert result.is_optimal
        assert result.value == -3

    def test_irrational_data(self):
        """Test an LP with sqrt(2) in the data."""
        problem = LPProblem.build([1], [[1]], [SQRT2], senses=["<="])
        result = lp_solve(problem)
        assert result.value == SQRT2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
