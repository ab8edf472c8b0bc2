"""
Dense exact matrices over Q(sqrt 2) with fraction-free elimination.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from momentcone.exactla.scalar import ONE, ZERO, Exact, Scalar, demote

logger = logging.getLogger(__name__)

Vector = Tuple[Scalar, ...]


class Matrix:
    """Immutable dense matrix of exact entries.

    Entries live in a numpy object array. Rational entries are stored as
    Fractions and irrational ones as Scalars, so elimination on matrices that
    happen to be rational never pays for the sqrt(2) component.
    """

    __slots__ = ("_data",)

    def __init__(self, rows: Sequence[Sequence[Union[Exact, str]]], cols: Optional[int] = None):
        """
        Build a matrix from rows.

        Args:
            rows: Row-major entries; strings are parsed as exact scalars.
            cols: Column count, required only for matrices without rows.
        """
        rows = [list(row) for row in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if cols is not None and ncols != cols:
            raise ValueError(f"expected {cols} columns, got {ncols}")

        data = np.empty((len(rows), ncols), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("matrix rows must have equal length")
            for j, value in enumerate(row):
                data[i, j] = demote(Scalar.coerce(value))
        self._data = data

    @classmethod
    def _wrap(cls, data: np.ndarray) -> "Matrix":
        obj = object.__new__(cls)
        obj._data = data
        return obj

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Exact]], rows: Optional[int] = None) -> "Matrix":
        """Build a matrix whose j-th column is ``columns[j]``."""
        if not columns:
            return cls._wrap(np.empty((rows or 0, 0), dtype=object))
        return cls(columns).transpose()

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        data = np.empty((nrows, ncols), dtype=object)
        data.fill(Fraction(0))
        return cls._wrap(data)

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        matrix = cls.zeros(size, size)
        for i in range(size):
            matrix._data[i, i] = Fraction(1)
        return matrix

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def nrows(self) -> int:
        return self._data.shape[0]

    @property
    def ncols(self) -> int:
        return self._data.shape[1]

    @property
    def is_rational(self) -> bool:
        return not any(isinstance(v, Scalar) and not v.is_rational for v in self._data.flat)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def transpose(self) -> "Matrix":
        return Matrix._wrap(self._data.T.copy())

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        return Scalar.coerce(self._data[index])

    def row(self, i: int) -> Vector:
        return tuple(Scalar.coerce(v) for v in self._data[i])

    def column(self, j: int) -> Vector:
        return tuple(Scalar.coerce(v) for v in self._data[:, j])

    def tolist(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    def entries(self) -> np.ndarray:
        """Copy of the underlying object array (Fractions and Scalars)."""
        return self._data.copy()

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix._wrap(np.hstack([self._data, other._data]))

    def vstack(self, other: "Matrix") -> "Matrix":
        return Matrix._wrap(np.vstack([self._data, other._data]))

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix._wrap(self._data[list(indices), :].reshape(len(indices), self.ncols))

    def select_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix._wrap(self._data[:, list(indices)].reshape(self.nrows, len(indices)))

    def __matmul__(self, other: Union["Matrix", Sequence[Exact]]) -> Union["Matrix", Vector]:
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            product = np.empty((self.nrows, other.ncols), dtype=object)
            for i in range(self.nrows):
                for j in range(other.ncols):
                    product[i, j] = demote(_dot(self._data[i], other._data[:, j]))
            return Matrix._wrap(product)
        vector = [demote(Scalar.coerce(v)) for v in other]
        if len(vector) != self.ncols:
            raise ValueError(f"vector of length {len(vector)} does not fit {self.shape}")
        return tuple(Scalar.coerce(_dot(row, vector)) for row in self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for x, y in zip(self._data.flat, other._data.flat)
        )

    __hash__ = None

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self._data)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


def _dot(left: Iterable, right: Iterable):
    total = Fraction(0)
    for x, y in zip(left, right):
        if x and y:
            total = total + x * y
    return total


def _is_integer_ready(data: np.ndarray) -> bool:
    return all(not isinstance(v, Scalar) or v.is_rational for v in data.flat)


def _integer_rows(data: np.ndarray) -> Tuple[List[List[int]], int]:
    """Clear denominators row by row; returns the rows and the product of the scale factors."""
    rows, scale = [], 1
    for row in data:
        row = [demote(v) for v in row]
        factor = reduce(_lcm, (v.denominator for v in row), 1)
        rows.append([int(v * factor) for v in row])
        scale *= factor
    return rows, scale


def _ring_rows(data: np.ndarray) -> Tuple[List[list], int]:
    """Clear denominators of both components so entries lie in Z[sqrt 2]."""
    rows, scale = [], 1
    for row in data:
        factor = 1
        for v in row:
            s = Scalar.coerce(v)
            factor = _lcm(_lcm(factor, s.a.denominator), s.b.denominator)
        rows.append([demote(Scalar.coerce(v) * factor) for v in row])
        scale *= factor
    return rows, scale


def _fraction_size(value: Fraction) -> int:
    return abs(value.numerator).bit_length() + value.denominator.bit_length()


def _lcm(x: int, y: int) -> int:
    return x * y // gcd(x, y)


def _size(value) -> int:
    if isinstance(value, int):
        return abs(value).bit_length()
    if isinstance(value, Fraction):
        return _fraction_size(value)
    return _fraction_size(value.a) + _fraction_size(value.b)


def _bareiss(rows: List[list], integral: bool) -> Tuple[int, int, object]:
    """
    Fraction-free row echelon form, in place.

    The pivot in each column is the nonzero entry of smallest bit length.
    Returns the rank, the number of row swaps and the last pivot, which is the
    determinant of the row-permuted matrix when it is square and regular.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    previous = 1
    rank = swaps = 0
    for c in range(ncols):
        if rank == nrows:
            break
        candidates = [i for i in range(rank, nrows) if rows[i][c]]
        if not candidates:
            continue
        pivot_row = min(candidates, key=lambda i: _size(rows[i][c]))
        if pivot_row != rank:
            rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
            swaps += 1
        prow = rows[rank]
        p = prow[c]
        for i in range(rank + 1, nrows):
            row = rows[i]
            f = row[c]
            if integral:
                rows[i] = [(p * x - f * y) // previous for x, y in zip(row, prow)]
            else:
                rows[i] = [demote((p * x - f * y) / previous) for x, y in zip(row, prow)]
        previous = p
        rank += 1
    return rank, swaps, previous


def rank(matrix: Matrix) -> int:
    """
    Rank of a matrix by fraction-free elimination.

    Rational matrices are cleared to integers and eliminated with Python
    integers; matrices with sqrt(2) entries are cleared to Z[sqrt 2].
    """
    data = matrix._data
    if data.size == 0:
        return 0
    if _is_integer_ready(data):
        rows, _ = _integer_rows(data)
        r, _, _ = _bareiss(rows, integral=True)
    else:
        rows, _ = _ring_rows(data)
        r, _, _ = _bareiss(rows, integral=False)
    logger.debug("rank of %dx%d matrix is %d", matrix.nrows, matrix.ncols, r)
    return r


def det(matrix: Matrix) -> Scalar:
    """Exact determinant of a square matrix."""
    n, m = matrix.shape
    if n != m:
        raise ValueError(f"determinant needs a square matrix, got {matrix.shape}")
    if n == 0:
        return ONE
    data = matrix._data
    integral = _is_integer_ready(data)
    rows, scale = _integer_rows(data) if integral else _ring_rows(data)
    r, swaps, last = _bareiss(rows, integral=integral)
    if r < n:
        return ZERO
    value = Scalar.coerce(last) / scale
    return -value if swaps % 2 else value


def _rref(data: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over the field; returns the form and the pivot columns."""
    a = data.copy()
    nrows, ncols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        candidates = [i for i in range(r, nrows) if a[i, c]]
        if not candidates:
            continue
        i = min(candidates, key=lambda k: _size(a[k, c]))
        if i != r:
            a[[r, i]] = a[[i, r]]
        pivot = a[r, c]
        a[r] = np.array([demote(v / pivot) if v else Fraction(0) for v in a[r]], dtype=object)
        for k in range(nrows):
            f = a[k, c]
            if k != r and f:
                a[k] = np.array(
                    [demote(x - f * y) if y else x for x, y in zip(a[k], a[r])], dtype=object
                )
        pivots.append(c)
        r += 1
    return a, pivots


def rref(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    form, pivots = _rref(matrix._data)
    return Matrix._wrap(form), pivots


def integral_primitive(vector: Sequence[Exact], orient: bool = True) -> Vector:
    """
    Scale a vector to integer components with content 1.

    For vectors over Q(sqrt 2) the content is taken over both components of
    every entry. With ``orient`` the first nonzero entry is made positive.
    """
    values = [Scalar.coerce(v) for v in vector]
    denominator = 1
    for v in values:
        denominator = _lcm(_lcm(denominator, v.a.denominator), v.b.denominator)
    numerators = []
    for v in values:
        numerators.append(int(v.a * denominator))
        numerators.append(int(v.b * denominator))
    content = reduce(gcd, (abs(x) for x in numerators), 0)
    if content == 0:
        return tuple(ZERO for _ in values)
    scaled = [Scalar(int(v.a * denominator) // content, int(v.b * denominator) // content) for v in values]
    if orient:
        leading = next(v for v in scaled if v)
        if leading.sign() < 0:
            scaled = [-v for v in scaled]
    return tuple(scaled)


def kernel(matrix: Matrix) -> List[Vector]:
    """
    Exact basis of the null space ``{x : Mx = 0}``.

    Each basis vector has integer components with content 1 and a positive
    first nonzero entry; there is one vector per free column of the reduced
    row echelon form, in column order.
    """
    ncols = matrix.ncols
    if matrix.nrows == 0:
        return [tuple(ONE if j == i else ZERO for j in range(ncols)) for i in range(ncols)]
    form, pivots = _rref(matrix._data)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v: List[Exact] = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row_index, column in enumerate(pivots):
            v[column] = -form[row_index, free]
        basis.append(integral_primitive(v))
    return basis


def solve(matrix: Matrix, rhs: Sequence[Exact]) -> Optional[Vector]:
    """
    Solve ``Mx = b`` exactly.

    Returns a solution with all free variables set to zero, or ``None`` when
    the system is inconsistent.
    """
    b = [demote(Scalar.coerce(v)) for v in rhs]
    if len(b) != matrix.nrows:
        raise ValueError(f"right-hand side of length {len(b)} does not fit {matrix.shape}")
    augmented = np.empty((matrix.nrows, matrix.ncols + 1), dtype=object)
    augmented[:, : matrix.ncols] = matrix._data
    augmented[:, matrix.ncols] = b
    form, pivots = _rref(augmented)
    if pivots and pivots[-1] == matrix.ncols:
        return None
    x: List[Exact] = [Fraction(0)] * matrix.ncols
    for row_index, column in enumerate(pivots):
        x[column] = form[row_index, matrix.ncols]
    return tuple(Scalar.coerce(v) for v in x)


class ColumnSpace:
    """Span of exact vectors, grown one vector at a time.

    Each accepted vector is stored reduced against the earlier ones with a
    unit pivot, so membership tests and rank updates cost one pass over the
    current basis.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._basis: List[Tuple[int, list]] = []

    @property
    def rank(self) -> int:
        return len(self._basis)

    def _reduce(self, vector: Sequence[Exact]) -> list:
        v = [demote(Scalar.coerce(x)) for x in vector]
        if len(v) != self.dimension:
            raise ValueError(f"expected a vector of length {self.dimension}, got {len(v)}")
        for pivot, row in self._basis:
            f = v[pivot]
            if f:
                v = [demote(x - f * y) if y else x for x, y in zip(v, row)]
        return v

    def contains(self, vector: Sequence[Exact]) -> bool:
        return not any(self._reduce(vector))

    def add(self, vector: Sequence[Exact]) -> bool:
        """Add a vector; returns True when it raised the rank."""
        v = self._reduce(vector)
        for pivot, x in enumerate(v):
            if x:
                break
        else:
            return False
        self._basis.append((pivot, [demote(y / x) if y else y for y in v]))
        return True
