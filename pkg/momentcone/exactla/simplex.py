"""
Exact two-phase simplex method with Bland's rule.

Every result carries a certificate that is re-checked by exact substitution
before it is returned: a primal/dual pair with equal objective values, a
Farkas ray for infeasible problems, or a feasible point with an improving ray
for unbounded ones.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from momentcone.exactla.matrix import Matrix
from momentcone.exactla.scalar import Exact, Scalar, demote, exact_sign
from momentcone.exceptions import CertificateError

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RowSense(str, Enum):
    """Direction of a constraint row."""

    LE = "<="
    EQ = "="
    GE = ">="


class LPStatus(str, Enum):
    """Outcome of a linear program."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPProblem:
    """
    Linear program ``max`` (or ``min``) ``c.x`` subject to row constraints.

    Attributes:
        objective: Cost vector c, one entry per variable.
        matrix: Constraint matrix A.
        rhs: Right-hand side b.
        senses: One RowSense per row.
        free: Per variable, True when it is unrestricted in sign.
        maximize: Optimization direction.
    """

    objective: Tuple[Scalar, ...]
    matrix: Matrix
    rhs: Tuple[Scalar, ...]
    senses: Tuple[RowSense, ...]
    free: Tuple[bool, ...]
    maximize: bool = True

    def __post_init__(self):
        rows, cols = self.matrix.shape
        if len(self.objective) != cols:
            raise ValueError(f"objective has {len(self.objective)} entries for {cols} variables")
        if len(self.rhs) != rows or len(self.senses) != rows:
            raise ValueError(f"{rows} constraint rows need as many right-hand sides and senses")
        if len(self.free) != cols:
            raise ValueError(f"free flags given for {len(self.free)} of {cols} variables")

    @classmethod
    def build(
        cls,
        objective: Sequence[Exact],
        rows: Sequence[Sequence[Exact]],
        rhs: Sequence[Exact],
        senses: Optional[Sequence[Union[RowSense, str]]] = None,
        free: Optional[Sequence[bool]] = None,
        maximize: bool = True,
    ) -> "LPProblem":
        """Build a problem from plain sequences; rows default to equalities, variables to x >= 0."""
        n = len(objective)
        return cls(
            objective=tuple(Scalar.coerce(v) for v in objective),
            matrix=Matrix(rows, cols=n),
            rhs=tuple(Scalar.coerce(v) for v in rhs),
            senses=tuple(RowSense(s) for s in (senses or [RowSense.EQ] * len(rhs))),
            free=tuple(bool(f) for f in (free or [False] * n)),
            maximize=maximize,
        )

    @property
    def num_rows(self) -> int:
        return self.matrix.nrows

    @property
    def num_vars(self) -> int:
        return self.matrix.ncols


@dataclass(frozen=True)
class LPResult:
    """
    Solution of an LPProblem together with its certificate.

    ``dual`` holds one multiplier per row for optimal problems, ``farkas`` one
    per row for infeasible ones; ``ray`` is an improving direction of an
    unbounded problem, reported with the feasible point ``primal``.
    """

    status: LPStatus
    value: Optional[Scalar] = None
    primal: Optional[Tuple[Scalar, ...]] = None
    dual: Optional[Tuple[Scalar, ...]] = None
    farkas: Optional[Tuple[Scalar, ...]] = None
    ray: Optional[Tuple[Scalar, ...]] = None
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL

    @property
    def is_feasible(self) -> bool:
        return self.status != LPStatus.INFEASIBLE


class _Tableau:
    """Dense tableau in equality form ``A'x' = b', x' >= 0, b' >= 0``."""

    def __init__(self, problem: LPProblem):
        self.problem = problem
        m, n = problem.matrix.shape
        a = problem.matrix.entries()
        b = [demote(v) for v in problem.rhs]
        self.sigma = [-1 if exact_sign(v) < 0 else 1 for v in b]

        # structural columns: (variable, +1) and, for free variables, (variable, -1)
        self.columns: List[Tuple[int, int]] = []
        for j in range(n):
            self.columns.append((j, 1))
            if problem.free[j]:
                self.columns.append((j, -1))
        num_structural = len(self.columns)

        slack_of: Dict[int, int] = {}
        column = num_structural
        for i, sense in enumerate(problem.senses):
            if sense != RowSense.EQ:
                slack_of[i] = column
                column += 1
        self.art_start = column

        self.initial: List[int] = []
        artificial_of: Dict[int, int] = {}
        for i, sense in enumerate(problem.senses):
            coefficient = self.sigma[i] * (1 if sense == RowSense.LE else -1)
            if sense != RowSense.EQ and coefficient == 1:
                self.initial.append(slack_of[i])
            else:
                artificial_of[i] = column
                self.initial.append(column)
                column += 1
        self.width = column

        self.rows: List[list] = []
        for i in range(m):
            s = self.sigma[i]
            row = [_ZERO] * (self.width + 1)
            for k, (j, sign) in enumerate(self.columns):
                value = a[i, j]
                if value:
                    row[k] = demote(value * (s * sign))
            if i in slack_of:
                row[slack_of[i]] = Fraction(s if problem.senses[i] == RowSense.LE else -s)
            if i in artificial_of:
                row[artificial_of[i]] = _ONE
            row[self.width] = demote(b[i] * s)
            self.rows.append(row)
        self.basis = list(self.initial)

        self.phase1_cost = [_ZERO] * self.width
        for k in range(self.art_start, self.width):
            self.phase1_cost[k] = _ONE
        self.phase2_cost = [_ZERO] * self.width
        for k, (j, sign) in enumerate(self.columns):
            c = demote(problem.objective[j]) * sign
            self.phase2_cost[k] = -c if problem.maximize else c
        self.pivots = 0

    def reduced_costs(self, cost: List) -> list:
        d = list(cost) + [_ZERO]
        for k, row in enumerate(self.rows):
            cb = cost[self.basis[k]]
            if cb:
                d = [demote(x - cb * y) if y else x for x, y in zip(d, row)]
        return d

    def pivot(self, i: int, j: int, costs: List[list]) -> None:
        row = self.rows[i]
        p = row[j]
        row = [demote(v / p) if v else v for v in row]
        self.rows[i] = row
        for k, other in enumerate(self.rows):
            if k != i:
                f = other[j]
                if f:
                    self.rows[k] = [demote(x - f * y) if y else x for x, y in zip(other, row)]
        for index, d in enumerate(costs):
            f = d[j]
            if f:
                costs[index] = [demote(x - f * y) if y else x for x, y in zip(d, row)]
        logger.debug("pivot: column %d enters, column %d leaves", j, self.basis[i])
        self.basis[i] = j
        self.pivots += 1

    def run(self, costs: List[list], limit: int) -> Optional[int]:
        """Bland's rule on ``costs[0]``; returns None at optimality or the unbounded column."""
        while True:
            d = costs[0]
            entering = next((j for j in range(limit) if d[j] < 0), None)
            if entering is None:
                return None
            best, best_key = None, None
            for i, row in enumerate(self.rows):
                coefficient = row[entering]
                if coefficient > 0:
                    key = (row[self.width] / coefficient, self.basis[i])
                    if best is None or key < best_key:
                        best, best_key = i, key
            if best is None:
                return entering
            self.pivot(best, entering, costs)

    def structural_values(self) -> List:
        values = [_ZERO] * self.width
        for k, row in enumerate(self.rows):
            values[self.basis[k]] = row[self.width]
        return values

    def to_original(self, standard: List) -> Tuple[Scalar, ...]:
        x = [_ZERO] * self.problem.num_vars
        for k, (j, sign) in enumerate(self.columns):
            if standard[k]:
                x[j] = demote(x[j] + standard[k] * sign)
        return tuple(Scalar.coerce(v) for v in x)

    def row_multipliers(self, cost: List, d: List, negate: bool) -> Tuple[Scalar, ...]:
        # y_r = c(init_r) - d(init_r) because the initial basic column of row r is e_r
        values = []
        for r, column in enumerate(self.initial):
            y = demote(cost[column] - d[column]) * self.sigma[r]
            values.append(Scalar.coerce(-y if negate else y))
        return tuple(values)

    def solve(self) -> LPResult:
        problem = self.problem

        if self.art_start < self.width:
            costs = [self.reduced_costs(self.phase1_cost)]
            self.run(costs, self.width)
            d1 = costs[0]
            infeasibility = -d1[self.width]
            if infeasibility > 0:
                farkas = self.row_multipliers(self.phase1_cost, d1, negate=False)
                logger.debug("infeasible after %d pivots", self.pivots)
                return LPResult(status=LPStatus.INFEASIBLE, farkas=farkas, pivots=self.pivots)

            for i in range(len(self.rows)):
                if self.basis[i] >= self.art_start:
                    row = self.rows[i]
                    j = next((k for k in range(self.art_start) if row[k]), None)
                    if j is not None:
                        self.pivot(i, j, [])

        costs = [self.reduced_costs(self.phase2_cost)]
        unbounded = self.run(costs, self.art_start)
        d2 = costs[0]
        standard = self.structural_values()
        primal = self.to_original(standard)

        if unbounded is not None:
            direction = [_ZERO] * self.width
            direction[unbounded] = _ONE
            for k, row in enumerate(self.rows):
                if row[unbounded]:
                    direction[self.basis[k]] = -row[unbounded]
            logger.debug("unbounded along column %d after %d pivots", unbounded, self.pivots)
            return LPResult(
                status=LPStatus.UNBOUNDED,
                primal=primal,
                ray=self.to_original(direction),
                pivots=self.pivots,
            )

        value = sum((c * x for c, x in zip(problem.objective, primal)), Scalar(0))
        dual = self.row_multipliers(self.phase2_cost, d2, negate=problem.maximize)
        logger.debug("optimal value %s after %d pivots", value, self.pivots)
        return LPResult(
            status=LPStatus.OPTIMAL,
            value=value,
            primal=primal,
            dual=dual,
            pivots=self.pivots,
        )


def _row_activity(problem: LPProblem, x: Sequence[Scalar]) -> List[Scalar]:
    return list(problem.matrix @ x)


def _column_activity(problem: LPProblem, u: Sequence[Scalar]) -> List[Scalar]:
    return list(problem.matrix.transpose() @ u)


def _satisfies(value: Scalar, sense: RowSense, bound: Scalar) -> bool:
    if sense == RowSense.LE:
        return value <= bound
    if sense == RowSense.GE:
        return value >= bound
    return value == bound


def _primal_feasible(problem: LPProblem, x: Sequence[Scalar]) -> bool:
    if any(not free and v < 0 for v, free in zip(x, problem.free)):
        return False
    activity = _row_activity(problem, x)
    return all(_satisfies(a, s, b) for a, s, b in zip(activity, problem.senses, problem.rhs))


def _multiplier_signs_ok(problem: LPProblem, u: Sequence[Scalar], upper_rows_nonnegative: bool) -> bool:
    for value, sense in zip(u, problem.senses):
        if sense == RowSense.EQ:
            continue
        positive_side = (sense == RowSense.LE) == upper_rows_nonnegative
        if positive_side and value < 0:
            return False
        if not positive_side and value > 0:
            return False
    return True


def verify_certificate(problem: LPProblem, result: LPResult) -> bool:
    """
    Re-check a result by exact substitution.

    Args:
        problem: The program that was solved.
        result: Its claimed solution.

    Returns:
        True when the certificate proves the claimed status.
    """
    if result.status == LPStatus.OPTIMAL:
        x, u = result.primal, result.dual
        if x is None or u is None or not _primal_feasible(problem, x):
            return False
        if not _multiplier_signs_ok(problem, u, upper_rows_nonnegative=problem.maximize):
            return False
        reduced = _column_activity(problem, u)
        for r, c, free in zip(reduced, problem.objective, problem.free):
            if free and r != c:
                return False
            if not free and (r < c if problem.maximize else r > c):
                return False
        primal_value = sum((c * v for c, v in zip(problem.objective, x)), Scalar(0))
        dual_value = sum((y * b for y, b in zip(u, problem.rhs)), Scalar(0))
        return primal_value == dual_value == result.value

    if result.status == LPStatus.INFEASIBLE:
        u = result.farkas
        if u is None or not _multiplier_signs_ok(problem, u, upper_rows_nonnegative=False):
            return False
        for r, free in zip(_column_activity(problem, u), problem.free):
            if r > 0 or (free and r != 0):
                return False
        return sum((y * b for y, b in zip(u, problem.rhs)), Scalar(0)) > 0

    x, ray = result.primal, result.ray
    if x is None or ray is None or not _primal_feasible(problem, x):
        return False
    if any(not free and v < 0 for v, free in zip(ray, problem.free)):
        return False
    for a, sense in zip(_row_activity(problem, ray), problem.senses):
        if not _satisfies(a, sense, Scalar(0)):
            return False
    gain = sum((c * v for c, v in zip(problem.objective, ray)), Scalar(0))
    return gain > 0 if problem.maximize else gain < 0


def lp_solve(problem: LPProblem) -> LPResult:
    """
    Solve a linear program exactly.

    Args:
        problem: The program.

    Returns:
        An LPResult whose certificate has been verified.

    Raises:
        CertificateError: If the exact re-check fails.
    """
    result = _Tableau(problem).solve()
    if not verify_certificate(problem, result):
        raise CertificateError(f"simplex produced an invalid {result.status.value} certificate")
    return result
