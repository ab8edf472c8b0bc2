"""
Maximal point masses and the positive separation property.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from momentcone.basis.points import Point
from momentcone.basis.system import FunctionSystem
from momentcone.decompose.ground_set import GroundSet
from momentcone.decompose.membership import SequenceLike, cone_rows, evaluate_function, require_member
from momentcone.exactla.scalar import Scalar
from momentcone.exactla.simplex import LPProblem, LPStatus, RowSense, lp_solve
from momentcone.exceptions import CertificateError, GroundSetError, UnpointedConeError
from momentcone.facial.faces import atom_set, v_set
from momentcone.facial.functionals import EvaluationSpace
from momentcone.momentmap.measure import MomentSequence, as_sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaxMassReport:
    """
    Largest mass a representing measure on X can put at x, with its dual.

    Attributes:
        rho: max{c >= 0 : s - c*s_A(x) in the cone over X}.
        kappa: min{L_s(p) : p >= 0 on X, p(x) = 1}.
        functional: An optimal p for kappa.
        residual: s' = s - rho*s_A(x).
        attained: Whether kappa is attained; always true over finite X.
        outside_atoms: x is not in W(s').
        outside_zeros: x is not in V(s').
    """

    rho: Scalar
    kappa: Scalar
    functional: Tuple[Scalar, ...]
    residual: MomentSequence
    attained: bool
    outside_atoms: bool
    outside_zeros: bool


@dataclass(frozen=True)
class SeparationResult:
    """
    Outcome of the positive separation check.

    ``functionals[i]`` is p_i with p_i >= 0 on X, p_i(x_i) = 1 and
    p_i(x_j) = 0 for j != i. On failure ``failed_index`` names the first
    point without such a function and ``farkas`` holds the LP's infeasibility
    certificate (over the value constraints).
    """

    feasible: bool
    functionals: Tuple[Tuple[Scalar, ...], ...]
    failed_index: Optional[int] = None
    farkas: Optional[Tuple[Scalar, ...]] = None


def positivity_witness(system: FunctionSystem, ground: GroundSet) -> Tuple[Scalar, ...]:
    """
    Coefficients of some e in lin A with e >= 1 on X.

    Raises:
        UnpointedConeError: If no such function exists.
    """
    columns = ground.evaluate(system)
    m = system.size
    problem = LPProblem.build(
        [0] * m, columns, [1] * len(columns), [RowSense.GE] * len(columns), free=[True] * m
    )
    result = lp_solve(problem)
    if not result.is_feasible:
        raise UnpointedConeError("no function in lin A is positive on the ground set")
    return result.primal


def max_mass(system: FunctionSystem, ground: GroundSet, s: SequenceLike, x: Point) -> MaxMassReport:
    """
    rho_s(x) by the primal LP and kappa_s(x) by the dual LP over X.

    Raises:
        GroundSetError: If x is not in X.
        UnpointedConeError: If no function in lin A is positive on X.
        NotAMemberError: If s is not in the cone over X.
        CertificateError: If rho exceeds kappa or kappa is not reproduced.
    """
    s = as_sequence(system, s)
    if x not in ground:
        raise GroundSetError(f"{x} is not in the ground set")
    positivity_witness(system, ground)
    certificate = require_member(system, ground, s)

    columns = ground.evaluate(system)
    k, target = len(ground), ground.index(x)

    rows, rhs = cone_rows(columns, s.values)
    objective = [0] * k
    objective[target] = 1
    rho = lp_solve(LPProblem.build(objective, rows, rhs)).value

    # L_s(p) = sum_y lambda_y p(y) for any representing measure lambda on X
    weights = [certificate.measure.mass_at(p) for p in ground]
    space = EvaluationSpace(system, columns)
    value_rows, value_rhs = space.value_constraints()
    unit = [0] * k
    unit[target] = 1
    dual = lp_solve(
        LPProblem.build(weights, value_rows + [unit], value_rhs + [Scalar(1)], maximize=False)
    )
    if dual.status != LPStatus.OPTIMAL:
        raise CertificateError(f"dual problem is {dual.status.value}")
    functional = space.lift(dual.primal)
    kappa = s.riesz(functional)
    if kappa != dual.value or rho > kappa:
        raise CertificateError(f"dual value {kappa} is inconsistent with rho {rho}")

    residual = s - MomentSequence(system, system.evaluate(x)).scale(rho)
    report = MaxMassReport(
        rho=rho,
        kappa=kappa,
        functional=functional,
        residual=residual,
        attained=True,
        outside_atoms=x not in atom_set(system, ground, residual),
        outside_zeros=x not in v_set(system, ground, residual).points,
    )
    logger.debug("max mass at %s: rho=%s kappa=%s", x, rho, kappa)
    return report


def psp_check(system: FunctionSystem, ground: GroundSet, points: Sequence[Point]) -> SeparationResult:
    """
    Positive separation: find p_i >= 0 on X with p_i(x_j) = delta_ij.

    Raises:
        GroundSetError: If a point is not in X.
    """
    indices = [ground.index(p) for p in points]
    k = len(ground)
    space = EvaluationSpace(system, ground.evaluate(system))
    value_rows, value_rhs = space.value_constraints()

    found: List[Tuple[Scalar, ...]] = []
    for position, i in enumerate(indices):
        rows, rhs = list(value_rows), list(value_rhs)
        for j in indices:
            unit = [0] * k
            unit[j] = 1
            rows.append(unit)
            rhs.append(Scalar(1 if j == i else 0))
        result = lp_solve(LPProblem.build([0] * k, rows, rhs))
        if not result.is_feasible:
            logger.debug("positive separation fails at point %d", position)
            return SeparationResult(False, tuple(found), failed_index=position, farkas=result.farkas)
        functional = space.lift(result.primal)
        if any(v < 0 for v in evaluate_function(functional, ground.evaluate(system))):
            raise CertificateError("separating function is negative on the ground set")
        found.append(functional)
    return SeparationResult(True, tuple(found))
