"""
Faces of the moment cone over a finite ground set.

For a member s, W(s) is the set of ground-set points that carry mass in
some representing measure, and V(s) the set of common zeros of all
functions p >= 0 on X with L_s(p) = 0. The core variety iterates the
second construction for an arbitrary functional L.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from momentcone.basis.points import Point
from momentcone.basis.system import FunctionSystem
from momentcone.decompose.ground_set import GroundSet
from momentcone.decompose.membership import SequenceLike, cone_rows, evaluate_function, require_member
from momentcone.exactla.matrix import ColumnSpace, Matrix, kernel
from momentcone.exactla.scalar import ZERO, Scalar
from momentcone.exactla.simplex import LPProblem, LPStatus, lp_solve
from momentcone.exceptions import CertificateError, GroundSetError
from momentcone.facial.functionals import EvaluationSpace, tangency_rows
from momentcone.momentmap.measure import as_sequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroSet:
    """
    Common zeros of a family of nonnegative functions, with a representative.

    Attributes:
        points: The common zeros inside the ground set.
        functional: Coefficients of a member p of the family with exactly
            these zeros on the ground set.
        degenerate: True when every member of the family vanishes on the
            whole ground set; ``functional`` is then a nonzero such member
            if one exists, else the zero vector.
    """

    points: Tuple[Point, ...]
    functional: Tuple[Scalar, ...]
    degenerate: bool = False


@dataclass(frozen=True)
class CoreVariety:
    """Result of the core variety iteration V_0 = X, V_1, ... ."""

    points: Tuple[Point, ...]
    iterations: int
    trace: Tuple[Tuple[Point, ...], ...]


@dataclass(frozen=True)
class FaceReport:
    """
    Facial data of a member s.

    Attributes:
        atoms: W(s).
        zeros: V(s).
        face_dimension: D_s, the rank of s_A(W(s)).
        gamma_dimension: gamma_s = dim of functions vanishing on W(s).
        gamma_basis: Basis of those functions.
        functional: Representative p with Z(p) cap X = V(s).
    """

    atoms: Tuple[Point, ...]
    zeros: Tuple[Point, ...]
    face_dimension: int
    gamma_dimension: int
    gamma_basis: Tuple[Tuple[Scalar, ...], ...]
    functional: Tuple[Scalar, ...]


def _common_zeros(
    space: EvaluationSpace,
    points: Sequence[Point],
    functional_values: Sequence[Scalar],
) -> ZeroSet:
    """
    Per-point LPs: max v_i over value vectors v >= 0 of the family with sum 1.

    A point whose maximum is 0 is a common zero. Points already positive in
    an earlier optimizer skip their own LP.
    """
    k = len(points)
    rows, rhs = space.value_constraints(functional_values)
    rows.append([1] * k)
    rhs.append(Scalar(1))

    positive = set()
    optimizers: List[Tuple[Scalar, ...]] = []
    for i in range(k):
        if i in positive:
            continue
        objective = [0] * k
        objective[i] = 1
        result = lp_solve(LPProblem.build(objective, rows, rhs))
        if not result.is_feasible:
            p = space.vanishing() or tuple(ZERO for _ in range(space.system.size))
            return ZeroSet(tuple(points), p, degenerate=True)
        optimizers.append(result.primal)
        positive.update(j for j, v in enumerate(result.primal) if v)

    average = [sum(column, ZERO) / len(optimizers) for column in zip(*optimizers)]
    functional = space.lift(average, functional_values)
    zeros = tuple(p for i, p in enumerate(points) if i not in positive)
    return ZeroSet(zeros, functional)


def atom_set(system: FunctionSystem, ground: GroundSet, s: SequenceLike) -> Tuple[Point, ...]:
    """
    W(s) on X: points that carry positive mass in some representing measure.

    Raises:
        NotAMemberError: If s is not in the cone over X.
    """
    s = as_sequence(system, s)
    certificate = require_member(system, ground, s)
    rows, rhs = cone_rows(ground.evaluate(system), s.values)
    k = len(ground)

    included = {ground.index(p) for p in certificate.measure.points}
    for i in range(k):
        if i in included:
            continue
        objective = [0] * k
        objective[i] = 1
        result = lp_solve(LPProblem.build(objective, rows, rhs))
        if result.status == LPStatus.UNBOUNDED or result.value > 0:
            included.add(i)
        included.update(j for j, v in enumerate(result.primal) if v)
    return tuple(ground[i] for i in sorted(included))


def v_set(
    system: FunctionSystem,
    ground: GroundSet,
    s: SequenceLike,
    tangent_at: Optional[Sequence[Point]] = None,
) -> ZeroSet:
    """
    V(s) on X with a representative function.

    Args:
        system: The function system.
        ground: The ground set X.
        s: A member of the cone over X.
        tangent_at: Points w at which the family is further restricted by
            d/dx_j p(w) = 0 for all j; a nonnegative function on the whole
            space has this property at each of its interior zeros.

    Returns:
        A ZeroSet whose representative is positive off the common zeros.
        When no member of the family is positive anywhere on X, V(s) is all
        of X and ``degenerate`` is set; the representative is then a nonzero
        member vanishing on X if the family has one (h for the Harris zeros
        with tangency), and the zero vector only when the family is {0}.

    Raises:
        NotAMemberError: If s is not in the cone over X.
    """
    s = as_sequence(system, s)
    require_member(system, ground, s)
    constraints = tangency_rows(system, tangent_at) if tangent_at else None
    space = EvaluationSpace(system, ground.evaluate(system), [s.values], constraints)
    return _common_zeros(space, ground.points, [ZERO])


def core_variety(
    system: FunctionSystem,
    ground: GroundSet,
    functional: SequenceLike,
    tangent_at: Optional[Sequence[Point]] = None,
) -> CoreVariety:
    """
    Iterate V_k = common zeros in V_{k-1} of {p >= 0 on V_{k-1} : L(p) = 0}.

    ``functional`` holds L(a_1), ..., L(a_m) and need not come from a
    measure. Tangency constraints, if given, apply to the first step only;
    the iteration then stops at the first repeat from step 2 on. It also
    stops at the empty set.
    """
    L = as_sequence(system, functional)
    current = tuple(ground.points)
    trace = [current]
    step = 0
    while current:
        step += 1
        constraints = tangency_rows(system, tangent_at) if (tangent_at and step == 1) else None
        columns = [system.values(p.coordinates) for p in current]
        space = EvaluationSpace(system, columns, [L.values], constraints)
        following = _common_zeros(space, current, [ZERO]).points
        trace.append(following)
        logger.debug("core variety step %d: %d of %d points remain", step, len(following), len(current))
        if following == current and (not tangent_at or step >= 2):
            break
        current = following

    final = trace[-1]
    iterations = next(j for j, v in enumerate(trace) if v == final)
    return CoreVariety(points=final, iterations=iterations, trace=tuple(trace))


def face_dimension(system: FunctionSystem, support: Sequence[Point]) -> int:
    """D_s = rank of the curve points of the support."""
    if not support:
        raise GroundSetError("face dimension needs a nonempty support")
    span = ColumnSpace(system.size)
    for p in support:
        system.check_point(p)
        span.add(system.values(p.coordinates))
    return span.rank


def gamma_space(system: FunctionSystem, support: Sequence[Point]) -> Tuple[List[Tuple[Scalar, ...]], int]:
    """
    Functions of lin A vanishing on the support, and their dimension gamma_s.

    Raises:
        CertificateError: If gamma_s + D_s differs from m.
    """
    if not support:
        raise GroundSetError("gamma space needs a nonempty support")
    for p in support:
        system.check_point(p)
    basis = kernel(Matrix([system.values(p.coordinates) for p in support], cols=system.size))
    if len(basis) + face_dimension(system, support) != system.size:
        raise CertificateError("gamma_s + D_s does not add up to m")
    return basis, len(basis)


def face_report(
    system: FunctionSystem,
    ground: GroundSet,
    s: SequenceLike,
    tangent_at: Optional[Sequence[Point]] = None,
) -> FaceReport:
    """
    W(s), V(s), D_s, gamma_s and a representative function in one call.

    Raises:
        NotAMemberError: If s is not in the cone over X.
        CertificateError: If W is not inside V or the representative is
            not nonnegative on X with L_s(p) = 0.
    """
    s = as_sequence(system, s)
    atoms = atom_set(system, ground, s)
    zeros = v_set(system, ground, s, tangent_at=tangent_at)

    if not set(atoms) <= set(zeros.points):
        raise CertificateError("W(s) is not contained in V(s)")
    p = zeros.functional
    if s.riesz(p) != 0 or any(v < 0 for v in evaluate_function(p, ground.evaluate(system))):
        raise CertificateError("representative is not a nonnegative function annihilated by s")

    if atoms:
        basis, gamma = gamma_space(system, atoms)
        dimension = system.size - gamma
    else:
        basis = kernel(Matrix([], cols=system.size))
        gamma, dimension = system.size, 0
    return FaceReport(
        atoms=atoms,
        zeros=zeros.points,
        face_dimension=dimension,
        gamma_dimension=gamma,
        gamma_basis=tuple(basis),
        functional=p,
    )
