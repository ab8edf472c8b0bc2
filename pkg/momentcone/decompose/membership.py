"""
Cone membership on finite ground sets.

Whether s lies in cone{s_A(x) : x in X} is one exact linear program in the
masses. A feasible answer comes with a representing measure, an infeasible
one with a separating function p in lin A that is nonnegative on X and has
L_s(p) < 0.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from momentcone.basis.system import FunctionSystem
from momentcone.config import settings
from momentcone.decompose.ground_set import GroundSet
from momentcone.decompose.richter import reduce
from momentcone.exactla.matrix import ColumnSpace, Matrix, integral_primitive, rref
from momentcone.exactla.scalar import ZERO, Exact, Scalar
from momentcone.exactla.simplex import LPProblem, LPStatus, RowSense, lp_solve
from momentcone.exceptions import CertificateError, GroundSetError, NotAMemberError
from momentcone.momentmap.measure import AtomicMeasure, MomentSequence, as_sequence
from momentcone.momentmap.moment_map import moments

logger = logging.getLogger(__name__)

SequenceLike = Union[MomentSequence, Sequence[Exact]]


class Verdict(str, Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"


@dataclass(frozen=True)
class MembershipCertificate:
    """
    Answer of a membership query with its proof.

    Attributes:
        verdict: member or non-member.
        measure: Representing measure on the ground set (members only).
        separator: Coefficients of p with p >= 0 on X and L_s(p) < 0
            (non-members only).
    """

    verdict: Verdict
    measure: Optional[AtomicMeasure] = None
    separator: Optional[Tuple[Scalar, ...]] = None

    @property
    def is_member(self) -> bool:
        return self.verdict == Verdict.MEMBER

    def verify(self, system: FunctionSystem, ground: GroundSet, s: SequenceLike) -> bool:
        """Re-check the certificate by exact evaluation."""
        s = as_sequence(system, s)
        if self.is_member:
            return (
                self.measure is not None
                and all(p in ground for p in self.measure.points)
                and moments(system, self.measure) == s
            )
        if self.separator is None or s.riesz(self.separator) >= 0:
            return False
        return all(v >= 0 for v in evaluate_function(self.separator, ground.evaluate(system)))


def evaluate_function(coefficients: Sequence[Exact], columns: Sequence[Sequence[Exact]]) -> List[Scalar]:
    """Values p(x) = <coefficients, s_A(x)> for precomputed curve points."""
    coefficients = [Scalar.coerce(c) for c in coefficients]
    values = []
    for column in columns:
        total = ZERO
        for c, v in zip(coefficients, column):
            if c and v:
                total = total + c * v
        values.append(total)
    return values


def cone_rows(columns: Sequence[Sequence[Exact]], s: Sequence[Exact]) -> Tuple[List[list], List[Scalar]]:
    """
    Equations ``sum_x lambda_x s_A(x) = s`` with redundant rows removed.

    Returns the nonzero rows of the reduced row echelon form of the
    augmented system; an inconsistent system keeps its ``0 = 1`` row.
    """
    m = len(s)
    augmented = Matrix([[column[i] for column in columns] + [s[i]] for i in range(m)])
    form, pivots = rref(augmented)
    rows = [form.row(r) for r in range(len(pivots))]
    return [list(row[:-1]) for row in rows], [row[-1] for row in rows]


def membership(system: FunctionSystem, ground: GroundSet, s: SequenceLike) -> MembershipCertificate:
    """
    Decide s in cone{s_A(x) : x in X} exactly.

    Members get a representing measure reduced to at most m atoms; non-members
    get a separator scaled to integer coefficients with content 1.

    Raises:
        CertificateError: If the certificate fails its exact re-check.
    """
    s = as_sequence(system, s)
    columns = ground.evaluate(system)
    m, k = system.size, len(ground)
    rows = [[column[i] for column in columns] for i in range(m)]
    problem = LPProblem.build([0] * k, rows, s.values, [RowSense.EQ] * m)
    result = lp_solve(problem)

    if result.status == LPStatus.INFEASIBLE:
        separator = integral_primitive([-u for u in result.farkas], orient=False)
        certificate = MembershipCertificate(Verdict.NON_MEMBER, separator=separator)
    else:
        measure = AtomicMeasure((c, p) for c, p in zip(result.primal, ground) if c)
        certificate = MembershipCertificate(Verdict.MEMBER, measure=reduce(system, measure))

    if not certificate.verify(system, ground, s):
        raise CertificateError(f"{certificate.verdict.value} certificate failed its re-check")
    logger.debug("membership on %d points: %s", k, certificate.verdict.value)
    return certificate


def require_member(system: FunctionSystem, ground: GroundSet, s: SequenceLike) -> MembershipCertificate:
    """
    Membership that fails loudly.

    Raises:
        NotAMemberError: With the separator, if s is not a member.
    """
    certificate = membership(system, ground, s)
    if not certificate.is_member:
        raise NotAMemberError(
            "sequence is not in the cone of the ground set", separator=certificate.separator
        )
    return certificate


def _colex(size: int, k: int, stop: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """k-subsets of range(size) in colexicographic order."""
    stop = size if stop is None else stop
    if k == 0:
        yield ()
        return
    for last in range(k - 1, stop):
        for head in _colex(size, k - 1, last):
            yield head + (last,)


def _subset_masses(columns: Sequence[list], s: Sequence[Scalar]) -> Optional[List[Scalar]]:
    """Nonnegative masses on the given curve points reproducing s, if any."""
    k = len(columns)
    augmented = Matrix([[column[i] for column in columns] + [s[i]] for i in range(len(s))])
    form, pivots = rref(augmented)
    if pivots and pivots[-1] == k:
        return None
    if len(pivots) == k:
        masses = [form[r, k] for r in range(k)]
        return masses if all(c >= 0 for c in masses) else None
    rows = [list(form.row(r)[:-1]) for r in range(len(pivots))]
    rhs = [form[r, k] for r in range(len(pivots))]
    result = lp_solve(LPProblem.build([0] * k, rows, rhs))
    return list(result.primal) if result.is_feasible else None


def minimal_support(
    system: FunctionSystem,
    ground: GroundSet,
    s: SequenceLike,
    max_ground: Optional[int] = None,
) -> AtomicMeasure:
    """
    A representing measure on X with the fewest atoms.

    Subsets are tried by size, each size in colex order; the first feasible
    subset wins.

    Raises:
        GroundSetError: If X is larger than ``max_ground``
            (default ``settings.min_atoms_max_ground``).
        NotAMemberError: If s is not a member.
    """
    max_ground = settings.min_atoms_max_ground if max_ground is None else max_ground
    if len(ground) > max_ground:
        raise GroundSetError(
            f"ground set of {len(ground)} points exceeds the subset search limit {max_ground}"
        )
    s = as_sequence(system, s)
    require_member(system, ground, s)
    if s.is_zero():
        return AtomicMeasure()

    columns = ground.evaluate(system)
    span = ColumnSpace(system.size)
    for column in columns:
        span.add(column)
    for k in range(1, span.rank + 1):
        for subset in _colex(len(ground), k):
            masses = _subset_masses([columns[i] for i in subset], s.values)
            if masses is not None:
                logger.debug("minimal support of size %d: %s", k, subset)
                return AtomicMeasure((c, ground[i]) for c, i in zip(masses, subset) if c)
    raise CertificateError("member without a representing subset")


def min_atoms(
    system: FunctionSystem,
    ground: GroundSet,
    s: SequenceLike,
    max_ground: Optional[int] = None,
) -> int:
    """Carathéodory number of s relative to X: the least number of atoms on X representing s."""
    return len(minimal_support(system, ground, s, max_ground))


def cara_countable(system: FunctionSystem, ground: GroundSet) -> int:
    """Rank of the curve points s_A(X); the Carathéodory number of the cone over finite X."""
    span = ColumnSpace(system.size)
    for column in ground.evaluate(system):
        span.add(column)
    return span.rank
