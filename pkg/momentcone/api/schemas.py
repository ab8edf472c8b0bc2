"""
Wire models shared by the CLI and the HTTP API.

Exact scalars travel as strings such as ``"3/2"`` or ``"1/2+1/1*sqrt2"``;
integers are accepted on input. Every input model converts to the library
object with ``to_domain()``, every model built from a library object has a
``from_domain()`` classmethod, so emitted JSON reads back unchanged.
"""

from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, Field

from momentcone.basis.points import Chart, Point
from momentcone.basis.system import FunctionSystem, SystemKind, make_system
from momentcone.catalog.examples import named_system
from momentcone.catalog.grids import TableRow
from momentcone.decompose.ground_set import GroundSet
from momentcone.decompose.membership import MembershipCertificate, Verdict
from momentcone.exactla.scalar import Scalar
from momentcone.exceptions import SystemDefinitionError
from momentcone.facial.faces import CoreVariety, FaceReport, ZeroSet
from momentcone.facial.max_mass import MaxMassReport, SeparationResult
from momentcone.momentmap.measure import AtomicMeasure, MomentSequence

ScalarText = Union[int, str]


def exact(values: Sequence[Any]) -> List[str]:
    """Render exact values as strings."""
    return [str(Scalar.coerce(v)) for v in values]


def as_points(rows: Sequence[Sequence[ScalarText]], chart: Chart) -> List[Point]:
    return [Point(row, chart) for row in rows]


def point_rows(points: Sequence[Point]) -> List[List[str]]:
    return [exact(p.coordinates) for p in points]


class SystemSpec(BaseModel):
    """A function system by kind and degree, explicit exponents, or catalog name."""

    kind: str = Field("affine-monomial", description="affine-monomial, projective-monomial, gapped-1d or catalog")
    n: Optional[int] = Field(None, description="Ambient dimension")
    d: Optional[int] = Field(None, description="Degree; generates all monomials")
    exponents: Optional[List[Union[int, List[int]]]] = Field(None, description="Explicit exponent list")
    order: str = Field("grlex", description="Monomial order: grlex or trailing")
    name: Optional[str] = Field(None, description="Catalog system name (harris, kappa, example names)")

    def to_domain(self) -> FunctionSystem:
        if self.kind in ("catalog", SystemKind.CUSTOM.value):
            if not self.name:
                raise SystemDefinitionError("a catalog system needs a name")
            return named_system(self.name)
        return make_system(self.kind, n=self.n, d=self.d, exponents=self.exponents, order=self.order)

    @classmethod
    def from_domain(cls, system: FunctionSystem) -> "SystemSpec":
        if not system.is_monomial:
            return cls(kind="catalog", name=system.name)
        if system.kind == SystemKind.GAPPED_1D:
            exponents: List[Union[int, List[int]]] = [a[0] for a in system.exponents]
        else:
            exponents = [list(a) for a in system.exponents]
        return cls(kind=system.kind.value, n=system.n, exponents=exponents, order=system.order.value)


class AtomSpec(BaseModel):
    mass: ScalarText = Field(..., description="Exact mass")
    point: List[ScalarText] = Field(..., description="Coordinates of the atom")


class MeasureSpec(BaseModel):
    """An atomic measure; the chart defaults to the system's."""

    signed: bool = Field(False, description="Allow negative masses")
    chart: Optional[Chart] = Field(None, description="affine or projective")
    atoms: List[AtomSpec] = Field(default_factory=list)

    def to_domain(self, chart: Optional[Chart] = None) -> AtomicMeasure:
        chart = self.chart or chart or Chart.AFFINE
        return AtomicMeasure(
            [(a.mass, Point(a.point, chart)) for a in self.atoms], signed=self.signed
        )

    @classmethod
    def from_domain(cls, measure: AtomicMeasure) -> "MeasureSpec":
        points = measure.points
        return cls(
            signed=measure.signed,
            chart=points[0].chart if points else None,
            atoms=[AtomSpec(mass=str(c), point=exact(p.coordinates)) for c, p in measure],
        )


class GroundSetSpec(BaseModel):
    chart: Optional[Chart] = Field(None, description="affine or projective")
    points: List[List[ScalarText]] = Field(..., description="Coordinates of each point")

    def to_domain(self, chart: Optional[Chart] = None) -> GroundSet:
        return GroundSet(as_points(self.points, self.chart or chart or Chart.AFFINE))

    @classmethod
    def from_domain(cls, ground: GroundSet) -> "GroundSetSpec":
        return cls(chart=ground.chart, points=point_rows(ground.points))


class SequenceSpec(BaseModel):
    values: List[ScalarText] = Field(..., description="The entries s_1, ..., s_m")

    def to_domain(self, system: FunctionSystem) -> MomentSequence:
        return MomentSequence(system, self.values)

    @classmethod
    def from_domain(cls, s: MomentSequence) -> "SequenceSpec":
        return cls(values=exact(s.values))


class CertificateModel(BaseModel):
    verdict: Verdict
    measure: Optional[MeasureSpec] = None
    separator: Optional[List[str]] = None

    @classmethod
    def from_domain(cls, certificate: MembershipCertificate) -> "CertificateModel":
        return cls(
            verdict=certificate.verdict,
            measure=MeasureSpec.from_domain(certificate.measure) if certificate.measure is not None else None,
            separator=exact(certificate.separator) if certificate.separator is not None else None,
        )


class ZeroSetModel(BaseModel):
    points: List[List[str]]
    functional: List[str]
    degenerate: bool = False

    @classmethod
    def from_domain(cls, zeros: ZeroSet) -> "ZeroSetModel":
        return cls(
            points=point_rows(zeros.points), functional=exact(zeros.functional), degenerate=zeros.degenerate
        )


class CoreVarietyModel(BaseModel):
    points: List[List[str]]
    iterations: int
    trace: List[List[List[str]]]

    @classmethod
    def from_domain(cls, core: CoreVariety) -> "CoreVarietyModel":
        return cls(
            points=point_rows(core.points),
            iterations=core.iterations,
            trace=[point_rows(step) for step in core.trace],
        )


class FaceReportModel(BaseModel):
    atoms: List[List[str]]
    zeros: List[List[str]]
    face_dimension: int
    gamma_dimension: int
    gamma_basis: List[List[str]]
    functional: List[str]

    @classmethod
    def from_domain(cls, report: FaceReport) -> "FaceReportModel":
        return cls(
            atoms=point_rows(report.atoms),
            zeros=point_rows(report.zeros),
            face_dimension=report.face_dimension,
            gamma_dimension=report.gamma_dimension,
            gamma_basis=[exact(v) for v in report.gamma_basis],
            functional=exact(report.functional),
        )


class MaxMassModel(BaseModel):
    rho: str
    kappa: str
    functional: List[str]
    residual: List[str]
    attained: bool
    outside_atoms: bool
    outside_zeros: bool

    @classmethod
    def from_domain(cls, report: MaxMassReport) -> "MaxMassModel":
        return cls(
            rho=str(report.rho),
            kappa=str(report.kappa),
            functional=exact(report.functional),
            residual=exact(report.residual.values),
            attained=report.attained,
            outside_atoms=report.outside_atoms,
            outside_zeros=report.outside_zeros,
        )


class SeparationModel(BaseModel):
    feasible: bool
    functionals: List[List[str]]
    failed_index: Optional[int] = None
    farkas: Optional[List[str]] = None

    @classmethod
    def from_domain(cls, result: SeparationResult) -> "SeparationModel":
        return cls(
            feasible=result.feasible,
            functionals=[exact(p) for p in result.functionals],
            failed_index=result.failed_index,
            farkas=exact(result.farkas) if result.farkas is not None else None,
        )


class TableRowModel(BaseModel):
    n: int
    d: int
    primed: bool
    m: int
    zeros: int
    rank: int
    w: str
    z: str
    method: str

    @classmethod
    def from_domain(cls, row: TableRow) -> "TableRowModel":
        return cls(
            n=row.n,
            d=row.d,
            primed=row.primed,
            m=row.m,
            zeros=row.zeros,
            rank=row.rank,
            w=str(row.w),
            z=str(row.z),
            method=row.method.value,
        )


class ErrorModel(BaseModel):
    error: str
    message: str
    details: Optional[Dict[str, Any]] = None


# Request models
class MeasureRequest(BaseModel):
    system: SystemSpec
    measure: MeasureSpec


class SequenceRequest(BaseModel):
    system: SystemSpec
    ground: GroundSetSpec
    sequence: SequenceSpec
    tangent_at: Optional[List[List[ScalarText]]] = Field(
        None, description="Atoms at which the functionals must also have zero gradient"
    )


class MaxMassRequest(SequenceRequest):
    point: List[ScalarText] = Field(..., description="The point x receiving the mass")
