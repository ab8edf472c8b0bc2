"""
FastAPI server for momentcone.

All endpoints are read-only computations; domain errors come back as 422
with the error's ``to_dict()`` payload, budget errors as 413.
"""

import logging
from contextlib import asynccontextmanager
from typing import Any, Dict, List, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from momentcone.api.schemas import (
    CertificateModel,
    ErrorModel,
    FaceReportModel,
    MaxMassModel,
    MaxMassRequest,
    MeasureRequest,
    MeasureSpec,
    SequenceRequest,
    TableRowModel,
    as_points,
    exact,
)
from momentcone.basis.points import Point
from momentcone.basis.system import affine_system
from momentcone.catalog.bounds import Space, cara_bounds
from momentcone.catalog.grids import table2
from momentcone.catalog.harris import increments, table1
from momentcone.config import settings
from momentcone.decompose.membership import membership
from momentcone.decompose.richter import reduce
from momentcone.exceptions import BudgetExceededError, MomentConeError
from momentcone.facial.faces import face_report
from momentcone.facial.max_mass import max_mass
from momentcone.momentmap.moment_map import estimate_NA, moments, na_formula

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Log the active budget on startup."""
    logger.info("momentcone API starting with table budget %d", settings.budget)
    yield
    logger.info("momentcone API stopped")


# Create FastAPI app
app = FastAPI(
    title="momentcone",
    description="Exact computations for truncated moment problems",
    version="0.1.0",
    lifespan=lifespan,
)


@app.exception_handler(MomentConeError)
async def domain_error_handler(request: Request, exc: MomentConeError) -> JSONResponse:
    status = 413 if isinstance(exc, BudgetExceededError) else 422
    logger.debug("%s %s failed: %s", request.method, request.url.path, exc.code)
    body = ErrorModel(**exc.to_dict())
    return JSONResponse(status_code=status, content=body.model_dump(exclude_none=True))


def _sequence_inputs(request: SequenceRequest):
    system = request.system.to_domain()
    ground = request.ground.to_domain(system.chart)
    s = request.sequence.to_domain(system)
    tangent = as_points(request.tangent_at, system.chart) if request.tangent_at else None
    return system, ground, s, tangent


@app.get("/health")
async def health_check() -> Dict[str, str]:
    """Health check endpoint."""
    return {"status": "healthy"}


@app.post("/moments")
def compute_moments(request: MeasureRequest) -> Dict[str, List[str]]:
    """Moment sequence of an atomic measure."""
    system = request.system.to_domain()
    s = moments(system, request.measure.to_domain(system.chart))
    return {"values": exact(s.values)}


@app.post("/reduce", response_model=MeasureSpec)
def reduce_measure(request: MeasureRequest) -> MeasureSpec:
    """Representing measure with at most m atoms and the same moments."""
    system = request.system.to_domain()
    return MeasureSpec.from_domain(reduce(system, request.measure.to_domain(system.chart)))


@app.post("/membership", response_model=CertificateModel)
def check_membership(request: SequenceRequest) -> CertificateModel:
    """Membership in the cone over the ground set, with certificate."""
    system, ground, s, _ = _sequence_inputs(request)
    return CertificateModel.from_domain(membership(system, ground, s))


@app.post("/faces", response_model=FaceReportModel)
def faces(request: SequenceRequest) -> FaceReportModel:
    """W(s), V(s), D_s and gamma_s of a member."""
    system, ground, s, tangent = _sequence_inputs(request)
    return FaceReportModel.from_domain(face_report(system, ground, s, tangent_at=tangent))


@app.post("/maxmass", response_model=MaxMassModel)
def maximal_mass(request: MaxMassRequest) -> MaxMassModel:
    """rho and kappa at a point of the ground set."""
    system, ground, s, _ = _sequence_inputs(request)
    x = Point(request.point, system.chart)
    return MaxMassModel.from_domain(max_mass(system, ground, s, x))


@app.get("/table1")
def harris_table() -> Dict[str, List[int]]:
    """Ranks of the total derivative at prefixes of the Harris zeros."""
    ranks = table1()
    return {"ranks": ranks, "increments": increments(ranks)}


@app.get("/table2", response_model=TableRowModel)
def grid_table(n: int, d: int, primed: bool = False, budget: Optional[int] = None) -> TableRowModel:
    """One cell of the grid table."""
    return TableRowModel.from_domain(table2(n, d, primed=primed, budget=budget))


@app.get("/na")
def na(n: int, d: int, estimate: bool = False, seed: Optional[int] = None) -> Dict[str, Any]:
    """N_A for A_{n,d} by formula, optionally with a sampled witness."""
    result: Dict[str, Any] = {"n": n, "d": d, "formula": na_formula(n, d)}
    if estimate:
        found = estimate_NA(affine_system(n, d), seed=seed)
        result["estimate"] = found.count
        result["witness"] = MeasureSpec.from_domain(found.witness).model_dump(mode="json")
    return result


@app.get("/bounds")
def bounds(n: int, d: int, space: Space = Space.AFFINE) -> Dict[str, Any]:
    """Known Carathéodory bounds with their sources."""
    found = cara_bounds(n, d, space)
    return {
        "n": found.n,
        "degree": found.degree,
        "space": found.space.value,
        "m": found.m,
        "lower": found.lower,
        "upper": found.upper,
        "sard_lower": found.sard_lower,
        "signed_upper": found.signed_upper,
        "entries": [{"kind": b.kind, "value": str(b.value), "source": b.source} for b in found.entries],
    }


def run_server(host: str = settings.host, port: int = settings.port) -> None:
    """Run the momentcone API server."""
    import uvicorn

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    run_server()
