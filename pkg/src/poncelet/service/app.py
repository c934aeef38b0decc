"""FastAPI service exposing the exact-geometry operations.

Every route is stateless: parse the request into exact objects, run the
library, serialize back.  Error contract: 400 = invalid input, 409 =
degenerate input; verification outcomes are 200 responses with a boolean.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from .. import __version__
from ..binforms import BinaryForm, ParamPoint
from ..errors import DegenerateInputError, InvalidInputError
from ..incidence import darboux_check
from ..multipoly import MultiPoly, parse_rational
from ..schwarzenberger import (
    PonceletSystem,
    canonical_matrix,
    contains_subvariety,
    poncelet_hypersurface,
    poncelet_subvariety,
)
from ..surfaces import (
    cubic_from_subspace,
    dim_probe,
    hilbert_function_of_minors,
    quadric_demo,
    quadric_rank,
    six_point_flattening,
)
from ..svgplot import render_scene
from . import schemas

app = FastAPI(title="poncelet", version=__version__)


@app.exception_handler(InvalidInputError)
async def _invalid_handler(request: Request, exc: InvalidInputError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": {"code": "invalid_input", "message": str(exc)}},
    )


@app.exception_handler(DegenerateInputError)
async def _degenerate_handler(request: Request, exc: DegenerateInputError) -> JSONResponse:
    return JSONResponse(
        status_code=409,
        content={"error": {"code": "degenerate_input", "message": str(exc)}},
    )


def _system(model: schemas.SystemModel) -> PonceletSystem:
    return PonceletSystem(
        model.n, model.k, [BinaryForm.from_json(s.model_dump()) for s in model.sections]
    )


def _points(models: list[schemas.ParamPointModel]) -> list[ParamPoint]:
    return [ParamPoint.from_json(p.model_dump()) for p in models]


def _poly(terms: list[schemas.Term], num_vars: int) -> MultiPoly:
    return MultiPoly.from_json([t.model_dump() for t in terms], num_vars)


def _rational_matrix(rows: list[list[str]]) -> list[list[Fraction]]:
    return [[parse_rational(str(v)) for v in row] for row in rows]


@app.get("/health")
async def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/canonical-matrix", response_model=schemas.PolyMatrixModel)
async def canonical_matrix_route(req: schemas.CanonicalMatrixRequest):
    return canonical_matrix(req.n, req.k).to_json()


@app.post("/hypersurface", response_model=schemas.HypersurfaceResponse)
async def hypersurface_route(req: schemas.HypersurfaceRequest):
    system = _system(req.system)
    equation = poncelet_hypersurface(system)
    return {
        "equation": equation.to_json(),
        "degree": equation.total_degree(),
        "num_vars": equation.num_vars,
    }


@app.post("/subvariety", response_model=schemas.SubvarietyResponse)
async def subvariety_route(req: schemas.HypersurfaceRequest):
    system = _system(req.system)
    minors = poncelet_subvariety(system)
    return {
        "minors": [m.to_json() for _, m in minors],
        "omitted_rows": [list(omitted) for omitted, _ in minors],
        "count": len(minors),
    }


@app.post("/darboux-check", response_model=schemas.DarbouxResponse, response_model_by_alias=True)
async def darboux_route(req: schemas.DarbouxRequest):
    system = _system(req.system)
    equation = poncelet_hypersurface(system)
    report = darboux_check(equation, system.n, system.k, _points(req.member_roots))
    payload = report.to_json()
    payload["equation"] = equation.to_json()
    return payload


@app.post("/contains-subvariety", response_model=schemas.ContainsResponse)
async def contains_route(req: schemas.ContainsRequest):
    equation = _poly(req.equation, req.n + 1)
    members = [_points(m) for m in req.members]
    return {"contained": contains_subvariety(equation, req.n, req.k, members)}


@app.post("/quadric-demo", response_model=schemas.QuadricDemoResponse)
async def quadric_demo_route():
    return {"entries": [e.to_json() for e in quadric_demo()]}


@app.post("/quadric-rank", response_model=schemas.QuadricRankResponse)
async def quadric_rank_route(req: schemas.QuadricRankRequest):
    return {"rank": quadric_rank(_poly(req.quadric, req.num_vars))}


@app.post("/cubic-from-a", response_model=schemas.CubicResponse)
async def cubic_route(req: schemas.CubicRequest):
    return cubic_from_subspace(_rational_matrix(req.A)).to_json()


@app.post("/six-point", response_model=schemas.SixPointResponse)
async def six_point_route(req: schemas.CubicRequest):
    return six_point_flattening(_rational_matrix(req.A)).to_json()


@app.post("/hilbert", response_model=schemas.HilbertResponse)
async def hilbert_route(req: schemas.HilbertRequest):
    values = hilbert_function_of_minors(_rational_matrix(req.A), req.degrees)
    return {"values": {str(d): dim for d, dim in sorted(values.items())}}


@app.post("/dim-probe", response_model=schemas.DimProbeResponse)
async def dim_probe_route(req: schemas.DimProbeRequest):
    report = dim_probe(req.case, k=req.k, samples=req.samples, seed=req.seed)
    return report.to_json()


@app.post("/plot")
async def plot_route(req: schemas.PlotRequest) -> Response:
    system = _system(req.system)
    if system.n != 2:
        raise InvalidInputError("plotting is defined for plane systems (n = 2) only")
    equation = poncelet_hypersurface(system)
    if len(req.window) != 4:
        raise InvalidInputError("window needs four bounds: xmin, xmax, ymin, ymax")
    window = tuple(parse_rational(str(w)) for w in req.window)
    svg = render_scene(
        equation,
        [_points(m) for m in req.members],
        chart=req.chart,
        window=window,  # type: ignore[arg-type]
        resolution=req.resolution,
    )
    return Response(content=svg, media_type="image/svg+xml")
