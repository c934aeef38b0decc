"""Pydantic request/response models mirroring the JSON wire formats."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

RationalStr = str  # "p/q", or "p" when the denominator is 1


class Term(BaseModel):
    exponents: list[int]
    coeff: RationalStr


Poly = list[Term]  # graded-lex order, leading term first; [] is the zero polynomial


class BinaryFormModel(BaseModel):
    degree: int
    coeffs: list[RationalStr]


class ParamPointModel(BaseModel):
    a: RationalStr
    b: RationalStr


class SystemModel(BaseModel):
    n: int
    k: int
    sections: list[BinaryFormModel]


class PolyMatrixModel(BaseModel):
    rows: int
    cols: int
    entries: list[Poly]


class CanonicalMatrixRequest(BaseModel):
    n: int
    k: int


class HypersurfaceRequest(BaseModel):
    system: SystemModel


class HypersurfaceResponse(BaseModel):
    equation: Poly
    degree: int
    num_vars: int


class SubvarietyResponse(BaseModel):
    minors: list[Poly]
    omitted_rows: list[list[int]]
    count: int


class DarbouxRequest(BaseModel):
    system: SystemModel
    member_roots: list[ParamPointModel]


class DarbouxResponse(BaseModel):
    passed: bool = Field(alias="pass")
    vertices: list[list[RationalStr]]
    values: list[RationalStr]
    equation: Poly

    model_config = {"populate_by_name": True}


class ContainsRequest(BaseModel):
    equation: Poly
    n: int
    k: int
    members: list[list[ParamPointModel]]


class ContainsResponse(BaseModel):
    contained: bool


class QuadricDemoEntryModel(BaseModel):
    rows: list[int]
    quadric: Poly
    rank: int
    sections: list[int]
    sign_matched: bool


class QuadricDemoResponse(BaseModel):
    entries: list[QuadricDemoEntryModel]


class QuadricRankRequest(BaseModel):
    quadric: Poly
    num_vars: int = 4


class QuadricRankResponse(BaseModel):
    rank: int


class CubicRequest(BaseModel):
    A: list[list[RationalStr]]


class CubicResponse(BaseModel):
    A: list[list[RationalStr]]
    P: list[list[RationalStr]]
    N: PolyMatrixModel
    cubic: Poly
    degenerate: bool


class SixPointResponse(BaseModel):
    T: list[list[list[RationalStr]]]
    flattening: PolyMatrixModel
    minors: list[Poly]
    minor_rank: int


class HilbertRequest(BaseModel):
    A: list[list[RationalStr]]
    degrees: list[int] = Field(default_factory=lambda: [2, 3, 4, 5, 6])


class HilbertResponse(BaseModel):
    values: dict[str, int]


class DimProbeRequest(BaseModel):
    case: Literal["plane-curve", "quadric", "cubic"]
    k: Optional[int] = None
    samples: int = 5
    seed: Optional[int] = None


class DimProbeResponse(BaseModel):
    case: str
    n: int
    k: int
    rank: int
    ambient_dim: int
    param_count: int
    dominant: bool
    sample_ranks: list[int]
    modular_agrees: bool


class PlotRequest(BaseModel):
    system: SystemModel
    members: list[list[ParamPointModel]] = Field(default_factory=list)
    chart: int = 0
    window: list[RationalStr] = Field(default_factory=lambda: ["-5", "5", "-5", "5"])
    resolution: int = 160


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
