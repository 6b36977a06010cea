"""HTTP API exposing the library operations.

All endpoints are pure functions of their inputs, so the service is
stateless and safe to run with any number of workers.  Domain errors map
to 400 with the error class name; a bad prime is a 422 validation error.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, Field

from . import automorphisms as autos
from .errors import SkewRingError
from .ring import PrimeModulus, RingElement, classify, inv
from .skew_cyclic import (
    DEFAULT_DISTANCE_BUDGET,
    Codeword,
    build_code,
    min_hamming_distance,
    theta_shift,
)
from .skew_poly import SkewPolynomial

app = FastAPI(
    title="skewring",
    description="Exact algebra over F_p[v]/(v^3 - v): ring arithmetic, "
    "automorphisms, skew polynomials and skew cyclic codes.",
)


def _modulus(p: int) -> PrimeModulus:
    try:
        return PrimeModulus(p)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


# ---------------------------------------------------------------------------
# Schemas
# ---------------------------------------------------------------------------


class Element(BaseModel):
    a: int
    b: int
    c: int

    @classmethod
    def of(cls, z: RingElement) -> "Element":
        return cls(a=z.a, b=z.b, c=z.c)

    def to_ring(self, pm: PrimeModulus) -> RingElement:
        return RingElement(self.a, self.b, self.c, pm)


class Poly(BaseModel):
    coeffs: list[Element]

    @classmethod
    def of(cls, f: SkewPolynomial) -> "Poly":
        return cls(coeffs=[Element.of(c) for c in f.coeffs])

    def to_skew(self, theta: int, pm: PrimeModulus) -> SkewPolynomial:
        return SkewPolynomial(
            tuple(c.to_ring(pm) for c in self.coeffs), theta, pm
        )


class ElemBinaryRequest(BaseModel):
    prime: int
    x: Element
    y: Element


class ElemUnaryRequest(BaseModel):
    prime: int
    z: Element


class ElementResponse(BaseModel):
    result: Element


class ClassifyResponse(BaseModel):
    kind: str
    conditions: list[str]
    is_unit: bool


class AutomorphismRow(BaseModel):
    id: int
    v_image: Element


class AutosResponse(BaseModel):
    prime: int
    automorphisms: list[AutomorphismRow]
    oracle: str | None = None


class CandidateRow(BaseModel):
    v_image: Element
    injective: bool
    automorphism_id: int | None
    collision: list[Element] | None


class EndosResponse(BaseModel):
    prime: int
    count: int
    candidates: list[CandidateRow]


class TableResponse(BaseModel):
    prime: int
    table: list[list[int]]


class PolyBinaryRequest(BaseModel):
    prime: int
    theta: int = Field(ge=1, le=6)
    f: Poly
    g: Poly


class PolyResponse(BaseModel):
    result: Poly


class DivmodResponse(BaseModel):
    q: Poly
    r: Poly


class CodeBuildRequest(BaseModel):
    prime: int
    theta: int = Field(ge=1, le=6)
    n: int = Field(ge=1)
    generator: Poly
    min_distance: bool = False
    budget: int = DEFAULT_DISTANCE_BUDGET


class CodeReport(BaseModel):
    n: int
    k: int
    q: str
    cardinality: int
    theta: int
    generator: Poly
    min_distance: int | None


class CodeShiftRequest(BaseModel):
    prime: int
    theta: int = Field(ge=1, le=6)
    codeword: list[Element]


class CodewordResponse(BaseModel):
    result: list[Element]


# ---------------------------------------------------------------------------
# Endpoints
# ---------------------------------------------------------------------------


@app.exception_handler(SkewRingError)
async def _domain_error(request, exc: SkewRingError):
    from fastapi.responses import JSONResponse

    return JSONResponse(
        status_code=400,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.get("/autos", response_model=AutosResponse)
def get_autos(prime: int, brute_force: bool = Query(default=False)):
    pm = _modulus(prime)
    rows = [
        AutomorphismRow(id=i, v_image=Element.of(autos.theta_image_of_v(i, pm)))
        for i in autos.AUTOMORPHISM_IDS
    ]
    oracle = None
    if brute_force:
        found = autos.enumerate_automorphisms_bruteforce(pm)
        ok = sorted(i for _, i in found) == list(autos.AUTOMORPHISM_IDS)
        oracle = "OK" if ok else "MISMATCH"
    return AutosResponse(prime=prime, automorphisms=rows, oracle=oracle)


@app.get("/endos", response_model=EndosResponse)
def get_endos(prime: int):
    pm = _modulus(prime)
    cands = autos.enumerate_endomorphism_candidates(pm)
    rows = [
        CandidateRow(
            v_image=Element.of(c.image_of_v),
            injective=c.injective,
            automorphism_id=c.automorphism_id,
            collision=None
            if c.collision is None
            else [Element.of(c.collision[0]), Element.of(c.collision[1])],
        )
        for c in cands
    ]
    return EndosResponse(prime=prime, count=len(rows), candidates=rows)


@app.get("/table", response_model=TableResponse)
def get_table(prime: int):
    pm = _modulus(prime)
    table = autos.group_table(pm)
    return TableResponse(prime=prime, table=[list(r) for r in table.rows])


@app.post("/elem/mul", response_model=ElementResponse)
def elem_mul(req: ElemBinaryRequest):
    pm = _modulus(req.prime)
    return ElementResponse(result=Element.of(req.x.to_ring(pm) * req.y.to_ring(pm)))


@app.post("/elem/inv", response_model=ElementResponse)
def elem_inv(req: ElemUnaryRequest):
    pm = _modulus(req.prime)
    return ElementResponse(result=Element.of(inv(req.z.to_ring(pm))))


@app.post("/elem/classify", response_model=ClassifyResponse)
def elem_classify(req: ElemUnaryRequest):
    pm = _modulus(req.prime)
    cls = classify(req.z.to_ring(pm))
    return ClassifyResponse(
        kind=cls.kind, conditions=list(cls.conditions), is_unit=cls.is_unit
    )


@app.post("/poly/mul", response_model=PolyResponse)
def poly_mul(req: PolyBinaryRequest):
    pm = _modulus(req.prime)
    f = req.f.to_skew(req.theta, pm)
    g = req.g.to_skew(req.theta, pm)
    return PolyResponse(result=Poly.of(f * g))


@app.post("/poly/divmod", response_model=DivmodResponse)
def poly_divmod(req: PolyBinaryRequest):
    pm = _modulus(req.prime)
    f = req.f.to_skew(req.theta, pm)
    g = req.g.to_skew(req.theta, pm)
    q, r = f.right_divmod(g)
    return DivmodResponse(q=Poly.of(q), r=Poly.of(r))


@app.post("/code/build", response_model=CodeReport)
def code_build(req: CodeBuildRequest):
    pm = _modulus(req.prime)
    g = req.generator.to_skew(req.theta, pm)
    code = build_code(pm, req.theta, req.n, g)
    dist = min_hamming_distance(code, req.budget) if req.min_distance else None
    return CodeReport(
        n=code.n,
        k=code.k,
        q=f"{pm.p}^{3 * code.k}",
        cardinality=code.cardinality,
        theta=code.theta,
        generator=Poly.of(code.generator),
        min_distance=dist,
    )


@app.post("/code/shift", response_model=CodewordResponse)
def code_shift(req: CodeShiftRequest):
    pm = _modulus(req.prime)
    word = Codeword(tuple(e.to_ring(pm) for e in req.codeword))
    shifted = theta_shift(word, req.theta)
    return CodewordResponse(result=[Element.of(e) for e in shifted.entries])
