"""HTTP service exposing the engine as JSON endpoints.

All rational parameters travel as "p/q" strings so no floating point ever
crosses the wire.  The CLI is a thin client of this app; by default it
mounts the app in-process, so no server needs to be running for batch use.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .engine import build_operator, classify, reducibility
from .errors import ConsistencyError, FmkError, UnsupportedRankError
from .ktype import composition_series, finite_model_check, kernel_image_ktypes
from .series import BundleParams, TRIVIAL, poly_fiber, verify_intertwining
from .slstruct import ParabolicData
from .standardness import standardness_report


def _parse_rational(s: str, what: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(422, f"invalid rational for {what}: {s!r}") from exc


class ClassifyRequest(BaseModel):
    n: int = Field(ge=2)
    k_max: int = Field(ge=0)
    alpha: str | None = Field(default=None, pattern=r"^[+-]$")
    family: str = Field(default="G", pattern=r"^(G|gP|g|all)$")
    include_operators: bool = True


class ClassifyResponse(BaseModel):
    records: list[dict]


class VerifyRequest(BaseModel):
    n: int = Field(ge=2)
    k: int = Field(ge=0)
    lam: str | None = None  # source parameter; defaults to the classified value
    max_deg: int | None = Field(default=None, ge=0)


class VerifyResponse(BaseModel):
    passed: bool
    report: dict
    parameters: dict


class OperatorRequest(BaseModel):
    n: int = Field(ge=2)
    k: int = Field(ge=0)


class OperatorResponse(BaseModel):
    n: int
    k: int
    lam: str
    nu: str
    operator: dict
    hom: dict


class KTypesRequest(BaseModel):
    n: int = Field(ge=2)
    k: int = Field(ge=0)
    alpha: str = Field(pattern=r"^[+-]$")


class KTypesResponse(BaseModel):
    table: dict
    finite_model: dict | None = None


class CompositionRequest(BaseModel):
    n: int = Field(ge=2)
    lam: str
    alpha: str = Field(pattern=r"^[+-]$")


class StandardnessRequest(BaseModel):
    n: int = Field(ge=2)
    k_max: int = Field(ge=0)
    depth: int = Field(default=3, ge=1)


class StandardnessResponse(BaseModel):
    rows: list[dict]
    all_standard: bool


class ReducibilityRequest(BaseModel):
    n: int = Field(ge=2)
    s_values: list[str]
    certify: bool = True


class ReducibilityResponse(BaseModel):
    verdicts: list[dict]


def create_app() -> FastAPI:
    app = FastAPI(
        title="fmk",
        version=__version__,
        description="Exact classification and verification of projectively "
        "covariant differential operators",
    )

    @app.exception_handler(UnsupportedRankError)
    async def _rank_handler(_: Request, exc: UnsupportedRankError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(FmkError)
    async def _fmk_handler(_: Request, exc: FmkError) -> JSONResponse:
        # internal cross-check failures are server bugs, not client errors
        status = 500 if isinstance(exc, ConsistencyError) else 400
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/v1/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/classify", response_model=ClassifyResponse)
    def classify_endpoint(req: ClassifyRequest) -> ClassifyResponse:
        records = classify(req.n, req.k_max, req.alpha)
        keep = {
            "G": {"identity", "Lambda_G"},
            "gP": {"identity", "Lambda_gP"},
            "g": {"identity", "Lambda_g"},
            "all": {"identity", "Lambda_G", "Lambda_gP", "Lambda_g"},
        }[req.family]
        rows = []
        for r in records:
            if r.family not in keep:
                continue
            row = r.to_json()
            if not req.include_operators:
                row.pop("operator", None)
                row.pop("hom", None)
            rows.append(row)
        return ClassifyResponse(records=rows)

    @app.post("/v1/operator", response_model=OperatorResponse)
    def operator_endpoint(req: OperatorRequest) -> OperatorResponse:
        built = build_operator(req.n, req.k)
        return OperatorResponse(
            n=req.n, k=req.k, lam=str(built.lam), nu=str(built.nu),
            operator=built.operator.to_json(), hom=built.hom.to_json(),
        )

    @app.post("/v1/verify", response_model=VerifyResponse)
    def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
        pd = ParabolicData(req.n)
        built = build_operator(req.n, req.k, pd)
        lam = built.lam if req.lam is None else _parse_rational(req.lam, "lam")
        max_deg = req.max_deg if req.max_deg is not None else req.k + 3
        src = BundleParams(req.n, TRIVIAL, "+", lam, dual_twist=False)
        dst_fiber = poly_fiber(req.k) if req.k else TRIVIAL
        dst = BundleParams(req.n, dst_fiber, "+", built.nu, dual_twist=False)
        report = verify_intertwining(built.operator.as_pdoperator(), src, dst, max_deg, pd)
        return VerifyResponse(
            passed=report.passed,
            report=report.to_json(),
            parameters={
                "n": req.n, "k": req.k, "lambda": str(lam), "nu": str(built.nu),
                "classified_lambda": str(built.lam), "max_deg": max_deg,
            },
        )

    @app.post("/v1/ktypes", response_model=KTypesResponse)
    def ktypes_endpoint(req: KTypesRequest) -> KTypesResponse:
        table = kernel_image_ktypes(req.n, req.k, req.alpha)
        finite = None
        if req.k >= 1 and table.kernel.kind != "zero":
            finite = finite_model_check(req.n, req.k).to_json()
        return KTypesResponse(table=table.to_json(), finite_model=finite)

    @app.post("/v1/composition", response_model=KTypesResponse)
    def composition_endpoint(req: CompositionRequest) -> KTypesResponse:
        lam = _parse_rational(req.lam, "lambda")
        rep = composition_series(req.n, lam, req.alpha)
        return KTypesResponse(table=rep.to_json(), finite_model=None)

    @app.post("/v1/standardness", response_model=StandardnessResponse)
    def standardness_endpoint(req: StandardnessRequest) -> StandardnessResponse:
        rows = standardness_report(req.n, req.k_max, req.depth)
        return StandardnessResponse(
            rows=[r.to_json() for r in rows],
            all_standard=all(r.verdict == "standard" for r in rows),
        )

    @app.post("/v1/reducibility", response_model=ReducibilityResponse)
    def reducibility_endpoint(req: ReducibilityRequest) -> ReducibilityResponse:
        verdicts = []
        for s in req.s_values:
            v = reducibility(req.n, _parse_rational(s, "s"), certify=req.certify)
            verdicts.append(v.to_json())
        return ReducibilityResponse(verdicts=verdicts)

    return app


app = create_app()
