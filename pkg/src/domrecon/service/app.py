"""FastAPI application exposing the operation layer."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DomreconError, SizeLimit
from . import ops
from .models import (
    GenRequest,
    GraphOut,
    GraphsResponse,
    MdsRequest,
    MdsResponse,
    ReconRequest,
    ReconResponse,
    ReportOut,
    ScanReportOut,
    ScanRequest,
    VerifyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="domrecon",
        description=(
            "Minimal dominating sets, expansion/contraction reconfiguration "
            "graphs, and desk-scale theorem verification."
        ),
    )

    @app.exception_handler(SizeLimit)
    async def _size_limit(request: Request, exc: SizeLimit) -> JSONResponse:
        return JSONResponse(status_code=413, content={"detail": str(exc)})

    @app.exception_handler(DomreconError)
    async def _domain_error(request: Request, exc: DomreconError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(KeyError)
    async def _key_error(request: Request, exc: KeyError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/gen", response_model=GraphOut)
    def gen(req: GenRequest) -> GraphOut:
        return ops.gen(req)

    @app.post("/mds", response_model=MdsResponse)
    def mds(req: MdsRequest) -> MdsResponse:
        return ops.mds(req)

    @app.post("/recon", response_model=ReconResponse)
    def recon(req: ReconRequest) -> ReconResponse:
        return ops.recon(req)

    @app.post("/verify", response_model=ReportOut)
    def verify(req: VerifyRequest) -> ReportOut:
        return ops.verify(req)

    @app.post("/scan", response_model=list[ScanReportOut])
    def scan(req: ScanRequest) -> list[ScanReportOut]:
        return ops.scan(req)

    @app.get("/graphs/{n}", response_model=GraphsResponse)
    def graphs(n: int) -> GraphsResponse:
        return ops.graphs_endpoint(n)

    return app


app = create_app()
