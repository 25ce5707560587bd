"""Request/response models shared by the HTTP routes and the CLI client."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator


class GraphIn(BaseModel):
    """One graph, given as a family spec, a graph6 record, or an edge list."""

    spec: str | None = None
    g6: str | None = None
    n: int | None = None
    edges: list[tuple[int, int]] | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "GraphIn":
        given = [self.spec is not None, self.g6 is not None, self.n is not None]
        if sum(given) != 1:
            raise ValueError("provide exactly one of spec, g6, or n+edges")
        if self.n is None and self.edges is not None:
            raise ValueError("edges require an explicit vertex count n")
        return self


class GraphOut(BaseModel):
    n: int
    edges: list[tuple[int, int]]
    labels: list[str] | None = None
    g6: str


class GenRequest(BaseModel):
    spec: str


class MdsRequest(BaseModel):
    graph: GraphIn
    max_vertices: int = 24


class MdsResponse(BaseModel):
    sets: list[list[int]]


class ReconRequest(BaseModel):
    graph: GraphIn
    kind: Literal["full", "gamma"] = "full"
    max_vertices: int = 24
    limit: int | None = None


class ReconResponse(BaseModel):
    base_g6: str
    kind: str
    sets: list[list[int]]
    edges: list[tuple[int, int]]
    components: list[list[int]]
    diameter: int | None
    g6: str


class VerifyRequest(BaseModel):
    theorem: str
    params: dict[str, Any] = Field(default_factory=dict)


class ReportOut(BaseModel):
    id: str
    params: dict[str, Any]
    verdict: str
    witness: dict[str, Any] | None = None
    stats: dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: float


class ScanRequest(BaseModel):
    corpus: str = ""
    records: list[str] | None = None
    checks: list[str] | None = None
    jobs: int = 1
    limit: int | None = None


class ScanReportOut(BaseModel):
    id: str
    corpus: str
    examined: int
    skipped: int
    counterexamples: list[dict[str, Any]]
    stats: dict[str, Any]
    elapsed_ms: float


class GraphsResponse(BaseModel):
    n: int
    count: int
    graphs: list[str]
