"""HTTP service exposing translation and search over a shared engine."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import FileResponse, HTMLResponse, JSONResponse
from pydantic import BaseModel

from . import __version__
from .config import Config
from .engine import QueryAnswer, SearchEngine
from .model import CandidateTable, ElectedQuery, ParameterKind
from .textpipe import form_to_str


def triple_line(kind: str, context: str, identifier: str) -> str:
    """Canonical one-line rendering of an elected triple; the CLI header
    and the web UI feedback area must both produce exactly this string."""
    return f"{kind} {context} {identifier}"


class QueryRequest(BaseModel):
    query: str


class ElectedOut(BaseModel):
    kind: str
    context: str
    identifier: str


class CandidateOut(BaseModel):
    words: list[str]
    probability: float
    fraction: str
    source: str


class ParameterCandidatesOut(BaseModel):
    parameter: str
    candidates: list[CandidateOut]


class ResultOut(BaseModel):
    file: str
    line: int
    column: int
    kind: str
    context: str
    name: str
    enclosing: str
    snippet: str


class QueryResponse(BaseModel):
    status: str
    elected: ElectedOut
    form: str
    match_count: int
    candidates: list[ParameterCandidatesOut]
    trace: list[str]
    results: list[ResultOut]
    truncated: bool
    search_error: str | None = None


class HealthResponse(BaseModel):
    status: str
    version: str


def _elected_out(election: ElectedQuery | None) -> ElectedOut:
    if election is None:
        return ElectedOut(kind="UNKNOWN", context="UNKNOWN", identifier="")
    return ElectedOut(
        kind=election.element_kind.value,
        context=election.context.value,
        identifier=election.identifier,
    )


def _candidates_out(table: CandidateTable) -> list[ParameterCandidatesOut]:
    groups = []
    for parameter in ParameterKind:
        rows = []
        for candidate in table.for_parameter(parameter):
            probability = candidate.probability
            if table.match_count:
                count = probability * table.match_count
                fraction = f"{count.numerator // count.denominator}/{table.match_count}"
            else:
                fraction = str(probability)
            rows.append(
                CandidateOut(
                    words=list(candidate.texts),
                    probability=float(probability),
                    fraction=fraction,
                    source=candidate.source.value,
                )
            )
        groups.append(ParameterCandidatesOut(parameter=parameter.value, candidates=rows))
    return groups


def answer_to_response(answer: QueryAnswer) -> QueryResponse:
    outcome = answer.outcome
    return QueryResponse(
        status=outcome.status.value,
        elected=_elected_out(outcome.election),
        form=form_to_str(outcome.candidate_table.form) if outcome.candidate_table.form else "",
        match_count=outcome.candidate_table.match_count,
        candidates=_candidates_out(outcome.candidate_table),
        trace=list(outcome.diagnostics),
        results=[
            ResultOut(
                file=r.file, line=r.line, column=r.column,
                kind=r.element_kind.value, context=r.context.value,
                name=r.element_name, enclosing=r.enclosing, snippet=r.snippet,
            )
            for r in answer.results
        ],
        truncated=answer.truncated,
        search_error=answer.search_error,
    )


_FALLBACK_PAGE = """<!doctype html>
<html><head><title>nlquery</title></head>
<body>
<h1>nlquery</h1>
<p>The web UI bundle is not built. POST JSON to <code>/api/query</code>:</p>
<pre>curl -s -X POST localhost:8000/api/query -H 'Content-Type: application/json' \\
  -d '{"query": "Where is the field balance read?"}'</pre>
</body></html>
"""


def default_ui_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "frontend" / "dist"


def create_app(config: Config | None = None, engine: SearchEngine | None = None) -> FastAPI:
    config = config or Config()
    engine = engine or SearchEngine(config)
    ui_dir = Path(config.ui_dir) if config.ui_dir is not None else default_ui_dir()

    app = FastAPI(title="nlquery", version=__version__)

    @app.exception_handler(RequestValidationError)
    async def invalid_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/api/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/api/query", response_model=QueryResponse)
    def query(request: QueryRequest) -> QueryResponse:
        return answer_to_response(engine.query(request.query))

    @app.get("/", include_in_schema=False)
    def ui_index():
        index_page = ui_dir / "index.html"
        if index_page.is_file():
            return FileResponse(index_page)
        return HTMLResponse(_FALLBACK_PAGE)

    @app.get("/js/{name}", include_in_schema=False)
    def ui_script(name: str):
        script = ui_dir / "js" / name
        if name.endswith(".js") and "/" not in name and script.is_file():
            return FileResponse(script, media_type="text/javascript")
        return JSONResponse(status_code=404, content={"detail": "UI bundle not built"})

    @app.get("/styles.css", include_in_schema=False)
    def ui_styles():
        styles = ui_dir / "styles.css"
        if styles.is_file():
            return FileResponse(styles, media_type="text/css")
        return JSONResponse(status_code=404, content={"detail": "UI bundle not built"})

    return app
