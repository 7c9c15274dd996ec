"""JSON-over-HTTP API around one loaded evaluation matrix.

The matrix is fixed at startup; the Pareto front and its scaling are
computed once and cached, so a selection request costs one dot product per
front member.  Routes:

* ``GET /api/health``  -- liveness plus matrix dimensions
* ``GET /api/matrix``  -- the full matrix document (byte-stable, ETag'd)
* ``GET /api/pareto``  -- front members with raw and scaled criteria
* ``POST /api/select`` -- body ``{"phi": [...]}``, components in [0, 1]

The API is unauthenticated and intended for localhost or trusted-network
use; cross-origin requests are allowed so a UI served from another origin
can talk to it during development.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import core
from .errors import MTMCError, WeightRangeError
from .matrix import EvaluationMatrix


def _bad_request(message: str, component: int | None = None) -> JSONResponse:
    return JSONResponse(status_code=400, content={"error": message, "component": component})


def create_app(matrix: EvaluationMatrix, static_dir: str | Path | None = None) -> FastAPI:
    """Build the FastAPI app serving ``matrix``.

    ``static_dir``, when given, is mounted at ``/`` (after the API routes)
    so the explorer UI's assets can be served by the same process.
    """
    front = core.pareto_front(matrix)
    matrix_bytes = matrix.to_json().encode("utf-8")
    etag = '"' + hashlib.sha256(matrix_bytes).hexdigest() + '"'
    member_ids = [matrix.combinations[i].id for i in front.member_indices]

    app = FastAPI(title="mtmc", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    def health() -> dict:
        return {
            "status": "ok",
            "combinations": matrix.n_combinations,
            "criteria": matrix.n_criteria,
        }

    @app.get("/api/matrix")
    def matrix_document() -> Response:
        return Response(
            content=matrix_bytes,
            media_type="application/json",
            headers={"ETag": etag},
        )

    @app.get("/api/pareto")
    def pareto() -> dict:
        return {
            "criteria_names": list(matrix.criteria_names),
            "members": [
                {
                    "combination_id": member_ids[pos],
                    "index": index,
                    "hyperparameters": dict(matrix.combinations[index].hyperparameters),
                    "raw": list(front.raw[pos]),
                    "scaled": list(front.scaled[pos]),
                }
                for pos, index in enumerate(front.member_indices)
            ],
        }

    @app.post("/api/select")
    async def select(request: Request) -> Response:
        try:
            payload = await request.json()
        except Exception:
            return _bad_request("request body is not valid JSON")
        if not isinstance(payload, dict) or "phi" not in payload:
            return _bad_request("request body must be an object with a 'phi' array")
        phi = payload["phi"]
        if not isinstance(phi, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in phi
        ):
            return _bad_request("'phi' must be an array of numbers")
        try:
            result = core.select_with_front(matrix, front, [float(v) for v in phi])
        except WeightRangeError as exc:
            return _bad_request(str(exc), component=exc.component)
        except MTMCError as exc:
            return _bad_request(str(exc))
        return JSONResponse(
            {
                "selected_id": result.selected_id,
                "hyperparameters": result.hyperparameters,
                "resolved_phi": list(result.resolved_weights),
                "projections": [
                    {"combination_id": member_ids[pos], "score": score}
                    for pos, score in enumerate(result.projections)
                ],
                "front_member_ids": member_ids,
            }
        )

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app
