"""Local HTTP service exposing the meshing pipeline.

POST /api/mesh takes the boundary text plus parameters and returns the mesh,
its statistics and any warnings. GET / serves the bundled browser UI when a
build is present. The service holds no state; every request is independent.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Literal, Optional

from fastapi import FastAPI
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .advancing_front import FrontStrategy
from .diagnostics import MeshError, ParseError
from .export import export_json
from .pipeline import MeshMethod, MeshParams, run_mesh
from .quality import mesh_statistics
from .refine import SwapCriterion
from .spacing import parse_spacing

_SWAPS = {"delaunay": SwapCriterion.DELAUNAY_MAX_MIN,
          "minmax": SwapCriterion.MIN_MAX,
          "none": None}
_VERSIONS = {"first": FrontStrategy.FIRST_ACTIVE_EDGE,
             "smallest": FrontStrategy.SMALLEST_EDGE}

app = FastAPI(title="trigrid", docs_url=None, redoc_url=None)


class ParamsModel(BaseModel):
    spacing: str
    method: Literal["delaunay", "afm", "steiner"] = "steiner"
    factor: float = 1.0
    afm_version: Literal["first", "smallest"] = "first"
    swap: Literal["delaunay", "minmax", "none"] = "delaunay"
    smoothing: bool = True
    use_spline: bool = False
    final_edge_check: bool = True
    max_nodes: Optional[int] = None
    dry_run: bool = False


class MeshRequest(BaseModel):
    mg: str
    params: ParamsModel


@app.get("/api/health")
def health() -> dict:
    return {"ok": True}


@app.post("/api/mesh")
def mesh_endpoint(req: MeshRequest):
    try:
        params = MeshParams(
            spacing=parse_spacing(req.params.spacing),
            method=MeshMethod(req.params.method),
            factor=req.params.factor,
            afm_version=_VERSIONS[req.params.afm_version],
            swap=_SWAPS[req.params.swap],
            smoothing=req.params.smoothing,
            use_spline=req.params.use_spline,
            final_edge_check=req.params.final_edge_check,
            max_nodes=req.params.max_nodes,
        )
        result = run_mesh(req.mg, params, dry_run=req.params.dry_run)
    except ParseError as exc:
        body = {"error": exc.message}
        if exc.line is not None:
            body["line"] = exc.line
        return JSONResponse(status_code=400, content=body)
    except MeshError as exc:
        return JSONResponse(status_code=400,
                            content={"error": exc.message,
                                     "code": exc.code.value})
    stats = mesh_statistics(result.mesh)
    stats["histograms"] = {
        kind.name.lower(): {
            "counts": list(hist.counts),
            "population": hist.population,
            "width": hist.width,
            "bin_rule": hist.bin_rule,
        }
        for kind, hist in result.histograms.items()
    }
    return {
        "mesh": json.loads(export_json(result.mesh)),
        "stats": stats,
        "warnings": [{"code": d.code.value, "message": d.message}
                     for d in result.warnings],
    }


_STATIC = Path(__file__).parent / "static"
if (_STATIC / "index.html").is_file():
    app.mount("/", StaticFiles(directory=_STATIC, html=True), name="ui")
else:  # pragma: no cover - depends on whether the UI build was bundled
    @app.get("/", response_class=HTMLResponse)
    def index() -> str:
        return ("<!doctype html><title>trigrid</title>"
                "<p>The browser UI is not bundled in this install. "
                "The API lives under <code>/api</code>.</p>")
