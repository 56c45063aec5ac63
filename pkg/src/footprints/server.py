"""Read-only HTTP/JSON facade over a workspace of footprints.

A workspace is a directory holding one vector file plus the footprints
built against it::

    workspace/
        vectors.txt          # GloVe-format text (name configurable via
        workspace.ini        # optional: [workspace] vectors = <filename>
        footprints/*.json
        static/              # optional: built UI, served at /

Everything is loaded once at startup and never mutated; requests only
read, so identical requests return identical bodies.
"""

from __future__ import annotations

import configparser
import json
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from . import footprint as fp_mod
from .errors import (
    DegenerateData,
    EmptyInput,
    FootprintError,
    MalformedInput,
    SeedNotInFootprint,
    ThemeNotInSpace,
)
from .export import projection_document
from .footprint import Footprint, ThemeCluster
from .vsm import VectorSpace, load_vectors


@dataclass(frozen=True)
class Workspace:
    space: VectorSpace
    footprints: dict[str, Footprint]
    root: Path
    config: dict | None = None    # settings snapshot taken at load time
    static_dir: Path | None = None


def load_workspace(root: str | Path) -> Workspace:
    """Load vectors and footprints from a workspace directory.

    Footprints must reference the loaded space: matching space_id (the
    vector file's name) and matching dimensionality.
    """
    root = Path(root)
    vectors_name = "vectors.txt"
    ini = root / "workspace.ini"
    if ini.exists():
        parser = configparser.ConfigParser()
        parser.read(ini, encoding="utf-8")
        vectors_name = parser.get("workspace", "vectors", fallback=vectors_name)
    vectors_path = root / vectors_name
    if not vectors_path.exists():
        raise MalformedInput(f"workspace has no vector file at {vectors_path}")
    space = load_vectors(vectors_path)
    space_id = vectors_path.name

    footprints: dict[str, Footprint] = {}
    for path in sorted((root / "footprints").glob("*.json")):
        fp = Footprint.from_dict(json.loads(path.read_text(encoding="utf-8")))
        if fp.space_id and Path(fp.space_id).name != space_id:
            raise MalformedInput(
                f"{path.name}: built against {fp.space_id!r}, workspace loads {space_id!r}"
            )
        for term in fp.terms:
            if term.vector.shape[0] != space.dim:
                raise MalformedInput(
                    f"{path.name}: term {term.surface!r} has dim "
                    f"{term.vector.shape[0]}, space has {space.dim}"
                )
        footprints[fp.source] = fp
    static_dir = root / "static"
    return Workspace(
        space=space,
        footprints=footprints,
        root=root,
        config={"vectors": vectors_name, "footprint_count": len(footprints)},
        static_dir=static_dir if static_dir.is_dir() else None,
    )


def _cluster_payload(cluster: ThemeCluster) -> dict:
    return {
        "seed": cluster.seed.to_dict(),
        "members": [
            {"term": term.to_dict(), "similarity": sim}
            for term, sim in cluster.members
        ],
    }


def create_app(workspace: Workspace) -> FastAPI:
    app = FastAPI(title="political-footprints", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],   # read-only local tool; the UI runs on another port
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def get_footprint(fp_id: str) -> Footprint:
        fp = workspace.footprints.get(fp_id)
        if fp is None:
            raise HTTPException(status_code=404, detail=f"no footprint {fp_id!r}")
        return fp

    @app.get("/api/footprints")
    def list_footprints():
        return {
            "space_id": Path(workspace.space.source).name,
            "footprints": [
                {"id": fp.source, "term_count": len(fp.terms)}
                for fp in workspace.footprints.values()
            ],
        }

    @app.get("/api/footprints/{fp_id}/clusters")
    def clusters(fp_id: str, seeds: int = Query(10, ge=1), k: int = Query(10, ge=1)):
        fp = get_footprint(fp_id)
        return {
            "source": fp.source,
            "clusters": [
                _cluster_payload(c) for c in fp_mod.theme_clusters(fp, seeds, k)
            ],
        }

    @app.get("/api/footprints/{fp_id}/neighbors")
    def neighbors(fp_id: str, seed: str = Query(...), k: int = Query(10, ge=1)):
        fp = get_footprint(fp_id)
        try:
            cluster = fp_mod.neighbors_of(fp, seed, k)
        except SeedNotInFootprint as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return {"source": fp.source, "cluster": _cluster_payload(cluster)}

    @app.get("/api/theme/{word}")
    def theme(word: str, n: int = Query(20, ge=1)):
        fps = list(workspace.footprints.values())
        try:
            comparison = fp_mod.compare_theme(workspace.space, fps, word, n)
        except ThemeNotInSpace as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        except EmptyInput as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return {
            "theme": comparison.theme,
            "candidates": [
                {"token": token, "similarity": sim, "usage": usage}
                for token, sim, usage in comparison.candidates
            ],
        }

    @app.get("/api/drilldown/{word}")
    def drill(word: str, k: int = Query(10, ge=1)):
        fps = list(workspace.footprints.values())
        try:
            result = fp_mod.drilldown(workspace.space, fps, word, k)
        except ThemeNotInSpace as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return {
            "word": workspace.space.normalize_token(word),
            "clusters": {src: _cluster_payload(c) for src, c in result.items()},
        }

    @app.get("/api/distances")
    def distances(weighting: str = Query("uniform", pattern="^(uniform|relevance)$")):
        fps = list(workspace.footprints.values())
        try:
            report = fp_mod.distance_matrix(fps, weighting)
        except FootprintError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return report.to_dict()

    @app.get("/api/projection/{fp_id}")
    def projection(fp_id: str):
        fp = get_footprint(fp_id)
        try:
            return projection_document(fp)
        except (DegenerateData, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    if workspace.static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=workspace.static_dir, html=True))
    return app


def serve(workspace: Workspace, bind: str = "127.0.0.1:8000") -> None:
    """Run the API server (blocking) on ``host:port``."""
    import uvicorn

    host, _, port = bind.rpartition(":")
    if not host:
        host = "127.0.0.1"
    uvicorn.run(create_app(workspace), host=host, port=int(port))
