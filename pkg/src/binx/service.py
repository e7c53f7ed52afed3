"""HTTP API over the engine: datasets, binning, combine, paint, stores.

Responses serialize through binx.serialize, so bodies are byte-identical to
the CLI's files for the same logical request. Engine errors map to stable
codes: 400 for input problems, 409 for name conflicts, 422 for infeasible
constraints, 500 otherwise.
"""

from __future__ import annotations

import hashlib
import json
import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Form, Request, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response

from . import serialize
from .consensus import combine
from .dataio import Dataset, join, load_sample, parse_attributes, parse_geometry
from .errors import (
    CONFLICT_ERRORS,
    INFEASIBLE_ERRORS,
    BinxError,
    UnknownMethod,
)
from .export import export_result
from .methods import catalog_json, run_all, run_method
from .methodspec import MethodSpec, default_member_methods
from .palettes import add_custom, get_palette, list_palettes
from .profiling import profile
from .reclassify import PinConstraint, apply_pins, misuse_warning
from .result import check_extents
from .stores import CustomMethodStore, CustomPaletteStore

MAX_REQUEST_BYTES = 50 * 1024 * 1024
SAMPLE_ID = "life-expectancy-sample"


def _json_response(payload: Any, status_code: int = 200) -> Response:
    return Response(
        content=serialize.dumps_bytes(payload),
        status_code=status_code,
        media_type="application/json",
    )


def _error_status(exc: BinxError) -> int:
    if isinstance(exc, CONFLICT_ERRORS):
        return 409
    if isinstance(exc, INFEASIBLE_ERRORS):
        return 422
    return 400


class DatasetRegistry:
    """In-memory datasets with optional directory persistence.

    Uploads replace entries atomically; reads hand out immutable snapshots so
    concurrent binning requests never block each other.
    """

    def __init__(self, data_dir: Path | None) -> None:
        self._lock = threading.Lock()
        self._datasets: dict[str, Dataset] = {}
        self._data_dir = data_dir

    def get(self, dataset_id: str) -> Dataset:
        with self._lock:
            dataset = self._datasets.get(dataset_id)
        if dataset is None:
            raise BinxError(f"unknown dataset {dataset_id!r}")
        return dataset

    def put(self, dataset: Dataset, raw: tuple[bytes, bytes, dict] | None = None) -> None:
        with self._lock:
            self._datasets[dataset.id] = dataset
        if raw is not None and self._data_dir is not None:
            folder = self._data_dir / "datasets" / dataset.id
            folder.mkdir(parents=True, exist_ok=True)
            attributes, geometry, config = raw
            (folder / "attributes.csv").write_bytes(attributes)
            (folder / "geometry.geojson").write_bytes(geometry)
            (folder / "config.json").write_text(json.dumps(config))

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._datasets)

    def reload(self) -> None:
        if self._data_dir is None:
            return
        root = self._data_dir / "datasets"
        if not root.is_dir():
            return
        for folder in sorted(root.iterdir()):
            config_path = folder / "config.json"
            if not config_path.is_file():
                continue
            config = json.loads(config_path.read_text())
            attrs = parse_attributes(
                (folder / "attributes.csv").read_bytes(),
                config["idColumn"],
                config["valueColumn"],
            )
            geometry = parse_geometry(
                (folder / "geometry.geojson").read_bytes(), config["idColumn"]
            )
            self.put(join(geometry, attrs, dataset_id=folder.name))


def create_app(data_dir: str | None = None, cors_origin: str | None = None) -> FastAPI:
    app = FastAPI(title="binx", docs_url=None, redoc_url=None)
    base = Path(data_dir) if data_dir else None
    registry = DatasetRegistry(base)
    registry.put(load_sample())
    registry.reload()
    store_root = base if base is not None else Path(".binx")
    method_store = CustomMethodStore(store_root / "custom_methods.json")
    palette_store = CustomPaletteStore(store_root / "custom_palettes.json")

    if cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(BinxError)
    async def handle_binx_error(_request: Request, exc: BinxError) -> Response:
        payload = {"code": exc.code, "message": exc.message, "details": exc.details}
        return _json_response(payload, status_code=_error_status(exc))

    @app.middleware("http")
    async def cap_request_size(request: Request, call_next):
        length = request.headers.get("content-length")
        if length and int(length) > MAX_REQUEST_BYTES:
            return _json_response(
                {"code": "RequestTooLarge",
                 "message": f"request exceeds {MAX_REQUEST_BYTES} bytes", "details": {}},
                status_code=413,
            )
        return await call_next(request)

    @app.get("/healthz")
    def healthz() -> Response:
        return _json_response({"status": "ok"})

    @app.get("/api/methods")
    def methods() -> Response:
        return _json_response(catalog_json(method_store.names()))

    @app.get("/api/datasets")
    def datasets() -> Response:
        return _json_response({"datasets": registry.ids()})

    @app.get("/api/datasets/{dataset_id}")
    def dataset_info(dataset_id: str) -> Response:
        dataset = registry.get(dataset_id)
        return _json_response(
            {
                "datasetId": dataset.id,
                "attribute": dataset.series.attribute_name,
                "joinReport": dataset.join_report.to_json_dict(),
                "profile": serialize.profile_payload(profile(dataset.series)),
            }
        )

    @app.get("/api/datasets/{dataset_id}/geometry")
    def dataset_geometry(dataset_id: str) -> Response:
        dataset = registry.get(dataset_id)
        features = []
        for fid in dataset.geometry.ids:
            feature = dict(dataset.geometry.features[fid])
            properties = dict(feature.get("properties") or {})
            properties["__id"] = fid
            properties["__value"] = dataset.series.value_of(fid)
            feature["properties"] = properties
            features.append(feature)
        return _json_response({"type": "FeatureCollection", "features": features})

    @app.post("/api/datasets")
    async def upload_dataset(
        attributes: UploadFile,
        geometry: UploadFile,
        id_column: str = Form("id"),
        value_column: str = Form(...),
        dataset_id: str = Form(None),
    ) -> Response:
        attr_bytes = await attributes.read()
        geo_bytes = await geometry.read()
        column = parse_attributes(attr_bytes, id_column, value_column)
        collection = parse_geometry(geo_bytes, id_column)
        if not dataset_id:
            digest = hashlib.sha256()
            digest.update(attr_bytes)
            digest.update(geo_bytes)
            digest.update(f"{id_column}:{value_column}".encode())
            dataset_id = digest.hexdigest()[:12]
        dataset = join(collection, column, dataset_id=dataset_id)
        config = {"idColumn": id_column, "valueColumn": value_column}
        registry.put(dataset, raw=(attr_bytes, geo_bytes, config))
        return _json_response(
            {
                "datasetId": dataset.id,
                "joinReport": dataset.join_report.to_json_dict(),
                "profile": serialize.profile_payload(profile(dataset.series)),
            }
        )

    def _series_for(body: dict) -> Dataset:
        dataset = registry.get(str(body.get("datasetId", "")))
        attribute = body.get("attribute")
        if attribute and attribute != dataset.series.attribute_name:
            raise BinxError(
                f"dataset {dataset.id!r} has attribute "
                f"{dataset.series.attribute_name!r}, not {attribute!r}"
            )
        return dataset

    @app.post("/api/bin")
    async def bin_one(request: Request) -> Response:
        body = await request.json()
        dataset = _series_for(body)
        spec_dict = body.get("spec")
        if not isinstance(spec_dict, dict):
            raise BinxError("body needs a spec object with a methodId")
        spec = MethodSpec.from_json_dict(spec_dict)
        result = run_method(dataset.series, spec, custom_store=method_store)
        return _json_response(serialize.result_payload(result))

    @app.post("/api/bin/all")
    async def bin_all(request: Request) -> Response:
        body = await request.json()
        dataset = _series_for(body)
        results = run_all(
            dataset.series,
            bin_count=int(body.get("binCount", 5)),
            defined_interval_size=body.get("definedIntervalSize"),
            custom_store=method_store,
        )
        return _json_response(
            {mid: serialize.result_payload(res) for mid, res in results.items()}
        )

    @app.post("/api/compare")
    async def compare(request: Request) -> Response:
        body = await request.json()
        dataset = _series_for(body)
        from .methods import specs_for_all

        wanted = body.get("methods")
        specs = specs_for_all(
            dataset.series,
            int(body.get("binCount", 5)),
            body.get("definedIntervalSize"),
        )
        if wanted:
            unknown = set(wanted) - {s.method_id for s in specs}
            if unknown:
                raise UnknownMethod(f"unknown methods: {sorted(unknown)}")
            specs = [s for s in specs if s.method_id in set(wanted)]
        results = [run_method(dataset.series, s, custom_store=method_store) for s in specs]
        return _json_response(serialize.compare_payload(results))

    @app.post("/api/combine")
    async def combine_endpoint(request: Request) -> Response:
        body = await request.json()
        dataset = _series_for(body)
        k = int(body.get("k", 6))
        members = body.get("members") or list(default_member_methods(k))
        matrix, resiliency = combine(dataset.series, members, k, custom_store=method_store)
        return _json_response(serialize.combine_payload(matrix, resiliency))

    @app.post("/api/paint")
    async def paint(request: Request) -> Response:
        body = await request.json()
        dataset = _series_for(body)
        extents = check_extents([float(e) for e in body.get("extents", [])])
        constraints = []
        for item in body.get("constraints", []):
            constraints.append(
                PinConstraint(
                    target_bin=int(item["targetBin"]),
                    feature_id=item.get("featureId"),
                    value=item.get("value"),
                )
            )
        solved, notes = apply_pins(extents, constraints, dataset.series)
        return _json_response(serialize.paint_payload(solved, misuse_warning(), notes))

    @app.post("/api/export")
    async def export(request: Request) -> Response:
        body = await request.json()
        dataset = _series_for(body)
        spec = MethodSpec.from_json_dict(body.get("spec") or {})
        result = run_method(dataset.series, spec, custom_store=method_store)
        palette = get_palette(str(body.get("palette", "viridis")), palette_store)
        if palette is None:
            raise BinxError(f"unknown palette {body.get('palette')!r}")
        what = str(body.get("what", "breaks"))
        payload = export_result(
            result,
            what,
            dataset=dataset,
            palette=palette,
            reverse=bool(body.get("reverse", False)),
        )
        media = "image/svg+xml" if what == "legend_svg" else (
            "text/x-python" if what == "code_stub" else "application/json"
        )
        return Response(content=payload, media_type=media)

    @app.get("/api/custom-methods")
    def list_custom_methods() -> Response:
        return _json_response(
            {"methods": [m.to_json_dict() for m in method_store.list()]}
        )

    @app.post("/api/custom-methods")
    async def save_custom_method(request: Request) -> Response:
        body = await request.json()
        method = method_store.save(
            name=body.get("name", ""),
            extents=body.get("extents", []),
            provenance=body.get("provenance") or {},
        )
        return _json_response(method.to_json_dict(), status_code=201)

    @app.delete("/api/custom-methods/{name}")
    def delete_custom_method(name: str) -> Response:
        if not method_store.delete(name):
            raise BinxError(f"custom method {name!r} not found")
        return _json_response({"deleted": name})

    @app.get("/api/palettes")
    def palettes(flags: str = "", scaleType: str = "") -> Response:
        wanted = [f for f in flags.split(",") if f]
        result = list_palettes(wanted, scaleType or None, store=palette_store)
        return _json_response({"palettes": [p.to_json_dict() for p in result]})

    @app.post("/api/palettes")
    async def save_palette(request: Request) -> Response:
        body = await request.json()
        palette = add_custom(
            name=body.get("name", ""),
            colors=body.get("colors", []),
            store=palette_store,
            scale_type=body.get("scaleType", "categorical"),
            flags=tuple(body.get("flags", [])),
        )
        return _json_response(palette.to_json_dict(), status_code=201)

    return app


def main() -> None:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description="Run the binx HTTP service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8787)
    parser.add_argument("--data-dir", default=None)
    parser.add_argument("--cors-origin", default=None)
    args = parser.parse_args()
    uvicorn.run(
        create_app(data_dir=args.data_dir, cors_origin=args.cors_origin),
        host=args.host,
        port=args.port,
    )


if __name__ == "__main__":
    main()
