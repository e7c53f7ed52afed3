"""Ingestion: CSV attributes, GeoJSON geometry, and the id join between them."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from typing import Any

from .errors import (
    DuplicateId,
    EmptyJoin,
    InvalidGeoJson,
    MissingColumn,
    MissingIdProperty,
    UnparseableRow,
)
from .series import FeatureSeries

MISSING_TOKENS = {"", "na", "nan", "null", "none", "n/a"}
ALLOWED_GEOMETRY_TYPES = {"Polygon", "MultiPolygon"}


@dataclass(frozen=True)
class AttributeColumn:
    """One parsed CSV column keyed by feature id; None marks a missing value."""

    name: str
    ids: tuple[str, ...]
    values: tuple[float | None, ...]

    def value_map(self) -> dict[str, float | None]:
        return dict(zip(self.ids, self.values))


@dataclass(frozen=True)
class GeometryCollection:
    """GeoJSON features keyed by id, geometry kept byte-for-byte untouched."""

    ids: tuple[str, ...]
    features: dict[str, dict[str, Any]]


@dataclass(frozen=True)
class JoinReport:
    matched: int
    unmatched_geometry_ids: tuple[str, ...]
    unmatched_attribute_ids: tuple[str, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "matched": self.matched,
            "unmatchedGeometryIds": list(self.unmatched_geometry_ids),
            "unmatchedAttributeIds": list(self.unmatched_attribute_ids),
        }


@dataclass(frozen=True)
class Dataset:
    """Joined geometry + attribute data ready for binning and rendering."""

    id: str
    geometry: GeometryCollection
    attribute: AttributeColumn
    series: FeatureSeries
    join_report: JoinReport


def parse_attributes(data: bytes | str, id_column: str, value_column: str) -> AttributeColumn:
    """Parse a CSV with a header row into an attribute column.

    Blank cells and the usual NA/NaN/null spellings become missing values;
    anything else that does not parse as a number aborts with the line number.
    """
    text = data.decode("utf-8-sig") if isinstance(data, bytes) else data
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise MissingColumn("attribute file has no header row")
    for col in (id_column, value_column):
        if col not in reader.fieldnames:
            raise MissingColumn(
                f"column {col!r} not in header {list(reader.fieldnames)}"
            )
    ids: list[str] = []
    values: list[float | None] = []
    seen: set[str] = set()
    for line_no, row in enumerate(reader, start=2):
        fid = (row.get(id_column) or "").strip()
        if not fid:
            raise UnparseableRow(f"line {line_no}: empty id", line=line_no)
        if fid in seen:
            raise DuplicateId(f"line {line_no}: duplicate feature id {fid!r}", line=line_no)
        seen.add(fid)
        raw = (row.get(value_column) or "").strip()
        if raw.lower() in MISSING_TOKENS:
            ids.append(fid)
            values.append(None)
            continue
        try:
            values.append(float(raw))
        except ValueError:
            raise UnparseableRow(
                f"line {line_no}: cannot parse {raw!r} as a number "
                f"(column {value_column!r})",
                line=line_no,
            ) from None
        ids.append(fid)
    return AttributeColumn(name=value_column, ids=tuple(ids), values=tuple(values))


def parse_geometry(data: bytes | str, id_property: str = "id") -> GeometryCollection:
    """Parse a GeoJSON FeatureCollection of polygons keyed by an id property."""
    text = data.decode("utf-8-sig") if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGeoJson(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("type") != "FeatureCollection":
        raise InvalidGeoJson("expected a GeoJSON FeatureCollection")
    features = doc.get("features")
    if not isinstance(features, list):
        raise InvalidGeoJson("FeatureCollection has no features array")
    ids: list[str] = []
    by_id: dict[str, dict[str, Any]] = {}
    for pos, feature in enumerate(features):
        if not isinstance(feature, dict) or feature.get("type") != "Feature":
            raise InvalidGeoJson(f"features[{pos}] is not a Feature")
        geometry = feature.get("geometry") or {}
        if geometry.get("type") not in ALLOWED_GEOMETRY_TYPES:
            raise InvalidGeoJson(
                f"features[{pos}] geometry must be Polygon or MultiPolygon, "
                f"got {geometry.get('type')!r}"
            )
        properties = feature.get("properties") or {}
        fid = properties.get(id_property)
        if fid is None and id_property == "id":
            fid = feature.get("id")
        if fid is None:
            raise MissingIdProperty(
                f"features[{pos}] lacks id property {id_property!r}"
            )
        fid = str(fid)
        if fid in by_id:
            raise DuplicateId(f"duplicate geometry id {fid!r}")
        ids.append(fid)
        by_id[fid] = feature
    return GeometryCollection(ids=tuple(ids), features=by_id)


def join(
    geometry: GeometryCollection,
    attribute: AttributeColumn,
    dataset_id: str = "dataset",
    units: str | None = None,
) -> Dataset:
    """Join attributes onto geometry by id.

    The series covers every geometry feature in order; geometry without an
    attribute row renders as missing. Orphans on both sides go in the report.
    """
    value_map = attribute.value_map()
    matched = [fid for fid in geometry.ids if fid in value_map]
    if not matched:
        raise EmptyJoin("no geometry ids match any attribute ids")
    unmatched_geometry = tuple(f for f in geometry.ids if f not in value_map)
    geometry_ids = set(geometry.ids)
    unmatched_attributes = tuple(f for f in attribute.ids if f not in geometry_ids)
    series = FeatureSeries(
        feature_ids=geometry.ids,
        values=[value_map.get(fid) for fid in geometry.ids],
        attribute_name=attribute.name,
        units=units,
    )
    report = JoinReport(
        matched=len(matched),
        unmatched_geometry_ids=unmatched_geometry,
        unmatched_attribute_ids=unmatched_attributes,
    )
    return Dataset(
        id=dataset_id,
        geometry=geometry,
        attribute=attribute,
        series=series,
        join_report=report,
    )


def load_sample() -> Dataset:
    """The bundled synthetic life-expectancy sample (60 valid counties + 2 NA)."""
    pkg = resources.files("binx.data")
    attr = parse_attributes(
        pkg.joinpath("life_expectancy.csv").read_bytes(), "fips", "life_expectancy"
    )
    geo = parse_geometry(
        pkg.joinpath("us_counties_sample.geojson").read_bytes(), "fips"
    )
    return join(geo, attr, dataset_id="life-expectancy-sample", units="years")
