"""Result exports: break/size JSON, a Vega-Lite map spec, an SVG legend, a code stub."""

from __future__ import annotations

import json
from typing import Any

from .dataio import Dataset
from .errors import BinxError, UnsupportedTarget
from .palettes import Palette, get_palette
from .result import BinningResult
from .serialize import SCHEMA_VERSION, dumps_bytes

EXPORT_TARGETS = ("breaks", "sizes", "mapspec", "legend_svg", "code_stub")

_SWATCH = 22
_GAP = 6
_LABEL_X = 34
_PAD = 10


def export_result(
    result: BinningResult,
    what: str,
    *,
    dataset: Dataset | None = None,
    palette: Palette | None = None,
    reverse: bool = False,
) -> bytes:
    """Serialize one export target to bytes.

    ``breaks`` exports the full extent list, so re-importing it through
    manual_interval reproduces the original bins exactly.
    """
    if what == "breaks":
        return dumps_bytes({"schemaVersion": SCHEMA_VERSION, "breaks": list(result.extents)})
    if what == "sizes":
        return dumps_bytes({"schemaVersion": SCHEMA_VERSION, "binSizes": list(result.bin_sizes)})
    if what == "mapspec":
        if dataset is None:
            raise BinxError("map spec export needs the dataset for its geometry")
        return dumps_bytes(map_spec(result, dataset, palette, reverse))
    if what == "legend_svg":
        return legend_svg(result, palette, reverse).encode("utf-8")
    if what == "code_stub":
        return code_stub(result).encode("utf-8")
    raise UnsupportedTarget(f"unknown export target {what!r}; expected one of {EXPORT_TARGETS}")


def _palette_or_default(palette: Palette | None) -> Palette:
    return palette if palette is not None else get_palette("viridis")


def map_spec(
    result: BinningResult,
    dataset: Dataset,
    palette: Palette | None = None,
    reverse: bool = False,
) -> dict[str, Any]:
    """A self-contained Vega-Lite choropleth spec: geometry, thresholds, colors."""
    pal = _palette_or_default(palette)
    attr = dataset.series.attribute_name
    features = []
    for fid in dataset.geometry.ids:
        feature = json.loads(json.dumps(dataset.geometry.features[fid]))
        props = feature.setdefault("properties", {})
        props["__id"] = fid
        value = dataset.series.value_of(fid)
        props["__value"] = value
        features.append(feature)

    if result.unclassed_positions is not None:
        # piecewise linear ramp: one domain anchor per sampled color
        lo, hi = result.extents[0], result.extents[-1]
        samples = pal.colors(8, reverse=reverse)
        color_scale: dict[str, Any] = {
            "domain": [lo + i * (hi - lo) / 7 for i in range(8)],
            "range": list(samples),
            "interpolate": "rgb",
        }
    else:
        color_scale = {
            "type": "threshold",
            "domain": list(result.interior_breaks),
            "range": list(pal.colors(result.bin_count, reverse=reverse)),
        }
    return {
        "$schema": "https://vega.github.io/schema/vega-lite/v5.json",
        "description": f"Choropleth of {attr} ({result.method.method_id})",
        "width": 640,
        "height": 420,
        "data": {
            "values": {"type": "FeatureCollection", "features": features},
            "format": {"type": "json", "property": "features"},
        },
        "projection": {"type": "mercator"},
        "mark": {"type": "geoshape", "stroke": "#ffffff", "strokeWidth": 0.5},
        "encoding": {
            "color": {
                "condition": {
                    "test": "!isValid(datum.properties.__value)",
                    "value": pal.nodata_color,
                },
                "field": "properties.__value",
                "type": "quantitative",
                "scale": color_scale,
                "legend": {"title": attr},
            },
            "tooltip": [
                {"field": "properties.__id", "type": "nominal", "title": "feature"},
                {"field": "properties.__value", "type": "quantitative", "title": attr},
            ],
        },
    }


def _label(value: float) -> str:
    return f"{value:.6g}"


def legend_svg(
    result: BinningResult, palette: Palette | None = None, reverse: bool = False
) -> str:
    """Standalone SVG 1.1 legend: one swatch per bin plus the noData swatch."""
    pal = _palette_or_default(palette)
    rows: list[tuple[str, str]] = []
    if result.unclassed_positions is not None:
        # continuous ramp shown as five sampled swatches with value labels
        lo, hi = result.extents[0], result.extents[-1]
        for j, color in enumerate(pal.colors(5, reverse=reverse)):
            rows.append((color, _label(lo + (j / 4) * (hi - lo))))
    else:
        colors = pal.colors(result.bin_count, reverse=reverse)
        for j in range(result.bin_count):
            label = f"{_label(result.extents[j])} to {_label(result.extents[j + 1])}"
            rows.append((colors[j], label))
    rows.append((pal.nodata_color, "no data"))

    height = _PAD * 2 + len(rows) * (_SWATCH + _GAP) - _GAP
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="220" '
        f'height="{height}" viewBox="0 0 220 {height}">',
        f'<rect x="0" y="0" width="220" height="{height}" fill="#ffffff"/>',
    ]
    y = _PAD
    for color, label in rows:
        parts.append(
            f'<rect x="{_PAD}" y="{y}" width="{_SWATCH}" height="{_SWATCH}" '
            f'fill="{color}" stroke="#666666" stroke-width="0.5"/>'
        )
        parts.append(
            f'<text x="{_LABEL_X + _PAD}" y="{y + _SWATCH - 6}" '
            f'font-family="sans-serif" font-size="12">{label}</text>'
        )
        y += _SWATCH + _GAP
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def code_stub(result: BinningResult) -> str:
    """A snippet that rebuilds these bins through the public manual_interval API."""
    breaks = ", ".join(repr(e) for e in result.extents)
    return (
        "from binx.methods import manual_interval\n"
        "\n"
        "# series: a binx.series.FeatureSeries holding your joined attribute\n"
        f"result = manual_interval(series, breaks=[{breaks}])\n"
    )
