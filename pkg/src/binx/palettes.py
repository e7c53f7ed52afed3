"""Color scheme catalog: lookup tables, interpolated ramps, accessibility flags.

Built-in values are embedded data (per-bin-count lookup tables from the
public ColorBrewer specification, plus sampled viridis/twilight ramps), not a
library dependency. Accessibility flags are a palette-level simplification of
the published usage matrix.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Sequence

from .errors import BinCountExceedsPalette, BinxError, DuplicateName, InvalidHex
from .stores import CustomPaletteStore

SCALE_TYPES = (
    "categorical",
    "sequential_single_hue",
    "sequential_multi_hue",
    "diverging",
    "cyclical",
)
FLAG_NAMES = ("web_friendly", "colorblind_friendly", "print_friendly")
DEFAULT_PALETTE = "viridis"
DEFAULT_NODATA = "#cccccc"
INTERPOLATED_CAPACITY = 64

_HEX = re.compile(r"^#[0-9a-fA-F]{6}$")


def check_hex(color: str) -> str:
    if not isinstance(color, str) or not _HEX.match(color):
        raise InvalidHex(f"not a #rrggbb color: {color!r}")
    return color.lower()


@dataclass(frozen=True)
class Palette:
    name: str
    scale_type: str
    web_friendly: bool
    colorblind_friendly: bool
    print_friendly: bool
    nodata_color: str = DEFAULT_NODATA
    lookup: dict[int, tuple[str, ...]] | None = None
    stops: tuple[str, ...] | None = None
    cyclical: bool = False
    prefix_stable: bool = False
    custom: bool = False

    @property
    def capacity(self) -> int:
        if self.lookup is not None:
            return max(self.lookup)
        return INTERPOLATED_CAPACITY

    def flag(self, name: str) -> bool:
        return {
            "web_friendly": self.web_friendly,
            "colorblind_friendly": self.colorblind_friendly,
            "print_friendly": self.print_friendly,
        }[name]

    def colors(self, k: int, reverse: bool = False) -> tuple[str, ...]:
        """Exactly k colors; lookup rows for discrete palettes, sampling otherwise."""
        if k < 1 or k > self.capacity:
            raise BinCountExceedsPalette(
                f"{self.name} supports 1..{self.capacity} colors, asked for {k}"
            )
        if self.lookup is not None:
            out = self._from_lookup(k)
        else:
            out = self._from_stops(k)
        return tuple(reversed(out)) if reverse else tuple(out)

    def _from_lookup(self, k: int) -> list[str]:
        if k in self.lookup:
            return list(self.lookup[k])
        smallest = min(self.lookup)
        row = self.lookup[smallest]
        if k < smallest:
            # below the table: k=1 takes the middle of the smallest row,
            # k=2 its endpoints, keeping swatches well separated
            if k == 1:
                return [row[len(row) // 2]]
            if k == 2:
                return [row[0], row[-1]]
            return list(row[:k])
        raise BinCountExceedsPalette(
            f"{self.name} has no {k}-color row (rows: {sorted(self.lookup)})"
        )

    def _from_stops(self, k: int) -> list[str]:
        if k == 1:
            return [self._sample(0.5)]
        if self.cyclical:
            return [self._sample(i / k) for i in range(k)]
        return [self._sample(i / (k - 1)) for i in range(k)]

    def _sample(self, t: float) -> str:
        stops = self.stops
        pos = t * (len(stops) - 1)
        i = min(int(pos), len(stops) - 2)
        frac = pos - i
        a = _rgb(stops[i])
        b = _rgb(stops[i + 1])
        mixed = tuple(round(a[c] + frac * (b[c] - a[c])) for c in range(3))
        return "#%02x%02x%02x" % mixed

    def to_json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "scaleType": self.scale_type,
            "flags": {
                "webFriendly": self.web_friendly,
                "colorblindFriendly": self.colorblind_friendly,
                "printFriendly": self.print_friendly,
            },
        }
        if self.lookup is not None:
            out["colors"] = {str(k): list(v) for k, v in sorted(self.lookup.items())}
        else:
            out["interpolator"] = {"stops": list(self.stops)}
            if self.cyclical:
                out["interpolator"]["cyclical"] = True
        out["nodataColor"] = self.nodata_color
        if self.custom:
            out["custom"] = True
        return out


def _rgb(color: str) -> tuple[int, int, int]:
    return tuple(int(color[i : i + 2], 16) for i in (1, 3, 5))


def _palette_from_record(record: dict[str, Any], custom: bool = False) -> Palette:
    flags = record.get("flags", {})
    lookup = None
    stops = None
    cyclical = False
    if "colors" in record:
        lookup = {int(k): tuple(v) for k, v in record["colors"].items()}
        if record.get("prefixStable"):
            # qualitative tables list one max-length row; smaller k take prefixes
            full = lookup[max(lookup)]
            lookup = {k: tuple(full[:k]) for k in range(1, len(full) + 1)}
    if "interpolator" in record:
        stops = tuple(record["interpolator"]["stops"])
        cyclical = bool(record["interpolator"].get("cyclical", False))
    return Palette(
        name=record["name"],
        scale_type=record["scaleType"],
        web_friendly=bool(flags.get("webFriendly", False)),
        colorblind_friendly=bool(flags.get("colorblindFriendly", False)),
        print_friendly=bool(flags.get("printFriendly", False)),
        nodata_color=record.get("nodataColor", DEFAULT_NODATA),
        lookup=lookup,
        stops=stops,
        cyclical=cyclical,
        prefix_stable=bool(record.get("prefixStable", False)),
        custom=custom,
    )


@lru_cache(maxsize=1)
def builtin_palettes() -> tuple[Palette, ...]:
    raw = resources.files("binx.data").joinpath("palettes.json").read_text()
    records = json.loads(raw)["palettes"]
    return tuple(_palette_from_record(r) for r in records)


def get_palette(name: str, store: CustomPaletteStore | None = None) -> Palette | None:
    for p in builtin_palettes():
        if p.name == name:
            return p
    if store is not None:
        record = store.get(name)
        if record is not None:
            return _palette_from_record(record, custom=True)
    return None


def list_palettes(
    flags: Sequence[str] = (),
    scale_type: str | None = None,
    store: CustomPaletteStore | None = None,
) -> list[Palette]:
    """Catalog filtered conjunctively by accessibility flags and scale type."""
    for f in flags:
        if f not in FLAG_NAMES:
            raise BinxError(f"unknown flag {f!r}; expected one of {FLAG_NAMES}")
    out = list(builtin_palettes())
    if store is not None:
        out.extend(_palette_from_record(r, custom=True) for r in store.list())
    if scale_type is not None:
        out = [p for p in out if p.scale_type == scale_type]
    for f in flags:
        out = [p for p in out if p.flag(f)]
    return out


def colors_for(palette: Palette, k: int, reverse: bool = False) -> tuple[str, ...]:
    return palette.colors(k, reverse=reverse)


def add_custom(
    name: str,
    colors: Sequence[str],
    store: CustomPaletteStore,
    scale_type: str = "categorical",
    flags: Sequence[str] = (),
) -> Palette:
    """Persist a user palette next to the built-ins; names must be unique."""
    if not name or not str(name).strip():
        raise InvalidHex("palette name must be non-empty")
    if get_palette(name) is not None:
        raise DuplicateName(f"palette {name!r} already exists")
    if scale_type not in SCALE_TYPES:
        raise InvalidHex(f"unknown scale type {scale_type!r}")
    clean = [check_hex(c) for c in colors]
    if not clean:
        raise InvalidHex("palette needs at least one color")
    if len(set(clean)) != len(clean):
        raise InvalidHex("palette colors must be distinct")
    record = {
        "name": str(name),
        "scaleType": scale_type,
        "flags": {
            "webFriendly": "web_friendly" in flags,
            "colorblindFriendly": "colorblind_friendly" in flags,
            "printFriendly": "print_friendly" in flags,
        },
        "colors": {str(len(clean)): clean},
        "prefixStable": True,
        "nodataColor": DEFAULT_NODATA,
    }
    store.save(record)
    return _palette_from_record(record, custom=True)
