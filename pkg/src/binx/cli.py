"""binx: batch front end over the binning engine.

Exit codes: 0 success, 2 usage or input error, 3 domain infeasibility
(conflicting paint constraints). Output JSON matches the HTTP service byte
for byte because both go through binx.serialize.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import serialize
from .consensus import combine
from .dataio import Dataset, join, load_sample, parse_attributes, parse_geometry
from .errors import INFEASIBLE_ERRORS, BinxError
from .export import EXPORT_TARGETS, export_result
from .methods import (
    BUILTIN_METHOD_IDS,
    FIXED_SIX_BIN_METHODS,
    run_all,
    run_method,
    specs_for_all,
)
from .methodspec import MethodSpec, default_member_methods
from .palettes import get_palette
from .profiling import profile
from .reclassify import PinConstraint, apply_pins, misuse_warning
from .result import check_extents
from .rules import validate_rules
from .stores import CustomMethodStore

EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


class _Config:
    """Flag > --config file > default, resolved per option."""

    def __init__(self, path: str | None) -> None:
        self.values: dict = {}
        if path:
            with open(path, encoding="utf-8") as fh:
                self.values = json.load(fh)

    def pick(self, name: str, flag_value, default=None):
        if flag_value is not None:
            return flag_value
        if name in self.values:
            return self.values[name]
        return default


def _fail(message: str, code: int = EXIT_INPUT) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load_dataset(cfg: _Config, data, geo, id_col, value_col) -> Dataset:
    data = cfg.pick("data", data)
    geo = cfg.pick("geo", geo)
    id_col = cfg.pick("id_col", id_col, "id")
    value_col = cfg.pick("value_col", value_col)
    if data is None:
        return load_sample()
    if value_col is None:
        _fail("--value-col is required with --data")
    attrs = parse_attributes(Path(data).read_bytes(), id_col, value_col)
    if geo is None:
        _fail("--geo is required with --data")
    geometry = parse_geometry(Path(geo).read_bytes(), id_col)
    return join(geometry, attrs, dataset_id=Path(data).stem)


def _write(out: str | None, name: str, payload: bytes) -> None:
    if out is None:
        sys.stdout.write(payload.decode("utf-8"))
        return
    target = Path(out)
    if target.suffix and not target.is_dir():
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(payload)
        click.echo(f"wrote {target}", err=True)
    else:
        target.mkdir(parents=True, exist_ok=True)
        path = target / name
        path.write_bytes(payload)
        click.echo(f"wrote {path}", err=True)


def _spec_from_flags(method: str, bins: int, interval_size, breaks, members) -> MethodSpec:
    manual = tuple(float(b) for b in breaks.split(",")) if breaks else None
    member_ids = tuple(members.split(",")) if members else None
    return MethodSpec(
        method,
        bin_count=bins,
        defined_interval_size=interval_size,
        manual_breaks=manual,
        member_methods=member_ids,
    )


_shared = [
    click.option("--data", type=click.Path(exists=True), default=None,
                 help="Attributes CSV (defaults to the bundled sample)."),
    click.option("--geo", type=click.Path(exists=True), default=None,
                 help="GeoJSON FeatureCollection."),
    click.option("--id-col", default=None, help="Feature id column/property."),
    click.option("--value-col", default=None, help="Attribute value column."),
    click.option("--config", "config_path", type=click.Path(exists=True), default=None,
                 help="JSON file mirroring any flag; flags win."),
    click.option("--out", default=None, help="Output file or directory (default stdout)."),
]


def shared_options(fn):
    for opt in reversed(_shared):
        fn = opt(fn)
    return fn


@click.group()
def main() -> None:
    """Choropleth data binning workbench."""


@main.command("profile")
@shared_options
@click.option("--histogram-bins", default=20, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")
def cmd_profile(data, geo, id_col, value_col, config_path, out, histogram_bins, fmt):
    """Summarize the attribute distribution."""
    try:
        cfg = _Config(config_path)
        dataset = _load_dataset(cfg, data, geo, id_col, value_col)
        prof = profile(dataset.series, histogram_bins=histogram_bins)
    except BinxError as exc:
        _fail(str(exc))
    if fmt == "json":
        _write(out, "profile.json", serialize.dumps_bytes(serialize.profile_payload(prof)))
        return
    lines = [
        f"attribute      {dataset.series.attribute_name}",
        f"count          {prof.count}",
        f"missing        {prof.missing_count}",
        f"min            {prof.min!r}",
        f"max            {prof.max!r}",
        f"mean           {prof.mean!r}",
        f"median         {prof.median!r}",
        f"std dev        {prof.std_dev!r}",
        f"skewness       {prof.skewness!r}",
    ]
    _write(out, "profile.txt", ("\n".join(lines) + "\n").encode("utf-8"))


@main.command("bin")
@shared_options
@click.option("--method", default=None, help="Method id (see `binx methods`).")
@click.option("--bins", type=int, default=None, help="Bin count where relevant [default: 5].")
@click.option("--interval-size", type=float, default=None)
@click.option("--breaks", default=None, help="Comma-separated breaks for manual_interval.")
@click.option("--members", default=None, help="Comma-separated member ids for resiliency.")
@click.option("--all", "run_everything", is_flag=True,
              help="Run the whole sixteen-method catalog into --out.")
@click.option("--store", "store_path", type=click.Path(), default=None,
              help="Custom-method store (for custom:<name> methods).")
def cmd_bin(data, geo, id_col, value_col, config_path, out, method, bins,
            interval_size, breaks, members, run_everything, store_path):
    """Run one binning method, or all of them with --all."""
    try:
        cfg = _Config(config_path)
        dataset = _load_dataset(cfg, data, geo, id_col, value_col)
        method = cfg.pick("method", method)
        bins = int(cfg.pick("bins", bins, 5))
        interval_size = cfg.pick("interval_size", interval_size)
        members = cfg.pick("members", members)
        store_path = cfg.pick("store", store_path)
        store = CustomMethodStore(store_path) if store_path else None
        if run_everything:
            if out is None:
                _fail("--all needs --out DIRECTORY")
            results = run_all(dataset.series, bin_count=bins,
                              defined_interval_size=interval_size, custom_store=store)
            for method_id, result in results.items():
                payload = serialize.dumps_bytes(serialize.result_payload(result))
                _write(out, f"{method_id}.json", payload)
            return
        if method is None:
            _fail("--method is required (or use --all)")
        if method in FIXED_SIX_BIN_METHODS and bins != 6:
            click.echo(
                f"warning: {method} has a fixed bin count of 6; --bins {bins} ignored",
                err=True,
            )
        spec = _spec_from_flags(method, bins, interval_size, breaks, members)
        result = run_method(dataset.series, spec, custom_store=store)
    except INFEASIBLE_ERRORS as exc:
        _fail(str(exc), EXIT_INFEASIBLE)
    except BinxError as exc:
        _fail(str(exc))
    payload = serialize.dumps_bytes(serialize.result_payload(result))
    _write(out, f"{method}.json", payload)


@main.command("compare")
@shared_options
@click.option("--methods", default=None,
              help="Comma-separated method ids (default: all sixteen).")
@click.option("--bins", type=int, default=None, help="Bin count [default: 5].")
@click.option("--interval-size", type=float, default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def cmd_compare(data, geo, id_col, value_col, config_path, out, methods, bins,
                interval_size, fmt):
    """Tabulate bin count, intervals and sizes across methods."""
    try:
        cfg = _Config(config_path)
        dataset = _load_dataset(cfg, data, geo, id_col, value_col)
        methods = cfg.pick("methods", methods)
        bins = int(cfg.pick("bins", bins, 5))
        interval_size = cfg.pick("interval_size", interval_size)
        wanted = methods.split(",") if methods else list(BUILTIN_METHOD_IDS)
        specs = [s for s in specs_for_all(dataset.series, bins, interval_size)
                 if s.method_id in wanted]
        unknown = set(wanted) - {s.method_id for s in specs}
        if unknown:
            _fail(f"unknown methods: {sorted(unknown)}")
        results = [run_method(dataset.series, spec) for spec in specs]
    except BinxError as exc:
        _fail(str(exc))
    if fmt == "csv":
        _write(out, "compare.csv", serialize.compare_csv(results).encode("utf-8"))
    else:
        _write(out, "compare.json",
               serialize.dumps_bytes(serialize.compare_payload(results)))


@main.command("combine")
@shared_options
@click.option("--members", default=None,
              help="Comma-separated member ids (default: the eight-method set).")
@click.option("--bins", type=int, default=None, help="Bin count [default: 6].")
def cmd_combine(data, geo, id_col, value_col, config_path, out, members, bins):
    """Consensus matrix plus the resiliency result."""
    try:
        cfg = _Config(config_path)
        dataset = _load_dataset(cfg, data, geo, id_col, value_col)
        members = cfg.pick("members", members)
        bins = int(cfg.pick("bins", bins, 6))
        member_ids = tuple(members.split(",")) if members else default_member_methods(bins)
        matrix, res = combine(dataset.series, member_ids, bins)
    except BinxError as exc:
        _fail(str(exc))
    _write(out, "combine.json",
           serialize.dumps_bytes(serialize.combine_payload(matrix, res)))


@main.command("paint")
@shared_options
@click.option("--method", default=None,
              help="Method whose output seeds the paint session [default: natural_breaks].")
@click.option("--bins", type=int, default=None, help="Bin count [default: 6].")
@click.option("--extents", default=None,
              help="Comma-separated extents to paint on (overrides --method).")
@click.option("--pin", "pins", multiple=True, metavar="VALUE:BIN",
              help="Pin a value into a bin; repeatable.")
def cmd_paint(data, geo, id_col, value_col, config_path, out, method, bins, extents, pins):
    """Re-solve breaks so pinned values land in their target bins."""
    try:
        cfg = _Config(config_path)
        dataset = _load_dataset(cfg, data, geo, id_col, value_col)
        method = cfg.pick("method", method, "natural_breaks")
        bins = int(cfg.pick("bins", bins, 6))
        extents = cfg.pick("extents", extents)
        if not pins:
            pins = tuple(cfg.pick("pin", None, []) or [])
        if extents:
            base = check_extents([float(e) for e in extents.split(",")])
        else:
            base = run_method(dataset.series, MethodSpec(method, bin_count=bins)).extents
        constraints = []
        for pin in pins:
            value, _, target = pin.partition(":")
            if not target:
                _fail(f"--pin wants VALUE:BIN, got {pin!r}")
            constraints.append(PinConstraint(target_bin=int(target), value=float(value)))
        solved, notes = apply_pins(base, constraints, dataset.series)
    except INFEASIBLE_ERRORS as exc:
        click.echo(misuse_warning(), err=True)
        _fail(str(exc), EXIT_INFEASIBLE)
    except BinxError as exc:
        _fail(str(exc))
    click.echo(misuse_warning(), err=True)
    payload = serialize.paint_payload(solved, misuse_warning(), notes)
    _write(out, "paint.json", serialize.dumps_bytes(payload))


@main.command("export")
@shared_options
@click.option("--method", default=None, help="Method id [default: natural_breaks].")
@click.option("--bins", type=int, default=None, help="Bin count [default: 5].")
@click.option("--interval-size", type=float, default=None)
@click.option("--what", default=None,
              help=f"Comma-separated targets from {', '.join(EXPORT_TARGETS)} [default: breaks].")
@click.option("--palette", "palette_name", default=None, help="Palette name [default: viridis].")
@click.option("--reverse", is_flag=True)
def cmd_export(data, geo, id_col, value_col, config_path, out, method, bins,
               interval_size, what, palette_name, reverse):
    """Export breaks, sizes, a Vega-Lite map spec, an SVG legend or a code stub."""
    suffixes = {"breaks": "json", "sizes": "json", "mapspec": "json",
                "legend_svg": "svg", "code_stub": "py"}
    try:
        cfg = _Config(config_path)
        dataset = _load_dataset(cfg, data, geo, id_col, value_col)
        method = cfg.pick("method", method, "natural_breaks")
        bins = int(cfg.pick("bins", bins, 5))
        interval_size = cfg.pick("interval_size", interval_size)
        what = cfg.pick("what", what, "breaks")
        palette_name = cfg.pick("palette", palette_name, "viridis")
        spec = MethodSpec(method, bin_count=bins, defined_interval_size=interval_size)
        result = run_method(dataset.series, spec)
        palette = get_palette(palette_name)
        if palette is None:
            _fail(f"unknown palette {palette_name!r}")
        targets = [t.strip() for t in what.split(",") if t.strip()]
        for target in targets:
            payload = export_result(result, target, dataset=dataset,
                                    palette=palette, reverse=reverse)
            _write(out, f"{method}.{target}.{suffixes.get(target, 'txt')}", payload)
    except BinxError as exc:
        _fail(str(exc))


@main.command("lint")
@shared_options
@click.option("--method", default=None, help="Method id [default: natural_breaks].")
@click.option("--bins", type=int, default=None, help="Bin count [default: 5].")
@click.option("--interval-size", type=float, default=None)
def cmd_lint(data, geo, id_col, value_col, config_path, out, method, bins, interval_size):
    """Check a method's output against the five binning rules."""
    try:
        cfg = _Config(config_path)
        dataset = _load_dataset(cfg, data, geo, id_col, value_col)
        method = cfg.pick("method", method, "natural_breaks")
        bins = int(cfg.pick("bins", bins, 5))
        interval_size = cfg.pick("interval_size", interval_size)
        spec = MethodSpec(method, bin_count=bins, defined_interval_size=interval_size)
        result = run_method(dataset.series, spec)
        violations = validate_rules(result, dataset.series)
    except BinxError as exc:
        _fail(str(exc))
    payload = serialize.dumps_bytes(
        {"violations": serialize.violations_payload(violations)}
    )
    _write(out, f"{method}.lint.json", payload)


@main.command("methods")
def cmd_methods():
    """List the method catalog."""
    from .methods import catalog_json

    sys.stdout.write(serialize.dumps_bytes(catalog_json()).decode("utf-8"))


if __name__ == "__main__":
    main()
