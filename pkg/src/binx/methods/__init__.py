"""Method dispatch: one entry point over the sixteen built-ins plus saved customs."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable

from ..errors import BinCountMismatch, TooFewMethods, UnknownMethod
from ..methodspec import (
    BUILTIN_METHOD_IDS,
    MethodSpec,
    default_member_methods,
)
from ..result import BinningResult
from ..series import FeatureSeries
from .catalog import DESCRIPTORS, DESCRIPTORS_BY_ID, MethodDescriptor, catalog_json
from .human import manual_interval, pretty_breaks
from .interval import (
    defined_interval,
    equal_interval,
    exponential_bin_sizes,
    geometric_interval,
    maximum_breaks,
)
from .iterative import ckmeans, head_tail_breaks, natural_breaks, partition_sdcm
from .other import majority_vote, resiliency_from_members, unclassed
from .statistical import box_plot, percentile, quantile, std_deviation

__all__ = [
    "BUILTIN_METHOD_IDS",
    "DESCRIPTORS",
    "DESCRIPTORS_BY_ID",
    "MethodDescriptor",
    "box_plot",
    "catalog_json",
    "ckmeans",
    "defined_interval",
    "equal_interval",
    "exponential_bin_sizes",
    "geometric_interval",
    "head_tail_breaks",
    "majority_vote",
    "manual_interval",
    "maximum_breaks",
    "natural_breaks",
    "partition_sdcm",
    "percentile",
    "pretty_breaks",
    "quantile",
    "resiliency",
    "run_all",
    "run_method",
    "std_deviation",
    "unclassed",
]

FIXED_SIX_BIN_METHODS = ("percentile", "box_plot")

_DISPATCH: dict[str, Callable[[FeatureSeries, MethodSpec], BinningResult]] = {
    "unclassed": lambda s, sp: unclassed(s),
    "defined_interval": lambda s, sp: defined_interval(s, sp.defined_interval_size),
    "equal_interval": lambda s, sp: equal_interval(s, sp.bin_count),
    "pretty_breaks": lambda s, sp: pretty_breaks(s, sp.bin_count),
    "geometric_interval": lambda s, sp: geometric_interval(s, sp.bin_count),
    "exponential_bin_sizes": lambda s, sp: exponential_bin_sizes(
        s, sp.bin_count, sp.exp_growth
    ),
    "manual_interval": lambda s, sp: manual_interval(s, sp.manual_breaks, spec=sp),
    "quantile": lambda s, sp: quantile(s, sp.bin_count),
    "percentile": lambda s, sp: percentile(s),
    "box_plot": lambda s, sp: box_plot(s, sp.iqr_factor),
    "std_deviation": lambda s, sp: std_deviation(s, sp.bin_count, sp.std_dev_step),
    "maximum_breaks": lambda s, sp: maximum_breaks(s, sp.bin_count),
    "natural_breaks": lambda s, sp: natural_breaks(s, sp.bin_count),
    "ckmeans": lambda s, sp: ckmeans(s, sp.bin_count),
    "head_tail_breaks": lambda s, sp: head_tail_breaks(s, sp.head_tail_threshold),
}


def resiliency(
    series: FeatureSeries,
    member_methods: tuple[str, ...] | None = None,
    k: int = 6,
    custom_store: Any = None,
) -> BinningResult:
    """Consensus binning over member methods, all run at exactly k bins."""
    spec = MethodSpec("resiliency", bin_count=k, member_methods=member_methods)
    return run_method(series, spec, custom_store=custom_store)


def _run_resiliency(
    series: FeatureSeries, spec: MethodSpec, custom_store: Any
) -> BinningResult:
    k = spec.bin_count
    members = spec.member_methods or default_member_methods(k)
    spec = MethodSpec("resiliency", bin_count=k, member_methods=tuple(members))
    if len(members) < 2:
        raise TooFewMethods(f"resiliency needs >= 2 member methods, got {len(members)}")
    results: list[tuple[str, BinningResult]] = []
    for method_id in members:
        if method_id == "resiliency":
            raise UnknownMethod("resiliency cannot be one of its own members")
        if method_id in FIXED_SIX_BIN_METHODS and k != 6:
            raise BinCountMismatch(
                f"{method_id} always yields 6 bins and cannot join a {k}-bin combine",
                method_id=method_id,
                actual_k=6,
            )
        member_spec = MethodSpec(method_id, bin_count=k)
        results.append((method_id, run_method(series, member_spec, custom_store)))
    return resiliency_from_members(series, results, k, spec)


def run_method(
    series: FeatureSeries, spec: MethodSpec, custom_store: Any = None
) -> BinningResult:
    """Dispatch a MethodSpec to its implementation; resolves custom:<name> specs."""
    spec.validate_known()
    if spec.is_custom:
        if custom_store is None:
            raise UnknownMethod(f"no custom method store supplied for {spec.method_id!r}")
        saved = custom_store.get(spec.custom_name)
        if saved is None:
            raise UnknownMethod(f"custom method {spec.custom_name!r} not found")
        return manual_interval(series, saved.extents, spec=spec)
    if spec.method_id == "resiliency":
        return _run_resiliency(series, spec, custom_store)
    return _DISPATCH[spec.method_id](series, spec)


def descriptor_for(spec: MethodSpec) -> MethodDescriptor:
    if spec.is_custom:
        return MethodDescriptor(
            method_id=spec.method_id,
            display_name=spec.custom_name,
            category="human_centered",
            short_description="Saved custom bins.\nCreated in the create view.",
            long_description="A saved set of custom bin extents.",
        )
    return DESCRIPTORS_BY_ID[spec.method_id]


def specs_for_all(
    series: FeatureSeries,
    bin_count: int = 5,
    defined_interval_size: float | None = None,
) -> list[MethodSpec]:
    """One runnable spec per built-in method, mirroring the browse catalog.

    Methods that need extra inputs get workable defaults: the defined interval
    width falls back to range/bin_count and the manual card is seeded with
    equal-interval breaks.
    """
    lo, hi = series.data_min(), series.data_max()
    if defined_interval_size is None:
        defined_interval_size = (hi - lo) / bin_count if hi > lo else 1.0
    manual_seed = tuple(
        lo + i * (hi - lo) / bin_count for i in range(1, bin_count)
    ) or (lo + max(abs(lo), 1.0) * 5e-10,)
    specs = []
    for method_id in BUILTIN_METHOD_IDS:
        specs.append(
            MethodSpec(
                method_id,
                bin_count=bin_count,
                defined_interval_size=defined_interval_size,
                manual_breaks=manual_seed if method_id == "manual_interval" else None,
            )
        )
    return specs


def run_all(
    series: FeatureSeries,
    bin_count: int = 5,
    defined_interval_size: float | None = None,
    custom_store: Any = None,
    max_workers: int = 8,
) -> dict[str, BinningResult]:
    """Run the full sixteen-method catalog concurrently over one shared series."""
    specs = specs_for_all(series, bin_count, defined_interval_size)
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        futures = [
            pool.submit(run_method, series, spec, custom_store) for spec in specs
        ]
        return {
            spec.method_id: future.result() for spec, future in zip(specs, futures)
        }
