"""Descriptor metadata for the sixteen built-in methods, grouped by category."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

CATEGORIES = (
    "interval_based",
    "statistical",
    "iterative",
    "human_centered",
    "other",
)


@dataclass(frozen=True)
class MethodDescriptor:
    method_id: str
    display_name: str
    category: str
    short_description: str
    long_description: str
    parameter_schema: tuple[tuple[str, str, Any], ...] = ()

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "methodId": self.method_id,
            "displayName": self.display_name,
            "category": self.category,
            "shortDescription": self.short_description,
            "longDescription": self.long_description,
            "parameters": [
                {"name": n, "type": t, "default": d} for n, t, d in self.parameter_schema
            ],
        }


_BIN_COUNT = ("bin_count", "int", 5)

DESCRIPTORS: tuple[MethodDescriptor, ...] = (
    MethodDescriptor(
        "unclassed",
        "Unclassed (Continuous)",
        "other",
        "No bins: every region gets its own shade.\n"
        "Color varies continuously from the minimum to the maximum.",
        "Maps each value to its normalized position between the data minimum "
        "and maximum instead of grouping values into discrete bins. Good for "
        "showing fine-grained variation; harder to read exact magnitudes from "
        "the legend.",
    ),
    MethodDescriptor(
        "defined_interval",
        "Defined Interval",
        "interval_based",
        "Bins of a width you choose, starting at the minimum.\n"
        "The bin count follows from the data range.",
        "Splits the range into bins of a fixed, user-supplied width. Useful "
        "when the width has meaning in the data's units (e.g. 0.5 years). The "
        "final bin may be narrower where the range is not a whole multiple of "
        "the width.",
        (("defined_interval_size", "float", None),),
    ),
    MethodDescriptor(
        "equal_interval",
        "Equal Interval",
        "interval_based",
        "Splits the range into k bins of identical width.\n"
        "Simple to read; ignores how values cluster.",
        "Divides the span between the minimum and maximum into k equally wide "
        "bins. Predictable and easy to explain, but skewed data can leave "
        "most regions in one or two bins.",
        (_BIN_COUNT,),
    ),
    MethodDescriptor(
        "pretty_breaks",
        "Pretty Breaks",
        "human_centered",
        "Round-number breaks near the requested bin count.\n"
        "Legend values are clean multiples of 1, 2 or 5.",
        "Chooses a step of 1, 2 or 5 times a power of ten close to range/k "
        "and snaps the extents outward to whole multiples of that step. The "
        "realized bin count may differ from the request in exchange for a "
        "legend people can read at a glance.",
        (_BIN_COUNT,),
    ),
    MethodDescriptor(
        "geometric_interval",
        "Geometric Interval",
        "interval_based",
        "Bin widths grow by a constant multiplier.\n"
        "Suits data spanning orders of magnitude.",
        "Places breaks in geometric progression between the minimum and "
        "maximum so each bin is a constant factor wider than the previous "
        "one. Series containing zero or negative values are shifted before "
        "the ratios are computed, then shifted back.",
        (_BIN_COUNT,),
    ),
    MethodDescriptor(
        "exponential_bin_sizes",
        "Exponential Bin Sizes",
        "interval_based",
        "Each bin holds a growing share of the regions.\n"
        "Population doubles (by default) from one bin to the next.",
        "Targets bin populations proportional to growth^(bin-1), rounding "
        "with largest remainders, and cuts between the order statistics that "
        "realize those counts. Emphasizes the low end by keeping early bins "
        "small.",
        (_BIN_COUNT, ("exp_growth", "float", 2.0)),
    ),
    MethodDescriptor(
        "manual_interval",
        "Manual Interval",
        "human_centered",
        "You type the breaks; the engine fills in the rest.\n"
        "Extents extend automatically to cover the data.",
        "Bins bounded by user-chosen break values, e.g. domain-specific "
        "thresholds or breaks imported from another tool. Outer extents grow "
        "to cover the data range so no region is dropped.",
        (("manual_breaks", "list[float]", None),),
    ),
    MethodDescriptor(
        "quantile",
        "Quantile",
        "statistical",
        "Approximately the same number of regions per bin.\n"
        "Breaks at the i/k quantiles of the data.",
        "Cuts at interpolated quantiles so each bin holds about n/k regions. "
        "Always produces a balanced-looking map, but near-identical values "
        "can land in different bins and repeated values can unbalance the "
        "counts.",
        (_BIN_COUNT,),
    ),
    MethodDescriptor(
        "percentile",
        "Percentile",
        "statistical",
        "Six bins cut at the 1st, 10th, 50th, 90th and 99th percentiles.\n"
        "The bin count is fixed by definition.",
        "Emphasizes both tails by dedicating bins to the extreme 1% and 10% "
        "of regions on each side of the median. Useful for spotting unusual "
        "regions; bin populations are intentionally unequal.",
    ),
    MethodDescriptor(
        "box_plot",
        "Box Plot",
        "statistical",
        "Six bins from the quartiles and IQR hinges.\n"
        "Outliers beyond the hinges get their own bins.",
        "Breaks at Q1 - f*IQR, Q1, median, Q3 and Q3 + f*IQR, mirroring a box "
        "plot's anatomy. Hinges outside the data range are dropped, so data "
        "without outliers yields fewer than six bins.",
        (("iqr_factor", "float", 1.5),),
    ),
    MethodDescriptor(
        "std_deviation",
        "Standard Deviation",
        "statistical",
        "Bins stepped in standard deviations around the mean.\n"
        "Shows how far each region sits from average.",
        "Places breaks at whole or half standard deviations from the mean, "
        "symmetric around it. Best for roughly normal data; breaks outside "
        "the observed range are dropped.",
        (_BIN_COUNT, ("std_dev_step", "str", "whole")),
    ),
    MethodDescriptor(
        "maximum_breaks",
        "Maximum Breaks",
        "interval_based",
        "Breaks in the widest gaps between sorted values.\n"
        "Finds natural separations; outliers dominate.",
        "Sorts the distinct values, measures consecutive gaps, and cuts the "
        "k-1 largest ones at their midpoints. Very fast and good at isolating "
        "outliers, which often claim whole bins for a handful of regions.",
        (_BIN_COUNT,),
    ),
    MethodDescriptor(
        "natural_breaks",
        "Natural Breaks",
        "iterative",
        "Groups values to minimize within-bin variance.\n"
        "The classic 'natural groupings' classifier.",
        "Finds the partition of the sorted values into k contiguous groups "
        "minimizing the total squared deviation from group means, computed "
        "exactly by dynamic programming. Breaks fall midway between "
        "neighboring groups.",
        (_BIN_COUNT,),
    ),
    MethodDescriptor(
        "ckmeans",
        "CK-Means",
        "iterative",
        "Order-constrained k-means in one dimension.\n"
        "Optimal clusters, deterministic result.",
        "Solves one-dimensional k-means exactly by dynamic programming over "
        "the sorted values; equivalent in objective to natural breaks and "
        "kept as its own catalog entry. No random initialization, so the "
        "result never varies between runs.",
        (_BIN_COUNT,),
    ),
    MethodDescriptor(
        "head_tail_breaks",
        "Head-Tail Breaks",
        "iterative",
        "Recursive mean splits for heavy-tailed data.\n"
        "The bin count emerges from the data itself.",
        "Splits at the mean, keeps the head (values above it), and repeats "
        "while the head remains a small fraction of the subset. Designed for "
        "power-law-like data where a few regions dwarf the rest.",
        (("head_tail_threshold", "float", 0.4),),
    ),
    MethodDescriptor(
        "resiliency",
        "Resiliency",
        "other",
        "Consensus bins voted by several other methods.\n"
        "Each region lands where most methods agree.",
        "Runs a set of member methods at a shared bin count, takes each "
        "region's most frequent bin id, and draws breaks where the majority "
        "winner changes along the sorted values. A built-in second opinion "
        "for any single method's break placement.",
        (_BIN_COUNT, ("member_methods", "list[str]", None)),
    ),
)

DESCRIPTORS_BY_ID = {d.method_id: d for d in DESCRIPTORS}


def catalog_json(custom_names: tuple[str, ...] = ()) -> list[dict[str, Any]]:
    """The catalog export: built-ins first, then any saved custom methods."""
    out = [d.to_json_dict() for d in DESCRIPTORS]
    for name in custom_names:
        out.append(
            MethodDescriptor(
                method_id=f"custom:{name}",
                display_name=name,
                category="human_centered",
                short_description="Saved custom bins.\nCreated in the create view.",
                long_description=(
                    "A saved set of custom bin extents, reusable anywhere a "
                    "built-in method is accepted."
                ),
            ).to_json_dict()
        )
    return out
