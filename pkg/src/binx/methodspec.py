"""Method identity plus parameters, echoed into every result."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .errors import UnknownMethod

BUILTIN_METHOD_IDS = (
    "unclassed",
    "defined_interval",
    "equal_interval",
    "pretty_breaks",
    "geometric_interval",
    "exponential_bin_sizes",
    "manual_interval",
    "quantile",
    "percentile",
    "box_plot",
    "std_deviation",
    "maximum_breaks",
    "natural_breaks",
    "ckmeans",
    "head_tail_breaks",
    "resiliency",
)

CUSTOM_PREFIX = "custom:"

# parameters that matter per method; everything else on the spec is ignored
RELEVANT_PARAMS: dict[str, tuple[str, ...]] = {
    "unclassed": (),
    "defined_interval": ("defined_interval_size",),
    "equal_interval": ("bin_count",),
    "pretty_breaks": ("bin_count",),
    "geometric_interval": ("bin_count",),
    "exponential_bin_sizes": ("bin_count", "exp_growth"),
    "manual_interval": ("manual_breaks",),
    "quantile": ("bin_count",),
    "percentile": (),
    "box_plot": ("iqr_factor",),
    "std_deviation": ("bin_count", "std_dev_step"),
    "maximum_breaks": ("bin_count",),
    "natural_breaks": ("bin_count",),
    "ckmeans": ("bin_count",),
    "head_tail_breaks": ("head_tail_threshold",),
    "resiliency": ("bin_count", "member_methods"),
}

_JSON_NAMES = {
    "method_id": "methodId",
    "bin_count": "binCount",
    "defined_interval_size": "definedIntervalSize",
    "manual_breaks": "manualBreaks",
    "std_dev_step": "stdDevStep",
    "iqr_factor": "iqrFactor",
    "head_tail_threshold": "headTailThreshold",
    "member_methods": "memberMethods",
    "exp_growth": "expGrowth",
}
_FROM_JSON = {v: k for k, v in _JSON_NAMES.items()}


@dataclass(frozen=True)
class MethodSpec:
    """A binning request: which method, with which parameters.

    Parameters irrelevant to ``method_id`` are ignored; the relevant ones are
    validated by the operation itself.
    """

    method_id: str
    bin_count: int = 5
    defined_interval_size: float | None = None
    manual_breaks: tuple[float, ...] | None = None
    std_dev_step: str = "whole"
    iqr_factor: float = 1.5
    head_tail_threshold: float = 0.4
    member_methods: tuple[str, ...] | None = None
    exp_growth: float = 2.0

    def __post_init__(self) -> None:
        if self.manual_breaks is not None and not isinstance(self.manual_breaks, tuple):
            object.__setattr__(self, "manual_breaks", tuple(self.manual_breaks))
        if self.member_methods is not None and not isinstance(self.member_methods, tuple):
            object.__setattr__(self, "member_methods", tuple(self.member_methods))

    @property
    def is_custom(self) -> bool:
        return self.method_id.startswith(CUSTOM_PREFIX)

    @property
    def custom_name(self) -> str:
        return self.method_id[len(CUSTOM_PREFIX):]

    def validate_known(self) -> None:
        if self.method_id not in BUILTIN_METHOD_IDS and not self.is_custom:
            raise UnknownMethod(f"unknown method id: {self.method_id!r}")

    def relevant_params(self) -> dict[str, Any]:
        names = RELEVANT_PARAMS.get(self.method_id, ())
        out: dict[str, Any] = {}
        for name in names:
            value = getattr(self, name)
            if isinstance(value, tuple):
                value = list(value)
            out[name] = value
        return out

    def to_json_dict(self) -> dict[str, Any]:
        """Echo for serialization: method id plus only the relevant parameters."""
        out: dict[str, Any] = {"methodId": self.method_id}
        for name, value in self.relevant_params().items():
            out[_JSON_NAMES[name]] = value
        return out

    @classmethod
    def from_json_dict(cls, data: Mapping[str, Any]) -> "MethodSpec":
        if "methodId" not in data:
            raise UnknownMethod("missing methodId")
        kwargs: dict[str, Any] = {}
        for key, value in data.items():
            name = _FROM_JSON.get(key)
            if name is None or name == "method_id" or value is None:
                continue
            if name in ("manual_breaks", "member_methods"):
                value = tuple(value)
            kwargs[name] = value
        return cls(method_id=str(data["methodId"]), **kwargs)


def default_member_methods(bin_count: int) -> tuple[str, ...]:
    """Default resiliency members.

    At six bins the set matches the eight-method combine described for the
    tool (box plot and percentile are six-bin by definition); at any other
    bin count the two fixed-count methods are left out.
    """
    variable = (
        "equal_interval",
        "quantile",
        "maximum_breaks",
        "natural_breaks",
        "ckmeans",
        "geometric_interval",
    )
    if bin_count == 6:
        return variable + ("percentile", "box_plot")
    return variable
