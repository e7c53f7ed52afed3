"""binx: a choropleth data-binning workbench.

Sixteen classification methods plus consensus binning, a paint-mode
reclassification solver, a rules linter, data ingestion and profiling,
color palettes, exports, a CLI (``binx``) and an HTTP service.
"""

from .consensus import ConsensusMatrix, build_matrix, combine, majority, value_by_alpha
from .dataio import Dataset, join, load_sample, parse_attributes, parse_geometry
from .errors import BinxError
from .methods import run_all, run_method
from .methodspec import MethodSpec, default_member_methods
from .palettes import Palette, colors_for, get_palette, list_palettes
from .profiling import Profile, profile
from .reclassify import (
    PinConstraint,
    add_break,
    apply_pins,
    edit_breaks,
    misuse_warning,
    remove_break,
    set_break,
)
from .result import BinningResult, assign, build_result
from .rules import RuleViolation, validate_rules
from .series import FeatureSeries
from .stores import CustomMethod, CustomMethodStore, CustomPaletteStore

__version__ = "0.1.0"

__all__ = [
    "BinningResult",
    "BinxError",
    "ConsensusMatrix",
    "CustomMethod",
    "CustomMethodStore",
    "CustomPaletteStore",
    "Dataset",
    "FeatureSeries",
    "MethodSpec",
    "Palette",
    "PinConstraint",
    "Profile",
    "RuleViolation",
    "add_break",
    "apply_pins",
    "assign",
    "build_matrix",
    "build_result",
    "colors_for",
    "combine",
    "default_member_methods",
    "edit_breaks",
    "get_palette",
    "join",
    "list_palettes",
    "load_sample",
    "majority",
    "misuse_warning",
    "parse_attributes",
    "parse_geometry",
    "profile",
    "remove_break",
    "run_all",
    "run_method",
    "set_break",
    "validate_rules",
    "value_by_alpha",
]
