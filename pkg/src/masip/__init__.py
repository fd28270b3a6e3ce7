"""Instruction-set reusability and integration-cost analysis for
multi-application ASIP design.

The library ingests assembly listings, profiles the distinct mnemonics each
application uses against a complete-ISA catalog, and quantifies how well an
instruction set is shared across a target application set: the base
(common) instruction set, per-member extension sets, and exact reusability
and extra-cost percentages.
"""

__version__ = "0.1.0"

from .analysis import (
    ApplicationGroup,
    ExperimentResult,
    GroupMember,
    MemberResult,
    analyze_group,
    base_instruction_set,
    extension_set,
    extra_cost_factor,
    format_percent,
    masip_union,
    reusability_factor,
    round_half_away,
)
from .catalog import IsaCatalog, Unknown, bundled_catalog_path, canonicalize, load_catalog
from .errors import (
    AsmParseError,
    CatalogError,
    ConfigError,
    ConsistencyError,
    FixtureError,
    InputError,
    MasipError,
    UsageError,
)
from .experiments import (
    ExperimentConfig,
    ExperimentSuite,
    enumerate_combinations,
    run_inter,
    run_intra,
)
from .ingest import InstructionProfile, ParseResult, build_profile, parse_assembly
from .report import ReportRow, emit_plot_data, emit_table, parse_table_csv, rows_from_suite

__all__ = [
    "ApplicationGroup",
    "AsmParseError",
    "CatalogError",
    "ConfigError",
    "ConsistencyError",
    "ExperimentConfig",
    "ExperimentResult",
    "ExperimentSuite",
    "FixtureError",
    "GroupMember",
    "InputError",
    "InstructionProfile",
    "IsaCatalog",
    "MasipError",
    "MemberResult",
    "ParseResult",
    "ReportRow",
    "Unknown",
    "UsageError",
    "analyze_group",
    "base_instruction_set",
    "build_profile",
    "bundled_catalog_path",
    "canonicalize",
    "emit_plot_data",
    "emit_table",
    "enumerate_combinations",
    "extension_set",
    "extra_cost_factor",
    "format_percent",
    "load_catalog",
    "masip_union",
    "parse_assembly",
    "parse_table_csv",
    "reusability_factor",
    "round_half_away",
    "rows_from_suite",
    "run_inter",
    "run_intra",
    "__version__",
]
