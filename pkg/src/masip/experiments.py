"""Experiment orchestration from a declarative JSON config.

Two families: intra-domain (one experiment per domain, members are the
domain's applications) and inter-domain (one experiment per k-combination
of domains, members are per-domain union sets).  For inter-domain groups
the base intersects the application-level sets of every involved domain,
so an instruction counts as "base" only if every single application uses
it; the per-domain member sets are still the domain unions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .analysis import (
    ApplicationGroup,
    ExperimentResult,
    GroupMember,
    analyze_group,
    base_instruction_set,
    masip_union,
    mean_fraction,
    percent_json,
)
from .catalog import load_catalog
from .errors import ConfigError, UsageError
from .ingest import MODES, InstructionProfile, build_profile

SUITE_KINDS = ("intra", "inter")


def enumerate_combinations(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of range(n) in lexicographic order."""
    if k <= 0 or k > n:
        raise ValueError(f"need 0 < k <= n, got k={k}, n={n}")
    return list(combinations(range(n), k))


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment description.

    ``domains`` maps domain id -> application id -> assembly file paths;
    insertion order is preserved and defines result ordering.
    """

    catalog_path: Path
    domains: dict[str, dict[str, tuple[Path, ...]]]
    mode: str = "lenient"
    group_size: int = 4

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.domains:
            raise ConfigError("config declares no domains")
        for domain, apps in self.domains.items():
            if not apps:
                raise ConfigError(f"domain {domain!r} declares no applications")
            for app, files in apps.items():
                if not files:
                    raise ConfigError(f"application {domain}/{app} lists no files")
        if not isinstance(self.group_size, int) or self.group_size < 1:
            raise UsageError(f"group_size must be a positive integer, got {self.group_size!r}")
        if self.group_size > len(self.domains):
            raise UsageError(
                f"group_size {self.group_size} exceeds the number of domains"
                f" ({len(self.domains)})"
            )

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise ConfigError(f"{path}: file not found") from None
        except OSError as exc:
            raise ConfigError(f"{path}: cannot read: {exc}") from None
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise ConfigError(f"{path}: top level must be an object")
        for key in ("catalog", "domains"):
            if key not in obj:
                raise ConfigError(f"{path}: missing required key {key!r}")
        base_dir = path.parent

        def resolve(p) -> Path:
            p = Path(p)
            return p if p.is_absolute() else base_dir / p

        raw_domains = obj["domains"]
        if not isinstance(raw_domains, dict):
            raise ConfigError(f"{path}: 'domains' must be an object")
        domains: dict[str, dict[str, tuple[Path, ...]]] = {}
        for domain, apps in raw_domains.items():
            if not isinstance(apps, dict):
                raise ConfigError(f"{path}: domain {domain!r} must map applications to file lists")
            domains[domain] = {}
            for app, files in apps.items():
                if isinstance(files, str) or not isinstance(files, list):
                    raise ConfigError(
                        f"{path}: {domain}/{app} must list assembly files as an array"
                    )
                domains[domain][app] = tuple(resolve(f) for f in files)
        group_size = obj.get("group_size", 4)
        if isinstance(group_size, bool) or not isinstance(group_size, int):
            raise ConfigError(f"{path}: group_size must be an integer")
        return cls(
            catalog_path=resolve(obj["catalog"]),
            domains=domains,
            mode=obj.get("mode", "lenient"),
            group_size=group_size,
        )


@dataclass(frozen=True)
class ExperimentSuite:
    """A batch of experiment results plus suite-level means."""

    kind: str
    catalog_name: str
    results: tuple[ExperimentResult, ...]
    mean_reusability: Fraction
    mean_extra_cost: Fraction

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "catalog": self.catalog_name,
            "results": [r.to_json_dict() for r in self.results],
            "mean_reusability": percent_json(self.mean_reusability),
            "mean_extra_cost": percent_json(self.mean_extra_cost),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def _make_suite(kind: str, catalog_name: str, results: list[ExperimentResult]) -> ExperimentSuite:
    return ExperimentSuite(
        kind=kind,
        catalog_name=catalog_name,
        results=tuple(results),
        mean_reusability=mean_fraction([r.reusability for r in results]),
        mean_extra_cost=mean_fraction([r.mean_extra_cost for r in results]),
    )


def load_profiles(config: ExperimentConfig, catalog) -> dict[str, dict[str, InstructionProfile]]:
    """Parse every configured application once, preserving config order."""
    out: dict[str, dict[str, InstructionProfile]] = {}
    for domain, apps in config.domains.items():
        out[domain] = {}
        for app, files in apps.items():
            out[domain][app] = build_profile(app, domain, files, catalog, config.mode)
    return out


def run_intra(config: ExperimentConfig) -> ExperimentSuite:
    """One experiment per domain; members are the domain's applications."""
    catalog = load_catalog(config.catalog_path)
    profiles = load_profiles(config, catalog)
    results = []
    for domain, apps in profiles.items():
        group = ApplicationGroup.from_profiles(domain, list(apps.values()))
        results.append(analyze_group(group))
    return _make_suite("intra", catalog.name, results)


def set_label(index: int, total: int) -> str:
    """Stable experiment names SET-01, SET-02, ... in enumeration order."""
    width = max(2, len(str(total)))
    return f"SET-{index:0{width}d}"


def run_inter(config: ExperimentConfig) -> ExperimentSuite:
    """One experiment per k-combination of domains.

    Each member is a domain's unioned instruction set; its core (the
    contribution to the group base) is the intersection of the domain's
    application sets, so the base reflects commonality across every
    application involved, not merely across the domain unions.
    """
    catalog = load_catalog(config.catalog_path)
    profiles = load_profiles(config, catalog)
    domain_ids = list(profiles)
    domain_union = {
        d: masip_union([p.used for p in apps.values()]) for d, apps in profiles.items()
    }
    domain_core = {
        d: base_instruction_set([p.used for p in apps.values()])
        for d, apps in profiles.items()
    }
    combos = enumerate_combinations(len(domain_ids), config.group_size)
    results = []
    for index, combo in enumerate(combos, start=1):
        members = tuple(
            GroupMember(
                label=domain_ids[i],
                mnemonics=domain_union[domain_ids[i]],
                core=domain_core[domain_ids[i]],
            )
            for i in combo
        )
        group = ApplicationGroup(name=set_label(index, len(combos)), members=members)
        results.append(analyze_group(group))
    return _make_suite("inter", catalog.name, results)
