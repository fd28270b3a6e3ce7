"""Set algebra over instruction profiles and the two cost factors.

The base instruction set of a target application set is the set of
instructions common to every application; the remaining instructions of
each member are its extension set.  Two figures quantify a design:

* reusability factor: 100 * |base| / |union|
* extra cost factor (per member): 100 * (|member| - |base|) / |union|

Both are kept as exact :class:`fractions.Fraction` percentages.  Rendering
rounds half away from zero, to one decimal for display and to integers for
comparisons against rounded published figures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .catalog import IsaCatalog
from .errors import ConsistencyError

# ---------------------------------------------------------------------------
# exact percentages


def round_half_away(value: Fraction) -> int:
    """Round to the nearest integer, ties away from zero."""
    n, d = value.numerator, value.denominator  # d > 0 by Fraction invariant
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


def format_percent(value: Fraction) -> str:
    """Render a percentage at one decimal place (half away from zero)."""
    tenths = round_half_away(value * 10)
    sign = "-" if tenths < 0 else ""
    tenths = abs(tenths)
    return f"{sign}{tenths // 10}.{tenths % 10}"


def percent_json(value: Fraction) -> dict:
    """JSON form of a percentage: display string plus exact rational."""
    return {
        "percent": format_percent(value),
        "numerator": value.numerator,
        "denominator": value.denominator,
    }


def mean_fraction(values: Sequence[Fraction]) -> Fraction:
    if not values:
        raise ValueError("mean of empty sequence")
    return sum(values, Fraction(0)) / len(values)


# ---------------------------------------------------------------------------
# set operations


def base_instruction_set(members: Iterable[frozenset[str]]) -> frozenset[str]:
    """Intersection over all member sets: the instructions every member needs."""
    sets = [frozenset(m) for m in members]
    if not sets:
        raise ValueError("at least one member set required")
    out = sets[0]
    for s in sets[1:]:
        out &= s
    return out


def masip_union(members: Iterable[frozenset[str]]) -> frozenset[str]:
    """Union over all member sets: the full instruction complement."""
    sets = [frozenset(m) for m in members]
    if not sets:
        raise ValueError("at least one member set required")
    out = sets[0]
    for s in sets[1:]:
        out |= s
    return out


def extension_set(member: frozenset[str], base: frozenset[str]) -> frozenset[str]:
    """Instructions a member needs beyond the base.  Requires base <= member."""
    member = frozenset(member)
    base = frozenset(base)
    if not base <= member:
        missing = sorted(base - member)
        raise ConsistencyError(
            f"base is not contained in member set (missing {missing})"
        )
    return member - base


def reusability_factor(base_size: int, union_size: int) -> Fraction:
    """Exact percentage 100 * base_size / union_size."""
    if union_size < 1:
        raise ValueError("union size must be at least 1")
    if not 0 <= base_size <= union_size:
        raise ValueError(f"need 0 <= base ({base_size}) <= union ({union_size})")
    return Fraction(100 * base_size, union_size)


def extra_cost_factor(member_size: int, base_size: int, union_size: int) -> Fraction:
    """Exact percentage 100 * (member_size - base_size) / union_size."""
    if union_size < 1:
        raise ValueError("union size must be at least 1")
    if not 0 <= base_size <= member_size <= union_size:
        raise ValueError(
            f"need 0 <= base ({base_size}) <= member ({member_size})"
            f" <= union ({union_size})"
        )
    return Fraction(100 * (member_size - base_size), union_size)


# ---------------------------------------------------------------------------
# groups and results


@dataclass(frozen=True)
class GroupMember:
    """One member of an analysis group.

    ``mnemonics`` is the member's full instruction set.  ``core`` is the
    subset guaranteed present in every deployment of the member: for a
    single application that is its whole set, while for a domain-level
    member it is the intersection of the domain's application sets.  The
    group base intersects member cores, so application-level commonality is
    preserved when members are pre-unioned domains.
    """

    label: str
    mnemonics: frozenset[str]
    core: frozenset[str] | None = None

    def __post_init__(self):
        if not self.label:
            raise ValueError("member label must be nonempty")
        if self.core is not None and not frozenset(self.core) <= self.mnemonics:
            raise ValueError(f"core of {self.label!r} is not a subset of its set")

    @property
    def core_set(self) -> frozenset[str]:
        return self.mnemonics if self.core is None else frozenset(self.core)


@dataclass(frozen=True)
class ApplicationGroup:
    """Named, ordered collection of members analyzed together."""

    name: str
    members: tuple[GroupMember, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError(f"group {self.name!r} has no members")
        labels = [m.label for m in self.members]
        if len(set(labels)) != len(labels):
            raise ValueError(f"group {self.name!r} has duplicate member labels")

    @classmethod
    def from_profiles(cls, name: str, profiles) -> "ApplicationGroup":
        return cls(
            name=name,
            members=tuple(
                GroupMember(label=p.application, mnemonics=frozenset(p.used))
                for p in profiles
            ),
        )

    @classmethod
    def from_sets(cls, name: str, labeled_sets) -> "ApplicationGroup":
        return cls(
            name=name,
            members=tuple(
                GroupMember(label=label, mnemonics=frozenset(s))
                for label, s in labeled_sets
            ),
        )

    def validate_against(self, catalog: IsaCatalog) -> None:
        for m in self.members:
            stray = m.mnemonics - catalog.mnemonics
            if stray:
                raise ConsistencyError(
                    f"member {m.label!r} uses mnemonics outside catalog"
                    f" {catalog.name!r}: {sorted(stray)}"
                )


@dataclass(frozen=True)
class MemberResult:
    label: str
    size: int
    extension: frozenset[str]
    extra_cost: Fraction

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "size": self.size,
            "extension": sorted(self.extension),
            "extra_cost": percent_json(self.extra_cost),
        }


@dataclass(frozen=True)
class ExperimentResult:
    group_name: str
    base: frozenset[str]
    union: frozenset[str]
    per_member: tuple[MemberResult, ...]
    reusability: Fraction
    mean_extra_cost: Fraction

    def to_json_dict(self) -> dict:
        return {
            "group": self.group_name,
            "base": sorted(self.base),
            "union": sorted(self.union),
            "members": [m.to_json_dict() for m in self.per_member],
            "reusability": percent_json(self.reusability),
            "mean_extra_cost": percent_json(self.mean_extra_cost),
        }


def analyze_group(group: ApplicationGroup) -> ExperimentResult:
    """Compute base, union, extension sets and both factors for a group."""
    base = base_instruction_set([m.core_set for m in group.members])
    union = masip_union([m.mnemonics for m in group.members])
    if not union:
        raise ConsistencyError(f"group {group.name!r} has an empty union")
    per_member = []
    for m in group.members:
        ext = extension_set(m.mnemonics, base)
        cost = extra_cost_factor(len(m.mnemonics), len(base), len(union))
        per_member.append(
            MemberResult(
                label=m.label, size=len(m.mnemonics), extension=ext, extra_cost=cost
            )
        )
    return ExperimentResult(
        group_name=group.name,
        base=base,
        union=union,
        per_member=tuple(per_member),
        reusability=reusability_factor(len(base), len(union)),
        mean_extra_cost=mean_fraction([m.extra_cost for m in per_member]),
    )
