import random
from fractions import Fraction

import pytest

from helpers import brute_force_group
from masip.analysis import (
    ApplicationGroup,
    GroupMember,
    analyze_group,
    base_instruction_set,
    extension_set,
    extra_cost_factor,
    format_percent,
    masip_union,
    mean_fraction,
    reusability_factor,
    round_half_away,
)
from masip.catalog import IsaCatalog
from masip.errors import ConsistencyError
from masip.ingest import InstructionProfile


def fs(*items):
    return frozenset(items)


# ---------------------------------------------------------------------------
# set operations


def test_base_single_member_identity():
    assert base_instruction_set([fs("a", "b", "c")]) == fs("a", "b", "c")


def test_base_intersection():
    assert base_instruction_set([fs("a", "b", "c"), fs("b", "c", "d"), fs("c")]) == fs("c")


def test_base_requires_members():
    with pytest.raises(ValueError):
        base_instruction_set([])


def test_union_basic():
    assert masip_union([fs("a"), fs("b")]) == fs("a", "b")


def test_union_requires_members():
    with pytest.raises(ValueError):
        masip_union([])


def test_extension_subtracts_base():
    assert extension_set(fs("a", "b", "c"), fs("a")) == fs("b", "c")


def test_extension_of_base_itself_is_empty():
    assert extension_set(fs("a", "b"), fs("a", "b")) == fs()


def test_extension_rejects_base_outside_member():
    with pytest.raises(ConsistencyError):
        extension_set(fs("a"), fs("a", "b"))


# ---------------------------------------------------------------------------
# factors


def test_reusability_exact_fraction():
    assert reusability_factor(23, 49) == Fraction(2300, 49)
    assert format_percent(reusability_factor(23, 49)) == "46.9"
    assert round_half_away(reusability_factor(23, 49)) == 47


def test_reusability_full_overlap_is_100():
    for n in (1, 7, 40):
        assert reusability_factor(n, n) == 100


def test_reusability_small_base():
    assert format_percent(reusability_factor(14, 54)) == "25.9"
    assert round_half_away(reusability_factor(14, 54)) == 26


def test_reusability_rejects_zero_union():
    with pytest.raises(ValueError):
        reusability_factor(0, 0)


def test_reusability_rejects_base_above_union():
    with pytest.raises(ValueError):
        reusability_factor(5, 4)


def test_extra_cost_exact_fraction():
    assert extra_cost_factor(33, 23, 49) == Fraction(1000, 49)
    assert format_percent(extra_cost_factor(33, 23, 49)) == "20.4"


def test_extra_cost_zero_for_base_member():
    assert extra_cost_factor(23, 23, 49) == 0


def test_extra_cost_rejects_bad_ordering():
    with pytest.raises(ValueError):
        extra_cost_factor(22, 23, 49)
    with pytest.raises(ValueError):
        extra_cost_factor(50, 23, 49)


def test_mean_extra_cost_formula():
    costs = [extra_cost_factor(m, 23, 49) for m in (33, 46, 25, 45)]
    mean = mean_fraction(costs)
    assert mean == Fraction(100 * 57, 4 * 49)
    assert format_percent(mean) == "29.1"
    assert round_half_away(mean) == 29


def test_round_half_away_ties():
    assert round_half_away(Fraction(1, 2)) == 1
    assert round_half_away(Fraction(-1, 2)) == -1
    assert round_half_away(Fraction(5, 2)) == 3
    assert round_half_away(Fraction(465, 10)) == 47  # 46.5 rounds up


def test_format_percent_one_decimal():
    assert format_percent(Fraction(100)) == "100.0"
    assert format_percent(Fraction(0)) == "0.0"
    assert format_percent(Fraction(100, 3)) == "33.3"
    assert format_percent(Fraction(95, 10)) == "9.5"
    assert format_percent(Fraction(9949, 100)) == "99.5"


# ---------------------------------------------------------------------------
# groups


def _group(*sets, cores=None, name="g"):
    members = []
    for i, s in enumerate(sets):
        core = None if cores is None else cores[i]
        members.append(GroupMember(label=f"m{i}", mnemonics=frozenset(s), core=core))
    return ApplicationGroup(name=name, members=tuple(members))


def test_analyze_single_member_group():
    result = analyze_group(_group({"a", "b"}))
    assert result.base == result.union == fs("a", "b")
    assert result.reusability == 100
    assert result.mean_extra_cost == 0


def test_analyze_group_basic():
    result = analyze_group(_group({"a", "b", "c"}, {"b", "c", "d"}))
    assert result.base == fs("b", "c")
    assert result.union == fs("a", "b", "c", "d")
    assert [m.extension for m in result.per_member] == [fs("a"), fs("d")]
    assert result.reusability == Fraction(200, 4)


def test_analyze_group_with_cores():
    # members are pre-unioned sets; cores carry application-level commonality
    result = analyze_group(
        _group({"a", "b", "c"}, {"a", "b", "d"}, cores=[{"a"}, {"a", "b"}])
    )
    assert result.base == fs("a")
    assert result.union == fs("a", "b", "c", "d")
    assert [len(m.extension) for m in result.per_member] == [2, 2]


def test_group_from_profiles():
    p1 = InstructionProfile("one", "D", fs("add"), {"add": 1})
    p2 = InstructionProfile("two", "D", fs("add", "sub"), {"add": 1, "sub": 2})
    group = ApplicationGroup.from_profiles("D", [p1, p2])
    result = analyze_group(group)
    assert result.base == fs("add")
    assert [m.label for m in result.per_member] == ["one", "two"]


def test_group_rejects_duplicate_labels():
    with pytest.raises(ValueError, match="duplicate"):
        ApplicationGroup("g", (GroupMember("x", fs("a")), GroupMember("x", fs("b"))))


def test_group_rejects_empty():
    with pytest.raises(ValueError):
        ApplicationGroup("g", ())


def test_member_core_must_be_subset():
    with pytest.raises(ValueError):
        GroupMember("x", fs("a"), core=fs("a", "b"))


def test_empty_union_rejected():
    with pytest.raises(ConsistencyError):
        analyze_group(_group(set(), set()))


def test_validate_against_catalog():
    cat = IsaCatalog(name="t", mnemonics=frozenset({"add", "sub"}))
    good = ApplicationGroup.from_sets("g", [("x", {"add"})])
    good.validate_against(cat)
    bad = ApplicationGroup.from_sets("g", [("x", {"add", "weird"})])
    with pytest.raises(ConsistencyError):
        bad.validate_against(cat)


def test_empty_base_is_legal():
    result = analyze_group(_group({"a"}, {"b"}))
    assert result.base == fs()
    assert result.reusability == 0
    assert [m.extension for m in result.per_member] == [fs("a"), fs("b")]


# ---------------------------------------------------------------------------
# randomized properties (the acceptance suite runs larger instances)

UNIVERSE = [f"s{i:02d}" for i in range(16)]


def _random_sets(rng, low=2, high=5):
    while True:
        k = rng.randint(low, high)
        sets = [
            {s for s in UNIVERSE if rng.random() < rng.choice((0.2, 0.5, 0.8))}
            for _ in range(k)
        ]
        if any(sets):
            return sets


def test_matches_brute_force_oracle():
    rng = random.Random(1234)
    for _ in range(200):
        sets = _random_sets(rng)
        want = brute_force_group(sets)
        got = analyze_group(_group(*sets))
        assert got.base == want["base"]
        assert got.union == want["union"]
        assert [m.extension for m in got.per_member] == want["extensions"]
        assert got.reusability == want["reusability"]
        assert [m.extra_cost for m in got.per_member] == want["extra_costs"]
        assert got.mean_extra_cost == want["mean_extra_cost"]


def test_decomposition_identity_exact():
    rng = random.Random(99)
    for _ in range(200):
        sets = _random_sets(rng)
        result = analyze_group(_group(*sets))
        for m in result.per_member:
            assert result.reusability + m.extra_cost == Fraction(
                100 * m.size, len(result.union)
            )


def test_permutation_invariance():
    rng = random.Random(7)
    for _ in range(100):
        sets = _random_sets(rng)
        result = analyze_group(_group(*sets))
        order = list(range(len(sets)))
        rng.shuffle(order)
        shuffled = analyze_group(
            ApplicationGroup(
                "g", tuple(GroupMember(f"m{i}", frozenset(sets[i])) for i in order)
            )
        )
        assert shuffled.base == result.base
        assert shuffled.union == result.union
        assert shuffled.reusability == result.reusability
        assert shuffled.mean_extra_cost == result.mean_extra_cost
        by_label = {m.label: m for m in result.per_member}
        for m in shuffled.per_member:
            assert m == by_label[m.label]


def test_monotonicity_under_member_addition():
    rng = random.Random(41)
    for _ in range(100):
        sets = [set(rng.sample(UNIVERSE, rng.randint(1, 16)))]
        prev = analyze_group(_group(*sets))
        for _ in range(4):
            sets.append(set(rng.sample(UNIVERSE, rng.randint(1, 16))))
            cur = analyze_group(_group(*sets))
            assert len(cur.base) <= len(prev.base)
            assert len(cur.union) >= len(prev.union)
            assert cur.reusability <= prev.reusability
            prev = cur


def test_factor_bounds():
    rng = random.Random(17)
    for _ in range(100):
        sets = _random_sets(rng)
        result = analyze_group(_group(*sets))
        if result.base:
            assert 0 < result.reusability <= 100
        else:
            assert result.reusability == 0
        for m in result.per_member:
            assert 0 <= m.extra_cost < 100
