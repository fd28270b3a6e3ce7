"""Synthetic demonstration corpora with known set-algebra cardinalities.

Real benchmark compilations are not redistributable, so the bundled corpora
are synthesized over the shipped catalogs to hit reference cardinality
targets exactly: per-application set sizes, the group intersection and the
group union for the intra-domain corpora; per-domain union/core structure
for the inter-domain corpora.  Every synthesized group is re-checked by
brute-force per-symbol enumeration before anything is written, and every
written file is parsed back and compared against the intended set.

Intra-domain targets are independent per group and synthesized greedily.
The inter-domain corpora need six domain structures that satisfy all
fifteen 4-combination experiments at once, so those use a precomputed
allocation (see ``scripts/derive_inter_allocation.py``) frozen in
:data:`INTER_REGIONS`: counts of symbols per (union-membership,
core-membership) pattern pair.
"""

from __future__ import annotations

import json
import random
import shutil
from pathlib import Path

from .catalog import bundled_catalog_path, load_catalog
from .errors import FixtureError
from .ingest import parse_assembly

ARCHS = ("arm-thumb", "pisa")

#: Domain listing order for the bundled intra corpora (drives table order).
INTRA_DOMAIN_ORDER = ("AM", "OF", "SE", "TC", "MB", "SP")

#: Domain listing order for the bundled inter corpora (drives SET numbering).
INTER_DOMAIN_ORDER = ("AM", "OF", "MB", "SE", "SP", "TC")

# Per-domain application targets: ((app, |set|), ...), |intersection|, |union|.
INTRA_TARGETS = {
    "arm-thumb": {
        "AM": ((("basicmath", 33), ("bitcount", 46), ("qsort", 25), ("susan", 45)), 23, 49),
        "OF": ((("ghostscript", 52), ("ispell", 29), ("rsynth", 52), ("stringsearch", 40)), 27, 55),
        "SE": ((("blowfish", 49), ("pgp", 57), ("rijndael", 36), ("sha", 40)), 30, 57),
        "TC": ((("adpcm", 39), ("crc32", 36), ("fft", 41), ("gsm", 54)), 25, 55),
        "MB": ((("epic", 56), ("g721", 49), ("mpeg2", 51), ("rasta", 53)), 45, 56),
        "SP": ((("bzip2", 57), ("hmmer", 45), ("sjeng", 55), ("h264", 54)), 45, 58),
    },
    "pisa": {
        "AM": ((("basicmath", 25), ("bitcount", 31), ("qsort", 19), ("susan", 34)), 16, 40),
        "OF": ((("ghostscript", 44), ("ispell", 50), ("rsynth", 40), ("stringsearch", 27)), 27, 51),
        "SE": ((("blowfish", 30), ("pgp", 52), ("rijndael", 30), ("sha", 29)), 22, 52),
        "TC": ((("adpcm", 32), ("crc32", 22), ("fft", 30), ("gsm", 41)), 16, 45),
        "MB": ((("epic", 44), ("g721", 41), ("mpeg2", 43), ("rasta", 44)), 35, 50),
        "SP": ((("bzip2", 50), ("hmmer", 29), ("sjeng", 46), ("h264", 47)), 29, 52),
    },
}

#: Application roster per domain for the inter corpora (same apps as intra).
INTER_APPS = {
    "AM": ("basicmath", "bitcount", "qsort", "susan"),
    "OF": ("ghostscript", "ispell", "rsynth", "stringsearch"),
    "MB": ("epic", "g721", "mpeg2", "rasta"),
    "SE": ("blowfish", "pgp", "rijndael", "sha"),
    "SP": ("bzip2", "hmmer", "sjeng", "h264"),
    "TC": ("adpcm", "crc32", "fft", "gsm"),
}

# Frozen inter-corpus allocation: (union-pattern, core-pattern, symbol count).
# A symbol with union-pattern U and core-pattern C appears in the union set
# of every domain in U and in *every application* of every domain in C
# (C is a subset of U).  Derived once by scripts/derive_inter_allocation.py
# and verified by brute force at build time.
INTER_REGIONS = {
    # 55 symbols across 22 regions
    "arm-thumb": (
        (("AM", "OF", "MB", "SE", "SP"), ("AM", "MB", "SE", "SP"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "MB", "SE", "SP"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "MB", "SE", "SP", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "MB", "SP", "TC"), 4),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "MB", "SE", "SP"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "MB", "SE", "SP", "TC"), 12),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "MB", "SE", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "MB", "SP"), 2),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "MB", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "SE", "SP"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "SP", "TC"), 2),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "SE", "SP", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("MB", "SE", "SP", "TC"), 5),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("OF", "MB", "SE", "SP"), 5),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("OF", "MB", "SE", "TC"), 3),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("OF", "SE", "SP", "TC"), 4),
        (("MB", "SE", "SP", "TC"), (), 1),
        (("MB", "SE", "SP", "TC"), ("MB", "SE", "SP", "TC"), 1),
        (("OF", "MB", "SE", "SP", "TC"), (), 1),
        (("OF", "MB", "SE", "SP", "TC"), ("OF", "MB", "SP", "TC"), 5),
        (("SE", "SP"), (), 1),
        (("SP",), (), 1),
    ),
    # 48 symbols across 15 regions
    "pisa": (
        (("AM", "OF", "MB", "SE", "SP"), ("AM", "OF", "MB", "SE", "SP"), 2),
        (("AM", "OF", "MB", "SE", "SP", "TC"), (), 18),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "MB", "SE", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "MB", "SE", "SP", "TC"), 10),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "MB", "SP", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "OF", "SE", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("AM", "SE", "SP", "TC"), 1),
        (("AM", "OF", "MB", "SE", "SP", "TC"), ("OF", "MB", "SE", "SP"), 2),
        (("AM", "OF", "SE", "SP", "TC"), (), 1),
        (("OF", "MB", "SE", "SP"), (), 4),
        (("OF", "MB", "SE", "SP", "TC"), ("MB", "SE", "SP", "TC"), 2),
        (("OF", "MB", "SE", "SP", "TC"), ("OF", "MB", "SE", "SP", "TC"), 1),
        (("OF", "MB", "SE", "SP", "TC"), ("OF", "MB", "SE", "TC"), 2),
        (("OF", "MB", "SE", "SP", "TC"), ("OF", "SE", "SP", "TC"), 1),
        (("OF", "SE", "SP", "TC"), (), 1),
    ),
}

# Reference inter-domain cardinalities the frozen allocations must hit:
# per-domain union sizes, then (inter, union) per 4-combination in SET order.
INTER_TARGETS = {
    "arm-thumb": {
        "sizes": {"AM": 45, "OF": 51, "MB": 53, "SE": 54, "SP": 55, "TC": 52},
        "combos": (
            (14, 54), (15, 55), (14, 53), (14, 55), (13, 54),
            (14, 55), (16, 55), (14, 54), (17, 55), (14, 55),
            (18, 55), (16, 54), (17, 55), (16, 55), (19, 55),
        ),
    },
    "pisa": {
        "sizes": {"AM": 37, "OF": 48, "MB": 46, "SE": 48, "SP": 48, "TC": 42},
        "combos": (
            (12, 48), (13, 48), (11, 48), (12, 48), (11, 48),
            (11, 48), (12, 48), (11, 48), (11, 48), (11, 48),
            (15, 48), (13, 48), (12, 48), (12, 48), (13, 48),
        ),
    },
}


# ---------------------------------------------------------------------------
# group synthesis


def brute_force_stats(members) -> tuple[int, int]:
    """(intersection size, union size) by per-symbol membership counting.

    Kept independent of the analysis module on purpose: this is the check
    the synthesized fixtures must survive before tests consume them.
    """
    symbols = set()
    for m in members:
        symbols |= set(m)
    inter = 0
    union = 0
    for s in symbols:
        hits = sum(1 for m in members if s in m)
        union += 1
        if hits == len(members):
            inter += 1
    return inter, union


def synthesize_member_sets(sizes, base_size, union_size, symbols, rng) -> list:
    """Build member sets with the given sizes, intersection and union.

    ``symbols`` supplies the universe (at least ``union_size`` distinct
    entries).  Infeasible targets raise :class:`FixtureError` with the
    violated condition named.
    """
    sizes = list(sizes)
    n = len(sizes)
    if n < 1:
        raise FixtureError("at least one member required")
    if base_size < 0 or union_size < 1:
        raise FixtureError("sizes must be nonnegative and union nonempty")
    if base_size > min(sizes):
        raise FixtureError(
            f"infeasible: intersection {base_size} exceeds smallest member {min(sizes)}"
        )
    if max(sizes) > union_size:
        raise FixtureError(
            f"infeasible: member of size {max(sizes)} exceeds union {union_size}"
        )
    extras = [s - base_size for s in sizes]
    pool = union_size - base_size
    slots = sum(extras)
    if pool > slots:
        raise FixtureError(
            f"infeasible: union needs {pool} non-base symbols but members"
            f" only provide {slots} memberships"
        )
    if n == 1 and pool > 0:
        raise FixtureError("infeasible: a single member must equal the union")
    if n > 1 and slots > (n - 1) * pool:
        raise FixtureError(
            f"infeasible: {slots} non-base memberships cannot fit into"
            f" {pool} symbols of at most {n - 1} members each"
            " (a symbol in all members would belong to the intersection)"
        )
    symbols = list(symbols)
    if len(symbols) < union_size:
        raise FixtureError(
            f"universe of {len(symbols)} symbols cannot hold a union of {union_size}"
        )

    chosen = list(symbols)
    rng.shuffle(chosen)
    base = chosen[:base_size]
    rest = chosen[base_size:union_size]
    members = [set(base) for _ in range(n)]
    remaining = list(extras)
    for idx, sym in enumerate(rest):
        left = len(rest) - idx
        take = max(1, -(-slots // left))  # ceil(slots / left)
        order = sorted(range(n), key=lambda i: (-remaining[i], i))
        picked = [i for i in order[:take] if remaining[i] > 0]
        for i in picked:
            members[i].add(sym)
            remaining[i] -= 1
        slots -= len(picked)

    inter, union = brute_force_stats(members)
    got_sizes = [len(m) for m in members]
    if got_sizes != sizes or inter != base_size or union != union_size:
        raise FixtureError(
            f"synthesis self-check failed: sizes {got_sizes} inter {inter}"
            f" union {union} vs targets {sizes}/{base_size}/{union_size}"
        )
    return members


def verify_member_sets(members, sizes, base_size, union_size) -> None:
    inter, union = brute_force_stats(members)
    if [len(m) for m in members] != list(sizes) or inter != base_size or union != union_size:
        raise FixtureError(
            f"fixture verification failed: sizes {[len(m) for m in members]}"
            f" inter {inter} union {union}, wanted {list(sizes)}/{base_size}/{union_size}"
        )


# ---------------------------------------------------------------------------
# inter-corpus allocation handling


def verify_inter_regions(arch: str) -> None:
    """Check the frozen allocation against the reference cardinalities."""
    regions = INTER_REGIONS[arch]
    targets = INTER_TARGETS[arch]
    for upat, cpat, count in regions:
        if not set(cpat) <= set(upat):
            raise FixtureError(f"{arch}: core pattern {cpat} outside union pattern {upat}")
        if count < 1:
            raise FixtureError(f"{arch}: empty region {upat}/{cpat}")
    for domain, want in targets["sizes"].items():
        got = sum(n for upat, _, n in regions if domain in upat)
        if got != want:
            raise FixtureError(f"{arch}: domain {domain} size {got}, expected {want}")
    combos = _inter_combos()
    for (inter_want, union_want), combo in zip(targets["combos"], combos):
        combo = set(combo)
        inter = sum(n for _, cpat, n in regions if combo <= set(cpat))
        union = sum(n for upat, _, n in regions if combo & set(upat))
        if (inter, union) != (inter_want, union_want):
            raise FixtureError(
                f"{arch}: combination {sorted(combo)} gives {inter}/{union},"
                f" expected {inter_want}/{union_want}"
            )


def _inter_combos():
    from itertools import combinations

    return [
        tuple(INTER_DOMAIN_ORDER[i] for i in combo)
        for combo in combinations(range(len(INTER_DOMAIN_ORDER)), 4)
    ]


def inter_domain_sets(arch: str, symbols) -> tuple[dict, dict]:
    """Materialize (domain union sets, domain core sets) from the allocation."""
    regions = INTER_REGIONS[arch]
    total = sum(n for _, _, n in regions)
    symbols = list(symbols)
    if len(symbols) < total:
        raise FixtureError(f"universe of {len(symbols)} symbols < {total} needed")
    unions = {d: set() for d in INTER_DOMAIN_ORDER}
    cores = {d: set() for d in INTER_DOMAIN_ORDER}
    cursor = 0
    for upat, cpat, count in regions:
        for sym in symbols[cursor : cursor + count]:
            for d in upat:
                unions[d].add(sym)
            for d in cpat:
                cores[d].add(sym)
        cursor += count
    return unions, cores


def split_domain_into_apps(union_set, core_set, app_names, rng) -> dict:
    """Assign symbols to applications so the apps' intersection is exactly
    the core and their union exactly the domain set."""
    names = list(app_names)
    if len(names) < 2 and union_set != core_set:
        raise FixtureError("one application cannot have a core below its union")
    apps = {name: set(core_set) for name in names}
    for sym in sorted(union_set - core_set):
        k = rng.choice((1, 1, 2, 2, 3))  # proper subset: never all apps
        for name in rng.sample(names, min(k, len(names) - 1)):
            apps[name].add(sym)
    return apps


# ---------------------------------------------------------------------------
# assembly rendering

_FLAVORS = {
    "arm-thumb": {
        "comment": "@",
        "regs": ("r0", "r1", "r2", "r3", "r4", "r5", "r6", "r7", "sp", "lr"),
        "forms": (
            "{a}, {b}",
            "{a}, {b}, {c}",
            "{a}, [{b}]",
            "{a}, [{b}, #{imm}]",
            "{a}, #{imm}",
        ),
    },
    "pisa": {
        "comment": "#",
        "regs": ("$2", "$3", "$4", "$5", "$6", "$16", "$17", "$sp", "$ra", "$0"),
        "forms": (
            "{a}, {b}",
            "{a}, {b}, {c}",
            "{a}, {imm}({b})",
            "{a}, {imm}",
        ),
    },
}


def render_assembly(counts: dict, arch: str, app: str, domain: str, rng) -> str:
    """Produce assembly text whose parse yields exactly ``counts``.

    Sprinkles directives, labels and comments so corpus files exercise the
    same lexical paths as real listings.
    """
    flavor = _FLAVORS[arch]
    cmt = flavor["comment"]
    ops = []
    for mnemonic in sorted(counts):
        ops.extend([mnemonic] * counts[mnemonic])
    rng.shuffle(ops)

    lines = [
        f"{cmt} {app} ({domain}) synthetic corpus listing",
        "/* generated file: do not edit by hand,",
        "   regenerate with `masip fixtures` */",
        "\t.text",
        "\t.align\t2",
        f"\t.globl\t{app}",
        f"{app}:",
    ]
    label_no = 0
    for i, mnemonic in enumerate(ops):
        if i and i % 9 == 0:
            label_no += 1
            if rng.random() < 0.5:
                lines.append(f".L{label_no}:")
            else:
                # label and instruction on one line
                form = rng.choice(flavor["forms"])
                lines.append(f".L{label_no}: {mnemonic}\t" + _operands(form, flavor, rng))
                continue
        form = rng.choice(flavor["forms"])
        text = f"\t{mnemonic}\t" + _operands(form, flavor, rng)
        if rng.random() < 0.08:
            text += f"\t{cmt} spilled"
        lines.append(text)
    lines.append(f"\t.size\t{app}, .-{app}")
    return "\n".join(lines) + "\n"


def _operands(form: str, flavor: dict, rng) -> str:
    regs = flavor["regs"]
    return form.format(
        a=rng.choice(regs), b=rng.choice(regs), c=rng.choice(regs), imm=rng.randrange(0, 64)
    )


# ---------------------------------------------------------------------------
# corpus builders


def _write_app_files(out_dir: Path, arch: str, catalog, domain: str, app: str, mnemonics, rng):
    counts = {m: rng.randint(1, 3) for m in sorted(mnemonics)}
    path = out_dir / domain / f"{app}.s"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_assembly(counts, arch, app, domain, rng), encoding="utf-8")
    parsed = parse_assembly(path.read_text(encoding="utf-8"), catalog, "strict", source=path)
    if parsed.used != frozenset(mnemonics) or parsed.counts != counts:
        raise FixtureError(f"parse-back mismatch for {path}")
    return f"{domain}/{app}.s"


def _write_config(out_dir: Path, catalog_file: str, domains: dict) -> Path:
    config = {
        "catalog": catalog_file,
        "mode": "strict",
        "group_size": 4,
        "domains": domains,
    }
    path = out_dir / "config.json"
    path.write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")
    return path


def _copy_catalog(arch: str, out_dir: Path) -> str:
    out_dir.mkdir(parents=True, exist_ok=True)
    name = f"{arch}.catalog"
    shutil.copyfile(bundled_catalog_path(arch), out_dir / name)
    return name


def build_intra_corpus(arch: str, out_dir) -> Path:
    """Write the six-domain intra corpus for ``arch``; returns the config path."""
    if arch not in ARCHS:
        raise FixtureError(f"unknown architecture {arch!r}; choose from {ARCHS}")
    out_dir = Path(out_dir)
    catalog_file = _copy_catalog(arch, out_dir)
    catalog = load_catalog(out_dir / catalog_file)
    domains_cfg = {}
    for domain in INTRA_DOMAIN_ORDER:
        apps, base_size, union_size = INTRA_TARGETS[arch][domain]
        rng = random.Random(f"{arch}/intra/{domain}")
        members = synthesize_member_sets(
            [size for _, size in apps], base_size, union_size, sorted(catalog.mnemonics), rng
        )
        verify_member_sets(members, [size for _, size in apps], base_size, union_size)
        domains_cfg[domain] = {}
        for (app, _), mnemonics in zip(apps, members):
            rel = _write_app_files(out_dir, arch, catalog, domain, app, mnemonics, rng)
            domains_cfg[domain][app] = [rel]
    return _write_config(out_dir, catalog_file, domains_cfg)


def build_inter_corpus(arch: str, out_dir) -> Path:
    """Write the six-domain inter corpus for ``arch``; returns the config path."""
    if arch not in ARCHS:
        raise FixtureError(f"unknown architecture {arch!r}; choose from {ARCHS}")
    verify_inter_regions(arch)
    out_dir = Path(out_dir)
    catalog_file = _copy_catalog(arch, out_dir)
    catalog = load_catalog(out_dir / catalog_file)
    rng = random.Random(f"{arch}/inter")
    symbols = sorted(catalog.mnemonics)
    rng.shuffle(symbols)
    unions, cores = inter_domain_sets(arch, symbols)
    domains_cfg = {}
    for domain in INTER_DOMAIN_ORDER:
        apps = split_domain_into_apps(unions[domain], cores[domain], INTER_APPS[domain], rng)
        # the split must preserve the domain-level structure exactly
        inter, union = brute_force_stats(list(apps.values()))
        if inter != len(cores[domain]) or union != len(unions[domain]):
            raise FixtureError(f"{arch}/{domain}: application split broke domain structure")
        domains_cfg[domain] = {}
        for app in INTER_APPS[domain]:
            rel = _write_app_files(out_dir, arch, catalog, domain, app, apps[app], rng)
            domains_cfg[domain][app] = [rel]
    return _write_config(out_dir, catalog_file, domains_cfg)
