"""Complete-ISA catalogs: the universe of mnemonics an architecture offers.

A catalog file is UTF-8 and line oriented:

    # comment
    name arm-thumb
    add
    sub
    alias asl lsl

Blank lines and ``#`` comment lines are ignored.  The ``name`` line must be
the first non-comment line and appear exactly once.  Every other line either
declares one canonical mnemonic or one ``alias <spelling> <canonical>``
mapping.  Matching is case-insensitive; everything is lowercased on load.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CatalogError

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_.+-]*$")


@dataclass(frozen=True)
class Unknown:
    """Marker returned by :func:`canonicalize` for tokens outside the catalog."""

    token: str


@dataclass(frozen=True)
class IsaCatalog:
    """Immutable catalog of canonical mnemonics plus alias spellings.

    Safe to share across threads; nothing mutates after construction.
    """

    name: str
    mnemonics: frozenset[str] = field(default_factory=frozenset)
    aliases: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid catalog name {self.name!r}")
        if not self.mnemonics:
            raise ValueError("catalog has no mnemonics")
        for m in self.mnemonics:
            _check_mnemonic(m)
        for key, target in self.aliases.items():
            _check_mnemonic(key)
            _check_mnemonic(target)
            if target not in self.mnemonics:
                raise ValueError(f"alias {key!r} points to unknown mnemonic {target!r}")
            if key in self.mnemonics:
                raise ValueError(f"alias {key!r} collides with a canonical mnemonic")

    def __contains__(self, mnemonic: str) -> bool:
        return mnemonic in self.mnemonics

    def __len__(self) -> int:
        return len(self.mnemonics)

    def canonicalize(self, raw: str) -> str | Unknown:
        return canonicalize(self, raw)

    def serialize(self) -> str:
        return serialize(self)


def _check_mnemonic(m: str) -> None:
    if not m:
        raise ValueError("empty mnemonic")
    if m != m.lower():
        raise ValueError(f"mnemonic {m!r} is not lowercase")
    if any(c.isspace() for c in m):
        raise ValueError(f"mnemonic {m!r} contains whitespace")


def canonicalize(catalog: IsaCatalog, raw: str) -> str | Unknown:
    """Map a raw token to its canonical mnemonic, or to an :class:`Unknown`.

    Lowercases first; alias spellings resolve to their canonical target.
    Idempotent on canonical mnemonics.  Unknown tokens are values, not
    errors; callers decide how strict to be.
    """
    if not raw or any(c.isspace() for c in raw):
        raise ValueError(f"not a single token: {raw!r}")
    low = raw.lower()
    if low in catalog.mnemonics:
        return low
    if low in catalog.aliases:
        return catalog.aliases[low]
    return Unknown(low)


def loads(text: str, path=None) -> IsaCatalog:
    """Parse catalog file content.  ``path`` is only used in diagnostics."""
    name = None
    mnemonics: dict[str, int] = {}  # mnemonic -> line declared
    aliases: dict[str, tuple[str, int]] = {}  # key -> (target, line)

    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "name":
            if len(tokens) != 2:
                raise CatalogError("expected 'name <identifier>'", path, lineno)
            if name is not None:
                raise CatalogError("duplicate 'name' line", path, lineno)
            if mnemonics or aliases:
                raise CatalogError("'name' must be the first entry", path, lineno)
            if not _NAME_RE.match(tokens[1]):
                raise CatalogError(f"invalid catalog name {tokens[1]!r}", path, lineno)
            name = tokens[1]
            continue
        if name is None:
            raise CatalogError("first entry must be 'name <identifier>'", path, lineno)
        if tokens[0] == "alias":
            if len(tokens) != 3:
                raise CatalogError("expected 'alias <spelling> <canonical>'", path, lineno)
            key, target = tokens[1].lower(), tokens[2].lower()
            if key in aliases:
                raise CatalogError(f"duplicate alias {key!r}", path, lineno)
            aliases[key] = (target, lineno)
            continue
        if len(tokens) != 1:
            raise CatalogError(f"expected a single mnemonic, got {line!r}", path, lineno)
        mnemonic = tokens[0].lower()
        if mnemonic in mnemonics:
            raise CatalogError(f"duplicate mnemonic {mnemonic!r}", path, lineno)
        mnemonics[mnemonic] = lineno

    if name is None:
        raise CatalogError("missing 'name' line", path)
    if not mnemonics:
        raise CatalogError("empty catalog: no mnemonics declared", path)
    for key, (target, lineno) in aliases.items():
        if target not in mnemonics:
            raise CatalogError(f"alias {key!r} points to unknown mnemonic {target!r}", path, lineno)
        if key in mnemonics:
            raise CatalogError(f"alias {key!r} collides with a canonical mnemonic", path, lineno)

    return IsaCatalog(
        name=name,
        mnemonics=frozenset(mnemonics),
        aliases={k: t for k, (t, _) in aliases.items()},
    )


def load_catalog(path) -> IsaCatalog:
    """Load and validate a catalog file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise CatalogError("file not found", path) from None
    except OSError as exc:
        raise CatalogError(f"cannot read: {exc}", path) from None
    except UnicodeDecodeError as exc:
        raise CatalogError(f"not valid UTF-8: {exc}", path) from None
    return loads(text, path)


def serialize(catalog: IsaCatalog) -> str:
    """Deterministic re-serialization: name, sorted mnemonics, sorted aliases."""
    lines = [f"name {catalog.name}"]
    lines.extend(sorted(catalog.mnemonics))
    lines.extend(f"alias {k} {catalog.aliases[k]}" for k in sorted(catalog.aliases))
    return "\n".join(lines) + "\n"


def bundled_catalog_path(name: str) -> Path:
    """Path of a catalog shipped with the package (arm-thumb, pisa, toy)."""
    path = Path(__file__).parent / "data" / f"{name}.catalog"
    if not path.is_file():
        raise CatalogError(f"no bundled catalog named {name!r}")
    return path
