"""Assembly ingestion: turn compiler listings into instruction profiles.

The lexical rules are deliberately dialect-agnostic.  Per line, after
comment stripping: blank lines, assembler directives (first token starts
with ``.``) and pure label lines (single token ending ``:``) are skipped;
otherwise the first token after any leading labels is the instruction
mnemonic.  Operands are never inspected.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .catalog import IsaCatalog, Unknown, canonicalize
from .errors import AsmParseError, UsageError

log = logging.getLogger(__name__)

#: Line-comment markers stripped by default: ARM ``@``, MIPS-style ``#``
#: and the widely used ``;``.  ``/* ... */`` blocks are always stripped.
DEFAULT_LINE_COMMENTS = ("@", "#", ";")

MODES = ("strict", "lenient")


@dataclass(frozen=True)
class ParseResult:
    """Outcome of scanning one piece of assembly text."""

    used: frozenset[str]
    counts: dict[str, int]
    unknown: frozenset[str]


@dataclass(frozen=True)
class InstructionProfile:
    """Distinct canonical mnemonics one application uses, with static
    occurrence counts.  ``unknown`` holds raw tokens that failed catalog
    lookup (lenient mode only).  Immutable once built."""

    application: str
    domain: str
    used: frozenset[str]
    counts: dict[str, int]
    unknown: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if set(self.counts) != set(self.used):
            raise ValueError("counts keys must equal the used set")
        bad = [m for m, n in self.counts.items() if n < 1]
        if bad:
            raise ValueError(f"non-positive count for {bad}")
        if self.used & self.unknown:
            raise ValueError("used and unknown overlap")

    def to_json_dict(self) -> dict:
        return {
            "application": self.application,
            "domain": self.domain,
            "used": sorted(self.used),
            "counts": {m: self.counts[m] for m in sorted(self.counts)},
            "unknown": sorted(self.unknown),
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "InstructionProfile":
        return cls(
            application=obj["application"],
            domain=obj["domain"],
            used=frozenset(obj["used"]),
            counts=dict(obj["counts"]),
            unknown=frozenset(obj.get("unknown", ())),
        )


def _strip_block_comments(text: str) -> str:
    """Remove ``/* ... */`` blocks, keeping newlines so line numbers hold."""
    out = []
    i = 0
    in_block = False
    while i < len(text):
        if in_block:
            if text.startswith("*/", i):
                in_block = False
                i += 2
            else:
                if text[i] == "\n":
                    out.append("\n")
                i += 1
        elif text.startswith("/*", i):
            in_block = True
            out.append(" ")  # keep surrounding tokens separated
            i += 2
        else:
            out.append(text[i])
            i += 1
    return "".join(out)


def _strip_line_comment(line: str, markers: Sequence[str]) -> str:
    cut = len(line)
    for marker in markers:
        pos = line.find(marker)
        if pos != -1:
            cut = min(cut, pos)
    return line[:cut]


def parse_assembly(
    text: str,
    catalog: IsaCatalog,
    mode: str = "lenient",
    *,
    line_comments: Sequence[str] = DEFAULT_LINE_COMMENTS,
    source=None,
) -> ParseResult:
    """Scan assembly text and collect canonical mnemonics and counts.

    In strict mode the first token that fails catalog lookup raises
    :class:`AsmParseError` with its line number; in lenient mode such
    tokens accumulate (lowercased) in ``unknown``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")

    counts: dict[str, int] = {}
    unknown: set[str] = set()

    for lineno, rawline in enumerate(_strip_block_comments(text).splitlines(), start=1):
        line = _strip_line_comment(rawline, line_comments)
        tokens = line.split()
        while tokens and tokens[0].endswith(":"):
            tokens = tokens[1:]  # leading label(s)
        if not tokens:
            continue
        head = tokens[0]
        if head.startswith("."):
            continue  # assembler directive
        canon = canonicalize(catalog, head)
        if isinstance(canon, Unknown):
            if mode == "strict":
                raise AsmParseError(
                    f"unknown mnemonic {canon.token!r}",
                    path=source,
                    line=lineno,
                    token=canon.token,
                )
            unknown.add(canon.token)
        else:
            counts[canon] = counts.get(canon, 0) + 1

    return ParseResult(
        used=frozenset(counts),
        counts=counts,
        unknown=frozenset(unknown),
    )


def build_profile(
    application: str,
    domain: str,
    files: Iterable,
    catalog: IsaCatalog,
    mode: str = "lenient",
    *,
    line_comments: Sequence[str] = DEFAULT_LINE_COMMENTS,
) -> InstructionProfile:
    """Parse one or more assembly files into a single profile.

    Used sets union, counts add across files; file order does not matter.
    """
    paths = [Path(p) for p in files]
    if not paths:
        raise UsageError(f"no assembly files given for application {application!r}")

    counts: dict[str, int] = {}
    unknown: set[str] = set()
    for path in paths:
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise AsmParseError("file not found", path=path) from None
        except UnicodeDecodeError as exc:
            raise AsmParseError(f"not valid UTF-8: {exc}", path=path) from None
        except OSError as exc:
            raise AsmParseError(f"cannot read: {exc}", path=path) from None
        result = parse_assembly(
            text, catalog, mode, line_comments=line_comments, source=path
        )
        for m, n in result.counts.items():
            counts[m] = counts.get(m, 0) + n
        unknown |= result.unknown

    if not counts:
        log.warning(
            "profile %s/%s contains no recognized instructions", domain, application
        )
    return InstructionProfile(
        application=application,
        domain=domain,
        used=frozenset(counts),
        counts=counts,
        unknown=frozenset(unknown),
    )
