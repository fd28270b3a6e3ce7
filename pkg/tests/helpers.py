"""Independent oracles used to cross-check the library.

Deliberately reimplemented from scratch (regex scanning, per-symbol
counting loops) so tests never validate the code against itself.
"""

from __future__ import annotations

import re
from fractions import Fraction

_LINE_COMMENT = re.compile(r"[@#;].*$")
_BLOCK_COMMENT = re.compile(r"/\*.*?\*/", re.DOTALL)
_OPEN_BLOCK = re.compile(r"/\*.*$", re.DOTALL)


def naive_scan(text: str) -> list[str]:
    """Return the raw mnemonic tokens of accepted instruction lines, in order.

    A minimal second implementation of the lexical contract: strip block
    and line comments, drop blanks, directives and labels, take the first
    remaining token per line, lowercased.
    """
    text = _BLOCK_COMMENT.sub(" ", text)
    text = _OPEN_BLOCK.sub(" ", text)  # unterminated block runs to EOF
    tokens = []
    for line in text.splitlines():
        line = _LINE_COMMENT.sub("", line)
        parts = line.split()
        while parts and parts[0].endswith(":"):
            parts = parts[1:]
        if not parts or parts[0].startswith("."):
            continue
        tokens.append(parts[0].lower())
    return tokens


def brute_force_group(member_sets, cores=None):
    """Per-symbol enumeration of base/union/extensions and both factors.

    ``cores`` defaults to the member sets themselves; when given, the base
    is the set of symbols present in every core.
    """
    members = [set(m) for m in member_sets]
    cores = members if cores is None else [set(c) for c in cores]
    symbols = set()
    for m in members:
        symbols |= m
    for c in cores:
        symbols |= c

    base = set()
    union = set()
    for s in sorted(symbols):
        in_all_cores = sum(1 for c in cores if s in c) == len(cores)
        in_any = sum(1 for m in members if s in m) > 0
        if in_all_cores:
            base.add(s)
        if in_any:
            union.add(s)

    extensions = [m - base for m in members]
    reusability = Fraction(100 * len(base), len(union))
    extra = [Fraction(100 * (len(m) - len(base)), len(union)) for m in members]
    return {
        "base": base,
        "union": union,
        "extensions": extensions,
        "reusability": reusability,
        "extra_costs": extra,
        "mean_extra_cost": sum(extra, Fraction(0)) / len(extra),
    }
