"""Crib wordlists: loading, suffix-rewrite expansion, and membership lookup.

The crib is the plaintext side of the attack: a list of candidate words
(typically name lists) that successful transcriptions must land in.
Membership is exact; there is no fuzzy matching.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedInputError


@dataclass(frozen=True)
class RewriteRule:
    """A suffix rewrite applied to crib names, e.g. ``a -> ka``.

    The suffix is replaced only at the end of a name, once, with no
    cascading into the rewritten output.
    """

    suffix: str
    replacement: str

    def __post_init__(self):
        if not self.suffix:
            raise ValueError("rewrite rule suffix must be nonempty")

    @classmethod
    def parse(cls, text: str) -> RewriteRule:
        """Parse the CLI form ``SUFFIX=REPLACEMENT``."""
        if "=" not in text:
            raise MalformedInputError(
                f"rewrite rule {text!r} is not of the form SUFFIX=REPLACEMENT"
            )
        suffix, replacement = text.split("=", 1)
        if not suffix:
            raise MalformedInputError(f"rewrite rule {text!r} has an empty suffix")
        return cls(suffix=suffix, replacement=replacement)

    def applies_to(self, name: str) -> bool:
        return name.endswith(self.suffix)

    def rewrite(self, name: str) -> str:
        return name[: len(name) - len(self.suffix)] + self.replacement


@dataclass(frozen=True)
class Crib:
    """A deduplicated name list with a constant-time membership index.

    ``names`` keeps first-occurrence order so reports and expansions are
    stable; ``index`` backs membership queries; ``alphabet`` is the sorted
    union of characters over all names.
    """

    names: tuple[str, ...]
    alphabet: tuple[str, ...]
    index: frozenset[str]

    def contains(self, candidate: str) -> bool:
        return candidate in self.index

    def __contains__(self, candidate: str) -> bool:
        return candidate in self.index

    def __len__(self) -> int:
        return len(self.names)


def load_crib(text: str) -> Crib:
    """Parse a newline-delimited name list.

    Lines are trimmed and lowercased; blanks and ``#`` comments are
    skipped; duplicates collapse to their first occurrence.
    """
    names: list[str] = []
    for raw in text.split("\n"):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        names.append(line.lower())
    return _build(names)


def expand_crib(crib: Crib, rules) -> Crib:
    """Union the crib with every single-pass suffix rewrite of its names.

    Each rule applies independently to each original name; rewritten names
    are not rewritten again. The result always contains the original crib.
    """
    expanded = list(crib.names)
    for name in crib.names:
        for rule in rules:
            if rule.applies_to(name):
                expanded.append(rule.rewrite(name))
    return _build(expanded)


def contains(crib: Crib, candidate: str) -> bool:
    """Exact membership query, constant-time in the number of names."""
    return candidate in crib.index


def _build(names) -> Crib:
    deduped = tuple(dict.fromkeys(n for n in names if n))
    alphabet = tuple(sorted({c for n in deduped for c in n}))
    return Crib(names=deduped, alphabet=alphabet, index=frozenset(deduped))
