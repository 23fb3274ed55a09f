"""Cipher corpus ingestion: tokens, types, alphabet, and the reversal transform.

A corpus file is UTF-8 text with one cipher token per line. Lines are
trimmed and lowercased; blank lines and ``#`` comments are skipped. Tokens
are kept in file order with duplicates; word types are the deduplicated
tokens in first-occurrence order. ``total_type_chars`` counts characters
over the deduplicated types only (a per-token total would differ for any
corpus with repeated tokens).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import MalformedInputError


@dataclass(frozen=True)
class CipherCorpus:
    """An ordered cipher token list with derived types and alphabet.

    Immutable after construction; safe to share across parallel evaluators.
    """

    tokens: tuple[str, ...]
    types: tuple[str, ...]
    alphabet: tuple[str, ...]
    total_type_chars: int

    @cached_property
    def symbol_set(self) -> frozenset[str]:
        return frozenset(self.alphabet)


@dataclass(frozen=True)
class StatsReport:
    """Corpus summary counts."""

    token_count: int
    type_count: int
    total_type_chars: int
    alphabet_size: int
    alphabet: tuple[str, ...]


def load_corpus(text: str) -> CipherCorpus:
    """Parse newline-delimited cipher tokens into a :class:`CipherCorpus`.

    Raises :class:`MalformedInputError` when a line still contains
    whitespace after trimming (tokens must be single words).
    """
    tokens: list[str] = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        token = line.lower()
        if any(c.isspace() for c in token):
            raise MalformedInputError(
                f"line {line_no}: token {token!r} contains whitespace", line_no
            )
        tokens.append(token)
    return _from_tokens(tuple(tokens))


def reverse_corpus(corpus: CipherCorpus) -> CipherCorpus:
    """Reverse the character order of every token and type.

    Token order, the alphabet, and all counts are unchanged; applying the
    transform twice restores the original corpus.
    """
    return CipherCorpus(
        tokens=tuple(t[::-1] for t in corpus.tokens),
        types=tuple(w[::-1] for w in corpus.types),
        alphabet=corpus.alphabet,
        total_type_chars=corpus.total_type_chars,
    )


def corpus_stats(corpus: CipherCorpus) -> StatsReport:
    """Summarize token/type/character/alphabet counts."""
    return StatsReport(
        token_count=len(corpus.tokens),
        type_count=len(corpus.types),
        total_type_chars=corpus.total_type_chars,
        alphabet_size=len(corpus.alphabet),
        alphabet=corpus.alphabet,
    )


def render_corpus(corpus: CipherCorpus) -> str:
    """Serialize tokens back to the one-token-per-line file format."""
    if not corpus.tokens:
        return ""
    return "\n".join(corpus.tokens) + "\n"


def _from_tokens(tokens: tuple[str, ...]) -> CipherCorpus:
    types = tuple(dict.fromkeys(tokens))
    alphabet = tuple(sorted({c for w in types for c in w}))
    return CipherCorpus(
        tokens=tokens,
        types=types,
        alphabet=alphabet,
        total_type_chars=sum(len(w) for w in types),
    )
