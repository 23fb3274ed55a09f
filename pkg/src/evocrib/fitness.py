"""Fitness of a substitution alphabet against a corpus and a crib.

The score is the sum of cipher-side character lengths over distinct corpus
types whose transcription is a crib member. Duplicate tokens never count
twice; the value is bounded by the corpus's total type characters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import CipherCorpus
from .crib import Crib
from .mapping import Chromosome


@dataclass(frozen=True)
class MatchReport:
    """The matched (cipher type, transcription) pairs behind a fitness value.

    Pairs appear in corpus type order. ``fitness`` equals the sum of
    cipher-type lengths over the pairs.
    """

    pairs: tuple[tuple[str, str], ...]
    fitness: int

    @property
    def matched_type_count(self) -> int:
        return len(self.pairs)

    @property
    def distinct_transcription_count(self) -> int:
        """Distinct crib members hit; can be below ``matched_type_count``
        when several cipher types transcribe to the same name."""
        return len({t for _, t in self.pairs})

    def to_tsv(self) -> str:
        return "".join(f"{w}\t{t}\n" for w, t in self.pairs)


def evaluate(ch: Chromosome, corpus: CipherCorpus, crib: Crib) -> int:
    """Sum of ``len(w)`` over distinct types ``w`` transcribing into the crib.

    Evaluation is pure: a population may be scored in parallel with
    results identical to sequential scoring.
    """
    _check_alphabet(ch, corpus)
    table = ch.translation_table
    members = crib.index
    return sum(len(w) for w in corpus.types if w.translate(table) in members)


def match_report(ch: Chromosome, corpus: CipherCorpus, crib: Crib) -> MatchReport:
    """List every matched type with its transcription, in corpus type order."""
    _check_alphabet(ch, corpus)
    table = ch.translation_table
    members = crib.index
    pairs = []
    total = 0
    for w in corpus.types:
        transcription = w.translate(table)
        if transcription in members:
            pairs.append((w, transcription))
            total += len(w)
    return MatchReport(pairs=tuple(pairs), fitness=total)


def _check_alphabet(ch: Chromosome, corpus: CipherCorpus) -> None:
    if not corpus.symbol_set <= ch.symbol_set:
        missing = "".join(sorted(corpus.symbol_set - ch.symbol_set))
        raise ValueError(f"corpus symbols {missing!r} missing from the chromosome alphabet")
