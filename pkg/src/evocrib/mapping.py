"""Candidate substitution alphabets (GA individuals) and their operators.

A chromosome carries one gene per cipher symbol, in sorted cipher-alphabet
order. Each gene is a string of 0..g_max crib symbols: a single-character
gene is a classical monoalphabetic substitution, an empty gene deletes its
symbol, and longer genes let one cipher symbol expand to several plaintext
characters. With g_max=1 and all weights on length 1 the search space is
|A_crib| ** |A_cipher|.

All operators take an explicit ``random.Random`` and consume only its
``random()`` method, so any seeded stream reproduces bit-identical results
across platforms.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import MalformedInputError


def default_length_weights(g_max: int) -> dict[int, float]:
    """Default gene-length distribution for a given maximum length.

    g_max=1 pins every gene to exactly one symbol. g_max=2 allows
    deletions and digraphs at low rate (0.1 / 0.8 / 0.1). Larger maxima
    keep the 0.1 / 0.8 split and spread the remaining 0.1 over lengths
    2..g_max.
    """
    if g_max == 1:
        return {1: 1.0}
    if g_max == 2:
        return {0: 0.1, 1: 0.8, 2: 0.1}
    tail = 0.1 / (g_max - 1)
    weights = {0: 0.1, 1: 0.8}
    weights.update({n: tail for n in range(2, g_max + 1)})
    return weights


@dataclass(frozen=True)
class GenePolicy:
    """Gene-length policy used at initialization and mutation.

    ``length_weights`` maps gene length to sampling probability; weights
    must cover only lengths 0..g_max and sum to 1.
    """

    g_max: int = 1
    length_weights: tuple[tuple[int, float], ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.g_max < 1:
            raise ValueError("g_max must be at least 1")
        weights = self.length_weights
        if weights is None:
            weights = default_length_weights(self.g_max)
        if isinstance(weights, Mapping):
            weights = tuple(sorted(weights.items()))
        else:
            weights = tuple(sorted(weights))
        object.__setattr__(self, "length_weights", weights)
        if not weights:
            raise ValueError("length_weights must be nonempty")
        total = 0.0
        for length, w in weights:
            if not 0 <= length <= self.g_max:
                raise ValueError(f"gene length {length} outside 0..{self.g_max}")
            if w < 0:
                raise ValueError("length weights must be non-negative")
            total += w
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"length weights sum to {total}, expected 1")

    @cached_property
    def _length_cdf(self) -> tuple[tuple[int, ...], tuple[float, ...]]:
        lengths = tuple(length for length, _ in self.length_weights)
        cdf = []
        acc = 0.0
        for _, w in self.length_weights:
            acc += w
            cdf.append(acc)
        return lengths, tuple(cdf)

    def sample_length(self, rng: random.Random) -> int:
        lengths, cdf = self._length_cdf
        i = bisect_right(cdf, rng.random() * cdf[-1])
        return lengths[min(i, len(lengths) - 1)]

    def random_gene(self, rng: random.Random, crib_symbols: Sequence[str]) -> str:
        n = len(crib_symbols)
        length = self.sample_length(rng)
        return "".join(crib_symbols[min(int(rng.random() * n), n - 1)] for _ in range(length))


@dataclass(frozen=True)
class Chromosome:
    """A candidate substitution alphabet: one gene per cipher symbol.

    ``alphabet`` is the sorted cipher alphabet; ``genes[i]`` is the string
    substituted for ``alphabet[i]``. Instances are immutable values.
    """

    alphabet: tuple[str, ...]
    genes: tuple[str, ...]

    def __post_init__(self):
        if len(self.alphabet) != len(self.genes):
            raise ValueError(
                f"{len(self.genes)} genes for {len(self.alphabet)} cipher symbols"
            )
        if any(len(s) != 1 for s in self.alphabet):
            raise ValueError("cipher symbols must be single characters")
        if any(self.alphabet[i] >= self.alphabet[i + 1] for i in range(len(self.alphabet) - 1)):
            raise ValueError("cipher alphabet must be sorted and duplicate-free")

    @cached_property
    def translation_table(self) -> dict[int, str]:
        return str.maketrans(dict(zip(self.alphabet, self.genes)))

    @cached_property
    def symbol_set(self) -> frozenset[str]:
        return frozenset(self.alphabet)

    def gene_for(self, symbol: str) -> str:
        return self.genes[self.alphabet.index(symbol)]

    def apply(self, token: str) -> str:
        """Transcribe a cipher token by concatenating its symbols' genes.

        Every character of the token must belong to this chromosome's
        cipher alphabet.
        """
        if not self.symbol_set.issuperset(token):
            bad = next(c for c in token if c not in self.symbol_set)
            raise ValueError(f"token character {bad!r} is not in the cipher alphabet")
        return token.translate(self.translation_table)


def random_chromosome(
    rng: random.Random,
    policy: GenePolicy,
    a_cipher: Iterable[str],
    a_crib: Sequence[str],
) -> Chromosome:
    """Draw a chromosome with i.i.d. genes.

    Gene lengths follow the policy's length weights; gene characters are
    uniform over ``a_crib`` (in the order given, which callers should keep
    sorted for reproducibility).
    """
    alphabet = tuple(sorted(a_cipher))
    if not alphabet:
        raise ValueError("cipher alphabet is empty")
    if not a_crib:
        raise ValueError("crib alphabet is empty")
    return Chromosome(alphabet, tuple(policy.random_gene(rng, a_crib) for _ in alphabet))


def mutate(
    ch: Chromosome,
    rate: float,
    rng: random.Random,
    policy: GenePolicy,
    a_crib: Sequence[str],
) -> Chromosome:
    """Resample each gene independently with probability ``rate``."""
    if not 0 <= rate <= 1:
        raise ValueError(f"mutation rate {rate} outside [0, 1]")
    genes = tuple(
        policy.random_gene(rng, a_crib) if rng.random() < rate else g for g in ch.genes
    )
    return Chromosome(ch.alphabet, genes)


def discrete_crossover(p1: Chromosome, p2: Chromosome, rng: random.Random) -> Chromosome:
    """Recombine two parents gene-by-gene.

    Where the parents agree the child inherits the shared allele; where
    they differ a fair coin picks one parent's allele, independently per
    gene. Children never carry alleles absent from both parents.
    """
    if p1.alphabet != p2.alphabet:
        raise ValueError("parents are defined over different cipher alphabets")
    genes = tuple(
        g1 if g1 == g2 else (g1 if rng.random() < 0.5 else g2)
        for g1, g2 in zip(p1.genes, p2.genes)
    )
    return Chromosome(p1.alphabet, genes)


def format_chromosome(ch: Chromosome) -> str:
    """Render as ``SYMBOL=GENE`` pairs joined by ``;`` (empty gene allowed).

    Genes containing ``;`` would not round-trip; crib alphabets are
    expected not to include it.
    """
    return ";".join(f"{s}={g}" for s, g in zip(ch.alphabet, ch.genes))


def parse_chromosome(text: str) -> Chromosome:
    """Parse the :func:`format_chromosome` form back into a chromosome."""
    mapping: dict[str, str] = {}
    for part in text.strip().split(";"):
        if "=" not in part:
            raise MalformedInputError(f"chromosome field {part!r} lacks '='")
        symbol, gene = part.split("=", 1)
        if len(symbol) != 1:
            raise MalformedInputError(f"cipher symbol {symbol!r} is not a single character")
        if symbol in mapping:
            raise MalformedInputError(f"duplicate cipher symbol {symbol!r}")
        mapping[symbol] = gene
    alphabet = tuple(sorted(mapping))
    return Chromosome(alphabet, tuple(mapping[s] for s in alphabet))
