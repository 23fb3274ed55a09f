"""Evolutionary plausible-plaintext attacks on monoalphabetic substitution ciphers.

evocrib evolves candidate substitution alphabets that map a cipher token
corpus (for example EVA-transliterated manuscript labels) onto a crib
wordlist (for example historical name lists), scoring candidates by the
total cipher-character length of corpus types that decode to crib members.
"""

from .corpus import CipherCorpus, StatsReport, corpus_stats, load_corpus, render_corpus, reverse_corpus
from .crib import Crib, RewriteRule, contains, expand_crib, load_crib
from .errors import EvocribError, InvalidParamsError, MalformedInputError
from .evolution import (
    EvolutionParams,
    GenerationRecord,
    RunResult,
    RunTrace,
    ScoredChromosome,
    roulette_select,
    run,
    run_batch,
    step_generation,
)
from .fitness import MatchReport, evaluate, match_report
from .mapping import (
    Chromosome,
    GenePolicy,
    default_length_weights,
    discrete_crossover,
    format_chromosome,
    mutate,
    parse_chromosome,
    random_chromosome,
)
from .stats import (
    BatchComparison,
    ConsensusTable,
    ConvergenceRow,
    compare_batches,
    consensus,
    convergence_csv,
    convergence_table,
)

__version__ = "0.1.0"

__all__ = [
    "BatchComparison",
    "Chromosome",
    "CipherCorpus",
    "ConsensusTable",
    "ConvergenceRow",
    "Crib",
    "EvocribError",
    "EvolutionParams",
    "GenePolicy",
    "GenerationRecord",
    "InvalidParamsError",
    "MalformedInputError",
    "MatchReport",
    "RewriteRule",
    "RunResult",
    "RunTrace",
    "ScoredChromosome",
    "StatsReport",
    "compare_batches",
    "consensus",
    "contains",
    "convergence_csv",
    "convergence_table",
    "corpus_stats",
    "default_length_weights",
    "discrete_crossover",
    "evaluate",
    "expand_crib",
    "format_chromosome",
    "load_corpus",
    "load_crib",
    "match_report",
    "mutate",
    "parse_chromosome",
    "random_chromosome",
    "render_corpus",
    "reverse_corpus",
    "roulette_select",
    "run",
    "run_batch",
    "step_generation",
]
