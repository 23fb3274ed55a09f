"""Shared test data: a synthetic known-key recovery instance.

The instance pairs a 500-name crib over a 19-letter alphabet with a
50-name cipher corpus enciphered from crib members by a random bijective
substitution. The enciphering key is the oracle: its inverse chromosome
scores the maximum possible fitness (the corpus's total type characters).

Corpus composition matters for solvability at the fixed reference GA
parameters. Each letter gets two repeated-letter probe names (lengths
2..39, all distinct), so a probe decodes into the crib iff its single
letter's gene is exactly right: every gene's correctness is individually
rewarded and the true key is the unique global optimum. The remaining 12
names are consonant-vowel bigrams, and the crib is padded with
consonant-vowel filler names.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from evocrib import CipherCorpus, Chromosome, Crib, load_corpus
from evocrib.crib import _build as build_crib

CONSONANTS = "bcdfghjklmnprst"
VOWELS = "aeio"
LETTERS = sorted(CONSONANTS + VOWELS)

CRIB_SIZE = 500
CORPUS_SIZE = 50


@dataclass(frozen=True)
class SynthInstance:
    corpus: CipherCorpus
    crib: Crib
    key: dict[str, str]            # plaintext letter -> cipher symbol
    oracle: Chromosome             # cipher symbol -> plaintext letter
    plaintexts: tuple[str, ...]
    max_fitness: int


def make_instance(seed: int = 0) -> SynthInstance:
    rng = random.Random(f"synth:{seed}")

    probe_order = list(LETTERS)
    rng.shuffle(probe_order)
    probes = [x * (i + 2) for i, x in enumerate(probe_order)]
    probes += [x * (i + 2 + len(LETTERS)) for i, x in enumerate(probe_order)]

    cv = [c + v for c in CONSONANTS for v in VOWELS]
    cv_shuffled = cv[:]
    rng.shuffle(cv_shuffled)
    plaintexts = probes + cv_shuffled[: CORPUS_SIZE - len(probes)]

    generic = [a + b for a in cv for b in cv if a[0] != b[0]]
    rng.shuffle(generic)
    names = list(dict.fromkeys(plaintexts + cv + generic))[:CRIB_SIZE]
    crib = build_crib(names)
    assert len(crib.names) == CRIB_SIZE
    assert all(p in crib.index for p in plaintexts)

    cipher_symbols = list(LETTERS)
    rng.shuffle(cipher_symbols)
    key = dict(zip(LETTERS, cipher_symbols))
    corpus = load_corpus("\n".join("".join(key[c] for c in p) for p in plaintexts))
    assert len(corpus.alphabet) == len(LETTERS)

    inverse = {v: k for k, v in key.items()}
    oracle = Chromosome(
        alphabet=tuple(sorted(inverse)),
        genes=tuple(inverse[s] for s in sorted(inverse)),
    )
    return SynthInstance(
        corpus=corpus,
        crib=crib,
        key=key,
        oracle=oracle,
        plaintexts=tuple(plaintexts),
        max_fitness=corpus.total_type_chars,
    )


def render_instance_files(inst: SynthInstance, directory) -> tuple[str, str]:
    """Write cipher and crib files for CLI-level tests; returns their paths."""
    cipher_path = directory / "cipher.txt"
    crib_path = directory / "crib.txt"
    cipher_path.write_text("\n".join(inst.corpus.tokens) + "\n", encoding="utf-8")
    crib_path.write_text("\n".join(inst.crib.names) + "\n", encoding="utf-8")
    return str(cipher_path), str(crib_path)


EVA_SYMBOLS = "acdefghiklmnopqrsty"


def make_calendar_like() -> str:
    """A corpus file with 290 tokens, 264 types, 2045 type characters and a
    19-symbol alphabet: distinct base-19 encodings, 67 of length 7 and 197
    of length 8 (67*7 + 197*8 = 2045), with the first 26 types repeated."""
    words = []
    for i in range(264):
        length = 7 if i < 67 else 8
        digits = []
        x = i
        for _ in range(length):
            digits.append(EVA_SYMBOLS[x % 19])
            x //= 19
        words.append("".join(digits))
    tokens = words + words[:26]
    return "\n".join(tokens) + "\n"
