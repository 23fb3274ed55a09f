import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evocrib import (
    Chromosome,
    GenePolicy,
    default_length_weights,
    discrete_crossover,
    format_chromosome,
    mutate,
    parse_chromosome,
    random_chromosome,
)

REF_240 = "a=i;c=k;d=t;e=n;f=a;g=k;h=f;i=l;k=k;l=l;m=m;n=e;o=a;p=j;q=g;r=r;s=i;t=n;y=a"


def _chromosome(mapping):
    alphabet = tuple(sorted(mapping))
    return Chromosome(alphabet, tuple(mapping[s] for s in alphabet))


# ------------------------------------------------------------- gene policy


def test_default_length_weights():
    assert default_length_weights(1) == {1: 1.0}
    assert default_length_weights(2) == {0: 0.1, 1: 0.8, 2: 0.1}
    w4 = default_length_weights(4)
    assert set(w4) == {0, 1, 2, 3, 4}
    assert math.isclose(sum(w4.values()), 1.0)


def test_policy_validation():
    with pytest.raises(ValueError):
        GenePolicy(g_max=0)
    with pytest.raises(ValueError):
        GenePolicy(g_max=1, length_weights={1: 0.5})
    with pytest.raises(ValueError):
        GenePolicy(g_max=1, length_weights={2: 1.0})
    with pytest.raises(ValueError):
        GenePolicy(g_max=2, length_weights={0: -0.1, 1: 1.1})
    GenePolicy(g_max=2, length_weights={0: 0.5, 2: 0.5})


# ------------------------------------------------------- random chromosome


def test_random_chromosome_is_seed_deterministic():
    policy = GenePolicy(g_max=2)
    a_cipher, a_crib = tuple("dekoty"), tuple("abcdefgh")
    first = random_chromosome(random.Random(33), policy, a_cipher, a_crib)
    second = random_chromosome(random.Random(33), policy, a_cipher, a_crib)
    assert first == second


def test_random_chromosome_single_length_policy():
    ch = random_chromosome(
        random.Random(1), GenePolicy(g_max=1), tuple("abc"), tuple("xyz")
    )
    assert all(len(g) == 1 for g in ch.genes)


def test_random_chromosome_rejects_empty_alphabets():
    with pytest.raises(ValueError):
        random_chromosome(random.Random(1), GenePolicy(), (), tuple("ab"))
    with pytest.raises(ValueError):
        random_chromosome(random.Random(1), GenePolicy(), tuple("ab"), ())


def test_gene_characters_are_uniform_over_38_symbols():
    # 10000 single-symbol genes; each symbol count within 3 sigma of n/38,
    # and the chi-square statistic under its df=37 99.9th percentile.
    crib_symbols = tuple(chr(ord("a") + i) for i in range(26)) + tuple(
        chr(ord("0") + i) for i in range(10)
    ) + ("#", "@")
    assert len(crib_symbols) == 38
    rng = random.Random(7)
    policy = GenePolicy(g_max=1)
    n = 10000
    counts = {s: 0 for s in crib_symbols}
    for _ in range(n):
        counts[policy.random_gene(rng, crib_symbols)] += 1
    p = 1 / 38
    sigma = math.sqrt(n * p * (1 - p))
    assert all(abs(count - n * p) <= 3 * sigma for count in counts.values())
    chi2 = sum((count - n * p) ** 2 / (n * p) for count in counts.values())
    assert chi2 < 69.5


# ------------------------------------------------------------------- apply


def test_apply_reference_elite_to_reversed_token():
    ch = parse_chromosome(REF_240)
    assert ch.apply("ydeko") == "atnka"


def test_apply_identity_mapping():
    alphabet = tuple("abcde")
    ch = Chromosome(alphabet, alphabet)
    assert ch.apply("dead") == "dead"


def test_apply_reversed_hebrew_style_pair():
    ch = _chromosome({"m": "b", "a": "i", "k": "n", "o": "a"})
    assert ch.apply("mako") == "bina"


def test_apply_multicharacter_and_empty_genes():
    ch = _chromosome({"k": "in", "o": "a", "y": "g", "d": ""})
    assert ch.apply("yko") == "gina"
    assert ch.apply("dyko") == "gina"


def test_apply_rejects_unknown_symbol():
    ch = _chromosome({"a": "x"})
    with pytest.raises(ValueError):
        ch.apply("ab")


@given(
    st.text(alphabet="abc", max_size=8),
    st.text(alphabet="abc", max_size=8),
)
def test_apply_is_a_concatenation_homomorphism(u, v):
    ch = _chromosome({"a": "xy", "b": "", "c": "z"})
    assert ch.apply(u + v) == ch.apply(u) + ch.apply(v)
    assert len(ch.apply(u)) <= 2 * len(u)


# ------------------------------------------------------------------ mutate


def test_mutate_rate_zero_is_identity():
    ch = _chromosome({"a": "x", "b": "y"})
    assert mutate(ch, 0.0, random.Random(5), GenePolicy(), tuple("xy")) == ch


def test_mutate_rate_one_resamples_every_gene():
    ch = _chromosome({"a": "q", "b": "q", "c": "q"})
    out = mutate(ch, 1.0, random.Random(5), GenePolicy(), tuple("xy"))
    assert all(g in ("x", "y") for g in out.genes)


def test_mutate_rejects_bad_rate():
    ch = _chromosome({"a": "x"})
    with pytest.raises(ValueError):
        mutate(ch, 1.5, random.Random(1), GenePolicy(), tuple("xy"))


# ---------------------------------------------------------------- crossover


def test_crossover_of_equal_parents_is_identity():
    p = _chromosome({"a": "x", "b": "y", "c": "z"})
    assert discrete_crossover(p, p, random.Random(3)) == p


def test_crossover_preserves_agreement_and_alleles():
    p1 = _chromosome({"a": "i", "b": "k", "c": "t"})
    p2 = _chromosome({"a": "i", "b": "s", "c": "t"})
    rng = random.Random(17)
    picked_s = 0
    trials = 10000
    for _ in range(trials):
        child = discrete_crossover(p1, p2, rng)
        assert child.genes[0] == "i" and child.genes[2] == "t"
        assert child.genes[1] in ("k", "s")
        picked_s += child.genes[1] == "s"
    sigma = math.sqrt(trials * 0.25)
    assert abs(picked_s - trials / 2) <= 3 * sigma


@given(
    st.lists(st.sampled_from("uvwxyz"), min_size=4, max_size=4),
    st.lists(st.sampled_from("uvwxyz"), min_size=4, max_size=4),
    st.integers(min_value=0, max_value=10_000),
)
def test_crossover_closure(genes1, genes2, seed):
    alphabet = tuple("abcd")
    p1 = Chromosome(alphabet, tuple(genes1))
    p2 = Chromosome(alphabet, tuple(genes2))
    child = discrete_crossover(p1, p2, random.Random(seed))
    assert all(c in (g1, g2) for c, g1, g2 in zip(child.genes, p1.genes, p2.genes))


def test_crossover_rejects_mismatched_alphabets():
    p1 = _chromosome({"a": "x"})
    p2 = _chromosome({"b": "x"})
    with pytest.raises(ValueError):
        discrete_crossover(p1, p2, random.Random(1))


# ------------------------------------------------------------ serialization


def test_format_parse_round_trip_with_empty_genes():
    ch = _chromosome({"a": "", "b": "xy", "c": "z"})
    line = format_chromosome(ch)
    assert line == "a=;b=xy;c=z"
    assert parse_chromosome(line) == ch


def test_parse_rejects_malformed_lines():
    from evocrib import MalformedInputError

    with pytest.raises(MalformedInputError):
        parse_chromosome("a-i;b=k")
    with pytest.raises(MalformedInputError):
        parse_chromosome("ab=i")
    with pytest.raises(MalformedInputError):
        parse_chromosome("a=i;a=k")


def test_reference_elites_fixture_integrity(reversal_elites):
    assert all(len(ch.genes) == 19 for ch in reversal_elites)
    assert all(ch.alphabet == tuple("acdefghiklmnopqrsty") for ch in reversal_elites)
    assert reversal_elites[4] == parse_chromosome(REF_240)


def test_chromosome_validation():
    with pytest.raises(ValueError):
        Chromosome(("b", "a"), ("x", "y"))
    with pytest.raises(ValueError):
        Chromosome(("a", "a"), ("x", "y"))
    with pytest.raises(ValueError):
        Chromosome(("a",), ("x", "y"))
    with pytest.raises(ValueError):
        Chromosome(("ab",), ("x",))
