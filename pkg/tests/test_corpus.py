import pytest
from hypothesis import given
from hypothesis import strategies as st

from evocrib import (
    MalformedInputError,
    corpus_stats,
    load_corpus,
    render_corpus,
    reverse_corpus,
)
from helpers import make_calendar_like

tokens_strategy = st.lists(
    st.text(alphabet="abcdefgkoy", min_size=1, max_size=9), min_size=0, max_size=40
)


def test_load_basic_dedup():
    c = load_corpus("abc\nabc\nabd\n")
    assert c.tokens == ("abc", "abc", "abd")
    assert c.types == ("abc", "abd")
    assert c.alphabet == ("a", "b", "c", "d")
    assert c.total_type_chars == 6


def test_load_empty():
    c = load_corpus("")
    assert c.tokens == ()
    assert c.types == ()
    assert c.alphabet == ()
    assert c.total_type_chars == 0


def test_load_trims_lowercases_and_skips_comments():
    c = load_corpus("# header\n  OKedy  \n\n#x\notedy\n")
    assert c.tokens == ("okedy", "otedy")


def test_load_rejects_interior_whitespace_with_line_number():
    with pytest.raises(MalformedInputError) as exc:
        load_corpus("okedy\nbad token\n")
    assert exc.value.line_no == 2
    assert "line 2" in str(exc.value)


def test_calendar_scale_counts():
    c = load_corpus(make_calendar_like())
    s = corpus_stats(c)
    assert (s.token_count, s.type_count, s.total_type_chars, s.alphabet_size) == (
        290,
        264,
        2045,
        19,
    )
    assert "".join(s.alphabet) == "acdefghiklmnopqrsty"


def test_reverse_examples():
    c = load_corpus("okedy\notedy\n")
    r = reverse_corpus(c)
    assert r.tokens == ("ydeko", "ydeto")
    assert r.types == ("ydeko", "ydeto")
    assert r.alphabet == c.alphabet
    assert r.total_type_chars == c.total_type_chars


def test_reverse_palindrome_fixed_point():
    c = load_corpus("aba\n")
    assert reverse_corpus(c) == c


@given(tokens_strategy)
def test_reverse_is_an_involution(tokens):
    c = load_corpus("\n".join(tokens))
    assert reverse_corpus(reverse_corpus(c)) == c


@given(tokens_strategy)
def test_render_load_round_trip(tokens):
    c = load_corpus("\n".join(tokens))
    assert load_corpus(render_corpus(c)) == c


@given(tokens_strategy)
def test_alphabet_closure_and_type_chars(tokens):
    c = load_corpus("\n".join(tokens))
    alphabet = set(c.alphabet)
    assert all(set(w) <= alphabet for w in c.types)
    assert c.total_type_chars == sum(len(w) for w in dict.fromkeys(c.tokens))
    assert len(c.types) <= len(c.tokens)
    assert len(set(c.types)) == len(c.types)


def test_stats_small_and_empty():
    s = corpus_stats(load_corpus("abc\nabc\n"))
    assert (s.token_count, s.type_count, s.total_type_chars, s.alphabet_size) == (2, 1, 3, 3)
    z = corpus_stats(load_corpus(""))
    assert (z.token_count, z.type_count, z.total_type_chars, z.alphabet_size) == (0, 0, 0, 0)
