from __future__ import annotations

import pytest

from colorbraid.braid import (B, D, BraidWord, artin_apply, chi, delta4, descending, gen, parse_word, word,
                              words_equal)


def test_delta4_word():
    n = 6
    v = BraidWord(n, tuple((i, 1) for i in (3, 2, 1, 1, 2, 3, 3, 2, 1)))
    d4 = delta4(n)
    assert len(d4) == 19
    assert d4 == v.inverse() * gen(n, 4) * v


def test_chi_and_d():
    n = 10
    assert chi(2, n) == BraidWord(n, tuple((i, 1) for i in (7, 6, 5, 4, 4, 5, 6, 7)))
    x = chi(2, n)
    assert D(2, n) == gen(n, 8) * x * gen(n, 8, -1) * x.inverse()
    assert words_equal(B(2, n) * B(2, n).inverse(), BraidWord(n))


def test_artin_apply():
    assert artin_apply(gen(3, 0), (1,)) == (1, 2, -1)
    assert artin_apply(gen(3, 0), (1, 2)) == (1, 2)
    assert artin_apply(gen(3, 0) * gen(3, 0, -1), (2, -3, 1)) == (2, -3, 1)


def test_relations():
    assert words_equal(word(5, 1, 3), word(5, 3, 1))
    assert words_equal(word(3, 0, 1, 0), word(3, 1, 0, 1))
    assert not words_equal(word(3, 0, 1), word(3, 1, 0))


def test_conjugation_example_at_ten():
    n = 10
    w = descending(n, 7, 2) * descending(n, 8, 3)
    assert words_equal(w * gen(n, 2) * w.inverse(), gen(n, 8))
    assert not words_equal(w.inverse() * gen(n, 2) * w, gen(n, 8))


def test_parse():
    n = 8
    assert parse_word("b1^3", n) == gen(n, 1, 3)
    assert parse_word("[b3] b4^-1", n) == gen(n, 3).conj(gen(n, 4, -1))
    assert parse_word("d4", n) == delta4(n)
    assert parse_word("(b2 b3)^2", n) == word(n, 2, 3, 2, 3)
    with pytest.raises(ValueError):
        parse_word("b9", n)
    with pytest.raises(ValueError):
        parse_word("b1 ^", n)


def test_index_bounds():
    with pytest.raises(ValueError):
        gen(4, 3)
    with pytest.raises(ValueError):
        delta4(5)
