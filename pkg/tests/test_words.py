import pytest
from hypothesis import given, strategies as st

from freegrp.words import (
    RankMismatchError,
    Word,
    WordParseError,
    all_reduced_words,
    concat,
    cyclic_reduce,
    empty_word,
    free_reduce,
    graphically_equal,
    invert,
    parse_word,
    render_word,
)


def w(text, rank=3):
    return parse_word(text, rank)


letters = st.integers(min_value=1, max_value=3).flatmap(
    lambda i: st.sampled_from([i, -i])
)
words = st.lists(letters, max_size=12).map(lambda ls: Word(tuple(ls), 3))


class TestFreeReduce:
    def test_inverse_pair_cancels(self):
        v = parse_word("aA", 1)
        assert len(v) == 2
        assert free_reduce(v) == empty_word(1)
        assert v.reduced_length == 0

    def test_empty(self):
        assert free_reduce(empty_word(2)) == empty_word(2)

    def test_inner_cancellation(self):
        assert free_reduce(w("aBbc")) == w("ac")

    @given(words)
    def test_idempotent(self, v):
        assert free_reduce(free_reduce(v)) == free_reduce(v)

    def test_idempotent_exhaustive_short(self):
        # all words (reduced or not) up to length 4 over rank 2
        alphabet = [1, -1, 2, -2]
        level = [()]
        for _ in range(4):
            level = [t + (x,) for t in level for x in alphabet]
            for t in level:
                v = Word(t, 2)
                assert free_reduce(free_reduce(v)) == free_reduce(v)

    @given(words)
    def test_length_parity(self, v):
        assert (len(v) - v.reduced_length) % 2 == 0


class TestConcat:
    def test_inverse_pair(self):
        assert concat(w("a"), w("A")) == empty_word(3)

    def test_partial_cancellation(self):
        assert concat(w("ab"), w("Bc")) == w("ac")

    def test_identity_element(self):
        assert concat(empty_word(3), w("abA")) == free_reduce(w("abA"))

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            concat(parse_word("a", 2), parse_word("a", 3))

    @given(words, words, words)
    def test_associative(self, u, v, t):
        assert concat(concat(u, v), t) == concat(u, concat(v, t))

    @given(words, words)
    def test_length_bounds(self, u, v):
        n = concat(u, v).reduced_length
        assert abs(u.reduced_length - v.reduced_length) <= n
        assert n <= u.reduced_length + v.reduced_length


class TestInvert:
    def test_reverses_and_flips(self):
        assert invert(w("ab")) == w("BA")

    def test_empty(self):
        assert invert(empty_word(3)) == empty_word(3)

    def test_single_inverse_letter(self):
        assert invert(w("A")) == w("a")

    @given(words, words)
    def test_anti_homomorphism(self, u, v):
        assert invert(concat(u, v)) == concat(invert(v), invert(u))

    @given(words)
    def test_self_inverse(self, v):
        assert concat(v, invert(v)) == empty_word(3)


class TestCyclicReduce:
    def test_conjugate(self):
        dec = cyclic_reduce(w("abA"))
        assert dec.conjugator == w("a")
        assert dec.core == w("b")

    def test_already_cyclically_reduced(self):
        dec = cyclic_reduce(w("bc"))
        assert dec.conjugator == empty_word(3)
        assert dec.core == w("bc")

    def test_core_longer_than_one(self):
        dec = cyclic_reduce(w("abbA"))
        assert dec.conjugator == w("a")
        assert dec.core == w("bb")

    @given(words)
    def test_round_trip(self, v):
        dec = cyclic_reduce(v)
        assert concat(dec.conjugator, concat(dec.core, invert(dec.conjugator))) == free_reduce(v)

    @given(words)
    def test_core_cyclically_reduced(self, v):
        assert cyclic_reduce(v).core.is_cyclically_reduced


class TestGraphicalEquality:
    def test_unreduced_vs_empty(self):
        # equality in the group but not letter-by-letter
        assert not graphically_equal(parse_word("aA", 1), empty_word(1))

    def test_same_sequence(self):
        assert graphically_equal(w("ab"), w("ab"))

    def test_different_order(self):
        assert not graphically_equal(w("ab"), w("ba"))


class TestParseRender:
    def test_parse_keeps_raw_letters(self):
        v = parse_word("aA", 1)
        assert v.letters == (1, -1)

    def test_empty_word_form(self):
        assert parse_word("1", 3) == empty_word(3)
        assert render_word(empty_word(3)) == "1"

    def test_mixed_case(self):
        assert parse_word("abC", 3).letters == (1, 2, -3)

    def test_unknown_symbol(self):
        with pytest.raises(WordParseError):
            parse_word("a1b", 3)

    def test_symbol_beyond_rank(self):
        with pytest.raises(WordParseError):
            parse_word("c", 2)

    @given(words)
    def test_round_trip(self, v):
        assert parse_word(render_word(v), 3) == v


class TestWordInvariants:
    def test_letter_out_of_range(self):
        with pytest.raises(ValueError):
            Word((4,), 3)
        with pytest.raises(ValueError):
            Word((0,), 3)

    def test_bad_rank(self):
        with pytest.raises(ValueError):
            Word((), 0)

    def test_all_reduced_words_count(self):
        # rank 2: 1 + 4 + 4*3 + 4*3*3 words of length <= 3
        assert sum(1 for _ in all_reduced_words(2, 3)) == 1 + 4 + 12 + 36

    def test_all_reduced_words_are_reduced(self):
        assert all(v.is_reduced for v in all_reduced_words(2, 4))
