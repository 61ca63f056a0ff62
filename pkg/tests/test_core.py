import itertools

import pytest
from hypothesis import given, strategies as st

from palrich.core import (
    Alphabet,
    Antimorphism,
    InputError,
    Morphism,
    Word,
    antimorphism_from_config,
    apply_antimorphism,
    apply_morphism,
    factor_set,
    gamma,
    is_theta_palindrome,
    occurrences,
)
from conftest import brute_occurrences, random_involution, random_word, w


def test_alphabet_validation():
    with pytest.raises(InputError):
        Alphabet(())
    with pytest.raises(InputError):
        Alphabet(("a", "a"))
    with pytest.raises(InputError):
        Alphabet(("a", "b c"))
    assert len(Alphabet(("x", "[0]", "yy"))) == 3


def test_antimorphism_must_be_involution(ab):
    with pytest.raises(InputError):
        Antimorphism(Alphabet(("a", "b", "c")), (1, 2, 0))  # a 3-cycle
    assert Antimorphism(ab, (1, 0)).image(0) == 1


def test_apply_antimorphism_reversal(ab, tr):
    assert apply_antimorphism(tr, w(ab, "ab")).text == "ba"
    assert apply_antimorphism(tr, w(ab, "")).text == ""


def test_apply_antimorphism_swap(ab, swap):
    # E(ab) = E(b)E(a) = ab
    assert apply_antimorphism(swap, w(ab, "ab")).text == "ab"
    assert apply_antimorphism(swap, w(ab, "")).text == ""


def test_alphabet_mismatch_rejected(tr):
    other = Word.from_text(Alphabet(("x", "y")), "xy")
    with pytest.raises(InputError):
        apply_antimorphism(tr, other)


def test_is_theta_palindrome(ab, tr, swap):
    assert is_theta_palindrome(tr, w(ab, "aba"))
    assert not is_theta_palindrome(swap, w(ab, "a"))
    assert is_theta_palindrome(swap, w(ab, "abab"))


def test_apply_morphism():
    src = Alphabet(("0", "1"))
    tgt = Alphabet(("a", "b"))
    phi = Morphism.from_texts(src, tgt, {"0": "ab", "1": "a"})
    assert apply_morphism(phi, Word.from_text(src, "01")).text == "aba"
    assert apply_morphism(phi, Word.from_text(src, "")).text == ""
    phi2 = Morphism.from_texts(src, tgt, {"0": "aa", "1": ""})
    assert apply_morphism(phi2, Word.from_text(src, "000")).text == "aaaaaa"
    assert phi2.is_erasing


def test_gamma(ab, tr, swap):
    assert gamma(tr, w(ab, "abab")) == 0
    assert gamma(swap, w(ab, "ab")) == 1
    assert gamma(swap, w(ab, "a")) == 1  # one member of the pair suffices
    abcd = Alphabet(("a", "b", "c", "d"))
    th = Antimorphism.from_pairs(abcd, [("a", "b"), ("c", "c"), ("d", "d")])
    assert gamma(th, Word.from_text(abcd, "acd")) == 1


def test_occurrences(ab):
    assert occurrences(w(ab, "abaab"), w(ab, "a")) == [0, 2, 3]
    assert occurrences(w(ab, "aaa"), w(ab, "aa")) == [0, 1]
    abc = Alphabet(("a", "b", "c"))
    assert occurrences(Word.from_text(abc, "abaab"), Word.from_text(abc, "c")) == []
    with pytest.raises(InputError):
        occurrences(w(ab, "ab"), w(ab, ""))


def test_factor_set(ab):
    fs = factor_set(w(ab, "abab"), 2)
    assert {x.text for x in fs} == {"ab", "ba"}
    assert {x.text for x in factor_set(w(ab, "abab"), 0)} == {""}
    assert {x.text for x in factor_set(w(ab, "aaaa"), 3)} == {"aaa"}
    with pytest.raises(InputError):
        factor_set(w(ab, "ab"), 3)


def test_antimorphism_config_roundtrip():
    cfg = {"letters": ["a", "b", "c"], "pairs": [["a", "b"], ["c", "c"]]}
    th = antimorphism_from_config(cfg)
    assert th.pairing == (1, 0, 2)
    with pytest.raises(InputError):
        antimorphism_from_config({"letters": ["a", "b"], "pairs": [["a", "b"], ["a", "a"]]})
    with pytest.raises(InputError):
        antimorphism_from_config({"letters": ["a", "b"], "pairs": [["a", "a"]]})


@given(st.data())
def test_antimorphism_is_involution_on_words(data):
    rng = data.draw(st.randoms(use_true_random=False))
    theta = random_involution(rng, data.draw(st.integers(1, 4)))
    word = random_word(rng, theta, data.draw(st.integers(0, 30)))
    assert apply_antimorphism(theta, apply_antimorphism(theta, word)) == word


@given(st.data())
def test_antimorphism_law_on_splits(data):
    rng = data.draw(st.randoms(use_true_random=False))
    theta = random_involution(rng, data.draw(st.integers(1, 4)))
    u = random_word(rng, theta, data.draw(st.integers(0, 15)))
    v = random_word(rng, theta, data.draw(st.integers(0, 15)))
    lhs = apply_antimorphism(theta, u + v)
    rhs = apply_antimorphism(theta, v) + apply_antimorphism(theta, u)
    assert lhs == rhs


@given(st.data())
def test_theta_w_w_is_palindrome(data):
    rng = data.draw(st.randoms(use_true_random=False))
    theta = random_involution(rng, data.draw(st.integers(1, 3)))
    word = random_word(rng, theta, data.draw(st.integers(0, 12)))
    assert is_theta_palindrome(theta, apply_antimorphism(theta, word) + word)


@given(st.data())
def test_gamma_bound(data):
    rng = data.draw(st.randoms(use_true_random=False))
    theta = random_involution(rng, data.draw(st.integers(1, 6)))
    word = random_word(rng, theta, data.draw(st.integers(0, 40)))
    assert gamma(theta, word) <= len(theta.alphabet) // 2
    assert gamma(Antimorphism.reversal(theta.alphabet), word) == 0


def test_occurrences_exhaustive_small(ab):
    for n in range(0, 8):
        for bits in itertools.product((0, 1), repeat=n):
            word = Word(ab, bits)
            for m in range(1, 4):
                for fbits in itertools.product((0, 1), repeat=m):
                    f = Word(ab, fbits)
                    assert occurrences(word, f) == brute_occurrences(word, f)
