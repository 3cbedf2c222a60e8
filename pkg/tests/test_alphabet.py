import pytest
from hypothesis import given, strategies as st

from dupcodes import Alphabet, complement, reverse, reverse_complement, word
from dupcodes.errors import DuplicationError, InvalidLetter, NoComplement


def words(q, max_size=20):
    return st.lists(st.integers(0, q - 1), max_size=max_size).map(tuple)


def test_default_complement_pairs_ends(A4):
    assert A4.complement == (3, 2, 1, 0)


def test_complement_examples(A4):
    assert complement(word("32"), A4) == word("01")
    assert complement((), A4) == ()
    # letterwise map {0<->3, 1<->2}, computed independently
    assert complement(word("0110300203"), A4) == word("3223033130")


def test_reverse_examples():
    assert reverse(word("32")) == word("23")
    assert reverse(()) == ()
    assert reverse(word("12321")) == word("12321")


def test_reverse_complement_examples(A4):
    assert reverse_complement(word("32"), A4) == word("10")
    assert reverse_complement((), A4) == ()
    assert reverse_complement(word("1032"), A4) == word("1032")


def test_odd_q_has_no_complement():
    A = Alphabet(3)
    assert not A.has_complement
    with pytest.raises(NoComplement):
        complement(word("012"), A)
    with pytest.raises(NoComplement):
        reverse_complement(word("0"), A)


def test_invalid_letter(A4):
    with pytest.raises(InvalidLetter):
        complement((0, 4), A4)


def test_custom_pairing():
    A = Alphabet.from_pairs(4, "0:1,2:3")
    assert A.complement == (1, 0, 3, 2)
    assert complement(word("0123"), A) == word("1032")


@pytest.mark.parametrize("bad", [(0, 1, 2, 3), (1, 1, 3, 3), (1, 2, 0, 3)])
def test_bad_pairings_rejected(bad):
    with pytest.raises(DuplicationError):
        Alphabet(4, bad)


def test_q_at_least_two():
    with pytest.raises(DuplicationError):
        Alphabet(1)


@given(words(4))
def test_reverse_involution(w):
    assert reverse(reverse(w)) == w


@given(st.sampled_from([2, 4, 6, 8]).flatmap(lambda q: st.tuples(st.just(q), words(q))))
def test_rc_involution_and_commutation(qw):
    q, w = qw
    A = Alphabet(q)
    assert reverse_complement(reverse_complement(w, A), A) == w
    assert reverse(complement(w, A)) == complement(reverse(w), A)
    assert all(A.comp(A.comp(a)) == a and A.comp(a) != a for a in range(q))
