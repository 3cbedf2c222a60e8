import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from dupcodes import (
    PAL,
    RC,
    Alphabet,
    CodeSpec,
    bound_rck,
    capacity,
    construct_pal1,
    construct_rc1,
    decode_pal1,
    decode_rc1,
    random_derivation,
    signature,
    size_pal1,
    size_rc1,
    word,
)
from dupcodes.codes import rate
from dupcodes.errors import DecodeFailure, EmptyWord, OddQ


def _signatures(q, n):
    """Distinct signatures over all q-ary words of length n; brute force."""
    A = Alphabet(q)
    return {signature(w, A) for w in itertools.product(range(q), repeat=n)}


def _roots(q, n):
    return {tuple(a for j, a in enumerate(w) if j == 0 or w[j - 1] != a)
            for w in itertools.product(range(q), repeat=n)}


def test_rc1_small_books():
    assert list(construct_rc1(4, 1)) == [(0,), (1,), (2,), (3,)]
    assert list(construct_rc1(2, 5)) == [word("00000"), word("11111")]
    assert len(construct_rc1(4, 3)) == 28
    with pytest.raises(OddQ):
        construct_rc1(3, 2)


@pytest.mark.parametrize("q, n", [(4, 3), (4, 5), (6, 3)])
def test_rc1_size_matches_signature_count(q, n):
    # every signature of length <= n occurs among words of length n
    assert size_rc1(q, n) == len(_signatures(q, n)) == len(construct_rc1(q, n))


def test_size_rc1_values():
    assert size_rc1(4, 6) == 252
    assert size_rc1(6, 2) == 30
    assert all(size_rc1(2, n) == 2 for n in range(1, 30))
    with pytest.raises(OddQ):
        size_rc1(5, 2)


def test_pal1_books():
    assert set(construct_pal1(2, 3)) == {word(s) for s in ("000", "011", "010", "111", "100", "101")}
    assert size_pal1(2, 3) == 6
    assert size_pal1(3, 2) == 9
    assert list(construct_pal1(2, 1)) == [(0,), (1,)]


@pytest.mark.parametrize("q, n", [(2, 6), (3, 5), (4, 4)])
def test_pal1_size_matches_root_count(q, n):
    assert size_pal1(q, n) == len(_roots(q, n)) == len(construct_pal1(q, n))
    assert size_pal1(q, n) == q * sum((q - 1) ** i for i in range(n))


@pytest.mark.parametrize("make", [lambda: construct_rc1(4, 4), lambda: construct_rc1(6, 3),
                                  lambda: construct_pal1(3, 4)])
def test_rank_unrank_roundtrip(make):
    book = make()
    seen = set()
    for j, c in enumerate(book):
        assert book.rank(c) == j and c in book and len(c) == book.spec.n
        seen.add(c)
    assert len(seen) == len(book)


def test_distinct_signatures_and_roots():
    A = Alphabet(6)
    book = construct_rc1(6, 4)
    assert len({signature(c, A) for c in book}) == len(book)
    book = construct_pal1(3, 5)
    assert len({decode_pal1(c, book.spec) for c in book}) == len(book)


def test_decode_rc1_examples(A4):
    spec = CodeSpec(4, 10)
    assert decode_rc1(word("0110300203"), spec) == word("0102000000")
    for c in construct_rc1(4, 4):
        assert decode_rc1(c, CodeSpec(4, 4)) == c
    assert decode_rc1(word("011010"), CodeSpec(2, 4)) == word("0000")
    with pytest.raises(DecodeFailure):
        decode_rc1(word("0110300203"), CodeSpec(4, 4))
    with pytest.raises(EmptyWord):
        decode_rc1((), spec)


def test_decode_pal1_examples():
    assert decode_pal1(word("00111"), CodeSpec(2, 5, kind=PAL)) == word("01111")
    assert decode_pal1(word("0102"), CodeSpec(3, 4, kind=PAL)) == word("0102")
    assert decode_pal1(word("000"), CodeSpec(2, 3, kind=PAL)) == word("000")


@settings(max_examples=200)
@given(st.integers(0, 10**9), st.integers(0, 12), st.integers(0, 2**31), st.sampled_from([2, 4, 6]))
def test_rc1_roundtrip(idx, t, seed, q):
    A = Alphabet(q)
    book = construct_rc1(q, 6)
    c = book.unrank(idx % len(book))
    z, _ = random_derivation(c, t, 1, RC, seed, A)
    assert book.decode(z) == c


@settings(max_examples=200)
@given(st.integers(0, 10**9), st.integers(0, 12), st.integers(0, 2**31), st.sampled_from([2, 3, 5]))
def test_pal1_roundtrip(idx, t, seed, q):
    book = construct_pal1(q, 6)
    c = book.unrank(idx % len(book))
    z, _ = random_derivation(c, t, 1, PAL, seed, Alphabet(q))
    assert book.decode(z) == c


def test_bound_values():
    assert bound_rck(2, 2) == 682 == 2 * sum(2 ** (2 * l) for l in range(5))
    assert bound_rck(2, 3) == 4 * (2**27 - 1) // 7 == 4 * sum(8**l for l in range(9))
    for q, k in [(2, 2), (2, 3), (4, 2), (4, 3), (6, 2), (3, 2)]:
        kind = PAL if q % 2 else RC
        assert bound_rck(q, k, kind) == q ** (k - 1) * sum(q ** (k * l) for l in range(q**k + 1))
    with pytest.raises(OddQ):
        bound_rck(3, 2, RC)


def test_capacity_table():
    c = capacity(4, 1, RC)
    assert (c.base, c.argument) == (4, 2) and c.value == 0.5 and str(c) == "log_4(2) = 0.5"
    assert capacity(2, 1, PAL).value == 0
    assert str(capacity(2, 1, RC)) == "0"
    assert capacity(6, 1, RC).value == pytest.approx(math.log(4, 6))
    assert capacity(5, 1, PAL).value == pytest.approx(math.log(4, 5))
    for q, k in [(2, 2), (4, 3), (8, 5)]:
        assert capacity(q, k, RC).value == 0 and capacity(q, k, PAL).value == 0
    with pytest.raises(OddQ):
        capacity(3, 1, RC)


def test_rate_matches_float_for_small_sizes():
    assert rate(252, 6, 4) == pytest.approx(math.log(252, 4) / 6)


def test_rc1_rate_approaches_capacity_from_above():
    # log_4(4 (2^n - 1)) / n = 1/2 + 1/n - tiny, so the gap to 1/2 is just under 1/n
    for n in (64, 100, 101, 1000):
        assert rate(size_rc1(4, n), n, 4) - 0.5 == pytest.approx(1 / n, abs=1e-12)
    assert abs(rate(size_rc1(4, 101), 101, 4) - 0.5) < 0.01
    assert rate(size_pal1(2, 64), 64, 2) == pytest.approx(7 / 64)


def test_huge_codebook_random_access():
    book = construct_rc1(4, 64)
    assert book.size == size_rc1(4, 64) > 2**64
    for j in (0, 3, 10**6, book.size // 3, book.size - 1):
        c = book.unrank(j)
        assert len(c) == 64 and book.rank(c) == j
    with pytest.raises(IndexError):
        book.unrank(book.size)
