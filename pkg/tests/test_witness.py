import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from dupcodes import (
    PAL,
    RC,
    TAN,
    Alphabet,
    Embedding,
    extract_suffix,
    meet_k,
    meet_rc1,
    properly_spaced,
    push_letter,
    replay,
    run_extension,
    sync,
    word,
)
from dupcodes.errors import (
    BadDistance,
    BadRunAlphabet,
    DuplicationError,
    NotProperlySpaced,
    PreconditionFailed,
    SignatureMismatch,
    TooShort,
    WitnessTooLarge,
)

from helpers import random_meet_pair

Y = word("0110300203")


@pytest.mark.parametrize("w, target", [("", "01"), ("1", "011"), ("0011", "010011")])
def test_run_extension(A2, w, target):
    d = run_extension(0, word(w), A2)
    assert replay(word("0"), d, A2) == word(target)
    assert all(e.kind is RC and e.k == 1 for e in d)
    if not w:
        assert len(d) == 1


def test_run_extension_rejects_foreign_letters(A4):
    with pytest.raises(BadRunAlphabet):
        run_extension(0, word("1"), A4)


def test_meet_rc1_examples(A2, A4):
    w = meet_rc1(word("01"), word("0"), A2)
    assert w.z == word("011")
    w = meet_rc1(Y, Y, A4)
    assert w.z == Y and len(w.dx) == len(w.dy) == 0
    w = meet_rc1(Y, word("01020"), A4)
    assert w.check(Y, word("01020"), A4)
    with pytest.raises(SignatureMismatch):
        meet_rc1(word("0"), word("1"), A2)


def test_meet_rc1_exhaustive_binary(A2):
    ws = [w for n in range(1, 6) for w in itertools.product(range(2), repeat=n)]
    for x in ws:
        for y in ws:
            if x[0] == y[0]:
                w = meet_rc1(x, y, A2)
                assert replay(x, w.dx, A2) == w.z == replay(y, w.dy, A2)


def test_push_letter_examples(A4):
    x = word("0123")
    d = push_letter(x, 2, 2, PAL, A4)
    # u v b b v^R c c v w with u=0, v=1, b=2, c=3, w=empty
    assert replay(x, d, A4) == word("01221331")
    d = push_letter(x, 2, 2, RC, A4)
    # u v b comp(b) comp(v)^R c comp(c) v w, same split
    assert replay(x, d, A4) == word("01212301")
    assert len(d) == 2


def test_push_letter_errors(A4):
    with pytest.raises(BadDistance):
        push_letter(word("0123"), 1, 2, RC, A4)
    with pytest.raises(TooShort):
        push_letter(word("012"), 2, 3, RC, A4)
    with pytest.raises(DuplicationError):
        push_letter(word("0123"), 2, 2, TAN, A4)


@settings(max_examples=200)
@given(st.sampled_from([RC, PAL]), st.integers(2, 4), st.data())
def test_push_letter_moves_letter_two_closer(kind, k, data):
    A = Alphabet(4)
    x = tuple(data.draw(st.lists(st.integers(0, 3), min_size=k + 1, max_size=14)))
    i = data.draw(st.integers(2, len(x) - 1))
    d = push_letter(x, i, k, kind, A)
    out = replay(x, d, A)
    assert len(d) == 2 and all(e.kind is kind and e.k == k for e in d)
    assert out[len(out) - 1 - (i - 2)] == x[len(x) - 1 - i]


@pytest.mark.parametrize("kind", [RC, PAL])
def test_extract_suffix_degenerate(A4, kind):
    y = word("0132")
    d, v = extract_suffix(y, Embedding((2, 3)), 2, kind, A4)
    assert len(d) == 2
    assert replay(y, d, A4)[-2:] == word("32") and replay(y, d, A4) == v + word("32")


@pytest.mark.parametrize("kind", [RC, PAL])
@pytest.mark.parametrize("x, k", [("32", 2), ("323", 3)])
def test_extract_suffix_examples(A4, kind, x, k):
    emb = properly_spaced(word(x), Y, k)
    d, v = extract_suffix(Y, emb, k, kind, A4)
    assert replay(Y, d, A4) == v + word(x)


def test_extract_suffix_rejects_bad_embedding(A4):
    with pytest.raises(NotProperlySpaced):
        extract_suffix(Y, Embedding((7, 9)), 2, RC, A4)


@pytest.mark.parametrize("kind", [RC, PAL])
def test_sync_example(A4, kind):
    x = word("32")
    emb = properly_spaced(x, Y, 2)
    d, _ = extract_suffix(Y, emb, 2, kind, A4)
    target, from_y, from_yx = sync(Y, emb, 2, kind, A4)
    assert replay(Y, from_y, A4) == target == replay(Y + x, from_yx, A4)
    assert len(from_y) == len(d) + 2 and len(from_yx) == len(d) + 1
    assert target[-2:] == x


def test_meet_k_examples(A4):
    w = meet_k(Y, Y, 2, RC, A4)
    assert w.z == Y and not w.dx and not w.dy
    w = meet_k(word("0101"), word("01"), 2, RC, A4)
    assert w.check(word("0101"), word("01"), A4)
    with pytest.raises(PreconditionFailed):
        meet_k(word("0110"), word("01"), 2, RC, A4)


def test_meet_k_event_cap(A4):
    with pytest.raises(WitnessTooLarge):
        meet_k(word("010101"), word("01"), 2, RC, A4, max_events=3)


@pytest.mark.parametrize("kind", [RC, PAL])
@pytest.mark.parametrize("k", [2, 3])
def test_meet_k_randomized(A4, kind, k):
    rng = random.Random(1000 * k + (kind is PAL))
    for _ in range(25):
        x, y = random_meet_pair(rng, 4, k)
        w = meet_k(x, y, k, kind, A4)
        assert replay(x, w.dx, A4) == w.z == replay(y, w.dy, A4)
        assert all(e.kind is kind and e.k == k for e in list(w.dx) + list(w.dy))
