"""Constructive common-descendant derivations.

Every builder returns derivations that are replayed and checked before they
are handed back, so a returned witness is always valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .alphabet import Alphabet, Word, to_str
from .analysis import (
    Embedding,
    is_properly_spaced,
    k_blocks,
    meet_guaranteed_k,
    minimal_decomposition,
    prefix_split,
    properly_spaced,
    signature,
)
from .duplication import RC, Derivation, DuplicationEvent, RuleKind, apply, replay
from .errors import (
    BadDistance,
    BadRunAlphabet,
    DuplicationError,
    InternalProofViolation,
    NotProperlySpaced,
    PreconditionFailed,
    SignatureMismatch,
    TooShort,
    WitnessTooLarge,
)

MAX_EVENTS = 10**6


@dataclass(frozen=True)
class MeetWitness:
    z: Word
    dx: Derivation
    dy: Derivation

    def check(self, x: Sequence[int], y: Sequence[int], A: Alphabet) -> bool:
        return replay(x, self.dx, A) == self.z == replay(y, self.dy, A)

    def to_json(self, q: int = 10) -> dict:
        return {"z": to_str(self.z, q), "dx": self.dx.to_json(), "dy": self.dy.to_json()}


def _verified(x, y, z, dx, dy, A) -> MeetWitness:
    w = MeetWitness(tuple(z), Derivation(dx), Derivation(dy))
    if not w.check(x, y, A):
        raise InternalProofViolation("witness derivations do not reach a common word")
    return w


def _pair_kind(kind) -> RuleKind:
    kind = RuleKind.parse(kind)
    if kind is RuleKind.Tandem:
        raise DuplicationError("k >= 2 constructions are defined for rc and pal duplication only")
    return kind


# ---------------------------------------------------------------------------
# k = 1, reverse complement


def run_extension(a: int, w: Sequence[int], A: Alphabet) -> Derivation:
    """Derivation ``a => a comp(a) w`` using k=1 rc events, one run at a time."""
    ca = A.comp(a)
    w = tuple(w)
    if any(b != a and b != ca for b in w):
        raise BadRunAlphabet(f"{w} uses letters outside {{{a}, {ca}}}")
    target = (a, ca) + w
    runs: List[Tuple[int, int]] = []
    for b in target[1:]:
        if runs and runs[-1][0] == b:
            runs[-1] = (b, runs[-1][1] + 1)
        else:
            runs.append((b, 1))
    steps = []
    length = 1
    for _, m in runs:
        # duplicating the last letter m times grows a run of its complement
        p = length - 1
        steps.extend(DuplicationEvent(RC, p, 1) for _ in range(m))
        length += m
    return Derivation(tuple(steps))


def _meet_block(xb: Word, yb: Word, A: Alphabet):
    """Common descendant of two words in the same a-block (binary-case argument)."""
    if xb == yb:
        return xb, [], []
    if len(yb) > 1 and len(xb) == 1:
        z, dy, dx = _meet_block(yb, xb, A)
        return z, dx, dy
    a = xb[0]
    ca = A.comp(a)
    if len(yb) == 1:
        z = (a, ca) + xb[1:]
        return z, [DuplicationEvent(RC, 0, 1)], list(run_extension(a, xb[1:], A))
    ymid, b = yb[1:-1], yb[-1]
    z = (a, ca) + ymid + (b, A.comp(b)) + xb[1:]
    dx = list(run_extension(a, ymid + (b,), A)) + [DuplicationEvent(RC, len(yb), 1)]
    dy = [DuplicationEvent(RC, 0, 1)] + list(run_extension(b, xb[1:], A).shifted(len(yb)))
    return z, dx, dy


def meet_rc1(x: Sequence[int], y: Sequence[int], A: Alphabet) -> MeetWitness:
    """Common descendant under k=1 rc duplication, built block by block."""
    x, y = A.check(x), A.check(y)
    if signature(x, A) != signature(y, A):
        raise SignatureMismatch("signatures differ; the descendant cones are disjoint")
    dx: List[DuplicationEvent] = []
    dy: List[DuplicationEvent] = []
    z: List[int] = []
    for (_, xb), (_, yb) in zip(minimal_decomposition(x, A).blocks,
                                minimal_decomposition(y, A).blocks):
        zb, bx, by = _meet_block(xb, yb, A)
        off = len(z)
        dx.extend(e.shifted(off) for e in bx)
        dy.extend(e.shifted(off) for e in by)
        z.extend(zb)
    return _verified(x, y, z, dx, dy, A)


# ---------------------------------------------------------------------------
# k >= 2


def push_letter(x: Sequence[int], i: int, k: int, kind, A: Alphabet) -> Derivation:
    """Two k-duplications after which the letter at distance ``i`` from the end sits at ``i-2``.

    Writing ``x = u v b c w`` with ``|v| = k-1`` and the letter inside ``v``,
    the events duplicate ``v b`` and then the k-factor that ends in ``c``; the
    second copy of ``v`` lands two positions closer to the end.
    """
    kind = _pair_kind(kind)
    x = A.check(x)
    if k < 2:
        raise DuplicationError(f"k must be >= 2, got {k}")
    if i < 2:
        raise BadDistance(f"distance must be >= 2, got {i}")
    if len(x) < k + 1:
        raise TooShort(f"word of length {len(x)} is shorter than k+1={k + 1}")
    if i >= len(x):
        raise BadDistance(f"distance {i} is outside a word of length {len(x)}")
    wlen = max(0, i - k)
    ulen = len(x) - wlen - k - 1
    d = Derivation((DuplicationEvent(kind, ulen, k), DuplicationEvent(kind, ulen + k + 1, k)))
    out = replay(x, d, A)
    if out[len(out) - 1 - (i - 2)] != x[len(x) - 1 - i] or out[len(out) - wlen:] != x[len(x) - wlen:]:
        raise InternalProofViolation(f"push of distance {i} failed on {x}")
    return d


class _Builder:
    """Mutable word plus the events applied to it, with a global event cap."""

    def __init__(self, w: Word, A: Alphabet, max_events: int):
        self.w = w
        self.A = A
        self.steps: List[DuplicationEvent] = []
        self.max_events = max_events

    def do(self, e: DuplicationEvent, tracked: List[int]):
        if len(self.steps) >= self.max_events:
            raise WitnessTooLarge(f"derivation exceeded {self.max_events} events")
        self.w = apply(self.w, e, self.A)
        self.steps.append(e)
        for n, p in enumerate(tracked):
            tracked[n] = e.track(p)


def _extract(b: _Builder, positions: Sequence[int], k: int, kind: RuleKind):
    x = tuple(b.w[p] for p in positions)
    tracked = list(positions)
    fixed = 0
    for j in range(k - 1, -1, -1):
        active = len(b.w) - fixed
        dist = active - 1 - tracked[j]
        if dist < 0:
            raise InternalProofViolation(f"letter {j} fell into the fixed suffix")
        if dist == 0 and not b.steps:
            # nothing duplicated yet: duplicate the k-suffix twice so the word grows;
            # s -> s f(s) s, so letters of the old suffix reappear 2k further on
            in_suffix = [n for n in range(j + 1) if tracked[n] >= active - k]
            b.do(DuplicationEvent(kind, active - k, k), tracked)
            b.do(DuplicationEvent(kind, active, k), tracked)
            for n in in_suffix:
                tracked[n] += 2 * k
            active += 2 * k
            if b.w[tracked[j]] != x[j] or tracked[j] != active - 1:
                raise InternalProofViolation("double suffix duplication changed the last letter")
            dist = 0
        elif dist % 2:
            if k % 2 == 0:
                raise InternalProofViolation(f"odd distance {dist} for even k")
            b.do(DuplicationEvent(kind, active - k, k), tracked)
            active += k
            dist += k
        while dist > 0:
            for e in push_letter(b.w[:active], dist, k, kind, b.A):
                b.do(e, tracked)
            active += 2 * k
            dist -= 2
            tracked[j] = active - 1 - dist
            if b.w[tracked[j]] != x[j]:
                raise InternalProofViolation("pushed letter changed value")
        fixed += 1
    if b.w[len(b.w) - k:] != x:
        raise InternalProofViolation("extraction did not end with the pattern")


def extract_suffix(y: Sequence[int], emb: Embedding, k: int, kind, A: Alphabet,
                   max_events: int = MAX_EVENTS) -> Tuple[Derivation, Word]:
    """Derivation ``y => v x`` where ``x`` is the pattern located by ``emb``.

    Returns the derivation and ``v``.
    """
    kind = _pair_kind(kind)
    y = A.check(y)
    if len(emb.positions) != k or any(not 0 <= p < len(y) for p in emb.positions):
        raise NotProperlySpaced("embedding does not fit the word")
    x = tuple(y[p] for p in emb.positions)
    if not is_properly_spaced(emb, x, y):
        raise NotProperlySpaced(f"{x} is not properly spaced at {emb.positions}")
    b = _Builder(y, A, max_events)
    _extract(b, emb.positions, k, kind)
    return Derivation(tuple(b.steps)), b.w[:-k]


def sync(y: Sequence[int], emb: Embedding, k: int, kind, A: Alphabet,
         max_events: int = MAX_EVENTS) -> Tuple[Word, Derivation, Derivation]:
    """A word reachable from both ``y`` and ``y x``; returns it with both derivations."""
    kind = _pair_kind(kind)
    y = A.check(y)
    d, u = extract_suffix(y, emb, k, kind, A, max_events)
    x = tuple(y[p] for p in emb.positions)
    n = len(u) + k
    from_y = d + Derivation((DuplicationEvent(kind, n - k, k), DuplicationEvent(kind, n, k)))
    from_yx = d + Derivation((DuplicationEvent(kind, len(u), k),))
    target = replay(y, from_y, A)
    if replay(y + x, from_yx, A) != target or target[-k:] != x:
        raise InternalProofViolation("sync derivations disagree")
    return target, from_y, from_yx


def meet_k(x: Sequence[int], y: Sequence[int], k: int, kind, A: Alphabet,
           max_events: int = MAX_EVENTS) -> MeetWitness:
    """Common descendant for k >= 2 when prefixes and summaries agree."""
    kind = _pair_kind(kind)
    x, y = A.check(x), A.check(y)
    if not meet_guaranteed_k(x, y, k):
        raise PreconditionFailed("short prefixes or summaries differ")
    prefix, xbody = prefix_split(x, k)
    _, ybody = prefix_split(y, k)
    X, Y = k_blocks(xbody, k), k_blocks(ybody, k)
    u: Word = ()
    dx: List[DuplicationEvent] = []
    dy: List[DuplicationEvent] = []
    ix = iy = 0
    while ix < len(X) or iy < len(Y):
        if ix < len(X) and iy < len(Y) and X[ix] == Y[iy]:
            u += X[ix]
            ix += 1
            iy += 1
            continue
        if ix < len(X) and X[ix] in X[:ix]:
            blk, mine, other = X[ix], dx, dy
            ix += 1
        elif iy < len(Y) and Y[iy] in Y[:iy]:
            blk, mine, other = Y[iy], dy, dx
            iy += 1
        else:
            raise InternalProofViolation("no repeated block to absorb; summaries must differ")
        emb = properly_spaced(blk, u, mode="last")
        if emb is None:
            raise InternalProofViolation(f"{blk} is not properly spaced in the running word")
        budget = max_events - len(dx) - len(dy)
        u, from_u, from_ublk = sync(u, emb, k, kind, A, max_events=max(budget, 0))
        mine.extend(from_ublk)
        other.extend(from_u)
        if len(dx) + len(dy) > max_events:
            raise WitnessTooLarge(f"witness exceeded {max_events} events")
    off = len(prefix)
    return _verified(x, y, prefix + u,
                     [e.shifted(off) for e in dx], [e.shifted(off) for e in dy], A)
