"""String invariants: signature, k-summary, and properly spaced embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .alphabet import Alphabet, Word
from .errors import (
    EmptyWord,
    InternalProofViolation,
    NoComplement,
    NotMultipleOfK,
    WrongPatternLength,
)


@dataclass(frozen=True)
class Decomposition:
    """Blocks ``(head, block)`` where each block lies in head{head, comp(head)}*."""

    blocks: Tuple[Tuple[int, Word], ...]

    @property
    def heads(self) -> Word:
        return tuple(h for h, _ in self.blocks)

    def word(self) -> Word:
        return tuple(a for _, b in self.blocks for a in b)

    def __len__(self):
        return len(self.blocks)


@dataclass(frozen=True)
class Embedding:
    """Strictly increasing positions of a pattern inside a text."""

    positions: Tuple[int, ...]

    def gaps(self, n: int) -> Tuple[int, ...]:
        """Lengths of the factors before, between and after the matched letters."""
        p = self.positions
        inner = tuple(b - a - 1 for a, b in zip(p, p[1:]))
        return (p[0],) + inner + (n - 1 - p[-1],)


def _need_complement(A: Alphabet):
    if A.complement is None:
        raise NoComplement(f"alphabet of size {A.q} has no complement")
    return A.complement


def minimal_decomposition(x: Sequence[int], A: Alphabet) -> Decomposition:
    comp = _need_complement(A)
    x = A.check(x)
    if not x:
        raise EmptyWord("the empty word has no decomposition")
    blocks = []
    start = 0
    head = x[0]
    for j in range(1, len(x)):
        a = x[j]
        if a != head and a != comp[head]:
            blocks.append((head, x[start:j]))
            start, head = j, a
    blocks.append((head, x[start:]))
    for (h0, _), (h1, _) in zip(blocks, blocks[1:]):
        if h1 == h0 or h1 == comp[h0]:
            raise InternalProofViolation(f"adjacent heads {h0}, {h1} are not minimal")
    return Decomposition(tuple(blocks))


def signature(x: Sequence[int], A: Alphabet) -> Word:
    comp = _need_complement(A)
    x = A.check(x)
    if not x:
        raise EmptyWord("the empty word has no signature")
    # a block's letters are all in {head, comp(head)}, so the previous letter
    # determines the current block's pair
    heads = [x[0]]
    prev = x[0]
    for a in x[1:]:
        if a != prev and a != comp[prev]:
            heads.append(a)
        prev = a
    return tuple(heads)


def prefix_split(x: Sequence[int], k: int) -> Tuple[Word, Word]:
    x = tuple(x)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    r = len(x) % k
    return x[:r], x[r:]


def k_blocks(body: Sequence[int], k: int) -> List[Word]:
    body = tuple(body)
    if len(body) % k:
        raise NotMultipleOfK(f"length {len(body)} is not a multiple of k={k}")
    return [body[j:j + k] for j in range(0, len(body), k)]


def summary(body: Sequence[int], k: int) -> Word:
    """Concatenate the first occurrence of each k-factor in the k-partition."""
    seen = set()
    out: List[int] = []
    for blk in k_blocks(body, k):
        if blk not in seen:
            seen.add(blk)
            out.extend(blk)
    return tuple(out)


def _feasible(x: Word, y: Word) -> List[List[bool]]:
    """feas[j][p]: x[j:] embeds in y with x[j] at p, honouring the parity rule."""
    k, n = len(x), len(y)
    even = k % 2 == 0
    feas = [[False] * n for _ in range(k)]
    for p in range(n):
        feas[k - 1][p] = y[p] == x[k - 1] and (not even or (n - 1 - p) % 2 == 0)
    for j in range(k - 2, -1, -1):
        nxt = feas[j + 1]
        # any_after[par]: some feasible p' > p with p' % 2 == par
        any_after = [False, False]
        row = feas[j]
        for p in range(n - 1, -1, -1):
            if y[p] == x[j]:
                row[p] = any_after[(p + 1) % 2] if even else (any_after[0] or any_after[1])
            if nxt[p]:
                any_after[p % 2] = True
    return feas


def _step_ok(p: int, p2: int, even: bool) -> bool:
    return p2 > p and (not even or (p2 - p - 1) % 2 == 0)


def iter_properly_spaced(x: Sequence[int], y: Sequence[int]) -> Iterator[Embedding]:
    """All properly spaced embeddings of ``x`` in ``y``, in lexicographic order."""
    x, y = tuple(x), tuple(y)
    k = len(x)
    if k < 2:
        raise WrongPatternLength(f"pattern must have length >= 2, got {k}")
    if len(y) < k:
        return
    feas = _feasible(x, y)
    even = k % 2 == 0
    n = len(y)

    def rec(j, prev, acc):
        lo = 0 if j == 0 else prev + 1
        for p in range(lo, n):
            if feas[j][p] and (j == 0 or _step_ok(prev, p, even)):
                acc.append(p)
                if j == k - 1:
                    yield Embedding(tuple(acc))
                else:
                    yield from rec(j + 1, p, acc)
                acc.pop()

    yield from rec(0, -1, [])


def _last(x: Word, y: Word) -> Optional[Embedding]:
    k, n = len(x), len(y)
    even = k % 2 == 0
    # pre[j][p]: x[:j+1] embeds with x[j] at p, inner gaps honouring the parity rule
    pre = [[y[p] == x[0] for p in range(n)]]
    for j in range(1, k):
        seen = [False, False]
        row = [False] * n
        for p in range(n):
            if y[p] == x[j]:
                row[p] = seen[(p + 1) % 2] if even else (seen[0] or seen[1])
            if pre[j - 1][p]:
                seen[p % 2] = True
        pre.append(row)
    pos = []
    nxt = n
    for j in range(k - 1, -1, -1):
        p = next((p for p in range(nxt - 1, -1, -1)
                  if pre[j][p] and (not even or (nxt - p - 1) % 2 == 0)), None)
        if p is None:
            return None
        pos.append(p)
        nxt = p
    return Embedding(tuple(reversed(pos)))


def properly_spaced(x: Sequence[int], y: Sequence[int], k: Optional[int] = None,
                    mode: str = "first"):
    """Find a properly spaced embedding of ``x`` in ``y``.

    ``mode="first"`` gives the lexicographically smallest embedding,
    ``"last"`` the one packed against the end of ``y`` (its last position is
    as large as possible, then the one before it, and so on), ``"all"`` lists
    every embedding in lexicographic order. Returns ``None`` / ``[]`` when
    ``x`` is not properly spaced in ``y``.
    """
    x = tuple(x)
    if k is not None and len(x) != k:
        raise WrongPatternLength(f"pattern has length {len(x)}, expected {k}")
    if mode == "all":
        return list(iter_properly_spaced(x, y))
    if mode not in ("first", "last"):
        raise ValueError(f"mode must be 'first', 'last' or 'all', got {mode!r}")
    y = tuple(y)
    if len(x) < 2:
        raise WrongPatternLength(f"pattern must have length >= 2, got {len(x)}")
    if len(y) < len(x):
        return None
    if mode == "last":
        return _last(x, y)
    feas = _feasible(x, y)
    even = len(x) % 2 == 0
    pos = []
    prev = -1
    for j in range(len(x)):
        p = next((p for p in range(prev + 1, len(y))
                  if feas[j][p] and (j == 0 or _step_ok(prev, p, even))), None)
        if p is None:
            return None
        pos.append(p)
        prev = p
    return Embedding(tuple(pos))


def is_properly_spaced(emb: Embedding, x: Sequence[int], y: Sequence[int]) -> bool:
    x, y = tuple(x), tuple(y)
    p = emb.positions
    if len(p) != len(x) or len(x) < 2:
        return False
    if any(b <= a for a, b in zip(p, p[1:])) or p[0] < 0 or p[-1] >= len(y):
        return False
    if any(y[pj] != xj for pj, xj in zip(p, x)):
        return False
    if len(x) % 2 == 0:
        return all(g % 2 == 0 for g in emb.gaps(len(y))[1:])
    return True


def cones_meet_rc1(x: Sequence[int], y: Sequence[int], A: Alphabet) -> bool:
    """Exact test for a common descendant under k=1 reverse-complement duplication."""
    return signature(x, A) == signature(y, A)


def meet_guaranteed_k(x: Sequence[int], y: Sequence[int], k: int) -> bool:
    """Sufficient (not necessary) condition for a common descendant with k >= 2.

    ``False`` does not mean the cones are disjoint.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    xp, xb = prefix_split(x, k)
    yp, yb = prefix_split(y, k)
    return xp == yp and summary(xb, k) == summary(yb, k)
