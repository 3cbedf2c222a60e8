"""Optimal k=1 codes, their decoders, exact sizes, the k>=2 size bound, and capacities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence, Tuple

import numpy as np

from .alphabet import Alphabet, Word
from .analysis import signature
from .duplication import RuleKind
from .errors import DecodeFailure, DuplicationError, EmptyWord, OddQ


@dataclass(frozen=True)
class CodeSpec:
    q: int
    n: int
    k: int = 1
    kind: RuleKind = RuleKind.ReverseComplement

    def __post_init__(self):
        object.__setattr__(self, "kind", RuleKind.parse(self.kind))
        if self.n < 1:
            raise DuplicationError(f"code length must be >= 1, got {self.n}")
        if self.q < 2:
            raise DuplicationError(f"alphabet size must be >= 2, got {self.q}")


class CodeBook:
    """Lazily enumerated code of root words padded with their last letter.

    A root is ``a_0 ... a_{l-1}`` (1 <= l <= n) where ``a_0`` is free and each
    later letter is one of the ``successors(prev)`` letters. Codewords are
    ranked by root length, then lexicographically.
    """

    def __init__(self, spec: CodeSpec, alphabet: Alphabet,
                 successors: Callable[[int], Tuple[int, ...]],
                 decoder: Callable[[Sequence[int], CodeSpec, Alphabet], Word]):
        self.spec = spec
        self.alphabet = alphabet
        self._succ = tuple(successors(a) for a in range(spec.q))
        self.branch = len(self._succ[0])
        self._decoder = decoder

    def _count(self, length: int) -> int:
        return self.spec.q * self.branch ** (length - 1)

    @property
    def size(self) -> int:
        """Exact number of codewords; unlike ``len()`` this works beyond sys.maxsize."""
        return sum(self._count(l) for l in range(1, self.spec.n + 1))

    def __len__(self) -> int:
        return self.size

    def unrank(self, index: int) -> Word:
        if not 0 <= index < self.size:
            raise IndexError(index)
        length = 1
        while index >= self._count(length):
            index -= self._count(length)
            length += 1
        digits = []
        for _ in range(length - 1):
            index, r = divmod(index, self.branch)
            digits.append(r)
        root = [index]
        for r in reversed(digits):
            root.append(self._succ[root[-1]][r])
        return tuple(root) + (root[-1],) * (self.spec.n - length)

    def rank(self, c: Sequence[int]) -> int:
        root = self.root(c)
        index = root[0]
        for prev, a in zip(root, root[1:]):
            index = index * self.branch + self._succ[prev].index(a)
        return sum(self._count(l) for l in range(1, len(root))) + index

    def root(self, c: Sequence[int]) -> Word:
        c = tuple(c)
        end = len(c)
        while end > 1 and c[end - 1] == c[end - 2]:
            end -= 1
        root = c[:end]
        if len(c) != self.spec.n or any(b not in self._succ[a] for a, b in zip(root, root[1:])):
            raise DuplicationError(f"{c} is not a codeword")
        return root

    def __iter__(self) -> Iterator[Word]:
        for j in range(self.size):
            yield self.unrank(j)

    def __contains__(self, c) -> bool:
        try:
            self.root(c)
        except DuplicationError:
            return False
        return True

    def decode(self, z: Sequence[int]) -> Word:
        return self._decoder(z, self.spec, self.alphabet)


def _rc_alphabet(q: int, alphabet: Optional[Alphabet]) -> Alphabet:
    if q % 2:
        raise OddQ(f"reverse-complement codes need even q, got {q}")
    A = alphabet or Alphabet(q)
    if A.q != q or A.complement is None:
        raise OddQ(f"alphabet must be Z_{q} with a complement")
    return A


def construct_rc1(q: int, n: int, alphabet: Optional[Alphabet] = None) -> CodeBook:
    """Every signature of length <= n, padded by repeating its last letter."""
    A = _rc_alphabet(q, alphabet)
    comp = A.complement
    succ = lambda a: tuple(b for b in range(q) if b != a and b != comp[a])
    return CodeBook(CodeSpec(q, n, 1, RuleKind.ReverseComplement), A, succ, decode_rc1)


def construct_pal1(q: int, n: int) -> CodeBook:
    succ = lambda a: tuple(b for b in range(q) if b != a)
    return CodeBook(CodeSpec(q, n, 1, RuleKind.Palindromic), Alphabet(q), succ, decode_pal1)


def size_rc1(q: int, n: int) -> int:
    if q % 2:
        raise OddQ(f"reverse-complement codes need even q, got {q}")
    if q == 2:
        return 2
    return q * ((q - 2) ** n - 1) // (q - 3)


def size_pal1(q: int, n: int) -> int:
    if q == 2:
        return q * n
    return q * ((q - 1) ** n - 1) // (q - 2)


def _as_array(z) -> np.ndarray:
    z = np.asarray(z, dtype=np.int64)
    if z.ndim != 1 or z.size == 0:
        raise EmptyWord("cannot decode an empty word")
    return z


def _pad(root: np.ndarray, n: int) -> Word:
    if root.size > n:
        raise DecodeFailure(f"received word has {root.size} > n={n} root letters; "
                            "it descends from no codeword of length n")
    return tuple(root.tolist()) + (int(root[-1]),) * (n - root.size)


def decode_rc1(z: Sequence[int], spec: CodeSpec, alphabet: Optional[Alphabet] = None) -> Word:
    """Map a received word to the codeword sharing its signature, in one pass."""
    z = _as_array(z)
    A = _rc_alphabet(spec.q, alphabet)
    comp = np.asarray(A.complement, dtype=np.int64)
    if z.min() < 0 or z.max() >= A.q:
        raise DuplicationError(f"received word has letters outside Z_{A.q}")
    prev = z[:-1]
    new_block = (z[1:] != prev) & (z[1:] != comp[prev])
    heads = np.concatenate((z[:1], z[1:][new_block]))
    return _pad(heads, spec.n)


def decode_pal1(z: Sequence[int], spec: CodeSpec, alphabet: Optional[Alphabet] = None) -> Word:
    """Collapse runs to the root and pad with the last letter."""
    z = _as_array(z)
    if z.min() < 0 or z.max() >= spec.q:
        raise DuplicationError(f"received word has letters outside Z_{spec.q}")
    root = np.concatenate((z[:1], z[1:][z[1:] != z[:-1]]))
    return _pad(root, spec.n)


def bound_rck(q: int, k: int, kind=RuleKind.ReverseComplement) -> int:
    """Upper bound on any k >= 2 code size, independent of n."""
    kind = RuleKind.parse(kind)
    if k < 2:
        raise DuplicationError(f"the bound applies to k >= 2, got {k}")
    if kind is RuleKind.ReverseComplement and q % 2:
        raise OddQ(f"reverse-complement duplication needs even q, got {q}")
    qk = q**k
    return q ** (k - 1) * (q ** (k * qk + k) - 1) // (qk - 1)


@dataclass(frozen=True)
class Capacity:
    """``log_base(argument)``; ``argument is None`` means the capacity is 0 outright."""

    base: int
    argument: Optional[int]

    @property
    def value(self) -> float:
        if self.argument is None or self.argument == 1:
            return 0.0
        return math.log(self.argument, self.base)

    def __str__(self):
        if self.argument is None:
            return "0"
        return f"log_{self.base}({self.argument}) = {self.value:g}"


def capacity(q: int, k: int, kind=RuleKind.ReverseComplement) -> Capacity:
    kind = RuleKind.parse(kind)
    if k < 1:
        raise DuplicationError(f"k must be >= 1, got {k}")
    if q < 2:
        raise DuplicationError(f"alphabet size must be >= 2, got {q}")
    if kind is RuleKind.ReverseComplement:
        if q % 2:
            raise OddQ(f"reverse-complement duplication needs even q, got {q}")
        if k == 1 and q >= 4:
            return Capacity(q, q - 2)
        return Capacity(q, None)
    if k == 1:
        return Capacity(q, q - 1)
    return Capacity(q, None)


def rate(size: int, n: int, q: int) -> float:
    """``log_q(size) / n`` for exact big integers."""
    # int.bit_length keeps this exact enough for astronomically large sizes
    shift = max(size.bit_length() - 60, 0)
    return (math.log2(size >> shift) + shift) / math.log2(q) / n
