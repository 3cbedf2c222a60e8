"""Duplication rules, derivations, and a seeded random duplication channel."""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Set, Tuple

from .alphabet import Alphabet, Word
from .errors import DuplicationError, NoComplement, OutOfRange, ReplayError

log = logging.getLogger(__name__)


class RuleKind(str, Enum):
    ReverseComplement = "rc"
    Palindromic = "pal"
    Tandem = "tan"

    @classmethod
    def parse(cls, s) -> "RuleKind":
        if isinstance(s, RuleKind):
            return s
        try:
            return cls(s)
        except ValueError:
            raise DuplicationError(f"unknown rule kind {s!r}; expected rc, pal or tan") from None


RC = RuleKind.ReverseComplement
PAL = RuleKind.Palindromic
TAN = RuleKind.Tandem


@dataclass(frozen=True)
class DuplicationEvent:
    """Copy the k-factor following an i-prefix and insert the transformed copy after it."""

    kind: RuleKind
    i: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "kind", RuleKind.parse(self.kind))
        if self.k < 1:
            raise DuplicationError(f"duplication length must be >= 1, got {self.k}")
        if self.i < 0:
            raise DuplicationError(f"prefix length must be >= 0, got {self.i}")

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "i": self.i, "k": self.k}

    @classmethod
    def from_json(cls, d: dict) -> "DuplicationEvent":
        return cls(RuleKind.parse(d["kind"]), int(d["i"]), int(d["k"]))

    def shifted(self, offset: int) -> "DuplicationEvent":
        return DuplicationEvent(self.kind, self.i + offset, self.k)

    def track(self, pos: int) -> int:
        """Where the letter at ``pos`` ends up after this event (originals, not copies)."""
        return pos if pos < self.i + self.k else pos + self.k


@dataclass(frozen=True)
class Derivation:
    steps: Tuple[DuplicationEvent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.steps + tuple(other.steps))

    def shifted(self, offset: int) -> "Derivation":
        return Derivation(tuple(e.shifted(offset) for e in self.steps))

    def to_json(self) -> list:
        return [e.to_json() for e in self.steps]

    @classmethod
    def from_json(cls, data) -> "Derivation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(DuplicationEvent.from_json(d) for d in data))


def _copy(v: Word, kind: RuleKind, A: Alphabet) -> Word:
    if kind is RuleKind.Tandem:
        return v
    if kind is RuleKind.Palindromic:
        return v[::-1]
    if A.complement is None:
        raise NoComplement(f"reverse-complement duplication needs a complement (q={A.q})")
    comp = A.complement
    return tuple(comp[a] for a in reversed(v))


def apply(x: Sequence[int], e: DuplicationEvent, A: Alphabet) -> Word:
    x = tuple(x)
    end = e.i + e.k
    if len(x) < end:
        raise OutOfRange(f"event at i={e.i}, k={e.k} needs length >= {end}, word has {len(x)}")
    return x[:end] + _copy(x[e.i:end], e.kind, A) + x[end:]


def replay(x: Sequence[int], d: Iterable[DuplicationEvent], A: Alphabet) -> Word:
    x = tuple(x)
    for n, e in enumerate(d):
        try:
            x = apply(x, e, A)
        except DuplicationError as exc:
            raise ReplayError(n, exc) from exc
    return x


def children(x: Sequence[int], k: int, kind, A: Alphabet) -> Set[Word]:
    """All words one k-duplication away from ``x``."""
    kind = RuleKind.parse(kind)
    x = tuple(x)
    if len(x) < k:
        raise OutOfRange(f"word of length {len(x)} has no {k}-factor")
    out = {}
    for i in range(len(x) - k + 1):
        out.setdefault(apply(x, DuplicationEvent(kind, i, k), A), []).append(i)
    if log.isEnabledFor(logging.DEBUG):
        for child, positions in out.items():
            log.debug("child %s from positions %s", child, positions)
    return set(out)


def random_derivation(
    x: Sequence[int], t: int, k: int, kind, seed: int, A: Alphabet
) -> Tuple[Word, Derivation]:
    """Apply ``t`` events at uniformly drawn positions; reproducible from ``seed``."""
    kind = RuleKind.parse(kind)
    rng = random.Random(seed)
    cur = tuple(x)
    if len(cur) < k:
        raise OutOfRange(f"word of length {len(cur)} has no {k}-factor")
    steps: List[DuplicationEvent] = []
    for _ in range(t):
        e = DuplicationEvent(kind, rng.randint(0, len(cur) - k), k)
        cur = apply(cur, e, A)
        steps.append(e)
    return cur, Derivation(tuple(steps))
