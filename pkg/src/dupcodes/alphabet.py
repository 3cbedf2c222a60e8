"""Alphabets Z_q with an optional complement pairing, and word operations.

Words are plain tuples of ints. Every letter must lie in ``range(q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import DuplicationError, InvalidLetter, NoComplement

Word = Tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Alphabet ``{0, ..., q-1}``.

    For even q the complement defaults to ``a <-> q-1-a``; pass ``complement``
    (a full letter->letter map) to choose another pairing, or
    ``with_complement=False`` to drop it. Odd q never has a complement.
    """

    q: int
    complement: Optional[Tuple[int, ...]] = None
    with_complement: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.q < 2:
            raise DuplicationError(f"alphabet size must be >= 2, got {self.q}")
        comp = self.complement
        if comp is None:
            if self.q % 2 == 0 and self.with_complement:
                comp = tuple(self.q - 1 - a for a in range(self.q))
        else:
            if self.q % 2:
                raise NoComplement(f"no complement pairing exists for odd q={self.q}")
            if isinstance(comp, Mapping):
                comp = tuple(comp[a] for a in range(self.q))
            comp = tuple(int(c) for c in comp)
            _check_pairing(comp, self.q)
        object.__setattr__(self, "complement", comp)

    @classmethod
    def from_pairs(cls, q: int, spec: str) -> "Alphabet":
        """Parse a pairing like ``"0:3,1:2"``."""
        comp = [-1] * q
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            try:
                a, b = (int(s) for s in item.split(":"))
            except ValueError:
                raise DuplicationError(f"bad complement pair {item!r}") from None
            for c in (a, b):
                if not 0 <= c < q:
                    raise InvalidLetter(f"letter {c} not in Z_{q}")
            comp[a], comp[b] = b, a
        if -1 in comp:
            raise DuplicationError(f"pairing {spec!r} does not cover every letter of Z_{q}")
        return cls(q, tuple(comp))

    @property
    def has_complement(self) -> bool:
        return self.complement is not None

    def comp(self, a: int) -> int:
        if self.complement is None:
            raise NoComplement(f"alphabet of size {self.q} has no complement")
        return self.complement[a]

    def check(self, w: Iterable[int]) -> Word:
        w = tuple(w)
        for a in w:
            if not 0 <= a < self.q:
                raise InvalidLetter(f"letter {a} not in Z_{self.q}")
        return w


def _check_pairing(comp: Sequence[int], q: int) -> None:
    if len(comp) != q:
        raise DuplicationError(f"complement map must have {q} entries")
    for a, c in enumerate(comp):
        if not 0 <= c < q:
            raise InvalidLetter(f"complement of {a} is {c}, not in Z_{q}")
        if c == a:
            raise DuplicationError(f"complement has fixed point {a}")
        if comp[c] != a:
            raise DuplicationError(f"complement is not an involution at {a}")


def word(s: Union[str, Iterable[int]]) -> Word:
    """Build a word from a digit string (``"0110"``), comma list, or int iterable."""
    if isinstance(s, str):
        if "," in s:
            return tuple(int(t) for t in s.split(",") if t.strip())
        return tuple(int(c) for c in s)
    return tuple(int(a) for a in s)


def to_str(w: Iterable[int], q: int = 10) -> str:
    """Text form: digits for q <= 10, comma-separated otherwise."""
    if q <= 10:
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def complement(w: Iterable[int], A: Alphabet) -> Word:
    w = A.check(w)
    if not A.has_complement:
        raise NoComplement(f"alphabet of size {A.q} has no complement")
    comp = A.complement
    return tuple(comp[a] for a in w)


def reverse(w: Iterable[int]) -> Word:
    return tuple(w)[::-1]


def reverse_complement(w: Iterable[int], A: Alphabet) -> Word:
    return complement(w, A)[::-1]
