"""Brute-force descendant cones: bounded BFS, cone intersection, code checks.

Every k-duplication adds exactly k letters, so the words reached after j
steps all have length ``|root| + j*k``. BFS levels therefore never overlap,
and two cones can only meet on a common length.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .alphabet import Alphabet, Word
from .analysis import prefix_split, summary
from .codes import CodeBook
from .duplication import Derivation, DuplicationEvent, RuleKind, apply
from .errors import BudgetMissing, DuplicationError, InternalProofViolation

Parents = Dict[Word, Tuple[Word, DuplicationEvent]]


@dataclass(frozen=True)
class ConeQuery:
    root: Word
    k: int
    kind: RuleKind
    max_steps: Optional[int] = None
    max_length: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "root", tuple(self.root))
        object.__setattr__(self, "kind", RuleKind.parse(self.kind))
        if self.max_steps is None and self.max_length is None:
            raise BudgetMissing("a cone query needs max_steps, max_length, or both")
        if self.max_steps is not None and self.max_steps < 0:
            raise DuplicationError("max_steps must be >= 0")
        if self.k < 1:
            raise DuplicationError("k must be >= 1")

    def depth(self) -> int:
        """Number of BFS levels beyond the root allowed by the budget."""
        depths = []
        if self.max_steps is not None:
            depths.append(self.max_steps)
        if self.max_length is not None:
            depths.append(max(-1, (self.max_length - len(self.root)) // self.k))
        return min(depths)


@dataclass
class ConeReport:
    words: Set[Word]
    exhausted: bool
    """True when the frontier ran dry, i.e. ``words`` is the whole cone."""
    parents: Optional[Parents] = field(default=None, repr=False)

    def derivation(self, w: Word, root: Word) -> Derivation:
        if self.parents is None:
            raise DuplicationError("cone was computed without derivations")
        return _path(self.parents, root, w)

    def lines(self, q: int = 10) -> List[str]:
        from .alphabet import to_str
        return sorted(to_str(w, q) for w in self.words)


def _path(parents: Parents, root: Word, w: Word) -> Derivation:
    steps = []
    while w != root:
        w, e = parents[w]
        steps.append(e)
    return Derivation(tuple(reversed(steps)))


def _expand(frontier: Set[Word], k: int, kind: RuleKind, A: Alphabet,
            parents: Optional[Parents]) -> Set[Word]:
    nxt: Set[Word] = set()
    # sorted so parent choice is reproducible
    for w in sorted(frontier):
        for i in range(len(w) - k + 1):
            e = DuplicationEvent(kind, i, k)
            c = apply(w, e, A)
            if c not in nxt:
                nxt.add(c)
                if parents is not None:
                    parents[c] = (w, e)
    return nxt


def levels(root: Sequence[int], k: int, kind, A: Alphabet, depth: int,
           parents: Optional[Parents] = None) -> Iterator[Set[Word]]:
    """Yield the BFS levels 0..depth; only the current frontier is kept."""
    kind = RuleKind.parse(kind)
    frontier = {A.check(root)}
    if depth < 0:
        return
    yield frontier
    for _ in range(depth):
        if len(next(iter(frontier))) < k:
            return
        frontier = _expand(frontier, k, kind, A, parents)
        yield frontier


def cone(query: ConeQuery, A: Alphabet, derivations: bool = False) -> ConeReport:
    parents: Optional[Parents] = {} if derivations else None
    words: Set[Word] = set()
    depth = query.depth()
    for lvl in levels(query.root, query.k, query.kind, A, depth, parents):
        words |= lvl
    # no k-factor means no children at all
    return ConeReport(words, len(query.root) < query.k, parents)


def cone_recursive(root: Sequence[int], k: int, kind, A: Alphabet, t: int) -> Set[Word]:
    """Reference cone D^t by plain recursion; slow, independent of :func:`cone`."""
    kind = RuleKind.parse(kind)
    root = tuple(root)
    out = {root}
    if t > 0 and len(root) >= k:
        for i in range(len(root) - k + 1):
            out |= cone_recursive(apply(root, DuplicationEvent(kind, i, k), A), k, kind, A, t - 1)
    return out


@dataclass(frozen=True)
class Meet:
    """Outcome of a bounded intersection search; ``z is None`` means nothing was found."""

    z: Optional[Word]
    dx: Optional[Derivation] = None
    dy: Optional[Derivation] = None

    @property
    def found(self) -> bool:
        return self.z is not None


NOT_WITHIN_BUDGET = Meet(None)


def _depth_for(root: Word, k: int, max_steps, max_length) -> int:
    return ConeQuery(root, k, RuleKind.Tandem, max_steps, max_length).depth()


def cones_intersect(x: Sequence[int], y: Sequence[int], k: int, kind, A: Alphabet,
                    max_steps: Optional[int] = None,
                    max_length: Optional[int] = None) -> Meet:
    """Search for a common descendant, expanding both cones length by length.

    The returned word is the lexicographically smallest one at the shortest
    common length.
    """
    kind = RuleKind.parse(kind)
    x, y = A.check(x), A.check(y)
    if max_steps is None and max_length is None:
        raise BudgetMissing("cones_intersect needs max_steps, max_length, or both")
    if x == y:
        return Meet(x, Derivation(), Derivation())
    if (len(x) - len(y)) % k:
        return NOT_WITHIN_BUDGET
    dxmax = _depth_for(x, k, max_steps, max_length)
    dymax = _depth_for(y, k, max_steps, max_length)
    px: Parents = {}
    py: Parents = {}
    gx = levels(x, k, kind, A, dxmax, px)
    gy = levels(y, k, kind, A, dymax, py)
    lx = next(gx, None)
    ly = next(gy, None)
    while lx is not None and ly is not None:
        nx, ny = len(next(iter(lx))), len(next(iter(ly)))
        if nx == ny:
            common = lx & ly
            if common:
                z = min(common)
                return Meet(z, _path(px, x, z), _path(py, y, z))
            lx, ly = next(gx, None), next(gy, None)
        elif nx < ny:
            lx = next(gx, None)
        else:
            ly = next(gy, None)
    return NOT_WITHIN_BUDGET


# ---------------------------------------------------------------------------
# code verification


def _cone_levels(args) -> Dict[int, Set[Word]]:
    root, k, kind, A, depth = args
    return {len(next(iter(l))): l for l in levels(root, k, kind, A, depth)}


@dataclass
class VerifyReport:
    codewords: int
    pairs: int
    collisions: List[Tuple[Word, Word, Word]]
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.collisions

    def to_json(self, q: int = 10) -> dict:
        from .alphabet import to_str
        return {
            "codewords": self.codewords,
            "pairs": self.pairs,
            "intersecting_pairs": len(self.collisions),
            "collisions": [[to_str(a, q), to_str(b, q), to_str(z, q)] for a, b, z in self.collisions],
            "seconds": round(self.seconds, 3),
        }


def verify_code(book, k: int = 1, kind=None, A: Optional[Alphabet] = None,
                max_steps: Optional[int] = None, max_length: Optional[int] = None,
                workers: int = 1) -> VerifyReport:
    """Check that no two codewords share a descendant within the budget.

    ``book`` is a :class:`CodeBook` or any iterable of equal-length words.
    Each cone is built once and indexed by word, which finds exactly the
    pairs that a pairwise :func:`cones_intersect` would find.
    """
    t0 = time.perf_counter()
    if isinstance(book, CodeBook):
        kind = kind or book.spec.kind
        A = A or book.alphabet
        k = book.spec.k
    if kind is None or A is None:
        raise DuplicationError("kind and alphabet are required for a plain word list")
    kind = RuleKind.parse(kind)
    if max_steps is None and max_length is None:
        raise BudgetMissing("verify_code needs max_steps, max_length, or both")
    words = sorted({A.check(c) for c in book})
    jobs = [(c, k, kind, A, _depth_for(c, k, max_steps, max_length)) for c in words]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            cones = list(pool.map(_cone_levels, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        cones = [_cone_levels(j) for j in jobs]
    owners: Dict[Word, List[int]] = {}
    hits: Dict[Tuple[int, int], Word] = {}
    for idx, lv in enumerate(cones):
        for length in sorted(lv):
            for w in sorted(lv[length]):
                seen = owners.setdefault(w, [])
                for prev in seen:
                    hits.setdefault((prev, idx), w)
                seen.append(idx)
    collisions = [(words[a], words[b], z) for (a, b), z in sorted(hits.items())]
    n = len(words)
    return VerifyReport(n, n * (n - 1) // 2, collisions, time.perf_counter() - t0)


def class_count(n: int, q: int, k: int) -> int:
    """Number of distinct (short prefix, summary) pairs over all words of length n."""
    classes = set()
    for w in itertools.product(range(q), repeat=n):
        p, body = prefix_split(w, k)
        classes.add((p, summary(body, k)))
    return len(classes)
