import random


def random_meet_pair(rng: random.Random, q: int, k: int, max_distinct: int = 4, max_extra: int = 4):
    """Two words with the same short prefix and the same k-summary.

    Both bodies walk through a shared list of distinct k-blocks, with random
    repeats of already-seen blocks inserted.
    """
    distinct = []
    while len(distinct) < rng.randint(1, max_distinct):
        b = tuple(rng.randrange(q) for _ in range(k))
        if b not in distinct:
            distinct.append(b)
    prefix = tuple(rng.randrange(q) for _ in range(rng.randrange(k)))

    def body():
        out = []
        for b in distinct:
            out.append(b)
            for _ in range(rng.randint(0, max_extra // 2)):
                out.append(rng.choice(out))
        return tuple(a for blk in out for a in blk)

    return prefix + body(), prefix + body()
