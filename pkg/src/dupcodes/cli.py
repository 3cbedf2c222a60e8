"""Command-line front end: ``python -m dupcodes <command> ...``.

Exit status is 0 on success, 1 on domain errors (``error:`` on stderr) and
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from typing import List, Optional

from . import analysis, codes, duplication, oracle, witness
from .alphabet import Alphabet, to_str, word
from .duplication import Derivation, DuplicationEvent, RuleKind
from .errors import DuplicationError, InternalProofViolation, WitnessTooLarge


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--q", type=int, default=4, help="alphabet size (default 4)")
    p.add_argument("--k", type=int, default=1, help="duplication length (default 1)")
    p.add_argument("--kind", choices=[k.value for k in RuleKind], default="rc")
    p.add_argument("--complement", help='pairing such as "0:3,1:2" (default a<->q-1-a)')
    p.add_argument("--json", action="store_true", help="emit JSON")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="dupcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    add("sig", help="signature of a word").add_argument("word")
    add("summary", help="k-summary of a word (after its short prefix)").add_argument("word")
    p = add("spaced", help="first properly spaced embedding of x in y")
    p.add_argument("x")
    p.add_argument("y")
    p = add("apply", help="apply one duplication")
    p.add_argument("word")
    p.add_argument("--i", type=int, required=True)
    p = add("replay", help="replay a derivation file")
    p.add_argument("word")
    p.add_argument("--derivation", required=True, help="JSON file ('-' for stdin)")
    p = add("channel", help="random duplications from a seed")
    p.add_argument("word")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="also write the derivation JSON here")

    code = add("code", help="k=1 optimal codes")
    csub = code.add_subparsers(dest="code_cmd", required=True)
    p = csub.add_parser("construct", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, default=10_000, help="max codewords to print")
    p = csub.add_parser("size", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p = csub.add_parser("decode", parents=[common])
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p = csub.add_parser("verify", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)

    p = add("meet", help="common descendant with derivations")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--max-len", type=int, help="length budget for the oracle fallback")

    add("bound", help="size bound for k >= 2")
    add("capacity", help="coding capacity")

    bench = add("bench", help="benchmarks")
    bsub = bench.add_subparsers(dest="bench_cmd", required=True)
    p = bsub.add_parser("decode", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=int, default=5, help="max duplications per trial")
    return parser


def _alphabet(args) -> Alphabet:
    if args.complement:
        return Alphabet.from_pairs(args.q, args.complement)
    return Alphabet(args.q)


def _w(s: str, A: Alphabet):
    try:
        return A.check(word(s))
    except ValueError as exc:
        if isinstance(exc, DuplicationError):
            raise
        raise DuplicationError(f"cannot parse word {s!r}") from None


def _threads() -> int:
    return max(1, int(os.environ.get("DUPLI_THREADS", "1")))


def _book(args, A):
    kind = RuleKind.parse(args.kind)
    if args.k != 1:
        raise DuplicationError("codes are constructed for k=1 only; see `bound` for k >= 2")
    if kind is RuleKind.ReverseComplement:
        return codes.construct_rc1(args.q, args.n, A)
    return codes.construct_pal1(args.q, args.n)


def _emit(args, text: str, obj) -> None:
    print(json.dumps(obj) if args.json else text)


def run(args) -> None:
    A = _alphabet(args)
    q = args.q
    kind = RuleKind.parse(args.kind)
    fmt = lambda w: to_str(w, q)

    if args.cmd == "sig":
        s = analysis.signature(_w(args.word, A), A)
        _emit(args, fmt(s), {"signature": fmt(s)})
    elif args.cmd == "summary":
        prefix, body = analysis.prefix_split(_w(args.word, A), args.k)
        s = analysis.summary(body, args.k)
        _emit(args, fmt(s), {"prefix": fmt(prefix), "summary": fmt(s)})
    elif args.cmd == "spaced":
        x, y = _w(args.x, A), _w(args.y, A)
        emb = analysis.properly_spaced(x, y, len(x))
        pos = None if emb is None else list(emb.positions)
        _emit(args, "none" if pos is None else " ".join(map(str, pos)), {"embedding": pos})
    elif args.cmd == "apply":
        out = duplication.apply(_w(args.word, A), DuplicationEvent(kind, args.i, args.k), A)
        _emit(args, fmt(out), {"word": fmt(out)})
    elif args.cmd == "replay":
        src = sys.stdin if args.derivation == "-" else open(args.derivation)
        with src:
            d = Derivation.from_json(json.load(src))
        out = duplication.replay(_w(args.word, A), d, A)
        _emit(args, fmt(out), {"word": fmt(out)})
    elif args.cmd == "channel":
        out, d = duplication.random_derivation(_w(args.word, A), args.t, args.k, kind, args.seed, A)
        if args.out:
            with open(args.out, "w") as f:
                json.dump(d.to_json(), f)
        if args.json:
            print(json.dumps({"word": fmt(out), "derivation": d.to_json()}))
        else:
            print(fmt(out))
            print(json.dumps(d.to_json()))
    elif args.cmd == "code":
        _code(args, A, fmt)
    elif args.cmd == "meet":
        _meet(args, A, kind, fmt)
    elif args.cmd == "bound":
        b = codes.bound_rck(q, args.k, kind)
        _emit(args, str(b), {"bound": str(b)})
    elif args.cmd == "capacity":
        c = codes.capacity(q, args.k, kind)
        _emit(args, str(c), {"base": c.base, "argument": c.argument, "value": c.value})
    elif args.cmd == "bench":
        _bench(args, A)


def _code(args, A, fmt):
    kind = RuleKind.parse(args.kind)
    if args.code_cmd == "size":
        size = codes.size_rc1(args.q, args.n) if kind is RuleKind.ReverseComplement \
            else codes.size_pal1(args.q, args.n)
        _emit(args, str(size), {"size": str(size)})
        return
    book = _book(args, A)
    if args.code_cmd == "construct":
        n = min(book.size, args.limit)
        if args.json:
            print(json.dumps({"size": book.size, "codewords": [fmt(book.unrank(j)) for j in range(n)]}))
        else:
            for j in range(n):
                print(fmt(book.unrank(j)))
        if n < book.size:
            print(f"... {book.size - n} more (raise --limit)", file=sys.stderr)
    elif args.code_cmd == "decode":
        c = book.decode(_w(args.word, A))
        _emit(args, fmt(c), {"codeword": fmt(c)})
    elif args.code_cmd == "verify":
        rep = oracle.verify_code(book, max_length=args.max_len, workers=_threads())
        obj = rep.to_json(args.q)
        if args.json:
            print(json.dumps(obj))
        else:
            print(f"codewords={obj['codewords']} pairs={obj['pairs']} "
                  f"intersecting={obj['intersecting_pairs']} seconds={obj['seconds']}")
            for a, b, z in obj["collisions"]:
                print(f"{a} {b} -> {z}")


def _meet(args, A, kind, fmt):
    x, y = _w(args.x, A), _w(args.y, A)
    k = args.k
    w = None
    source = "theorem"
    if kind is RuleKind.ReverseComplement and k == 1:
        if analysis.signature(x, A) != analysis.signature(y, A):
            print(json.dumps({"source": "theorem", "meet": False,
                              "reason": "signatures differ; cones are disjoint"}))
            return
        w = witness.meet_rc1(x, y, A)
    elif k >= 2 and kind is not RuleKind.Tandem and analysis.meet_guaranteed_k(x, y, k):
        w = witness.meet_k(x, y, k, kind, A)
    if w is None:
        source = "oracle"
        max_len = args.max_len or max(len(x), len(y)) + 4 * k
        m = oracle.cones_intersect(x, y, k, kind, A, max_length=max_len)
        if not m.found:
            print(json.dumps({"source": "oracle", "meet": None,
                              "reason": f"no common descendant up to length {max_len}"}))
            return
        w = witness.MeetWitness(m.z, m.dx, m.dy)
    print(json.dumps({"source": source, "meet": True, **w.to_json(args.q)}))


def _bench(args, A):
    kind = RuleKind.parse(args.kind)
    book = _book(args, A)
    ok = 0
    letters = 0
    spent = 0.0
    for trial in range(args.trials):
        rng = random.Random(args.seed * 1_000_003 + trial)
        c = book.unrank(rng.randrange(book.size))
        t = rng.randint(0, args.t)
        z, _ = duplication.random_derivation(c, t, 1, kind, rng.getrandbits(32), A)
        t0 = time.perf_counter()
        got = book.decode(z)
        spent += time.perf_counter() - t0
        ok += got == c
        letters += len(z)
    spent = max(spent, 1e-9)
    obj = {"trials": args.trials, "success_rate": ok / args.trials,
           "words_per_sec": round(args.trials / spent, 1),
           "letters_per_sec": round(letters / spent, 1)}
    if args.json:
        print(json.dumps(obj))
    else:
        print(" ".join(f"{k}={v}" for k, v in obj.items()))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        run(args)
    except (InternalProofViolation, WitnessTooLarge) as exc:
        print(f"error: internal: {exc}", file=sys.stderr)
        return 1
    except (DuplicationError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
