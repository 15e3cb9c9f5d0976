#!/usr/bin/env python3
"""Independent oracle for the ã_n probe residual table.

ã_n is read off a sympy series expansion of A'(-t)/A(-t) in commuting symbols,
and commutators with b_m are normal-ordered by a memoized recursive rewriter
that moves the rightmost a past its right neighbour.

Writes tests/fixtures/heisenberg_tilde.json.
"""
import json
import sys
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import sympy as sp

BOUND = 4


@lru_cache(maxsize=None)
def normal(word):
    """word: tuple of ('a'|'b', index). Returns dict {(bs, as): int}."""
    # rightmost a that is immediately followed by a b
    for p in range(len(word) - 2, -1, -1):
        if word[p][0] == 'a' and word[p + 1][0] == 'b':
            n, m = word[p][1], word[p + 1][1]
            out = {}
            swapped = word[:p] + (word[p + 1], word[p]) + word[p + 2:]
            middle = tuple(g for g in (('b', m - 1), ('a', n - 1)) if g[1] > 0)
            lowered = word[:p] + middle + word[p + 2:]
            for w in (swapped, lowered):
                for k, v in normal(w).items():
                    out[k] = out.get(k, 0) + v
            return {k: v for k, v in out.items() if v}
    bs = tuple(sorted(i for c, i in word if c == 'b'))
    as_ = tuple(sorted(i for c, i in word if c == 'a'))
    return {(bs, as_): 1}


def tilde(bound):
    t = sp.Symbol('t')
    a = sp.symbols(f'a1:{bound + 1}')
    A = 1 + sum(a[k - 1] * t**k for k in range(1, bound + 1))
    expr = sp.diff(A, t).subs(t, -t) / A.subs(t, -t)
    ser = sp.series(expr, t, 0, bound).removeO()
    out = []
    for n in range(1, bound + 1):
        poly = sp.Poly(sp.expand(ser.coeff(t, n - 1)), *a)
        elem = {}
        for exps, c in poly.terms():
            key = tuple(sorted(i + 1 for i, e in enumerate(exps) for _ in range(e)))
            elem[((), key)] = Fraction(int(c.p), int(c.q))
        out.append(elem)
    return out


def times_b(elem, m, left):
    out = {}
    for (bs, as_), c in elem.items():
        w = tuple(('b', i) for i in bs) + tuple(('a', i) for i in as_)
        w = (('b', m),) + w if left else w + (('b', m),)
        for k, v in normal(w).items():
            out[k] = out.get(k, 0) + c * v
    return out


def render(elem):
    terms = []
    for (bs, as_) in sorted(elem):
        c = elem[(bs, as_)]
        if c:
            terms.append({"b": list(bs), "a": list(as_),
                          "coeff": str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"})
    return terms


def main():
    cands = tilde(BOUND)
    residuals = []
    for n in range(1, BOUND + 1):
        for m in range(1, BOUND + 1):
            left = times_b(cands[n - 1], m, left=False)   # ã_n b_m
            right = times_b(cands[n - 1], m, left=True)   # b_m ã_n
            r = dict(left)
            for k, v in right.items():
                r[k] = r.get(k, 0) - v
            if n == m:
                r[((), ())] = r.get(((), ()), 0) - 1
            residuals.append({"n": n, "m": m, "terms": render(r)})
    doc = {
        "bound": BOUND,
        "candidates": [{"n": n + 1, "terms": render(c)} for n, c in enumerate(cands)],
        "residuals": residuals,
    }
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "fixtures" / "heisenberg_tilde.json"
    target.write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
