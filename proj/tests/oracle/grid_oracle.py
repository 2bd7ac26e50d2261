#!/usr/bin/env python3
"""Brute-force grid homology oracle used to freeze expected values in tests.

Independent of the C++ implementation: gradings use literal half-integer
point sets, rectangles are found by scanning all generator pairs, and ranks
use plain Python integers as GF(2) row vectors.
"""
import itertools
import sys
from fractions import Fraction
from collections import defaultdict


def I(A, B):
    return sum(1 for a in A for b in B if a[0] < b[0] and a[1] < b[1])


def J(A, B):
    return Fraction(I(A, B) + I(B, A), 2)


def maslov(pts, markers):
    m = J(pts, pts) - 2 * J(pts, markers) + J(markers, markers) + 1
    assert m.denominator == 1
    return int(m)


def gradings(n, O, X, sigma):
    pts = [(i, sigma[i]) for i in range(n)]
    Opts = [(Fraction(2 * i + 1, 2), Fraction(2 * O[i] + 1, 2)) for i in range(n)]
    Xpts = [(Fraction(2 * i + 1, 2), Fraction(2 * X[i] + 1, 2)) for i in range(n)]
    mo = maslov(pts, Opts)
    mx = maslov(pts, Xpts)
    a = Fraction(mo - mx, 2) - Fraction(n - 1, 2)
    assert a.denominator == 1
    return mo, int(a)


def in_cyc(v, lo, length, n):
    return (v - lo) % n < length


def rects(n, O, X, x, y):
    diff = [i for i in range(n) if x[i] != y[i]]
    if len(diff) != 2:
        return []
    i, j = diff
    if not (y[i] == x[j] and y[j] == x[i]):
        return []
    out = []
    for (c1, c2) in ((i, j), (j, i)):
        w = (c2 - c1) % n
        h = (x[c2] - x[c1]) % n
        r0 = x[c1]
        empty = True
        for k in range(n):
            if 0 < (k - c1) % n < w and 0 < (x[k] - r0) % n < h:
                empty = False
        oh = [k for k in range(n) if in_cyc(k, c1, w, n) and in_cyc(O[k], r0, h, n)]
        xh = [k for k in range(n) if in_cyc(k, c1, w, n) and in_cyc(X[k], r0, h, n)]
        out.append((empty, oh, xh))
    return out


def rank(rows):
    rows = [r for r in rows if r]
    basis = {}
    for r in rows:
        while r:
            p = r.bit_length() - 1
            if p in basis:
                r ^= basis[p]
            else:
                basis[p] = r
                break
    return len(basis)


def tilde(n, O, X):
    gens = list(itertools.permutations(range(n)))
    gr = {g: gradings(n, O, X, g) for g in gens}
    byb = defaultdict(list)
    for g in gens:
        byb[gr[g]].append(g)
    idx = {}
    for k, lst in byb.items():
        for t, g in enumerate(lst):
            idx[g] = t
    # differential d: (M,A) -> (M-1,A)
    cols = defaultdict(list)
    for x in gens:
        v = 0
        M, A = gr[x]
        for a in range(n):
            for b in range(a + 1, n):
                y = list(x)
                y[a], y[b] = y[b], y[a]
                y = tuple(y)
                for (e, oh, xh) in rects(n, O, X, x, y):
                    if e and not oh and not xh:
                        assert gr[y] == (M - 1, A)
                        v ^= 1 << idx[y]
        cols[(M, A)].append(v)
    ranks = {}
    for k, lst in byb.items():
        rout = rank(cols[k])
        rin = rank(cols.get((k[0] + 1, k[1]), []))
        h = len(lst) - rout - rin
        if h:
            ranks[k] = h
    return ranks, gr


def deconv(p, n):
    q = dict(p)
    res = {}
    for _ in range(n - 1):
        res = {}
        keys = sorted(q, reverse=True)
        work = dict(q)
        for k in keys:
            c = work.get(k, 0)
            if c == 0:
                continue
            assert c > 0, "negative"
            res[k] = c
            kk = (k[0] - 1, k[1] - 1)
            work[kk] = work.get(kk, 0) - c
            work[k] = 0
        assert all(v == 0 for v in work.values()), "inexact"
        q = res
    return q


if __name__ == "__main__":
    diagrams = {
        "unknot-1": (1, [0], [0]),
        "unknot-2": (2, [1, 0], [0, 1]),
        "unknot-3": (3, [2, 0, 1], [1, 2, 0]),
        "trefoil-lh": (5, [2, 3, 4, 0, 1], [0, 1, 2, 3, 4]),
    }
    for name, (n, O, X) in diagrams.items():
        r, gr = tilde(n, O, X)
        print(name, "tilde total", sum(r.values()), "ranks", sorted(r.items()))
        print("  generator gradings range M", min(v[0] for v in gr.values()), max(v[0] for v in gr.values()),
              "A", min(v[1] for v in gr.values()), max(v[1] for v in gr.values()))
        print("  hat", sorted(deconv(r, n).items()) if n > 1 else sorted(r.items()))
