#!/usr/bin/env python3
"""Brute-force generator for ne1e_corpus.txt.

h0(a l - sum b_i e_i) is computed directly as the dimension of the space of
degree-a plane forms vanishing to order max(b_i, 0) at p_i, with exact
rational linear algebra at the points (1:0:0),(0:1:0),(0:0:1),(1:1:1),(1:2:3).
The candidate corpus is every class of anticanonical degree <= 2 in the box
a in [0,5], c_i in [-3,3] with h0 > 0. Independent of the Rust peeling code.
"""
import itertools
from fractions import Fraction
from math import factorial

POINTS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
K = (-3, 1, 1, 1, 1, 1)


def dot(x, y):
    return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


def monomials(deg):
    return [(i, j, deg - i - j) for i in range(deg + 1) for j in range(deg + 1 - i)]


def deriv_eval(mono, orders, pt):
    # d^{orders} x^i y^j z^k evaluated at pt
    val = 1
    for e, o, x in zip(mono, orders, pt):
        if o > e:
            return 0
        val *= factorial(e) // factorial(e - o) * (x ** (e - o))
    return val


def rank(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    r = 0
    if not m:
        return 0
    cols = len(m[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


cache = {}


def h0(d):
    a = d[0]
    mult = tuple(max(-c, 0) for c in d[1:])
    if a < 0:
        return 0
    key = (a, mult)
    if key in cache:
        return cache[key]
    monos = monomials(a)
    rows = []
    for pt, m in zip(POINTS, mult):
        for tot in range(m):
            for o in monomials(tot):
                rows.append([deriv_eval(mo, o, pt) for mo in monos])
    val = len(monos) - rank(rows)
    cache[key] = val
    return val


corpus = []
for a in range(0, 6):
    for c in itertools.product(range(-3, 4), repeat=5):
        d = (a,) + c
        deg = -dot(d, K)
        if deg < 0 or deg > 2:
            continue
        if h0(d) > 0:
            corpus.append(d)
corpus.sort()

hist = {"h0_at_most_one": 0, "residual_not_effective": 0, "accepted": 0}
for d in corpus:
    if h0(d) <= 1:
        hist["h0_at_most_one"] += 1
        continue
    resid = tuple(-k - 2 * x for k, x in zip(K, d))
    if h0(resid) == 0:
        hist["residual_not_effective"] += 1
    else:
        hist["accepted"] += 1

with open("ne1e_corpus.txt", "w") as f:
    f.write("candidates %d\n" % len(corpus))
    for k in ("h0_at_most_one", "residual_not_effective", "accepted"):
        f.write("%s %d\n" % (k, hist[k]))
    for d in corpus:
        f.write("[%s]\n" % ",".join(map(str, d)))
print(len(corpus), hist)
