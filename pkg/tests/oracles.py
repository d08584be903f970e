"""Slow, independent reference computations used to cross-check the library.

Nothing here imports hopflab; inputs are plain lists of ints or Fractions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def gauss_jordan(rows, inv=None, sub=None, mul=None, zero=0):
    """Textbook reduced row echelon form; arithmetic hooks allow GF(p)."""
    inv = inv or (lambda a: Fraction(1) / a)
    sub = sub or (lambda a, b: a - b)
    mul = mul or (lambda a, b: a * b)
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != zero), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        s = inv(M[r][c])
        M[r] = [mul(s, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != zero:
                f = M[i][c]
                M[i] = [sub(a, mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return [row for row in M[:r]], pivots


def gauss_jordan_mod(rows, p):
    return gauss_jordan(
        [[x % p for x in r] for r in rows],
        inv=lambda a: pow(a, p - 2, p),
        sub=lambda a, b: (a - b) % p,
        mul=lambda a, b: (a * b) % p,
    )


def nullspace(rows, ncols):
    """Basis of {x : rows . x = 0} over Q."""
    R, piv = gauss_jordan([[Fraction(x) for x in r] for r in rows]) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(R, piv):
            v[c] = -row[f]
        out.append(v)
    return out


# -- Sweedler's algebra, written out by hand --------------------------------
# basis 1, g, x, gx
H4_MULT = {
    (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
    (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
    (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
    (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
}
H4_COMULT = {
    0: [(0, 0, 1)],
    1: [(1, 1, 1)],
    2: [(2, 0, 1), (1, 2, 1)],
    3: [(3, 1, 1), (0, 3, 1)],
}
H4_UNIT = [1, 0, 0, 0]


def integral_space(comult, unit, dim, left=True):
    """Functionals f with f(h_2) h_1 = f(h) 1 (left) or f(h_1) h_2 = f(h) 1."""
    eqs = []
    for i in range(dim):
        for t in range(dim):
            row = [Fraction(0)] * dim
            for j, k, c in comult[i]:
                outer, inner = (j, k) if left else (k, j)
                if outer == t:
                    row[inner] += c
            row[i] -= unit[t]
            eqs.append(row)
    return nullspace(eqs, dim)


def distinguished_grouplike(comult, f, dim):
    """The g with f(h_1) h_2 = f(h) g, read off from an h with f(h) != 0."""
    i = next(i for i in range(dim) if f[i] != 0)
    g = [Fraction(0)] * dim
    for j, k, c in comult[i]:
        g[k] += c * f[j]
    return [x / f[i] for x in g]


# -- Jacobson radical by enumeration over GF(p) -----------------------------

def _times(mult, dim, p, a, b):
    out = [0] * dim
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    for k, c in mult.get((i, j), {}).items():
                        out[k] = (out[k] + x * y * c) % p
    return out


def _nilpotent(mult, dim, p, a):
    power = list(a)
    for _ in range(dim):
        if not any(power):
            return True
        power = _times(mult, dim, p, power, a)
    return not any(power)


def brute_radical(mult, dim, p):
    """{x : x a nilpotent for every a}, as a sorted list of vectors."""
    elems = [list(v) for v in itertools.product(range(p), repeat=dim)]
    J = []
    for x in elems:
        if all(_nilpotent(mult, dim, p, _times(mult, dim, p, x, a)) for a in elems):
            J.append(tuple(x))
    return sorted(J)


def group_mult(table):
    n = len(table)
    return {(i, j): {table[i][j]: 1} for i in range(n) for j in range(n)}
