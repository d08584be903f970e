"""Univariate polynomials over a field, as coefficient lists (lowest first).

Only what the rest of the package needs: division, gcd, extended gcd,
derivative, evaluation and exact root finding in the base field.
"""

from __future__ import annotations

import cmath
import itertools
from fractions import Fraction
from math import gcd as igcd

import mpmath


def trim(F, f: list) -> list:
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def add(F, f, g):
    n = max(len(f), len(g))
    z = F.zero
    return trim(F, [F.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)])


def sub(F, f, g):
    n = max(len(f), len(g))
    z = F.zero
    return trim(F, [F.sub(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)])


def mul(F, f, g):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(F, out)


def scale(F, f, c):
    return trim(F, [F.mul(c, a) for a in f])


def divmod_(F, f, g):
    g = trim(F, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(F, f)
    q = [F.zero] * max(len(r) - len(g) + 1, 0)
    lead_inv = F.inv(g[-1])
    while len(r) >= len(g):
        c = F.mul(r[-1], lead_inv)
        k = len(r) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = F.sub(r[k + i], F.mul(c, b))
        r = trim(F, r)
    return trim(F, q), r


def monic(F, f):
    f = trim(F, f)
    if not f:
        return f
    return scale(F, f, F.inv(f[-1]))


def gcd(F, f, g):
    f, g = trim(F, f), trim(F, g)
    while g:
        f, g = g, divmod_(F, f, g)[1]
    return monic(F, f)


def ext_gcd(F, f, g):
    """Return (d, u, v) with u f + v g = d (d not normalized)."""
    r0, r1 = trim(F, f), trim(F, g)
    u0, u1 = [F.one], []
    v0, v1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, sub(F, u0, mul(F, q, u1))
        v0, v1 = v1, sub(F, v0, mul(F, q, v1))
    return r0, u0, v0


def derivative(F, f):
    return trim(F, [F.mul(F.from_int(i), a) for i, a in enumerate(f)][1:])


def evaluate(F, f, x):
    acc = F.zero
    for a in reversed(f):
        acc = F.add(F.mul(acc, x), a)
    return acc


def power_of_linear(F, lam, s):
    """(t - lam)^s."""
    out = [F.one]
    lin = [F.neg(lam), F.one]
    for _ in range(s):
        out = mul(F, out, lin)
    return out


def squarefree_part(F, f):
    f = monic(F, f)
    if len(f) <= 2:
        return f
    df = derivative(F, f)
    if not df:
        return f
    g = gcd(F, f, df)
    return monic(F, divmod_(F, f, g)[0])


# -- roots in the base field -------------------------------------------------

def _rationalize(x: float, max_den: int = 10**8) -> Fraction:
    return Fraction(x).limit_denominator(max_den)


def _numeric_roots(coeffs: list[complex]) -> list[complex]:
    # coeffs lowest first; mpmath wants highest first
    hi = [mpmath.mpc(c.real, c.imag) for c in reversed(coeffs)]
    if len(hi) <= 1:
        return []
    if len(hi) == 2:
        return [complex(-hi[1] / hi[0])]
    with mpmath.workdps(40):
        try:
            rts = mpmath.polyroots(hi, maxsteps=400, extraprec=200)
        except mpmath.libmp.libhyper.NoConvergence:
            import numpy as np
            return [complex(z) for z in np.roots([complex(c) for c in hi])]
    return [complex(z) for z in rts]


def roots(F, f) -> list:
    """Distinct roots of f lying in the field F."""
    from .fields import Cyclotomic, PrimeField, Rationals

    f = trim(F, f)
    if len(f) <= 1:
        return []
    if isinstance(F, PrimeField):
        return [a for a in range(F.p) if F.is_zero(evaluate(F, f, a))]
    g = squarefree_part(F, f)
    found = []
    if isinstance(F, Rationals):
        for z in _numeric_roots([complex(float(c)) for c in g]):
            if abs(z.imag) > 1e-6:
                continue
            cand = F.parse(_rationalize(z.real))
            if F.is_zero(evaluate(F, g, cand)) and cand not in found:
                found.append(cand)
        return found
    if isinstance(F, Cyclotomic):
        return _cyclotomic_roots(F, g)
    raise NotImplementedError(f"root finding over {F!r}")


def _cyclotomic_roots(F, g) -> list:
    n, m = F.n, F.degree
    units = [k for k in range(1, n + 1) if igcd(k, n) == 1 and 2 * k <= n] or [1]
    if n <= 2:
        units = [1]

    def embed(k, elt):
        w = cmath.exp(2j * cmath.pi * k / n)
        return sum(complex(float(c)) * w**i for i, c in enumerate(elt))

    root_sets = []
    for k in units:
        root_sets.append(_numeric_roots([embed(k, c) for c in g]))
    # real unknowns c_0..c_{m-1}; one complex equation per embedding in `units`
    import numpy as np

    rows = []
    for k in units:
        w = cmath.exp(2j * cmath.pi * k / n)
        rows.append([(w**i).real for i in range(m)])
        if len(rows) < m:
            rows.append([(w**i).imag for i in range(m)])
    A = np.array(rows[:m], dtype=float)
    found = []
    combos = itertools.product(*root_sets[1:]) if len(root_sets) > 1 else [()]
    for count, rest in enumerate(combos):
        if count > 20000:
            break
        for z1 in root_sets[0]:
            zs = (z1,) + tuple(rest)
            rhs = []
            for z in zs:
                rhs.append(z.real)
                if len(rhs) < m:
                    rhs.append(z.imag)
            try:
                sol = np.linalg.solve(A, np.array(rhs[:m]))
            except np.linalg.LinAlgError:
                sol = np.linalg.lstsq(A, np.array(rhs[:m]), rcond=None)[0]
            cand = F.parse([_rationalize(float(x)) for x in sol])
            if cand not in found and F.is_zero(evaluate(F, g, cand)):
                found.append(cand)
        if len(found) == len(g) - 1:
            break
    return found
