"""Exact scalar fields: the rationals, prime fields and cyclotomic fields.

Elements are stored as raw canonical values and manipulated through the
owning field object. Rationals use ``gmpy2.mpq``; GF(p) uses ints in
``[0, p)``; Q(zeta_n) uses tuples of ``mpq`` of length phi(n), reduced
modulo the n-th cyclotomic polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Any, Sequence

from gmpy2 import mpq

from . import poly


class FieldMismatchError(ValueError):
    """Raised when scalars or matrices from different fields are combined."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _int_poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (low -> high), den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num[: len(den) - 1]), "inexact cyclotomic division"
    return out


_CYCLO: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n in _CYCLO:
        return _CYCLO[n]
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_divexact(num, list(cyclotomic_polynomial(d)))
    _CYCLO[n] = tuple(num)
    return _CYCLO[n]


def _parse_rational(obj: Any) -> mpq:
    if isinstance(obj, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(obj, (int, Fraction)):
        return mpq(obj)
    if type(obj).__name__ == "mpq":
        return obj
    if isinstance(obj, str):
        s = obj.strip()
        if not s:
            raise ValueError("empty rational")
        if "/" in s:
            a, b = s.split("/")
            if int(b) == 0:
                raise ValueError(f"zero denominator in {obj!r}")
            return mpq(int(a), int(b))
        return mpq(int(s))
    raise TypeError(f"cannot read {obj!r} as a rational")


def rational_text(a: mpq) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


class FieldSpec:
    """Common interface. Subclasses are frozen dataclasses, so equal
    parameters give equal (and hashable) fields."""

    zero: Any
    one: Any
    characteristic: int

    def add(self, a, b): raise NotImplementedError
    def sub(self, a, b): raise NotImplementedError
    def mul(self, a, b): raise NotImplementedError
    def neg(self, a): raise NotImplementedError
    def inv(self, a): raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def from_int(self, n: int): raise NotImplementedError
    def to_text(self, a) -> Any: raise NotImplementedError
    def parse(self, obj: Any): raise NotImplementedError
    def spec(self) -> dict: raise NotImplementedError
    def random_element(self, rng: random.Random, bound: int = 5): raise NotImplementedError

    def pow(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def scalar(self, value) -> "Scalar":
        return Scalar(self, self.parse(value))

    def sum(self, values):
        add = self.add
        s = self.zero
        for v in values:
            s = add(s, v)
        return s


@dataclass(frozen=True)
class Rationals(FieldSpec):
    characteristic = 0
    zero = mpq(0)
    one = mpq(1)

    def add(self, a, b): return a + b
    def sub(self, a, b): return a - b
    def mul(self, a, b): return a * b
    def neg(self, a): return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n: int): return mpq(n)
    def to_text(self, a) -> str: return rational_text(a)
    def parse(self, obj: Any): return _parse_rational(obj)
    def spec(self) -> dict: return {"kind": "Q"}

    def random_element(self, rng, bound=5):
        return mpq(rng.randint(-bound, bound), rng.randint(1, bound))

    def __repr__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class PrimeField(FieldSpec):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    zero = 0
    one = 1

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    def add(self, a, b): return (a + b) % self.p
    def sub(self, a, b): return (a - b) % self.p
    def mul(self, a, b): return (a * b) % self.p
    def neg(self, a): return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def from_int(self, n: int): return n % self.p
    def to_text(self, a) -> str: return str(a)

    def parse(self, obj: Any):
        if isinstance(obj, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(obj, int):
            return obj % self.p
        if isinstance(obj, str):
            if "/" in obj:
                a, b = obj.split("/")
                return self.div(int(a) % self.p, int(b) % self.p)
            return int(obj) % self.p
        if isinstance(obj, Fraction) or type(obj).__name__ == "mpq":
            return self.div(int(obj.numerator) % self.p, int(obj.denominator) % self.p)
        raise TypeError(f"cannot read {obj!r} in GF({self.p})")

    def spec(self) -> dict: return {"kind": "GF", "p": self.p}
    def random_element(self, rng, bound=5): return rng.randrange(self.p)

    def __repr__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class Cyclotomic(FieldSpec):
    """Q(zeta_n) with zeta_n the class of x modulo Phi_n."""

    n: int
    characteristic = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cyclotomic order must be positive")

    @cached_property
    def degree(self) -> int:
        return euler_phi(self.n)

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.n)

    @cached_property
    def _reduction(self) -> tuple[tuple[mpq, ...], ...]:
        # x^k mod Phi_n for k = phi .. 2*phi - 2
        m = self.degree
        table = []
        cur = [mpq(-c) for c in self.modulus[:m]]  # x^m
        for _ in range(max(m - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if top:
                for i in range(m):
                    cur[i] -= top * self.modulus[i]
        return tuple(table)

    @cached_property
    def zero(self):  # type: ignore[override]
        return (mpq(0),) * self.degree

    @cached_property
    def one(self):  # type: ignore[override]
        return (mpq(1),) + (mpq(0),) * (self.degree - 1)

    @cached_property
    def zeta(self):
        """Canonical primitive n-th root of unity."""
        return self.reduce_poly([mpq(0), mpq(1)])

    def reduce_poly(self, coeffs: Sequence) -> tuple:
        m = self.degree
        c = [mpq(x) for x in coeffs]
        # reduce very high degrees by repeated division first
        while len(c) > 2 * m - 1:
            top = c.pop()
            if top:
                k = len(c) - m
                for i in range(m):
                    c[k + i] -= top * self.modulus[i]
        c += [mpq(0)] * (m - len(c)) if len(c) < m else []
        out = c[:m]
        for k, coef in enumerate(c[m:]):
            if coef:
                row = self._reduction[k]
                for i in range(m):
                    out[i] += coef * row[i]
        return tuple(out)

    def add(self, a, b): return tuple(x + y for x, y in zip(a, b))
    def sub(self, a, b): return tuple(x - y for x, y in zip(a, b))
    def neg(self, a): return tuple(-x for x in a)

    def mul(self, a, b):
        m = self.degree
        if m == 1:
            return (a[0] * b[0],)
        if m == 2:
            # Phi_n = x^2 + c1 x + c0 for n in {3, 4, 6}
            c0, c1 = self.modulus[0], self.modulus[1]
            a0, a1 = a
            b0, b1 = b
            hi = a1 * b1
            return (a0 * b0 - c0 * hi, a0 * b1 + a1 * b0 - c1 * hi)
        prod = [mpq(0)] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:m]
        for k in range(m - 1):
            coef = prod[m + k]
            if coef:
                row = self._reduction[k]
                for i in range(m):
                    out[i] += coef * row[i]
        return tuple(out)

    def scale(self, a, r: mpq):
        return tuple(x * r for x in a)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        QQ_ = QQ
        f = poly.trim(QQ_, list(a))
        g = [mpq(c) for c in self.modulus]
        d, u, _ = poly.ext_gcd(QQ_, f, g)
        # d is a nonzero constant since Phi_n is irreducible
        assert len(d) == 1
        return self.reduce_poly([c / d[0] for c in u])

    def from_int(self, n: int):
        return (mpq(n),) + (mpq(0),) * (self.degree - 1)

    def from_rational(self, r):
        return (mpq(r),) + (mpq(0),) * (self.degree - 1)

    def to_text(self, a) -> list[str]:
        return [rational_text(x) for x in a]

    def parse(self, obj: Any):
        if isinstance(obj, (list, tuple)):
            if len(obj) > self.degree:
                return self.reduce_poly([_parse_rational(x) for x in obj])
            vals = [_parse_rational(x) for x in obj]
            return tuple(vals + [mpq(0)] * (self.degree - len(vals)))
        return self.from_rational(_parse_rational(obj))

    def spec(self) -> dict: return {"kind": "Cyc", "n": self.n}

    def random_element(self, rng, bound=5):
        return tuple(mpq(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(self.degree))

    def __repr__(self) -> str:
        return f"Cyc({self.n})"


QQ = Rationals()


def field_from_spec(spec: dict) -> FieldSpec:
    kind = spec.get("kind")
    if kind == "Q":
        return QQ
    if kind == "GF":
        return PrimeField(int(spec["p"]))
    if kind == "Cyc":
        return Cyclotomic(int(spec["n"]))
    raise ValueError(f"unknown field kind {kind!r}")


def root_of_unity(field: FieldSpec, n: int):
    """A primitive n-th root of unity in ``field`` (raises if none is available)."""
    if n == 1:
        return field.one
    if n == 2 and field.characteristic != 2:
        return field.neg(field.one)
    if isinstance(field, Cyclotomic) and field.n % n == 0:
        return field.pow(field.zeta, field.n // n)
    if isinstance(field, PrimeField) and (field.p - 1) % n == 0:
        for a in range(2, field.p):
            z = pow(a, (field.p - 1) // n, field.p)
            if all(pow(z, k, field.p) != 1 for k in range(1, n)):
                return z
    raise ValueError(f"{field!r} has no primitive {n}-th root of unity")


@dataclass(frozen=True)
class Scalar:
    """A field element bundled with its field, for user-facing arithmetic."""

    field: FieldSpec
    value: Any

    def _other(self, other) -> Any:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return Scalar(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return Scalar(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return Scalar(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return Scalar(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return Scalar(self.field, self.field.div(self.value, o))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return Scalar(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def text(self):
        return self.field.to_text(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field!r}, {self.text()})"
