"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) modulo the
N-th cyclotomic polynomial, with arbitrary-precision rational coefficients.
No floating point anywhere; equality is coefficient-wise after promotion to
a common conductor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence, Union

Rational = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    # divide x^n - 1 by the product of Phi_d over proper divisors d
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_coeffs(d))
    return tuple(poly)


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> list:
    """Exact division of integer polynomials (den monic), ascending coeffs."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    assert all(c == 0 for c in num[:dd]), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple:
    """x^k mod Phi_n for k = 0 ... 2n, as integer coefficient rows."""
    phi = euler_phi(n)
    mod = cyclotomic_coeffs(n)
    rows = []
    row = [0] * phi
    for k in range(2 * n + 1):
        if k < phi:
            cur = [0] * phi
            cur[k] = 1
            rows.append(tuple(cur))
            row = list(cur)
        else:
            # multiply previous row by x, reduce the overflow coefficient
            top = row[phi - 1]
            row = [0] + row[:-1]
            if top:
                for j in range(phi):
                    row[j] -= top * mod[j]
            rows.append(tuple(row))
    return tuple(rows)


def _reduce(n: int, coeffs: Sequence[Fraction]) -> tuple:
    """Reduce an arbitrary-degree coefficient list mod Phi_n to the basis."""
    phi = euler_phi(n)
    rows = _reduction_rows(n)
    out = [_ZERO] * phi
    for k, c in enumerate(coeffs):
        if c:
            row = rows[k]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


class CycloNum:
    """An exact element of Q(zeta_N) in the reduced power basis."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Sequence[Rational], reduce: bool = False):
        self.N = N
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if reduce or len(cs) != euler_phi(N):
            self.coeffs = _reduce(N, cs)
        else:
            self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rational(q: Rational, N: int = 1) -> "CycloNum":
        cs = [Fraction(q)] + [_ZERO] * (euler_phi(N) - 1)
        return CycloNum(N, cs)

    @staticmethod
    def zero(N: int = 1) -> "CycloNum":
        return CycloNum.from_rational(0, N)

    @staticmethod
    def one(N: int = 1) -> "CycloNum":
        return CycloNum.from_rational(1, N)

    @staticmethod
    def root_of_unity(N: int, k: int = 1) -> "CycloNum":
        """zeta_N^k."""
        k %= N
        cs = [_ZERO] * (k + 1)
        cs[k] = _ONE
        return CycloNum(N, cs, reduce=True)

    # -- structure -----------------------------------------------------------

    def promote(self, M: int) -> "CycloNum":
        """Rewrite in Q(zeta_M) for N | M."""
        if M == self.N:
            return self
        if M % self.N:
            raise ValueError(f"{M} is not a multiple of conductor {self.N}")
        step = M // self.N
        cs = [_ZERO] * (euler_phi(self.N) * step + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                cs[i * step] = c
        return CycloNum(M, cs, reduce=True)

    def _pair(self, other: "CycloNum"):
        if self.N == other.N:
            return self, other
        M = lcm(self.N, other.N)
        return self.promote(M), other.promote(M)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def integer_value(self) -> int:
        v = self.rational_value()
        if v.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return v.numerator

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other)
        a, b = self._pair(other)
        return CycloNum(a.N, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.N, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self._pair(other)
        if a.is_rational():
            return b.scale(a.coeffs[0])
        if b.is_rational():
            return a.scale(b.coeffs[0])
        phi = len(a.coeffs)
        prod = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloNum(a.N, prod, reduce=True)

    __rmul__ = __mul__

    def scale(self, q: Rational) -> "CycloNum":
        q = Fraction(q)
        return CycloNum(self.N, [c * q for c in self.coeffs])

    def galois(self, k: int) -> "CycloNum":
        """Apply zeta -> zeta^k; requires gcd(k, N) = 1."""
        if gcd(k, self.N) != 1:
            raise ValueError(f"k={k} is not coprime to the conductor {self.N}")
        cs = [_ZERO] * self.N
        for i, c in enumerate(self.coeffs):
            if c:
                cs[(i * k) % self.N] += c
        return CycloNum(self.N, cs, reduce=True)

    def conjugate(self) -> "CycloNum":
        return self.galois(self.N - 1 if self.N > 1 else 1)

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycloNum.from_rational(1 / self.coeffs[0], self.N)
        mod = [Fraction(c) for c in cyclotomic_coeffs(self.N)]
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while any(c != 0 for c in r1):
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant gcd
        r0 = _poly_strip(r0)
        assert len(r0) == 1, "element shares a factor with the cyclotomic modulus"
        inv = [c / r0[0] for c in s0]
        return CycloNum(self.N, inv, reduce=True)

    # -- comparison / io -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # promote-aware equality; do not use as dict key

    def key(self) -> tuple:
        """Sortable canonical key (conductor, coefficient tuple)."""
        return (self.N, self.coeffs)

    def to_json(self) -> dict:
        return {"N": self.N, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(doc: dict) -> "CycloNum":
        return CycloNum(int(doc["N"]), [Fraction(s) for s in doc["coeffs"]])

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = f"z{self.N}" if i == 1 else f"z{self.N}^{i}"
                sign = "-" if c < 0 else ("+" if terms else "")
                terms.append(f"{sign}{mag}{var}" if terms or c < 0 else f"{mag}{var}")
        return "".join(terms) if len(terms) > 1 else terms[0]

    def __repr__(self):
        return f"CycloNum({self})"


def _poly_strip(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return _poly_strip([x - y for x, y in zip(a, b)])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_strip(out)


def _poly_divmod(a, b):
    a = _poly_strip(list(a))
    b = _poly_strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        a = _poly_strip([a[i] - (c * b[i - d] if 0 <= i - d < len(b) else 0)
                         for i in range(len(a))])
    return q, a


def add(x: CycloNum, y: CycloNum) -> CycloNum:
    return x + y


def mul(x: CycloNum, y: CycloNum) -> CycloNum:
    return x * y


def neg(x: CycloNum) -> CycloNum:
    return -x


def galois_act(x: CycloNum, k: int) -> CycloNum:
    return x.galois(k)


def is_rational(x: CycloNum) -> bool:
    return x.is_rational()
