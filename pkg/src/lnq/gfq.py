"""Arithmetic in GF(p^k).

Elements are the integers 0..q-1; the base-p digits of an element are the
coefficients of its polynomial representative, constant term first.
"""

from __future__ import annotations

import itertools

from .qscalar import is_prime, prime_power

TABLE_LIMIT = 1 << 16


def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m over GF(p)."""
    a = _poly_trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
        a = _poly_trim(a)
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree, lexicographic on (c_0, c_1, ...)."""
    for tail in itertools.product(range(p), repeat=degree):
        yield list(tail) + [1]


def is_irreducible(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(p, d):
            if not _poly_mod(f, g, p):
                return False
    return True


class FieldCtx:
    """GF(p^k) with a fixed monic irreducible modulus."""

    def __init__(self, p: int, k: int, modulus):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._digits = None
        self._exp = None
        self._log = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        return f"FieldCtx(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # encoding ---------------------------------------------------------------

    def to_poly(self, a: int) -> list[int]:
        if self._digits is not None:
            return list(self._digits[a])
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def from_poly(self, coeffs) -> int:
        value = 0
        for c in reversed(list(coeffs)[: self.k]):
            value = value * self.p + (c % self.p)
        return value

    def elements(self) -> range:
        return range(self.q)

    # arithmetic --------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return self.from_poly(x + y for x, y in zip(self.to_poly(a), self.to_poly(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        return self.from_poly(-x for x in self.to_poly(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_direct(self, a: int, b: int) -> int:
        prod = _poly_mul(_poly_trim(self.to_poly(a)), _poly_trim(self.to_poly(b)), self.p)
        return self.from_poly(_poly_mod(prod, self.modulus, self.p))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_direct(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(q)")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._mul_direct(out, base) if self.k > 1 else out * base % self.p
            base = self._mul_direct(base, base) if self.k > 1 else base * base % self.p
            e >>= 1
        return out

    # tables ------------------------------------------------------------------

    def _build_tables(self):
        self._digits = [tuple(self.to_poly(a)) for a in range(self.q)]
        if self.k == 1:
            return
        order = self.q - 1
        factors = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
        gen = next(
            g
            for g in range(2, self.q)
            if all(self.pow(g, order // f) != 1 for f in factors)
        )
        exp = [1] * (2 * order)
        log = [0] * self.q
        x = 1
        for e in range(order):
            exp[e] = x
            log[x] = e
            x = self._mul_direct(x, gen)
        for e in range(order, 2 * order):
            exp[e] = exp[e - order]
        self._exp, self._log = exp, log


def make_field(p: int, k: int = 1) -> FieldCtx:
    """GF(p^k) using the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    for f in monic_polys(p, k):
        if is_irreducible(f, p):
            return FieldCtx(p, k, f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_for_order(q: int) -> FieldCtx:
    return make_field(*prime_power(q))
