"""Finite fields F_{l^m} as polynomials over F_l modulo a fixed irreducible.

Elements are little-endian coefficient tuples.  The modulus is the smallest
monic irreducible polynomial of the requested degree, where polynomials are
ordered by the integer ``sum(c_i * l**i)`` of their lower coefficients.  The
same integer encoding fixes the enumeration order of the field, so element
``k`` of :func:`enumerate_field` is the polynomial whose base-``l`` digits are
those of ``k``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

FIELD_CAP = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(l, m)`` with ``q = l**m`` and ``l`` prime, or None."""
    if q < 2:
        return None
    for l in range(2, q + 1):
        if q % l == 0:
            if not is_prime(l):
                return None
            m = 0
            while q % l == 0:
                q //= l
                m += 1
            return (l, m) if q == 1 else None
    return None


# -- polynomial helpers over F_l (little-endian lists, no trailing zeros) --

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, b, l):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], -1, l)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % l
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % l
        a = _trim(a)
    return a


def _monic_polys(l, deg):
    # monic polynomials of exact degree deg, in integer-encoding order
    for low in itertools.product(range(l), repeat=deg):
        yield list(reversed(low)) + [1]


def is_irreducible(poly, l: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(l, d):
            if not _polymod(poly, g, l):
                return False
    return True


def _int_to_coeffs(k: int, l: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        k, r = divmod(k, l)
        out.append(r)
    return tuple(out)


@dataclass(frozen=True)
class FieldSpec:
    """F_{l^m} given by characteristic, degree and a monic irreducible modulus.

    ``modulus`` has length ``m + 1`` and ends in 1.
    """

    l: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.l):
            raise ValueError(f"characteristic {self.l} is not prime")
        if self.m < 1:
            raise ValueError("degree must be positive")
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if any(not 0 <= c < self.l for c in self.modulus):
            raise ValueError("modulus coefficients out of range")
        if not is_irreducible(self.modulus, self.l):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.l}")

    @property
    def order(self) -> int:
        return self.l**self.m

    def __repr__(self):
        return f"FieldSpec(l={self.l}, m={self.m}, modulus={list(self.modulus)})"

    def element(self, coeffs) -> "FieldElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        coeffs = [c % self.l for c in coeffs]
        if len(coeffs) > self.m:
            coeffs = _polymod(coeffs, self.modulus, self.l)
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        return FieldElement(tuple(coeffs), self)

    def zero(self) -> "FieldElement":
        return FieldElement((0,) * self.m, self)

    def one(self) -> "FieldElement":
        return self.element(1)

    def gen(self) -> "FieldElement":
        """Residue class of x; for a prime field this reduces to 0."""
        return self.element([0, 1])

    def from_index(self, k: int) -> "FieldElement":
        return FieldElement(_int_to_coeffs(k, self.l, self.m), self)

    def to_json(self) -> dict:
        return {"l": self.l, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj) -> "FieldSpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["l"], obj["m"], tuple(obj["modulus"]))

    @cached_property
    def tables(self) -> "FieldTables":
        """Integer-indexed operation tables; only for small fields."""
        if self.order > 2**12:
            raise ValueError("tables are only built for fields of order <= 4096")
        return FieldTables.build(self)


@dataclass(frozen=True, eq=False)
class FieldTables:
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is -1
    frob: np.ndarray

    @classmethod
    def build(cls, spec: FieldSpec) -> "FieldTables":
        els = enumerate_field(spec)
        n = len(els)
        add = np.empty((n, n), dtype=np.int32)
        mul = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                add[i, j] = (a + b).index
                mul[i, j] = (a * b).index
        neg = np.array([(-a).index for a in els], dtype=np.int32)
        inv = np.array([a.inverse().index if a else -1 for a in els], dtype=np.int32)
        frob = np.array([frobenius(a).index for a in els], dtype=np.int32)
        return cls(add, mul, neg, inv, frob)


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]
    spec: FieldSpec = field(repr=False)

    def _check(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError("field elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        l = self.spec.l
        return FieldElement(tuple((a + b) % l for a, b in zip(self.coeffs, other.coeffs)), self.spec)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __neg__(self):
        l = self.spec.l
        return FieldElement(tuple(-a % l for a in self.coeffs), self.spec)

    def __mul__(self, other):
        other = self._check(other)
        l, m = self.spec.l, self.spec.m
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % l
        return self.spec.element(prod)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero in a finite field")
        # a^(q-2) = a^-1 in F_q
        return self ** (self.spec.order - 2)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __bool__(self):
        return any(self.coeffs)

    @property
    def index(self) -> int:
        """Position in :func:`enumerate_field`."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.spec.l + c
        return k

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + mono)
        return " + ".join(reversed(terms)) or "0"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def frobenius(a: FieldElement) -> FieldElement:
    """a -> a^l."""
    return a ** a.spec.l


def make_field(l: int, m: int = 1, cap: int = FIELD_CAP) -> FieldSpec:
    """Build F_{l^m} using the smallest monic irreducible modulus of degree m."""
    if not is_prime(l):
        raise ValueError(f"characteristic {l} is not prime")
    if m < 1:
        raise ValueError("degree must be positive")
    if l**m > cap:
        raise ValueError(f"field order {l}^{m} exceeds cap {cap}")
    if m == 1:
        return FieldSpec(l, 1, (0, 1))
    for poly in _monic_polys(l, m):
        if is_irreducible(poly, l):
            return FieldSpec(l, m, tuple(poly))
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_of_order(q: int) -> FieldSpec:
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pp)


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    return [spec.from_index(k) for k in range(spec.order)]


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest-index generator of the multiplicative group."""
    n = spec.order - 1
    primes = [r for r in range(2, n + 1) if n % r == 0 and is_prime(r)]
    for a in enumerate_field(spec)[1:]:
        if all(a ** (n // r) != spec.one() for r in primes):
            return a
    raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover
