"""Polynomials over GF(2) and arithmetic in GF(2^m).

A polynomial is stored as a nonnegative Python integer whose bit ``j`` is the
coefficient of ``x**j``.  :class:`BinaryPolynomial` wraps that integer so the
usual operators work; the module-level ``poly_*`` functions accept either form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

NEG_INF = float("-inf")
MAX_TABLE_DEGREE = 16


def _clmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while da >= db:
        shift = da - db
        q |= 1 << shift
        a ^= b << shift
        da = a.bit_length() - 1
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _mulmod(a: int, b: int, p: int) -> int:
    return _mod(_clmul(a, b), p)


def _powmod(a: int, e: int, p: int) -> int:
    result = 1
    a = _mod(a, p)
    while e:
        if e & 1:
            result = _mulmod(result, a, p)
        a = _mulmod(a, a, p)
        e >>= 1
    return _mod(result, p)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    """Polynomial over GF(2) packed into an integer (LSB = constant term)."""

    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("coefficient mask must be nonnegative")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BinaryPolynomial":
        v = 0
        for e in exponents:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinaryPolynomial":
        v = 0
        for j, b in enumerate(bits):
            if b:
                v |= 1 << j
        return cls(v)

    @classmethod
    def from_hex(cls, text: str) -> "BinaryPolynomial":
        return cls(int(text, 16))

    @property
    def degree(self) -> Union[int, float]:
        """Degree, or ``-inf`` for the zero polynomial."""
        return self.value.bit_length() - 1 if self.value else NEG_INF

    def coefficients(self, length: int | None = None) -> list[int]:
        if length is None:
            length = max(self.value.bit_length(), 1)
        return [(self.value >> j) & 1 for j in range(length)]

    def exponents(self) -> list[int]:
        return [j for j in range(self.value.bit_length()) if (self.value >> j) & 1]

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def reciprocal(self) -> "BinaryPolynomial":
        """``x**deg * p(1/x)``; the zero polynomial maps to itself."""
        if not self.value:
            return self
        d = self.value.bit_length()
        return BinaryPolynomial(int(format(self.value, f"0{d}b")[::-1], 2))

    def to_hex(self) -> str:
        return format(self.value, "x")

    def __add__(self, other):
        return BinaryPolynomial(self.value ^ _as_int(other))

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other):
        return BinaryPolynomial(_clmul(self.value, _as_int(other)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __bool__(self):
        return bool(self.value)

    def __int__(self):
        return self.value

    def __str__(self):
        if not self.value:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return "+".join(terms)


PolyLike = Union[BinaryPolynomial, int]


def _as_int(p: PolyLike) -> int:
    return p.value if isinstance(p, BinaryPolynomial) else int(p)


def poly_mul(a: PolyLike, b: PolyLike) -> BinaryPolynomial:
    """Carry-less product over GF(2)."""
    return BinaryPolynomial(_clmul(_as_int(a), _as_int(b)))


def poly_divmod(a: PolyLike, b: PolyLike) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``.

    Raises ZeroDivisionError when ``b`` is zero.
    """
    q, r = _divmod(_as_int(a), _as_int(b))
    return BinaryPolynomial(q), BinaryPolynomial(r)


def x_pow_n_minus_1(n: int) -> BinaryPolynomial:
    return BinaryPolynomial((1 << n) | 1)


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors by trial division (fine for n < 2**64 with small factors)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_irreducible(p: PolyLike) -> bool:
    """Rabin's irreducibility test over GF(2)."""
    p = _as_int(p)
    m = p.bit_length() - 1
    if m < 1:
        return False
    x = 2
    if _powmod(x, 1 << m, p) != _mod(x, p):
        return False
    for q in prime_factors(m):
        h = _powmod(x, 1 << (m // q), p) ^ _mod(x, p)
        if _gcd(p, h) != 1:
            return False
    return True


def is_primitive(p: PolyLike, m: int) -> bool:
    """True iff ``p`` has degree ``m``, is irreducible, and ``x`` has order ``2**m - 1`` mod ``p``."""
    p = _as_int(p)
    if p.bit_length() - 1 != m or not p & 1:
        return False
    if not is_irreducible(p):
        return False
    order = (1 << m) - 1
    if _powmod(2, order, p) != 1:
        return False
    if m == 1:
        return True
    return all(_powmod(2, order // ell, p) != 1 for ell in prime_factors(order))


@lru_cache(maxsize=None)
def default_primitive_poly(m: int) -> BinaryPolynomial:
    """Smallest primitive polynomial of degree ``m`` when read as an integer."""
    if not 2 <= m <= 32:
        raise ValueError(f"extension degree m={m} outside supported range [2, 32]")
    for v in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_primitive(v, m):
            return BinaryPolynomial(v)
    raise AssertionError(f"no primitive polynomial of degree {m}")  # pragma: no cover


@dataclass(frozen=True)
class FieldContext:
    """GF(2^m) built on a primitive modulus; ``alpha`` is the residue of ``x``.

    Elements are integers < 2**m.  For ``m <= 16`` multiplication goes through
    log/antilog tables built once at construction.
    """

    m: int
    modulus: BinaryPolynomial = None  # type: ignore[assignment]
    n: int = field(init=False)
    _exp: np.ndarray | None = field(init=False, repr=False, compare=False)
    _log: np.ndarray | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        modulus = self.modulus
        if modulus is None:
            modulus = default_primitive_poly(self.m)
        elif not isinstance(modulus, BinaryPolynomial):
            modulus = BinaryPolynomial(int(modulus))
        if not is_primitive(modulus, self.m):
            raise ValueError(f"{modulus} is not a primitive polynomial of degree {self.m}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "n", (1 << self.m) - 1)
        exp = log = None
        if self.m <= MAX_TABLE_DEGREE:
            exp = np.zeros(2 * self.n, dtype=np.int64)
            log = np.full(self.n + 1, -1, dtype=np.int64)
            v, p, top = 1, modulus.value, 1 << self.m
            for i in range(self.n):
                exp[i] = v
                log[v] = i
                v <<= 1
                if v & top:
                    v ^= p
            exp[self.n:] = exp[: self.n]
            exp.flags.writeable = False
            log.flags.writeable = False
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    @property
    def uses_tables(self) -> bool:
        return self._exp is not None

    def alpha_pow(self, e: int) -> int:
        e %= self.n
        if self._exp is not None:
            return int(self._exp[e])
        return _powmod(2, e, self.modulus.value)

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._exp is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return _mulmod(a, b, self.modulus.value)

    def log(self, a: int) -> int:
        if not a:
            raise ValueError("log of zero")
        if self._log is not None:
            return int(self._log[a])
        # discrete log without tables is out of scope; callers stay on the table path
        raise NotImplementedError("discrete log requires m <= 16")

    def eval_poly(self, p: PolyLike, point: int) -> int:
        """Evaluate a GF(2)-coefficient polynomial at a field element (Horner)."""
        p = _as_int(p)
        acc = 0
        for j in range(p.bit_length() - 1, -1, -1):
            acc = self.mul(acc, point) ^ ((p >> j) & 1)
        return acc


def minimal_polynomial(ctx: FieldContext, coset) -> BinaryPolynomial:
    """Product of ``(x - alpha**j)`` over the members of a 2-cyclotomic coset.

    ``coset`` may be a :class:`~duadic.cosets.CyclotomicCoset` or any iterable
    of exponents.  Raises ArithmeticError if the product is not over GF(2).
    """
    members = getattr(coset, "members", coset)
    coeffs = [1]  # coefficients in GF(2^m), index = power of x
    for j in members:
        root = ctx.alpha_pow(int(j))
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= ctx.mul(c, root)
        coeffs = nxt
    value = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise ArithmeticError(
                f"coefficient of x^{i} lies outside GF(2); exponents {list(members)} are not a coset"
            )
        value |= c << i
    return BinaryPolynomial(value)


def gcd_identity_holds(a: int, m: int, l: int) -> bool:
    """Check ``gcd(a**m - 1, a**l - 1) == a**gcd(m, l) - 1``."""
    return math.gcd(a**m - 1, a**l - 1) == a ** math.gcd(m, l) - 1
