"""Cyclotomic cosets, weight-class defining sets and splittings of Z_n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


def base2_weight(i: int) -> int:
    """Number of ones in the binary expansion of ``i``."""
    if i < 0:
        raise ValueError("base-2 weight is defined for nonnegative integers")
    return int(i).bit_count()


def _weights(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(n, dtype=np.uint64)).astype(np.int64)


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple[int, ...]
    n: int

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x % self.n in self.members


def cyclotomic_coset(s: int, n: int) -> CyclotomicCoset:
    """Doubling orbit of ``s`` modulo odd ``n``."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"2-cyclotomic cosets need odd n, got {n}")
    s %= n
    orbit = [s]
    x = (2 * s) % n
    while x != s:
        orbit.append(x)
        x = (2 * x) % n
    members = tuple(sorted(orbit))
    return CyclotomicCoset(members[0], members, n)


def all_cosets(n: int) -> list[CyclotomicCoset]:
    """Partition of Z_n into 2-cyclotomic cosets, ordered by representative."""
    seen = np.zeros(n, dtype=bool)
    out = []
    for s in range(n):
        if not seen[s]:
            c = cyclotomic_coset(s, n)
            seen[list(c.members)] = True
            out.append(c)
    return out


class DefiningSet:
    """A subset of Z_n stored as a sorted residue array.

    Most operations also go through :attr:`mask`, a length-``n`` boolean array
    built lazily, so membership tests are O(1) at any size.
    """

    __slots__ = ("n", "members", "_mask")

    def __init__(self, n: int, members: Iterable[int]):
        self.n = int(n)
        if not isinstance(members, np.ndarray):
            members = list(members)
        arr = np.unique(np.asarray(members, dtype=np.int64) % self.n)
        arr.flags.writeable = False
        self.members = arr
        self._mask = None

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "DefiningSet":
        return cls(len(mask), np.flatnonzero(mask))

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            m = np.zeros(self.n, dtype=bool)
            m[self.members] = True
            m.flags.writeable = False
            self._mask = m
        return self._mask

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return (int(x) for x in self.members)

    def __contains__(self, x):
        return bool(self.mask[int(x) % self.n])

    def __eq__(self, other):
        if not isinstance(other, DefiningSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash((self.n, self.members.tobytes()))

    def __repr__(self):
        body = self.members.tolist()
        if len(body) > 12:
            body = f"{body[:6]}...({len(body)} members)"
        return f"DefiningSet(n={self.n}, {body})"

    def __or__(self, other):
        return DefiningSet.from_mask(self.mask | _coerce(other, self.n).mask)

    def __and__(self, other):
        return DefiningSet.from_mask(self.mask & _coerce(other, self.n).mask)

    def complement(self) -> "DefiningSet":
        """Z_n minus this set (0 included when absent)."""
        return DefiningSet.from_mask(~self.mask)

    def is_conjugate_closed(self) -> bool:
        return bool(self.mask[(2 * self.members) % self.n].all())

    def cosets(self) -> list[CyclotomicCoset]:
        """Cosets contained in the set; raises ValueError if it is not conjugate-closed."""
        if not self.is_conjugate_closed():
            raise ValueError("defining set is not a union of 2-cyclotomic cosets")
        seen = np.zeros(self.n, dtype=bool)
        out = []
        for s in self.members:
            if not seen[s]:
                c = cyclotomic_coset(int(s), self.n)
                seen[list(c.members)] = True
                out.append(c)
        return out

    def tolist(self) -> list[int]:
        return self.members.tolist()


def _coerce(x, n: int) -> DefiningSet:
    return x if isinstance(x, DefiningSet) else DefiningSet(n, x)


def weight_defining_set(r: int, m: int, S: Iterable[int]) -> DefiningSet:
    """``{1 <= i <= 2**m - 2 : w_2(i) mod r in S}``."""
    S = frozenset(int(s) % r for s in S)
    if r < 2 or m < 2:
        raise ValueError("need r >= 2 and m >= 2")
    if not S or len(S) == r:
        raise ValueError("S must be a proper nonempty subset of Z_r")
    n = (1 << m) - 1
    classes = _weights(n) % r
    mask = np.isin(classes, sorted(S))
    mask[0] = False
    return DefiningSet.from_mask(mask)


def scale_set(T: DefiningSet, u: int) -> DefiningSet:
    """``{u*t mod n : t in T}`` for a unit ``u``."""
    if math.gcd(u, T.n) != 1:
        raise ValueError(f"{u} is not a unit modulo {T.n}")
    return DefiningSet(T.n, (T.members * (u % T.n)) % T.n)


def is_splitting(s1: DefiningSet, s2: DefiningSet, mu: int) -> bool:
    if s1.n != s2.n:
        return False
    n = s1.n
    if math.gcd(mu, n) != 1:
        return False
    a, b = s1.mask, s2.mask
    if (a & b).any() or a[0] or b[0] or (a | b).sum() != n - 1:
        return False
    if not (s1.is_conjugate_closed() and s2.is_conjugate_closed()):
        return False
    return scale_set(s1, mu) == s2 and scale_set(s2, mu) == s1


def units(n: int) -> np.ndarray:
    u = np.arange(1, n, dtype=np.int64)
    return u[np.gcd(u, n) == 1] if n > 1 else np.array([0], dtype=np.int64)


@dataclass(frozen=True)
class ScanResult:
    r: int
    m: int
    S: tuple[int, ...]
    S_bar: tuple[int, ...]
    mu: int

    def to_dict(self) -> dict:
        return {"r": self.r, "m": self.m, "S": list(self.S), "S_bar": list(self.S_bar), "mu": self.mu}


def _find_mu(s1: DefiningSet, s2: DefiningSet) -> int | None:
    for mu in units(s1.n):
        if is_splitting(s1, s2, int(mu)):
            return int(mu)
    return None


def duadic_scan(r: int, m: int, any_unit: bool = False) -> list[ScanResult]:
    """All ``S`` with ``|S| = r/2`` whose weight sets split Z_n, one per complementary pair.

    By default only ``mu = -1`` is tried; ``any_unit=True`` searches every unit
    and reports the smallest that works.
    """
    if r % 2 or m % 2 == 0:
        raise ValueError("duadic_scan needs r even and m odd")
    n = (1 << m) - 1
    full = set(range(r))
    out = []
    for S in combinations(range(r), r // 2):
        S_bar = tuple(sorted(full - set(S)))
        if S_bar < S:
            continue
        t1 = weight_defining_set(r, m, S)
        t2 = weight_defining_set(r, m, S_bar)
        if is_splitting(t1, t2, n - 1):
            out.append(ScanResult(r, m, S, S_bar, n - 1))
        elif any_unit:
            mu = _find_mu(t1, t2)
            if mu is not None:
                out.append(ScanResult(r, m, S, S_bar, mu))
    return out


def parse_subset(text: str | Sequence[int]) -> tuple[int, ...]:
    """Parse ``"0,4,5"`` (or a sequence) into a sorted tuple."""
    if isinstance(text, str):
        items = [t for t in text.replace(" ", "").strip("{}").split(",") if t]
        return tuple(sorted({int(t) for t in items}))
    return tuple(sorted({int(t) for t in text}))
