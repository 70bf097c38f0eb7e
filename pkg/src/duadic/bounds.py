"""Lower bounds on minimum distance from defining sets.

``bch_bound`` looks for the longest run of consecutive residues (wrapping
through 0).  ``amplified_bch_bound`` does the same after multiplying the set
by every unit, which amounts to choosing a different primitive n-th root of
unity as reference.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable

import numpy as np

from .cosets import DefiningSet, units, weight_defining_set

FULL_SCAN_LIMIT = 1 << 15


@dataclass(frozen=True)
class BoundReport:
    bound: int
    witness_unit: int
    run_start: int
    run_length: int

    def to_dict(self) -> dict:
        d = asdict(self)
        return {"bound": d["bound"], "unit": d["witness_unit"],
                "run_start": d["run_start"], "run_length": d["run_length"]}


def _longest_run(mask: np.ndarray) -> tuple[int, int]:
    """(start, length) of the longest circular run of True; ties -> smallest start."""
    n = len(mask)
    gaps = np.flatnonzero(~mask)
    if not len(gaps):
        raise ValueError("defining set is all of Z_n; not a code")
    starts = (gaps + 1) % n
    lengths = np.diff(np.append(gaps, gaps[0] + n)) - 1
    best = lengths.max()
    if best == 0:
        return 0, 0
    return int(starts[lengths == best].min()), int(best)


def bch_bound(T: DefiningSet) -> BoundReport:
    start, length = _longest_run(T.mask)
    return BoundReport(min(length + 1, T.n), 1, start, length)


def _run_lengths_for_units(T: DefiningSet, us: np.ndarray) -> np.ndarray:
    n = T.n
    out = np.empty(len(us), dtype=np.int64)
    mask = np.zeros(n, dtype=bool)
    for i, u in enumerate(us):
        mask[:] = False
        mask[(T.members * int(u)) % n] = True
        out[i] = _longest_run(mask)[1]
    return out


def _orbit(u: int, n: int) -> set[int]:
    out, x = set(), u % n
    while x not in out:
        out.add(x)
        out.add((-x) % n)
        x = (2 * x) % n
    return out


def candidate_units(n: int, m: int | None = None, sample: int = 64, seed: int = 0,
                    full_scan_limit: int = FULL_SCAN_LIMIT) -> np.ndarray:
    """Units worth trying, one per class under ``u ~ 2u ~ -u``.

    Up to ``full_scan_limit`` this is every class.  Beyond it: the lemma units
    ``(2^((m-1)/2) - 1)^-1`` and ``(2^((m+1)/2) - 1)^-1`` plus a seeded sample.
    """
    if n <= full_scan_limit:
        seen = np.zeros(n, dtype=bool)
        reps = []
        for u in units(n):
            u = int(u)
            if not seen[u]:
                reps.append(u)
                seen[list(_orbit(u, n))] = True
        return np.array(reps, dtype=np.int64)
    if m is None:
        m = n.bit_length()
    reps = {1}
    for e in ((m - 1) // 2, (m + 1) // 2):
        v = (1 << e) - 1
        if v > 1 and math.gcd(v, n) == 1:
            reps.add(pow(v, -1, n))
    rng = np.random.default_rng(seed)
    while len(reps) < sample + 3:
        u = int(rng.integers(1, n))
        if math.gcd(u, n) == 1:
            reps.add(u)
    return np.array(sorted(reps), dtype=np.int64)


def amplified_bch_bound(T: DefiningSet, sample: int = 64, seed: int = 0,
                        full_scan_limit: int = FULL_SCAN_LIMIT) -> BoundReport:
    """Best BCH bound over unit multiples of ``T``; the witness is the smallest maximising unit."""
    n = T.n
    m = n.bit_length() if (n + 1) & n == 0 else None
    reps = candidate_units(n, m, sample, seed, full_scan_limit)
    lengths = _run_lengths_for_units(T, reps)
    best = int(lengths.max())
    winners = set()
    for u in reps[lengths == best]:
        winners |= _orbit(int(u), n)
    if n > full_scan_limit:
        # sampled units are not closed under the orbit; keep only ones actually scanned
        winners = {int(u) for u in reps[lengths == best]}
    unit = min(winners)
    rep = bch_bound(DefiningSet(n, (T.members * unit) % n))
    assert rep.run_length == best
    return BoundReport(rep.bound, unit, rep.run_start, rep.run_length)


def verify_consecutive_multiples(T: DefiningSet, v: int, A: int) -> bool:
    """True iff ``{a*v mod n : 1 <= a <= A}`` is contained in ``T``."""
    if math.gcd(v, T.n) != 1:
        raise ValueError(f"{v} is not a unit modulo {T.n}")
    if A <= 0:
        return True
    a = np.arange(1, A + 1, dtype=np.int64)
    return bool(T.mask[(a * v) % T.n].all())


def square_root_bound(n: int, mu_is_minus_one: bool = True) -> int:
    """Smallest ``d`` with ``d^2 - d + 1 >= n`` (``mu = -1``) or ``d^2 >= n``."""
    d = math.isqrt(n)
    if d * d < n:
        d += 1
    if mu_is_minus_one:
        d = max(d - 1, 1)
        while d * d - d + 1 < n:
            d += 1
    return d


# ---------------------------------------------------------------------------
# Consecutive-multiple containments for T_[6,m,S], m odd.
# Each entry: (lemma, m mod modulus == residue, min m, v selector, A selector, S).
# v: "lo" -> 2^((m-1)/2) - 1, "hi" -> 2^((m+1)/2) - 1
# A: "h" -> 2^((m-1)/2), "h+2" -> 2^((m-1)/2) + 2

_LEMMA_CLAUSES = [
    (2, 12, 1, 13, "lo", "h+2", (0, 4, 5)),
    (2, 12, 1, 13, "hi", "h+2", (1, 2, 3)),
    (3, 12, 7, 7, "hi", "h", (0, 4, 5)),
    (3, 12, 7, 7, "lo", "h", (1, 2, 3)),
    (4, 6, 1, 7, "lo", "h+2", (0, 2, 3)),
    (4, 6, 1, 7, "lo", "h+2", (0, 3, 5)),
    (4, 6, 1, 7, "hi", "h+2", (1, 4, 5)),
    (4, 6, 1, 7, "hi", "h+2", (1, 2, 4)),
    (5, 12, 3, 3, "lo", "h", (0, 1, 5)),
    (5, 12, 3, 3, "hi", "h", (2, 3, 4)),
    (6, 12, 9, 9, "hi", "h+2", (0, 1, 5)),
    (6, 12, 9, 9, "lo", "h+2", (2, 3, 4)),
    (7, 6, 3, 9, "hi", "h", (0, 2, 5)),
    (7, 6, 3, 9, "hi", "h", (0, 1, 4)),
    (7, 6, 3, 9, "lo", "h", (1, 3, 4)),
    (7, 6, 3, 9, "lo", "h", (2, 3, 5)),
    (8, 12, 5, 5, "lo", "h", (0, 1, 2)),
    (8, 12, 5, 5, "hi", "h", (3, 4, 5)),
    (9, 12, 11, 11, "hi", "h+2", (0, 1, 2)),
    (9, 12, 11, 11, "lo", "h+2", (3, 4, 5)),
    (10, 6, 5, 5, "hi", "h+2", (0, 1, 3)),
    (10, 6, 5, 5, "hi", "h", (0, 3, 4)),
    (10, 6, 5, 5, "lo", "h+2", (2, 4, 5)),
    (10, 6, 5, 5, "lo", "h", (1, 2, 5)),
]


@dataclass(frozen=True)
class LemmaClause:
    lemma: int
    m: int
    v: int
    A: int
    S: tuple[int, ...]
    passed: bool
    unit_ok: bool
    degenerate: bool = False
    alt_v: int = 0
    alt_v_passes: bool = False

    def to_dict(self) -> dict:
        return {"lemma": self.lemma, "m": self.m, "v": self.v, "A": self.A,
                "S": list(self.S), "passed": self.passed, "unit_ok": self.unit_ok,
                "degenerate": self.degenerate, "alt_v": self.alt_v,
                "alt_v_passes": self.alt_v_passes}


def lemma_clauses(m: int) -> list[tuple[int, int, int, tuple[int, ...]]]:
    """``(lemma, v, A, S)`` for every containment claimed at this ``m``."""
    if m % 2 == 0 or m % 6 not in (1, 3, 5):
        raise ValueError(f"m={m} is not odd with m mod 6 in {{1, 3, 5}}")
    h = (m - 1) // 2
    out = []
    for lemma, mod, res, lo, vsel, asel, S in _LEMMA_CLAUSES:
        if m % mod != res or m < lo:
            continue
        v = (1 << h) - 1 if vsel == "lo" else (1 << (h + 1)) - 1
        A = (1 << h) + (2 if asel == "h+2" else 0)
        out.append((lemma, v, A, S))
    return out


def lemma_suite(m: int) -> list[LemmaClause]:
    """Check each stated containment at ``m``.

    ``alt_v`` is the other candidate unit; ``alt_v_passes`` records whether the
    containment holds with it instead, which helps diagnose a failing clause.
    """
    n = (1 << m) - 1
    h = (m - 1) // 2
    results = []
    cache: dict[tuple, DefiningSet] = {}
    for lemma, v, A, S in lemma_clauses(m):
        if S not in cache:
            cache[S] = weight_defining_set(6, m, S)
        unit_ok = math.gcd(v, n) == 1
        passed = unit_ok and verify_consecutive_multiples(cache[S], v, A)
        alt = (1 << (h + 1)) - 1 if v == (1 << h) - 1 else (1 << h) - 1
        alt_ok = math.gcd(alt, n) == 1 and verify_consecutive_multiples(cache[S], alt, A)
        results.append(LemmaClause(lemma, m, v, A, S, passed, unit_ok, v == 1, alt, alt_ok))
    return results


# ---------------------------------------------------------------------------
# Minimum-distance lower bounds stated for C_[6,m,S] (odd-like code), keyed by
# the residue class of m.  Values are offsets c in 2^((m-1)/2) + c.

_THEOREM_TABLE = {
    # m = 1 (mod 6), m >= 7
    (1, (0, 4, 5)): {1: 3, 7: 1},
    (1, (1, 2, 3)): {1: 3, 7: 1},
    (1, (0, 2, 3)): 3,
    (1, (1, 4, 5)): 3,
    (1, (0, 3, 5)): 3,
    (1, (1, 2, 4)): 3,
    # m = 3 (mod 6)
    (3, (0, 1, 5)): {3: 1, 9: 3},
    (3, (2, 3, 4)): {3: 1, 9: 3},
    (3, (0, 1, 4)): 1,
    (3, (2, 3, 5)): 1,
    (3, (0, 2, 5)): 1,
    (3, (1, 3, 4)): 1,
    # m = 5 (mod 6)
    (5, (0, 1, 2)): {5: 1, 11: 3},
    (5, (3, 4, 5)): {5: 1, 11: 3},
    (5, (0, 1, 3)): 3,
    (5, (2, 4, 5)): 3,
    (5, (0, 3, 4)): 1,
    (5, (1, 2, 5)): 1,
}


def theorem_covers(m: int, S: Iterable[int]) -> bool:
    S = tuple(sorted(set(S)))
    if m % 2 == 0 or (m % 6 == 1 and m < 7):
        return False
    return (m % 6, S) in _THEOREM_TABLE


def theorem_bound(m: int, S: Iterable[int]) -> int:
    """Stated lower bound on d(C_[6,m,S]); ValueError for uncovered ``(m, S)``."""
    S = tuple(sorted(set(S)))
    if not theorem_covers(m, S):
        raise ValueError(f"no stated bound for m={m}, S={set(S)}")
    entry = _THEOREM_TABLE[(m % 6, S)]
    c = entry[m % 12] if isinstance(entry, dict) else entry
    return (1 << ((m - 1) // 2)) + c


def theorem_dual_bound(m: int, S: Iterable[int]) -> int:
    """Stated lower bound on the dual (even-like) code: one more than the odd-like bound."""
    return theorem_bound(m, S) + 1


def theorem_extended_bound(m: int, S: Iterable[int]) -> int:
    if not theorem_covers(m, S):
        raise ValueError(f"no stated bound for m={m}, S={set(S)}")
    return (1 << ((m - 1) // 2)) + 4


def theorem_covered_sets(m: int) -> list[tuple[int, ...]]:
    return sorted(S for (res, S) in _THEOREM_TABLE if res == m % 6 and theorem_covers(m, S))
