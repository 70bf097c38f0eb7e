"""Exact and certified minimum distance.

Two engines:

* :func:`exhaustive_min_weight` walks the whole message space in Gray order
  (one row XOR and popcount per codeword).  It is the ground truth for small
  dimensions.
* :func:`brouwer_zimmermann` enumerates low-weight messages over information
  sets and keeps a proven lower bound, stopping when it meets the lightest
  codeword found so far.

For cyclic codes the second engine uses a single window of ``k`` consecutive
coordinates.  Every cyclic shift of a codeword is again a codeword, so a word
missed after round ``r`` has at least ``r + 1`` ones in *every* length-``k``
window.  Summing over the ``n`` windows gives ``k * wt >= n * (r + 1)``.
The bound is then rounded up to the next weight the code can actually have
(see :func:`weight_residues`).
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Literal

import numpy as np

from . import _kernels
from .cyclic import CyclicCode, ExtendedCodeView, contains, generator_matrix
from .gf2matrix import BinaryMatrix, pack_rows, rref, rref_array

log = logging.getLogger(__name__)

ParityFilter = Literal["all", "odd_only"]
EXHAUSTIVE_CAP = 28
DEFAULT_BUDGET = 10**11


@dataclass
class DistanceCertificate:
    n: int
    k: int
    lower: int
    upper: int
    witness: int | None
    status: str
    evaluations: int = 0
    seconds: float = 0.0
    rounds: int = 0
    parity_filter: str = "all"
    engine: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def distance(self) -> int:
        if not self.certified:
            raise ValueError("distance not certified (partial certificate)")
        return self.upper

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lower": self.lower,
            "upper": self.upper,
            "status": self.status,
            "witness_hex": format(self.witness, "x") if self.witness is not None else None,
            "evaluations": self.evaluations,
            "seconds": round(self.seconds, 3),
            "rounds": self.rounds,
            "parity_filter": self.parity_filter,
            "engine": self.engine,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DistanceCertificate":
        w = d.get("witness_hex")
        return cls(d["n"], d["k"], d["lower"], d["upper"], int(w, 16) if w else None, d["status"],
                   d.get("evaluations", 0), d.get("seconds", 0.0), d.get("rounds", 0),
                   d.get("parity_filter", "all"), d.get("engine", ""))


def _generator(code) -> tuple[BinaryMatrix, bool]:
    if isinstance(code, CyclicCode):
        return generator_matrix(code), True
    if isinstance(code, ExtendedCodeView):
        return code.generator_matrix, False
    if isinstance(code, BinaryMatrix):
        red, piv = rref(code.rows, code.ncols)
        return BinaryMatrix(tuple(red), code.ncols), False
    raise TypeError(f"unsupported code type {type(code).__name__}")


def in_code(code, word: int) -> bool:
    if isinstance(code, CyclicCode):
        return contains(code, word)
    G, _ = _generator(code)
    red, piv = rref(G.rows, G.ncols)
    for row, p in zip(red, piv):
        if word >> p & 1:
            word ^= row
    return word == 0


def _doubly_even_basis(rows) -> bool:
    if any(r.bit_count() % 4 for r in rows):
        return False
    return all((rows[i] & rows[j]).bit_count() % 2 == 0
               for i in range(len(rows)) for j in range(i + 1, len(rows)))


def weight_residues(G: BinaryMatrix) -> frozenset[int]:
    """Residues mod 4 that codeword weights can take, proven from the basis.

    If the parity-extended code is doubly-even, a weight ``w`` satisfies
    ``w + (w mod 2) = 0 (mod 4)``, so ``w`` is 0 or 3 mod 4.
    """
    rows = G.rows
    if all(r.bit_count() % 2 == 0 for r in rows):
        return frozenset({0}) if _doubly_even_basis(rows) else frozenset({0, 2})
    if _doubly_even_basis(G.append_parity_column().rows):
        return frozenset({0, 3})
    return frozenset(range(4))


def _round_up(x: int, residues: frozenset[int], odd_only: bool) -> int:
    while x % 4 not in residues or (odd_only and not x & 1):
        x += 1
    return x


# ---------------------------------------------------------------------------


def exhaustive_min_weight(code, parity_filter: ParityFilter = "all", cap: int = EXHAUSTIVE_CAP) -> DistanceCertificate:
    """Exact minimum (odd) weight by enumerating all ``2^k`` codewords."""
    G, _ = _generator(code)
    n, k = G.ncols, G.nrows
    if k > cap:
        raise ValueError(f"dimension {k} exceeds exhaustive cap {cap}; use brouwer_zimmermann")
    t0 = time.perf_counter()
    if k == 0:
        raise ValueError("zero code has no nonzero codewords")
    W = pack_rows(G.to_array())
    m_any, msg_any, m_odd, msg_odd, _, _ = _kernels.gray_min_weights(W)
    if parity_filter == "odd_only":
        if msg_odd < 0:
            raise ValueError("code has no odd-weight codewords")
        best, msg = int(m_odd), int(msg_odd)
    else:
        best, msg = int(m_any), int(msg_any)
    witness = 0
    for i in range(k):
        if msg >> i & 1:
            witness ^= G.rows[i]
    return DistanceCertificate(n, k, best, best, witness, "certified", (1 << k) - 1,
                               time.perf_counter() - t0, k, parity_filter, "exhaustive",
                               {"min_odd": int(m_odd) if msg_odd >= 0 else None})


@dataclass
class _InfoSet:
    rows: list[int]  # full systematic rows, row i pivots at info[i]
    info: list[int]
    P: np.ndarray  # rows restricted to the redundancy columns, packed
    new_rank: int


def _make_info_set(rows, n, info, new_rank) -> _InfoSet:
    k = len(rows)
    arr = BinaryMatrix(tuple(rows), n).to_array()
    red_cols = [c for c in range(n) if c not in set(info)]
    P = pack_rows(arr[:, red_cols]) if red_cols else np.zeros((k, 1), np.uint64)
    return _InfoSet(list(rows), list(info), P, new_rank)


def information_sets(G: BinaryMatrix, cyclic: bool) -> list[_InfoSet]:
    """Greedy chain of information sets.

    Cyclic codes get one window ``[0, k)``.  Otherwise each step pivots on
    unused columns first and records how many pivots were new.
    """
    n, k = G.ncols, G.nrows
    if cyclic:
        red, piv = rref(G.rows, n, list(range(n)))
        if piv != list(range(k)):
            raise AssertionError("leading window of a cyclic code is not an information set")
        return [_make_info_set(red, n, piv, k)]
    used: set[int] = set()
    out = []
    while len(used) < n:
        order = [c for c in range(n) if c not in used] + sorted(used)
        red, piv = rref(G.rows, n, order)
        new = sum(1 for p in piv if p not in used)
        if new == 0:
            break
        out.append(_make_info_set(red, n, piv, new))
        used |= set(piv)
    return out


def brouwer_zimmermann(
    code,
    budget: int = DEFAULT_BUDGET,
    parity_filter: ParityFilter = "all",
    use_cyclic: bool | None = None,
    resume: dict | None = None,
    on_round: Callable[[dict], None] | None = None,
    threads: int | None = None,
) -> DistanceCertificate:
    """Certified minimum weight (or minimum odd weight).

    ``budget`` caps the number of codeword evaluations; when the next round
    would overrun it the function returns a partial certificate.  ``resume``
    takes a state dict previously passed to ``on_round``.
    """
    if threads:
        import numba

        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    t0 = time.perf_counter()
    G, is_cyclic = _generator(code)
    n, k = G.ncols, G.nrows
    if k < 1:
        raise ValueError("zero code")
    cyclic = is_cyclic if use_cyclic is None else (use_cyclic and is_cyclic)
    odd_only = parity_filter == "odd_only"
    sets = information_sets(G, cyclic)
    residues = weight_residues(G)
    if odd_only and not any(r & 1 for r in residues):
        raise ValueError("code has no odd-weight codewords")

    def proven(r: int) -> int:
        # lower bound once all messages of weight <= r have been enumerated
        if r >= k:
            return n + 1
        if cyclic:
            raw = -(-n * (r + 1) // k)
        else:
            raw = sum(max(0, r + 1 - (k - s.new_rank)) for s in sets)
        return _round_up(max(raw, 1), residues, odd_only)

    upper, witness, done, evaluations = n + 1, None, 0, 0
    for r in G.rows:
        wt = r.bit_count()
        if wt < upper and (not odd_only or wt & 1):
            upper, witness = wt, r
    if resume:
        if resume.get("n") != n or resume.get("k") != k:
            raise ValueError("resume state belongs to a different code")
        done = int(resume["rounds"])
        evaluations = int(resume.get("evaluations", 0))
        if resume.get("witness_hex") and resume["upper"] < upper:
            upper, witness = int(resume["upper"]), int(resume["witness_hex"], 16)

    while True:
        lower = min(proven(done), upper)
        if lower >= upper or done >= k:
            break
        r = done + 1
        cost = math.comb(k, r) * len(sets)
        if evaluations + cost > budget:
            log.info("budget exhausted before round %d (need %d more)", r, cost)
            break
        for s in sets:
            best, combo = _kernels.scan_fixed_weight(s.P, r, upper, odd_only)
            if best < upper:
                word = 0
                for i in combo:
                    word ^= s.rows[int(i)]
                assert word.bit_count() == best
                upper, witness = int(best), word
        evaluations += cost
        done = r
        log.debug("round %d: lower %d upper %d", r, proven(done), upper)
        if on_round is not None:
            on_round({"n": n, "k": k, "rounds": done, "upper": upper, "evaluations": evaluations,
                      "witness_hex": format(witness, "x") if witness is not None else None,
                      "lower": min(proven(done), upper)})

    if witness is None:
        raise ValueError("no codeword matches the parity filter")
    lower = min(proven(done), upper)
    status = "certified" if lower >= upper else "partial"
    return DistanceCertificate(n, k, lower, upper, witness, status, evaluations,
                               time.perf_counter() - t0, done, parity_filter,
                               "bz-cyclic" if cyclic else "bz",
                               {"information_sets": len(sets), "weight_residues_mod4": sorted(residues)})


def random_information_set_upper(code, trials: int, seed: int = 0, max_message_weight: int = 2) -> int:
    """Lightest codeword seen over ``trials`` random information sets.

    Each trial permutes the columns, row-reduces, and tries every message of
    weight ``<= max_message_weight``.  Seeded, so the result is reproducible.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    G, _ = _generator(code)
    n, k = G.ncols, G.nrows
    best = min(G.row_weights())
    rng = np.random.default_rng(seed)
    dense = G.to_array()
    for _ in range(trials):
        perm = rng.permutation(n)
        red, piv = rref_array(dense, perm)
        red_cols = np.setdiff1d(np.arange(n), piv)
        P = pack_rows(red[:, red_cols])
        for w in range(1, min(max_message_weight, k) + 1):
            b, _c = _kernels.scan_fixed_weight(P, w, best, False)
            best = min(best, int(b))
    return best


def min_odd_weight(code, cap: int = EXHAUSTIVE_CAP, budget: int = DEFAULT_BUDGET) -> DistanceCertificate:
    """Minimum odd weight; exhaustive when ``k <= cap``, else Brouwer-Zimmermann on odd words."""
    if isinstance(code, CyclicCode) and 0 in code.defining_set:
        raise ValueError("0 is in the defining set: every codeword has even weight")
    G, _ = _generator(code)
    if G.nrows <= cap:
        return exhaustive_min_weight(code, "odd_only", cap)
    return brouwer_zimmermann(code, budget=budget, parity_filter="odd_only")


def minimum_distance(code, engine: str = "auto", budget: int = DEFAULT_BUDGET, **kw) -> DistanceCertificate:
    G, _ = _generator(code)
    if engine == "exhaustive" or (engine == "auto" and G.nrows <= 16):
        return exhaustive_min_weight(code)
    return brouwer_zimmermann(code, budget=budget, **kw)
