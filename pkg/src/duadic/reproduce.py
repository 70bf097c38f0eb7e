"""Reference tables and end-to-end checks used by the CLI."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from . import bounds
from .cosets import DefiningSet, duadic_scan, is_splitting, weight_defining_set
from .cyclic import (CyclicCode, dual, even_weight_subcode, extend, from_defining_set,
                     generator_matrix, is_doubly_even, is_self_dual, weight_class_code)
from .distance import DistanceCertificate, brouwer_zimmermann, exhaustive_min_weight
from .gf2poly import FieldContext

log = logging.getLogger(__name__)

# Published S lists (one per complementary pair) keyed by m mod 6.
LISTED_SCAN = {
    1: [(0, 2, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5)],
    3: [(0, 1, 4), (0, 1, 5), (0, 2, 4), (0, 2, 5)],
    5: [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 4)],
}

# (S, S_bar, d(C_S), d(C_S^perp), d(C_Sbar), d(C_Sbar^perp)) at m = 7
TABLE1 = [
    ((0, 2, 3), (1, 4, 5), 15, 20, 15, 20),
    ((0, 3, 5), (1, 2, 4), 19, 20, 19, 20),
    ((0, 4, 5), (1, 2, 3), 15, 16, 15, 16),
]

# (label, r, S or None for the punctured Reed-Muller code, d, d_dual)
TABLE2 = [
    ("PRM_2(3,7)", None, None, 15, 16),
    ("C[2,7,{0}]", 2, (0,), 19, 20),
    ("C[2,7,{1}]", 2, (1,), 19, 20),
    ("C[4,7,{0,1}]", 4, (0, 1), 15, 20),
    ("C[4,7,{2,3}]", 4, (2, 3), 15, 20),
]

EXIT_OK, EXIT_MISMATCH, EXIT_PARTIAL = 0, 2, 3


def punctured_reed_muller_set(m: int, order: int) -> DefiningSet:
    """``{1 <= i <= n-1 : w_2(i) <= order}``."""
    n = (1 << m) - 1
    return DefiningSet(n, [i for i in range(1, n) if i.bit_count() <= order])


class Checkpoint:
    """JSON file of per-code engine state so long certifications can resume."""

    def __init__(self, path: str | os.PathLike | None):
        self.path = Path(path) if path else None
        self.data: dict = {}
        if self.path and self.path.exists():
            self.data = json.loads(self.path.read_text())

    def get(self, key: str) -> dict | None:
        return self.data.get(key)

    def put(self, key: str, state: dict):
        self.data[key] = state
        if self.path:
            tmp = self.path.with_suffix(self.path.suffix + ".tmp")
            tmp.write_text(json.dumps(self.data, indent=1, sort_keys=True))
            tmp.replace(self.path)


def certify(code: CyclicCode, engine: str = "bz", budget: int = 10**11, threads: int | None = None,
            checkpoint: Checkpoint | None = None, key: str | None = None) -> DistanceCertificate:
    key = key or f"{code.name}:{code.generator.to_hex()}"
    if checkpoint is not None:
        saved = checkpoint.get(key)
        if saved and saved.get("status") == "certified":
            return DistanceCertificate.from_dict(saved)
    if engine == "exhaustive":
        cert = exhaustive_min_weight(code)
    else:
        resume = checkpoint.get(key) if checkpoint is not None else None
        if resume and "rounds" not in resume:
            resume = None
        on_round = (lambda st: checkpoint.put(key, st)) if checkpoint is not None else None
        cert = brouwer_zimmermann(code, budget=budget, threads=threads, resume=resume, on_round=on_round)
    if checkpoint is not None and cert.certified:
        checkpoint.put(key, cert.to_dict())
    return cert


def _verdict(cert: DistanceCertificate, expected: int) -> str:
    if not cert.certified:
        return "partial"
    return "match" if cert.upper == expected else "mismatch"


def _row(label: str, code: CyclicCode, expected: int, cert: DistanceCertificate) -> dict:
    return {
        "code": label,
        "n": code.n,
        "k": code.dimension,
        "d": cert.upper if cert.certified else None,
        "lower": cert.lower,
        "upper": cert.upper,
        "expected_d": expected,
        "status": cert.status,
        "verdict": _verdict(cert, expected),
        "certificate": cert.to_dict(),
    }


def table1(ctx: FieldContext | None = None, **certify_kw) -> list[dict]:
    ctx = ctx or FieldContext(7)
    if ctx.m != 7:
        raise ValueError("the reference table is for m = 7")
    rows = []
    for S, S_bar, d, dd, d_bar, dd_bar in TABLE1:
        for subset, exp, exp_dual in ((S, d, dd), (S_bar, d_bar, dd_bar)):
            code = weight_class_code(ctx, 6, subset)
            rows.append(_row(code.name, code, exp, certify(code, **certify_kw)))
            dc = dual(code)
            rows.append(_row(dc.name, dc, exp_dual, certify(dc, **certify_kw)))
    return rows


def table2(ctx: FieldContext | None = None, **certify_kw) -> list[dict]:
    ctx = ctx or FieldContext(7)
    if ctx.m != 7:
        raise ValueError("the reference table is for m = 7")
    rows = []
    for label, r, S, d, dd in TABLE2:
        if r is None:
            code = from_defining_set(ctx, punctured_reed_muller_set(7, 3), name=label)
        else:
            code = weight_class_code(ctx, r, S)
        rows.append(_row(label, code, d, certify(code, **certify_kw)))
        dc = dual(code)
        rows.append(_row(f"{label}^perp", dc, dd, certify(dc, **certify_kw)))
    return rows


def table_exit_code(rows: Iterable[dict]) -> int:
    verdicts = {r["verdict"] for r in rows}
    if "mismatch" in verdicts:
        return EXIT_MISMATCH
    if "partial" in verdicts:
        return EXIT_PARTIAL
    return EXIT_OK


def code_info(m: int, r: int, S, ctx: FieldContext | None = None, matrix_checks: bool = True,
              seed: int = 0) -> dict:
    ctx = ctx or FieldContext(m)
    S = tuple(sorted(set(S)))
    code = weight_class_code(ctx, r, S)
    T = code.defining_set
    S_bar = tuple(sorted(set(range(r)) - set(S)))
    n = code.n
    duadic = m % 2 == 1 and is_splitting(T, weight_defining_set(r, m, S_bar), n - 1)
    info = {
        "m": m, "r": r, "S": list(S), "S_bar": list(S_bar),
        "n": n, "k": code.dimension, "defining_set_size": len(T),
        "generator_hex": code.generator.to_hex(),
        "prim_poly_hex": ctx.modulus.to_hex(),
        "duadic": duadic,
        "bch_bound": bounds.bch_bound(T).to_dict(),
        "amplified_bch_bound": bounds.amplified_bch_bound(T, seed=seed).to_dict(),
        "square_root_bound": bounds.square_root_bound(n, True) if duadic else None,
        "theorem_bound": bounds.theorem_bound(m, S) if r == 6 and bounds.theorem_covers(m, S) else None,
    }
    if 0 not in T:
        ev = even_weight_subcode(code)
        info["dual_is_even_weight_subcode"] = dual(code).generator == ev.generator
        info["dual_amplified_bch_bound"] = bounds.amplified_bch_bound(dual(code).defining_set, seed=seed).to_dict()
    if matrix_checks:
        ext = extend(code)
        info["properties"] = {
            "self_dual_extended": is_self_dual(ext),
            "doubly_even_extended": is_doubly_even(ext),
        }
    return info


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


def verify_scan(m: int) -> Check:
    got = sorted(res.S for res in duadic_scan(6, m))
    want = sorted(LISTED_SCAN[m % 6])
    return Check(f"scan m={m}", got == want, f"got {got}, listed {want}")


def verify_lemmas(m: int) -> list[Check]:
    out = []
    for c in bounds.lemma_suite(m):
        S = "{" + ",".join(map(str, c.S)) + "}"
        detail = f"v={c.v} A={c.A}" + (" (degenerate v=1)" if c.degenerate else "")
        if not c.passed and c.alt_v_passes:
            detail += f"; holds with v={c.alt_v} instead"
        out.append(Check(f"lemma {c.lemma} m={m} S={S}", c.passed, detail))
    return out


def verify_theorem_bounds(m: int) -> list[Check]:
    out = []
    for S in bounds.theorem_covered_sets(m):
        T = weight_defining_set(6, m, S)
        amp = bounds.amplified_bch_bound(T).bound
        tb = bounds.theorem_bound(m, S)
        out.append(Check(f"bound m={m} S={set(S)}", amp >= tb, f"amplified {amp} >= stated {tb}"))
        amp0 = bounds.amplified_bch_bound(T | [0]).bound
        out.append(Check(f"dual bound m={m} S={set(S)}", amp0 >= tb + 1,
                         f"amplified {amp0} >= stated {tb + 1}"))
    return out


def verify_code_properties(m: int, ctx: FieldContext | None = None) -> list[Check]:
    ctx = ctx or FieldContext(m)
    out = []
    for res in duadic_scan(6, m):
        for S in (res.S, res.S_bar):
            code = weight_class_code(ctx, 6, S)
            dc = dual(code)
            ok_dim = code.dimension == 1 << (m - 1) and dc.dimension == (1 << (m - 1)) - 1
            out.append(Check(f"dimensions m={m} S={set(S)}", ok_dim, f"k={code.dimension}, k_perp={dc.dimension}"))
            out.append(Check(f"dual=even subcode m={m} S={set(S)}",
                             dc.generator == even_weight_subcode(code).generator))
            ext = extend(code)
            sd, de = is_self_dual(ext), is_doubly_even(ext)
            out.append(Check(f"extended self-dual/doubly-even m={m} S={set(S)}", sd and de,
                             f"self_dual={sd} doubly_even={de}"))
            # the generator matrices of the dual and the code must be orthogonal
            Gd = generator_matrix(dc)
            out.append(Check(f"G_perp G^T = 0 m={m} S={set(S)}", Gd.gram_is_zero(generator_matrix(code))))
    return out


def verify(m: int, scan_only: bool = False, matrix_max_m: int = 11) -> list[Check]:
    checks = [verify_scan(m)]
    if scan_only:
        return checks
    checks += verify_lemmas(m)
    checks += verify_theorem_bounds(m)
    if m <= matrix_max_m:
        checks += verify_code_properties(m)
    return checks
