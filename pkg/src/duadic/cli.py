"""Command-line entry point: ``duadic {code-info, table1, table2, verify}``.

Every option can also be set through an environment variable named
``DUADIC_<OPTION>`` (for example ``DUADIC_M=7``).

Exit codes: 0 when everything matches the published values, 2 on a
mismatch, 3 when a certificate is only partial (budget ran out).
"""

from __future__ import annotations

import csv
import io
import json
import logging
import sys

import click

from . import reproduce
from .cosets import parse_subset
from .gf2poly import BinaryPolynomial, FieldContext

SMALL_M = (5, 7, 9, 11, 13, 15)


def _field(m: int, prim_poly: str | None) -> FieldContext:
    return FieldContext(m, BinaryPolynomial.from_hex(prim_poly) if prim_poly else None)


def _emit(records, fmt: str, out, text_renderer=None):
    if fmt == "json":
        body = json.dumps(records, indent=2, default=str)
    elif fmt == "csv":
        rows = records if isinstance(records, list) else [records]
        buf = io.StringIO()
        flat = [{k: (json.dumps(v) if isinstance(v, (dict, list)) else v) for k, v in r.items()} for r in rows]
        keys = list(dict.fromkeys(k for r in flat for k in r))
        w = csv.DictWriter(buf, fieldnames=keys)
        w.writeheader()
        w.writerows(flat)
        body = buf.getvalue().rstrip("\n")
    else:
        body = text_renderer(records) if text_renderer else json.dumps(records, indent=2, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(body + "\n")
    else:
        click.echo(body)


def _params(n, k, d):
    return f"[{n}, {k}, {d if d is not None else '?'}]"


def _render_table1(rows):
    lines = [f"{'S':<10}{'C_S':<18}{'C_S^perp':<18}{'S_bar':<10}{'C_Sbar':<18}{'C_Sbar^perp':<18}verdict"]
    for i in range(0, len(rows), 4):
        a, ad, b, bd = rows[i:i + 4]
        S = a["code"].split(",", 2)[2].rstrip("]")
        Sb = b["code"].split(",", 2)[2].rstrip("]")
        verdicts = {r["verdict"] for r in (a, ad, b, bd)}
        v = "mismatch" if "mismatch" in verdicts else "partial" if "partial" in verdicts else "match"
        lines.append(f"{S:<10}{_params(a['n'], a['k'], a['d']):<18}{_params(ad['n'], ad['k'], ad['d']):<18}"
                     f"{Sb:<10}{_params(b['n'], b['k'], b['d']):<18}{_params(bd['n'], bd['k'], bd['d']):<18}{v}")
    return "\n".join(lines)


def _render_table2(rows):
    lines = [f"{'Code':<16}{'Parameters':<18}{'Dual parameters':<18}verdict"]
    for i in range(0, len(rows), 2):
        a, ad = rows[i:i + 2]
        v = "match" if a["verdict"] == ad["verdict"] == "match" else (
            "mismatch" if "mismatch" in (a["verdict"], ad["verdict"]) else "partial")
        lines.append(f"{a['code']:<16}{_params(a['n'], a['k'], a['d']):<18}"
                     f"{_params(ad['n'], ad['k'], ad['d']):<18}{v}")
    return "\n".join(lines)


def _render_checks(checks):
    return "\n".join(f"{'PASS' if c['passed'] else 'FAIL'}  {c['check']}  {c['detail']}".rstrip() for c in checks)


def _render_info(info):
    return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}" for k, v in info.items())


def _envvar(name: str) -> str:
    return "DUADIC_" + name.upper().replace("-", "_")


def common(f):
    opts = [
        click.option("--m", "m", envvar=_envvar("m"), type=int, default=7, show_default=True, help="Extension degree; n = 2^m - 1."),
        click.option("--r", "r", envvar=_envvar("r"), type=int, default=6, show_default=True, help="Weight modulus."),
        click.option("--S", "S", envvar=_envvar("S"), default="0,4,5", show_default=True, help="Comma-separated subset of Z_r."),
        click.option("--prim-poly", envvar=_envvar("prim-poly"), default=None, help="Primitive polynomial as a hex coefficient mask."),
        click.option("--engine", envvar=_envvar("engine"), type=click.Choice(["exhaustive", "bz"]), default="bz", show_default=True),
        click.option("--budget", envvar=_envvar("budget"), type=float, default=1e11, show_default=True, help="Codeword evaluations per code."),
        click.option("--threads", envvar=_envvar("threads"), type=int, default=None, help="Worker threads for the distance engine."),
        click.option("--seed", envvar=_envvar("seed"), type=int, default=0, show_default=True),
        click.option("--format", "fmt", envvar=_envvar("format"), type=click.Choice(["json", "csv", "text"]), default="text", show_default=True),
        click.option("--out", envvar=_envvar("out"), type=click.Path(dir_okay=False), default=None),
        click.option("--checkpoint", envvar=_envvar("checkpoint"), type=click.Path(dir_okay=False), default=None,
                     help="State file for resumable certification."),
    ]
    for o in reversed(opts):
        f = o(f)
    return f



@click.group(context_settings={"auto_envvar_prefix": "DUADIC", "help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", count=True)
def main(verbose):
    """Binary duadic codes of length 2^m - 1: construction, bounds and certified distances."""
    logging.basicConfig(level=logging.WARNING - 10 * min(verbose, 2), format="%(levelname)s %(name)s: %(message)s")


@main.command("code-info")
@common
@click.option("--distance/--no-distance", default=False, help="Also certify the minimum distance.")
def code_info_cmd(m, r, S, prim_poly, engine, budget, threads, seed, fmt, out, checkpoint, distance):
    """Parameters, bounds and structural properties of C_[r,m,S]."""
    try:
        subset = parse_subset(S)
        ctx = _field(m, prim_poly)
        info = reproduce.code_info(m, r, subset, ctx, matrix_checks=m <= 13, seed=seed)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    code_exit = reproduce.EXIT_OK
    if distance:
        from .cyclic import weight_class_code

        code = weight_class_code(ctx, r, subset)
        cert = reproduce.certify(code, engine, int(budget), threads, reproduce.Checkpoint(checkpoint))
        info["distance"] = cert.to_dict()
        code_exit = reproduce.EXIT_OK if cert.certified else reproduce.EXIT_PARTIAL
    _emit(info, fmt, out, _render_info)
    sys.exit(code_exit)


def _table(kind, m, prim_poly, engine, budget, threads, fmt, out, checkpoint):
    if m != 7:
        raise click.UsageError("the reference tables are for m = 7")
    ctx = _field(7, prim_poly)
    fn = reproduce.table1 if kind == 1 else reproduce.table2
    rows = fn(ctx, engine=engine, budget=int(budget), threads=threads,
              checkpoint=reproduce.Checkpoint(checkpoint))
    _emit(rows, fmt, out, _render_table1 if kind == 1 else _render_table2)
    sys.exit(reproduce.table_exit_code(rows))


@main.command("table1")
@common
def table1_cmd(m, r, S, prim_poly, engine, budget, threads, seed, fmt, out, checkpoint):
    """Certify the six m = 7 codes for r = 6 and their duals."""
    _table(1, m, prim_poly, engine, budget, threads, fmt, out, checkpoint)


@main.command("table2")
@common
def table2_cmd(m, r, S, prim_poly, engine, budget, threads, seed, fmt, out, checkpoint):
    """Certify the known length-127 duadic codes (r = 2, 4 and punctured Reed-Muller)."""
    _table(2, m, prim_poly, engine, budget, threads, fmt, out, checkpoint)


@main.command("verify")
@common
@click.option("--all-small", is_flag=True, help=f"Run every m in {SMALL_M}.")
@click.option("--scan", "scan_only", is_flag=True, help="Only compare the splitting scan with the published lists.")
def verify_cmd(m, r, S, prim_poly, engine, budget, threads, seed, fmt, out, checkpoint, all_small, scan_only):
    """Lemma containments, splitting scan and dual/extended properties."""
    ms = SMALL_M if all_small else (m,)
    checks = []
    try:
        for mm in ms:
            checks += [c.to_dict() for c in reproduce.verify(mm, scan_only=scan_only)]
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(checks, fmt, out, _render_checks)
    failed = [c for c in checks if not c["passed"]]
    for c in failed:
        click.echo(f"failed: {c['check']} ({c['detail']})", err=True)
    sys.exit(reproduce.EXIT_MISMATCH if failed else reproduce.EXIT_OK)


if __name__ == "__main__":  # pragma: no cover
    main()
