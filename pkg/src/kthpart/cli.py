"""Command-line front end.

Exit codes: 0 success, 1 a check did not meet its expectation,
2 usage, parse, or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import qexpr
from .fps import format_poly, serialize
from .partitions import ENUMERATION_CAP, StatVariant, stat_table
from .verify import (
    SUITES,
    UnknownIdentity,
    asym_table,
    lookup,
    reports_json,
    run,
    run_suite,
    suite_passes,
)
from .verify.asym import ffw_values

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

STATS = ("ffw", "ffwk", "agl", "ffwc", "power", "tails", "diff")


@dataclass(frozen=True)
class CliConfig:
    command: str
    order: int = 40
    suite: str | None = None
    id: str | None = None
    k: int = 1
    n_max: int = 1
    z_int: int | None = None
    format: str = "tsv"
    stat: str = "ffw"
    m: int = 1
    expr: str = ""
    normalization: str = "proof"

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("--order must be at least 2")
        if self.n_max < 1:
            raise ValueError("--n-max must be at least 1")
        if self.k < 1:
            raise ValueError("--k must be at least 1")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kthpart", description="Verify and explore k-th smallest part identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a suite or a single identity check")
    g = v.add_mutually_exclusive_group()
    g.add_argument("--suite", choices=SUITES + ("all",))
    g.add_argument("--id")
    v.add_argument("--order", type=int, default=40)
    v.add_argument("--format", choices=("tsv", "json"), default="tsv")

    c = sub.add_parser("compute", help="tabulate a partition statistic")
    c.add_argument("stat", choices=STATS)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--m", type=int, default=1, help="power of s for 'power'")
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--z", type=int, default=None, help="substitute an integer for z")

    e = sub.add_parser("expand", help="expand a q-expression")
    e.add_argument("expr")
    e.add_argument("--order", type=int, default=40)

    a = sub.add_parser("audit", help="show the first mismatch of a check")
    a.add_argument("--id", required=True)
    a.add_argument("--order", type=int, default=40)
    a.add_argument("--format", choices=("tsv", "json"), default="tsv")

    s = sub.add_parser("asym", help="exact FFW_k(n) against the leading term")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--normalization", choices=("proof", "statement"), default="proof")
    return p


def parse_config(argv: Sequence[str]) -> CliConfig:
    ns = build_parser().parse_args(list(argv))
    kw = {"command": ns.command}
    for src, dst in (("order", "order"), ("suite", "suite"), ("id", "id"), ("k", "k"),
                     ("n_max", "n_max"), ("z", "z_int"), ("format", "format"), ("stat", "stat"),
                     ("m", "m"), ("expr", "expr"), ("normalization", "normalization")):
        if getattr(ns, src, None) is not None:
            kw[dst] = getattr(ns, src)
    if ns.command == "verify" and not (ns.suite or ns.id):
        kw["suite"] = "all"
    try:
        return CliConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# commands


def _mismatch_cells(r) -> list[str]:
    mm = r.first_mismatch
    if mm is None:
        return ["-", "-", "-", "-", "-"]
    return [str(mm.n), mm.sides[0], mm.sides[1], format_poly(mm.lhs), format_poly(mm.rhs)]


REPORT_HEADER = "id\tstatus\texpected\tmeets\tn\tside_a\tside_b\tlhs\trhs"


def _print_reports(reports, cfg: CliConfig, label: str, out: TextIO) -> None:
    if cfg.format == "json":
        json.dump(reports_json(label, cfg.order, reports), out, indent=2)
        out.write("\n")
        return
    out.write(REPORT_HEADER + "\n")
    for r in reports:
        cells = [r.id, r.status.value, r.expected.value, "yes" if r.meets_expectation else "no"]
        out.write("\t".join(cells + _mismatch_cells(r)) + "\n")


def cmd_verify(cfg: CliConfig, out: TextIO) -> int:
    if cfg.id:
        reports = [run(cfg.id, cfg.order)]
        label = cfg.id
    else:
        reports = run_suite(cfg.suite, cfg.order)
        label = cfg.suite
    _print_reports(reports, cfg, label, out)
    return EXIT_OK if suite_passes(reports) else EXIT_MISMATCH


def cmd_audit(cfg: CliConfig, out: TextIO) -> int:
    r = run(cfg.id, cfg.order)
    if cfg.format == "json":
        _print_reports([r], cfg, cfg.id, out)
    else:
        check = lookup(cfg.id)
        out.write(f"id\t{r.id}\nanchor\t{check.paper_ref}\nstatus\t{r.status.value}\n")
        out.write(f"expected\t{r.expected.value}\n")
        mm = r.first_mismatch
        if mm is None:
            out.write("first_mismatch\tnone\n")
        else:
            out.write(f"first_mismatch\tq^{mm.n}\n")
            out.write(f"{mm.sides[0]}\t{format_poly(mm.lhs)}\n")
            out.write(f"{mm.sides[1]}\t{format_poly(mm.rhs)}\n")
    return EXIT_OK if r.meets_expectation else EXIT_MISMATCH


def _variant(cfg: CliConfig) -> StatVariant:
    return {
        "ffw": lambda: StatVariant.ffw_kz(cfg.k),
        "agl": StatVariant.agl_z,
        "ffwc": StatVariant.ffw_c,
        "power": lambda: StatVariant.power(cfg.m),
        "tails": lambda: StatVariant.tails(cfg.k),
        "diff": lambda: StatVariant.diff(cfg.k),
    }[cfg.stat]()


def cmd_compute(cfg: CliConfig, out: TextIO) -> int:
    if cfg.stat == "ffwk":
        # sum (-1)^# s_k over D(n), exact for any n through the divisor form
        values = ffw_values(cfg.k, cfg.n_max)
        out.write("n\tvalue\n")
        for n in range(1, cfg.n_max + 1):
            out.write(f"{n}\t{values[n]}\n")
        return EXIT_OK
    if cfg.n_max > ENUMERATION_CAP:
        raise UsageError(f"--n-max above {ENUMERATION_CAP} needs 'ffwk' (enumeration is capped)")
    rows = stat_table(_variant(cfg), cfg.n_max)
    if cfg.z_int is None:
        out.write("n\tpolynomial\n")
        for n in range(1, cfg.n_max + 1):
            out.write(f"{n}\t{format_poly(rows[n])}\n")
    else:
        out.write("n\tvalue\n")
        for n in range(1, cfg.n_max + 1):
            out.write(f"{n}\t{rows[n](cfg.z_int)}\n")
    return EXIT_OK


def cmd_expand(cfg: CliConfig, out: TextIO) -> int:
    out.write(serialize(qexpr.expand(cfg.expr, cfg.order)))
    return EXIT_OK


def cmd_asym(cfg: CliConfig, out: TextIO) -> int:
    if cfg.k < 2:
        raise UsageError("asym needs --k at least 2")
    if cfg.n_max < 100:
        raise UsageError("asym needs --n-max at least 100")
    rows = asym_table(cfg.k, cfg.n_max, proof_normalization=cfg.normalization == "proof")
    out.write("n\tvalue\tmain_term\tratio\n")
    for r in rows:
        out.write(f"{r.n}\t{r.value}\t{r.main_term:.6e}\t{r.ratio:.6f}\n")
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "audit": cmd_audit,
    "compute": cmd_compute,
    "expand": cmd_expand,
    "asym": cmd_asym,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        return COMMANDS[cfg.command](cfg, out)
    except UsageError as exc:
        err.write(f"kthpart: error: {exc}\n")
    except qexpr.ParseError as exc:
        err.write(f"kthpart: parse error at {exc}\n")
    except OverflowError as exc:
        err.write(f"kthpart: overflow: {exc}\n")
    except UnknownIdentity as exc:
        err.write(f"kthpart: unknown identity {exc.args[0]!r}\n")
    except (qexpr.UnknownName, ValueError) as exc:
        err.write(f"kthpart: evaluation error: {type(exc).__name__}: {exc}\n")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
