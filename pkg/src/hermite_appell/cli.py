"""hermite-appell: generate, check, evaluate and take classical limits of DMHAP tables.

Exit codes: 0 success, 1 failed promoted assertion, 2 usage or domain error,
3 operator request for a family with A(0) = 0.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .appell import FAMILY_NAMES, OperatorUnsupportedError, get_family
from .dmhap import classical_limit, classical_oracle, generate
from .identities import CHECKERS
from .poly import LAMBDA_SYMBOL, PolyError
from .suites import SUITES, default_pairs, run_suites

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3

FORMATS = ("json", "csv", "latex", "text")
SUITE_CHOICES = ("all",) + tuple(SUITES)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str = "identity"
    r: int = 1
    n_max: int = 4
    format: str = "text"
    kappa: str | None = None
    ls: list = field(default_factory=list)
    identity: str | None = None
    I: int | None = None
    S: int | None = None
    precision: int = 30
    output: str | None = None
    numbers: list | None = None
    n: int | None = None

    def validate(self) -> None:
        if self.r < 1:
            raise UsageError("r must be at least 1")
        if self.n_max < 0:
            raise UsageError("n-max must be non-negative")
        if self.n is not None and self.n < 0:
            raise UsageError("--n must be non-negative")
        if self.precision < 10:
            raise UsageError("precision must be at least 10 digits")
        if self.family not in FAMILY_NAMES:
            raise UsageError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILY_NAMES)}")
        if self.family == "custom" and not self.numbers:
            raise UsageError("--family custom requires --numbers")
        if (self.I is None) != (self.S is None):
            raise UsageError("--I and --S must be given together")
        if self.I is not None and (self.I < 1 or self.S < 1 or self.I == self.S):
            raise UsageError("I and S must be distinct positive integers")

    def appell_family(self):
        try:
            return get_family(self.family, self.numbers)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(str(exc)) from None


def _latex_name(family: str) -> str:
    letter = {"bernoulli": "B", "euler": "E", "genocchi": "G"}.get(family, "A")
    return rf"{{}}_{{\mathbb{{H}}}}\mathbb{{{letter}}}"


def render_table(table, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "family": table.family,
            "r": table.r,
            "N": table.N,
            "lambda_symbol": LAMBDA_SYMBOL,
            "entries": [{"n": n, "poly": p.to_text()} for n, p in enumerate(table)],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "polynomial_text"])
        for n, p in enumerate(table):
            w.writerow([n, p.to_text()])
        return buf.getvalue()
    if fmt == "latex":
        name = _latex_name(table.family)
        blocks = []
        for n, p in enumerate(table):
            blocks.append(
                "\\begin{equation}\n\\begin{aligned}\n"
                f"{name}^{{[{table.r}]}}_{{{n}}} &= {p.to_latex()}\n"
                "\\end{aligned}\n\\end{equation}"
            )
        return "\n".join(blocks) + "\n"
    return "".join(f"{n}: {p.to_text()}\n" for n, p in enumerate(table))


def cmd_gen(cfg: RunConfig):
    table = generate(cfg.appell_family(), cfg.r, cfg.n_max)
    return EXIT_OK, render_table(table, cfg.format)


def cmd_check(cfg: RunConfig, suites: list):
    fam = cfg.appell_family()
    pairs = [(cfg.I, cfg.S)] if cfg.I is not None else default_pairs()
    if cfg.identity is not None:
        suites = [_suite_for_identity(cfg.identity)]
    unknown = [s for s in suites if s not in SUITE_CHOICES]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; expected one of {', '.join(SUITE_CHOICES)}")
    try:
        results = run_suites(suites, fam, cfg.r, cfg.n_max, pairs)
    except OperatorUnsupportedError as exc:
        return EXIT_UNSUPPORTED, f"error: {exc}\n"
    passed = all(s.passed for s in results)
    reports = [rep for s in results for rep in s.reports]
    if cfg.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "check",
            "family": fam.name,
            "r": cfg.r,
            "n_max": cfg.n_max,
            "pass": passed,
            "suites": [s.to_dict() for s in results],
            "reports": [rep.to_dict() for rep in reports],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = []
        for s in results:
            status = "SKIP" if s.skipped else ("PASS" if s.passed else "FAIL")
            lines.append(f"{status} {s.name} ({s.checked} checks){' ' + s.skipped if s.skipped else ''}")
            lines.extend(f"    {f}" for f in s.failures)
        for rep in reports:
            lines.append(
                f"report {rep.identity_id} n={rep.n} I={rep.I} S={rep.S} "
                f"pass={str(rep.passed).lower()} residual={rep.residual.to_text()}"
            )
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if passed else EXIT_FAIL), text


def _suite_for_identity(identity_id: str) -> str:
    mapping = {
        "scaling_3_1": "scaling",
        "hermite_scaling_3_3": "hermite_scaling",
        "bernoulli_convolution_3_4": "convolution",
        "convolution_3_2": "convolution_3_2",
        "gf_two_route": "gf",
    }
    if identity_id not in CHECKERS:
        raise UsageError(f"unknown identity {identity_id!r}")
    return mapping[identity_id]


def _parse_number(s: str):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational or decimal number: {s!r}") from None


def cmd_eval(cfg: RunConfig):
    if cfg.kappa is None:
        raise UsageError("eval requires --kappa")
    kappa = _parse_number(cfg.kappa)
    if kappa <= -1:
        raise UsageError("kappa must exceed -1")
    ls = [_parse_number(x) for x in cfg.ls]
    if len(ls) != cfg.r:
        raise UsageError(f"--ls needs {cfg.r} values, got {len(ls)}")
    table = generate(cfg.appell_family(), cfg.r, cfg.n_max if cfg.n is None else cfg.n)
    indices = range(len(table)) if cfg.n is None else [cfg.n]
    values = []
    for n in indices:
        v = table[n].eval_numeric(ls, kappa, cfg.precision)
        values.append((n, mpmath.nstr(v, cfg.precision)))
    if cfg.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "family": table.family,
            "r": cfg.r,
            "kappa": cfg.kappa,
            "ls": cfg.ls,
            "precision": cfg.precision,
            "entries": [{"n": n, "value": v} for n, v in values],
        }
        return EXIT_OK, json.dumps(doc, indent=2) + "\n"
    if cfg.format == "csv":
        return EXIT_OK, "n,value\n" + "".join(f"{n},{v}\n" for n, v in values)
    return EXIT_OK, "".join(f"{n}: {v}\n" for n, v in values)


def cmd_limit(cfg: RunConfig):
    fam = cfg.appell_family()
    table = generate(fam, cfg.r, cfg.n_max)
    rows = []
    for n, p in enumerate(classical_limit(table)):
        oracle = classical_oracle(fam, cfg.r, n)
        rows.append((n, p, oracle, p == oracle))
    ok = all(row[3] for row in rows)
    if cfg.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "family": fam.name,
            "r": cfg.r,
            "N": cfg.n_max,
            "entries": [
                {"n": n, "limit": p.to_text(), "oracle": o.to_text(), "match": m}
                for n, p, o, m in rows
            ],
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "limit", "oracle", "match"])
        for n, p, o, m in rows:
            w.writerow([n, p.to_text(), o.to_text(), str(m).lower()])
        text = buf.getvalue()
    elif cfg.format == "latex":
        text = "".join(
            f"\\begin{{equation}}\n\\begin{{aligned}}\n\\mathbb{{A}}_{{{n}}} &= {p.to_latex()}\n"
            "\\end{aligned}\n\\end{equation}\n"
            for n, p, o, m in rows
        )
    else:
        text = "".join(f"{n}: {p.to_text()}  [{'match' if m else 'MISMATCH'}]\n" for n, p, o, m in rows)
    return (EXIT_OK if ok else EXIT_FAIL), text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermite-appell",
        description="Exact degenerate multidimensional Hermite-based Appell polynomials.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default="identity", help="|".join(FAMILY_NAMES))
    common.add_argument("--numbers", nargs="+", help="Appell numbers A_0.. for --family custom")
    common.add_argument("--r", type=int, default=1)
    common.add_argument("--n-max", dest="n_max", type=int, default=4)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", "-o", help="write to this path instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common], help="emit the table of entries 0..n-max")

    chk = sub.add_parser("check", parents=[common], help="run verification suites")
    chk.add_argument("suites", nargs="*", default=["all"], metavar="SUITE",
                     help=f"one or more of: {', '.join(SUITE_CHOICES)} (default all)")
    chk.add_argument("--identity", choices=tuple(CHECKERS))
    chk.add_argument("--I", dest="I", type=int)
    chk.add_argument("--S", dest="S", type=int)

    ev = sub.add_parser("eval", parents=[common], help="evaluate entries numerically")
    ev.add_argument("--kappa", required=True)
    ev.add_argument("--ls", nargs="+", default=[])
    ev.add_argument("--n", type=int, help="only this entry")
    ev.add_argument("--precision", type=int, default=30)

    sub.add_parser("limit", parents=[common], help="kappa -> 0 table against the classical oracle")
    return parser


def run(argv=None):
    """Run the CLI and return ``(exit_code, output_text)``."""
    parser = build_parser()
    err = io.StringIO()
    try:
        old_err, sys.stderr = sys.stderr, err
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stderr = old_err
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), err.getvalue()

    cfg = RunConfig(
        command=args.command,
        family=args.family.lower(),
        r=args.r,
        n_max=args.n_max,
        format=args.format,
        output=args.output,
        numbers=args.numbers,
        kappa=getattr(args, "kappa", None),
        ls=getattr(args, "ls", []),
        identity=getattr(args, "identity", None),
        I=getattr(args, "I", None),
        S=getattr(args, "S", None),
        precision=getattr(args, "precision", 30),
        n=getattr(args, "n", None),
    )
    try:
        cfg.validate()
        if cfg.command == "gen":
            code, text = cmd_gen(cfg)
        elif cfg.command == "check":
            code, text = cmd_check(cfg, args.suites)
        elif cfg.command == "eval":
            code, text = cmd_eval(cfg)
        else:
            code, text = cmd_limit(cfg)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    except OperatorUnsupportedError as exc:
        return EXIT_UNSUPPORTED, f"error: {exc}\n"
    except PolyError as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
        return code, ""
    return code, text


def main(argv=None) -> int:
    code, text = run(argv)
    if text:
        stream = sys.stdout if code in (EXIT_OK, EXIT_FAIL) else sys.stderr
        stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
