"""Command-line front end.

Machine-readable output goes to stdout, a one-line summary to stderr.
Exit status: 0 all verdicts pass, 1 a verification failed, 2 bad
command line, 3 a domain or resource error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import partitions as parts
from .errors import ArgumentError, DomainError, FreeMeixnerError
from .meixner import MeixnerParams, classify, law_summary
from .series import to_fraction
from .verify import CLAIMS, VerificationReport, run_claim, run_grid

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return to_fraction(text)
    except ArgumentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def default_grid() -> dict:
    text = resources.files("freemeixner").joinpath("data/default_grid.json").read_text(encoding="utf-8")
    return json.loads(text)


def load_grid(path: str | None) -> dict:
    if path is None:
        return default_grid()
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read grid file {path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freemeixner", description="Exact free Meixner / q-Gaussian toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default="json")

    en = sub.add_parser("enumerate", parents=[fmt], help="list partitions")
    en.add_argument("kind", choices=("all", "nc", "ncfb", "pairings"))
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--k", type=int, default=1)

    for name in ("moments", "cumulants"):
        p = sub.add_parser(name, parents=[fmt], help=f"{name} of mu_{{a,b}}")
        p.add_argument("--a", type=_fraction, default=Fraction(0))
        p.add_argument("--b", type=_fraction, default=Fraction(0))
        p.add_argument("--order", type=int, default=10)

    cl = sub.add_parser("classify", parents=[fmt], help="law class of mu_{a,b}")
    cl.add_argument("--a", type=_fraction, default=Fraction(0))
    cl.add_argument("--b", type=_fraction, default=Fraction(0))

    ve = sub.add_parser("verify", parents=[fmt], help="run verification checks")
    ve.add_argument("claim", choices=CLAIMS + ("all",))
    ve.add_argument("--grid", help="JSON grid file (default: the shipped grid)")
    for name in ("a", "b", "alpha", "beta", "q", "t", "s"):
        ve.add_argument(f"--{name}", type=_fraction)
    for name in ("order", "nmax", "kmax"):
        ve.add_argument(f"--{name}", type=int)
    return parser


# ---------------------------------------------------------------------------
# output

def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def render_reports(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return _dump([r.to_json() for r in reports])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["claim", "params", "order", "verdict", "lhs", "rhs"])
        for r in reports:
            data = r.to_json()
            if not r.failures:
                writer.writerow([r.claim, r.param_key(), f"{r.orders[0]}-{r.orders[1]}", "pass", "", ""])
            for f in data["failures"]:
                writer.writerow([r.claim, r.param_key(), f["n"], "fail", f["lhs"], f["rhs"]])
        return buf.getvalue()
    lines = []
    for r in reports:
        lines.append(f"{r.verdict.upper():4}  {r.claim:16} {r.param_key()}  orders {r.orders[0]}..{r.orders[1]}")
        for f in r.failures:
            lines.append(f"      n={f.n}: lhs={f.lhs} rhs={f.rhs}")
    return "\n".join(lines) + "\n"


def _cli_section(claim: str, ns: argparse.Namespace) -> dict:
    a = ns.a if ns.a is not None else Fraction(0)
    b = ns.b if ns.b is not None else Fraction(0)
    section: dict = {"ab": [[a, b]]}
    if ns.alpha is not None or ns.beta is not None:
        alpha = ns.alpha if ns.alpha is not None else 1 - ns.beta
        beta = ns.beta if ns.beta is not None else 1 - alpha
        section["weights"] = [[alpha, beta]]
    if ns.q is not None:
        section["q"] = [ns.q]
    if claim == "prop34":
        t = ns.t if ns.t is not None else Fraction(1)
        s = ns.s if ns.s is not None else Fraction(2)
        section["ts"] = [[t, s]]
    if claim == "prop36" and ns.t is not None:
        section["t"] = [ns.t]
    for key in ("order", "nmax", "kmax"):
        value = getattr(ns, key)
        if value is not None:
            section[key] = value
    if claim == "lemma22" and ns.kmax is None and ns.nmax is None:
        section.update(kmax=4, nmax=5)
    return section


def _run_verify(ns: argparse.Namespace) -> list[VerificationReport]:
    if ns.claim == "all":
        return run_grid(load_grid(ns.grid), CLAIMS)
    claim = ns.claim
    if ns.grid is not None:
        grid = load_grid(ns.grid)
        if claim not in grid:
            raise UsageError(f"grid file has no section {claim!r}")
        return run_claim(claim, grid[claim])
    return run_claim(claim, _cli_section(claim, ns))


def _enumerate(ns: argparse.Namespace) -> str:
    if ns.kind == "all":
        found = parts.enumerate_partitions(ns.n)
    elif ns.kind == "nc":
        found = parts.enumerate_noncrossing(ns.n)
    elif ns.kind == "ncfb":
        found = parts.enumerate_nc_first_block(ns.k, ns.n)
    else:
        found = parts.enumerate_pairings(ns.n)
    if ns.format == "json":
        payload = {"kind": ns.kind, "n": ns.n, "count": len(found), "partitions": [p.to_json() for p in found]}
        if ns.kind == "ncfb":
            payload["k"] = ns.k
        return _dump(payload)
    return "".join(f"{p}\n" for p in found)


_NEGATIVE_FRACTION = re.compile(r"-\d+/\d+")


def _attach_negative_fractions(argv: list[str]) -> list[str]:
    # argparse reads "-1/2" as an option flag; rewrite "--b -1/2" as "--b=-1/2"
    out: list[str] = []
    for tok in argv:
        if out and _NEGATIVE_FRACTION.fullmatch(tok) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        ns = parser.parse_args(_attach_negative_fractions(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out, err = sys.stdout, sys.stderr
    try:
        if ns.command == "enumerate":
            out.write(_enumerate(ns))
            return EXIT_OK
        if ns.command in ("moments", "cumulants"):
            summary = law_summary(MeixnerParams(ns.a, ns.b), ns.order)
            if ns.format == "json":
                out.write(_dump(summary))
            else:
                values = summary[ns.command]
                out.write("".join(f"{i},{v}\n" for i, v in enumerate(values, start=1)))
            return EXIT_OK
        if ns.command == "classify":
            cls = classify(MeixnerParams(ns.a, ns.b))
            out.write(_dump({"a": str(ns.a), "b": str(ns.b), "class": cls.value}) if ns.format == "json" else f"{cls.value}\n")
            return EXIT_OK
        reports = _run_verify(ns)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ArgumentError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, FreeMeixnerError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    out.write(render_reports(reports, ns.format))
    failed = sum(not r.passed for r in reports)
    err.write(f"{len(reports) - failed}/{len(reports)} checks passed\n")
    return EXIT_FAIL if failed else EXIT_OK


def run(argv: list[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
