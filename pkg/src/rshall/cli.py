"""Command line: products, verification sweeps, bases and degeneration posets.

Exit codes: 0 success, 1 a checked identity failed, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import suites
from .errors import ArgumentError, ResourceLimitError, RshallError, VerificationError
from .hall import TABLE
from .repcat import BUDGET, DimVector, set_budget

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
HARD_MAX_DIM = 10
HARD_MAX_Q = 32


@dataclass
class Config:
    rank: int | None
    max_dim: int
    qs: tuple[int, ...]
    cache: str | None
    fmt: str


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_qs(text: str) -> tuple[int, ...]:
    try:
        qs = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad field list {text!r}")
    if not qs:
        raise argparse.ArgumentTypeError("empty field list")
    return qs


def _parse_budget(text: str) -> tuple[int, int | None]:
    """``DIM`` or ``DIM,QMAX``."""
    parts = text.split(",")
    try:
        dim = int(parts[0])
        q = int(parts[1]) if len(parts) > 1 else None
    except (ValueError, IndexError):
        raise argparse.ArgumentTypeError(f"bad budget {text!r}")
    if not 1 <= dim <= HARD_MAX_DIM or (q is not None and not 2 <= q <= HARD_MAX_Q):
        raise argparse.ArgumentTypeError(f"budget {text!r} outside the hard limits {HARD_MAX_DIM},{HARD_MAX_Q}")
    return dim, q


def _parse_dim(text: str) -> DimVector:
    try:
        return DimVector.parse(text)
    except (ValueError, RshallError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, default=None, help="quiver rank n")
    common.add_argument("--max-dim", type=int, default=3, help="total dimension bound for sweeps")
    common.add_argument("--q", type=_parse_qs, default=(2, 3), help="comma separated field sizes")
    common.add_argument("--cache", default=None, help="Hall polynomial cache file (read and updated)")
    common.add_argument("--format", dest="fmt", choices=("text", "json", "dot"), default="text")
    common.add_argument("--budget", type=_parse_budget, default=None, help="DIM or DIM,QMAX")

    parser = _Parser(prog="rshall", description="Two-parameter twisted Hall algebras of linear quivers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("mul", parents=[common], help="multiply elements")
    p.add_argument("elements", nargs="+", help='elements such as "u[1,1]" or "(r+s)*u(2[1,1]+[2,2])"')

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("suite", choices=("serre", "green", "hopf", "pbw", "limit", "bar", "lower", "euler", "assoc", "genext", "monomial"))

    p = sub.add_parser("basis", parents=[common], help="list a basis of one graded component")
    p.add_argument("kind", choices=("pbw", "monomial", "canonical"))
    p.add_argument("--dim", type=_parse_dim, required=True, help="dimension vector, e.g. 1,1")
    p.add_argument("--distinguished", action="store_true", help="use distinguished words (monomial basis)")

    p = sub.add_parser("poset", parents=[common], help="degeneration order of one component")
    p.add_argument("--dim", type=_parse_dim, required=True)
    return parser


# ---------------------------------------------------------------------------
# commands


def cmd_mul(args, cfg: Config) -> tuple[object, int]:
    from .hopf import ExtendedElement, ext_multiply
    from .parsing import parse_element

    elems = [parse_element(t, cfg.rank) for t in args.elements]
    n = max([cfg.rank or 1] + [e.rank for e in elems])
    if any(isinstance(e, ExtendedElement) for e in elems):
        out = ExtendedElement.one(n)
        for e in elems:
            e = e if isinstance(e, ExtendedElement) else ExtendedElement.from_hall(e, n)
            out = ext_multiply(out, e)
    else:
        out = elems[0].with_rank(n)
        for e in elems[1:]:
            out = out * e.with_rank(n)
    return (out.to_json() if cfg.fmt == "json" else out.to_text()), EXIT_OK


def _run_suite(name: str, cfg: Config) -> dict:
    rank = cfg.rank
    if name == "serre":
        return suites.serre_suite(rank or 5)
    if name == "lower":
        return suites.lower_borel_suite(rank or 5)
    if name == "green":
        return suites.green_suite(rank or 3, cfg.max_dim, cfg.qs)
    if name == "hopf":
        return suites.hopf_suite(rank or 2, cfg.max_dim)
    if name == "pbw":
        return suites.pbw_suite(rank or 3, cfg.max_dim)
    if name == "limit":
        return suites.direct_limit_suite(2, max(rank or 4, 3), cfg.max_dim, cfg.qs[0])
    if name == "bar":
        return suites.bar_suite(rank or 3, cfg.max_dim)
    if name == "euler":
        return suites.euler_suite(rank or 4, cfg.max_dim, cfg.qs[0])
    if name == "assoc":
        return suites.associativity_suite(rank or 3, cfg.max_dim)
    if name == "genext":
        return suites.genext_suite(rank or 4, cfg.max_dim)
    if name == "monomial":
        return suites.monomial_suite(cfg.max_dim, rank)
    raise ArgumentError(f"unknown suite {name}")


def cmd_verify(args, cfg: Config) -> tuple[object, int]:
    report = _run_suite(args.suite, cfg)
    code = EXIT_OK if report["passed"] else EXIT_FAIL
    if cfg.fmt == "text":
        status = "PASS" if report["passed"] else "FAIL"
        lines = [f"{report['name']}: {status} ({report['checked']} checks)"]
        lines += [f"  {f}" for f in report["failures"]]
        return "\n".join(lines), code
    return report, code


def cmd_basis(args, cfg: Config) -> tuple[object, int]:
    d = args.dim
    n = max(cfg.rank or 1, len(d), 1)
    BUDGET.check_dim(d.total, "component")
    if args.kind == "pbw":
        from .pbw import pbw_component

        comp = pbw_component(d, n)
        rows = [(m.to_text(), img) for m, img in zip(comp.monomials, comp.images)]
        if cfg.fmt == "json":
            return [{"monomial": m, "expansion": img.to_json()} for m, img in rows], EXIT_OK
        return "\n".join(f"{m} = {img.to_text()}" for m, img in rows), EXIT_OK
    if args.kind == "monomial":
        from .genext import monomial_basis

        rows = monomial_basis(d, distinguished=args.distinguished, rank=n)
        if cfg.fmt == "json":
            return [
                {"class": lam.to_text(), "word": list(w.letters), "expansion": x.to_json()} for lam, w, x in rows
            ], EXIT_OK
        return "\n".join(f"u_({w.to_text()}) = {x.to_text()}" for _, w, x in rows), EXIT_OK
    from .bar import canonical_basis

    elems = canonical_basis(d)
    if cfg.fmt == "json":
        return {"dim": d.to_json(), "elements": [e.to_json() for e in elems]}, EXIT_OK
    return "\n".join(f"C({e.alpha.to_text()}) = {e.to_text()}" for e in elems), EXIT_OK


def cmd_poset(args, cfg: Config) -> tuple[object, int]:
    from .genext import DegenerationPoset

    BUDGET.check_dim(args.dim.total, "component")
    poset = DegenerationPoset(args.dim)
    if cfg.fmt == "dot":
        return poset.to_dot(), EXIT_OK
    if cfg.fmt == "json":
        return poset.to_json(), EXIT_OK
    lines = [f"classes: {', '.join(m.to_text() for m in poset.universe)}"]
    lines += [f"{a.to_text()} < {b.to_text()}" for a, b in poset.covers()]
    return "\n".join(lines), EXIT_OK


COMMANDS = {"mul": cmd_mul, "verify": cmd_verify, "basis": cmd_basis, "poset": cmd_poset}


def _emit(payload, fmt: str, stream) -> None:
    if isinstance(payload, str):
        stream.write(payload + "\n")
    else:
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if args.rank is not None and args.rank < 1:
        stderr.write("usage error: --rank must be at least 1\n")
        return EXIT_USAGE
    if args.fmt == "dot" and args.command != "poset":
        stderr.write("usage error: dot output is only available for poset\n")
        return EXIT_USAGE
    saved = (BUDGET.max_total_dim, BUDGET.q_max)
    if args.budget:
        set_budget(*args.budget)
    cfg = Config(args.rank, args.max_dim, args.q, args.cache, args.fmt)
    try:
        if cfg.cache:
            TABLE.load(cfg.cache)
        payload, code = COMMANDS[args.command](args, cfg)
        if cfg.cache:
            TABLE.save(cfg.cache)
    except ResourceLimitError as exc:
        stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except VerificationError as exc:
        stderr.write(f"identity failed: {exc}\n")
        return EXIT_FAIL
    except (ArgumentError, ValueError, KeyError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    finally:
        set_budget(*saved)
    _emit(payload, cfg.fmt, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
