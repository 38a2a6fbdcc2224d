"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .assembler import assemble, default_jobs, independent_equation_count, verify
from .expansion import coefficient_table, enumerate_partition_sets, format_multiset
from .fixture import d8_derivation_checks
from .render import PotentialParseError, build_document, dump_document, parse_document, to_latex, to_text

log = logging.getLogger("csforge")

MAX_VALIDATED_DIM = 32


def _dimension(text: str) -> int:
    try:
        dim = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"dimension must be an integer, got {text!r}") from None
    if dim < 4 or dim % 2:
        raise argparse.ArgumentTypeError(f"dimension must be even and >= 4, got {dim}")
    return dim


def _jobs(args) -> int:
    return args.jobs if args.jobs is not None else default_jobs()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="csforge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the potential for dimension D")
    p.add_argument("--dim", type=_dimension, required=True)
    p.add_argument("--emit", choices=("text", "latex", "json"), default="text")
    p.add_argument("--verify", action="store_true", help="check d(K) = P before printing")
    p.add_argument("--jobs", type=int, default=None, help="parallel partition solves (default: CSFORGE_JOBS or CPU count)")
    p.add_argument("--allow-large", action="store_true", help=f"permit D > {MAX_VALIDATED_DIM}")

    p = sub.add_parser("tables", help="coefficient, equation-count and total-count tables")
    p.add_argument("--which", choices=("coeffs", "mcounts", "eqcounts"), required=True)
    p.add_argument("--dim-max", type=_dimension, required=True)
    p.add_argument("--dim-min", type=_dimension, default=None,
                   help="first dimension (default 14 for eqcounts, 4 otherwise)")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("verify", help="check a potential against the density")
    p.add_argument("--dim", type=_dimension, required=True)
    p.add_argument("--potential", type=Path, default=None, help="JSON potential document (default: compute one)")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("fixture", help="replay a worked derivation")
    p.add_argument("--appendix-a", action="store_true", required=True, help="the D=8 derivation")
    return parser


def _check_size(parser, args) -> None:
    if args.dim > MAX_VALIDATED_DIM and not getattr(args, "allow_large", False):
        parser.error(f"--dim {args.dim} exceeds {MAX_VALIDATED_DIM}; pass --allow-large to proceed")


def cmd_compute(args, out) -> int:
    n = args.dim // 2
    log.info("assembling D=%d", args.dim)
    pot = assemble(n, jobs=_jobs(args))
    verified = None
    if args.verify or args.emit == "json":
        res = verify(n, pot)
        verified = res.passed
        if not res.passed:
            log.error("verification failed; residual: %s", to_text(res.residual))
    if args.emit == "json":
        out.write(dump_document(build_document(args.dim, pot.terms, verified, pot.provenance())))
    elif args.emit == "latex":
        out.write(to_latex(pot.terms) + "\n")
    else:
        out.write(to_text(pot.terms) + "\n")
    return 1 if verified is False else 0


def cmd_tables(args, out) -> int:
    lo = args.dim_min or (14 if args.which == "eqcounts" else 4)
    dims = range(lo, args.dim_max + 1, 2)
    if args.which == "coeffs":
        for dim in dims:
            table = coefficient_table(dim // 2)
            cells = [format_multiset(table[a]) for a in sorted(table)]
            out.write(f"{dim} | " + " | ".join(cells) + "\n")
    elif args.which == "mcounts":
        out.write("D (a,n-a) |S_dist| raw distinct rank terms\n")
        for dim in dims:
            n = dim // 2
            pot = assemble(n, jobs=_jobs(args))
            for res in pot.partitions[:-1]:
                size = len(enumerate_partition_sets(n)[res.a].representatives)
                out.write(f"{dim} ({res.a},{n - res.a}) {size} {res.raw_count} "
                          f"{res.distinct_dterms} {res.rank} {len(res.contribution)}\n")
    else:
        out.write("D distinct rank used terms\n")
        for dim in dims:
            counts = independent_equation_count(dim // 2, jobs=_jobs(args))
            log.info("D=%d done", dim)
            out.write(f"{dim} {counts['distinctDterms']} {counts['rankCount']} {counts['usedEquations']} {counts['potentialTerms']}\n")
    return 0


def cmd_verify(args, out) -> int:
    n = args.dim // 2
    if args.potential is None:
        terms = assemble(n, jobs=_jobs(args)).terms
    else:
        try:
            dim, terms = parse_document(args.potential.read_text())
        except OSError as exc:
            raise PotentialParseError(f"{args.potential}: {exc.strerror}") from None
        except PotentialParseError as exc:
            raise PotentialParseError(f"{args.potential}: {exc}") from None
        if dim != args.dim:
            raise PotentialParseError(f"{args.potential}: document is for D={dim}, not D={args.dim}")
    res = verify(n, terms)
    if res.passed:
        out.write(f"D={args.dim}: pass\n")
        return 0
    out.write(f"D={args.dim}: fail\nresidual: {to_text(res.residual)}\n")
    return 1


def cmd_fixture(args, out) -> int:
    checks = d8_derivation_checks(echo=lambda line: out.write(line + "\n"))
    for c in checks:
        out.write(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}\n")
        if not c.passed:
            out.write(f"    expected {c.expected}\n    actual   {c.actual}\n")
    return 0 if all(c.passed for c in checks) else 1


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.command in ("compute", "verify"):
        _check_size(parser, args)
    handlers = {"compute": cmd_compute, "tables": cmd_tables, "verify": cmd_verify, "fixture": cmd_fixture}
    try:
        return handlers[args.command](args, out)
    except PotentialParseError as exc:
        print(f"csforge: parse error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
