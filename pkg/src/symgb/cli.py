"""Command line interface: ``symgb {gb,reduce,member,compare,orbit-gb}``.

Exit codes: 0 success (membership true), 1 membership false, 2 parse or
validation error, 3 max order reached without stabilization, 4 oracle
discrepancy.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Sequence

from .engine import (
    BasisSet,
    GBConfig,
    GBError,
    MaxOrderExceeded,
    is_member,
    monomial_orbit_gb,
    symmetric_gb,
)
from .fields import DomainError, field_from_spec
from .io import ParseError, format_corpus, format_polynomial, parse_polynomial, read_corpus
from .oracle import TruncatedIdeal, classical_membership
from .order import sym_compare
from .permutation import CycleParseError
from .reduction import ReductionError, reduce_full

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_MAX_ORDER, EXIT_ORACLE = 0, 1, 2, 3, 4
STABLE_MARKER = "stabilized: true"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symgb", description="Gröbner bases for symmetric ideals of K[x1, x2, ...]")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_field(sp):
        sp.add_argument("--field", default="q", help="'q' (default) or 'fp:P' for a prime P")

    def add_inputs(sp, what):
        sp.add_argument("inputs", nargs="*", help=f"{what}: corpus files or inline polynomials")

    gb = sub.add_parser("gb", help="compute a symmetric Gröbner basis")
    add_inputs(gb, "generators")
    add_field(gb)
    gb.add_argument("--order-start", type=_positive, default=None)
    gb.add_argument("--max-order", type=_positive, default=20)
    gb.add_argument("--confirm", type=_non_negative, default=0)
    gb.add_argument("--no-pair-pruning", action="store_true")
    gb.add_argument("--oracle", action="store_true", help="cross-check with classical Buchberger")
    gb.add_argument("-o", "--output", help="write the basis file here instead of stdout")

    red = sub.add_parser("reduce", help="reduce polynomials by an ordered list of reducers")
    add_inputs(red, "polynomials to reduce")
    add_field(red)
    red.add_argument("--basis", "-b", action="append", default=[], required=True,
                     help="reducer file or inline polynomial (repeatable, order kept)")

    mem = sub.add_parser("member", help="decide membership in a symmetric ideal")
    add_inputs(mem, "polynomials to test")
    add_field(mem)
    src = mem.add_mutually_exclusive_group(required=True)
    src.add_argument("--basis", "-b", action="append", default=None,
                     help="Gröbner basis file as written by 'gb'")
    src.add_argument("--generators", "-g", action="append", default=None,
                     help="generators; a basis is computed first")
    mem.add_argument("--assume-groebner", action="store_true",
                     help="accept a --basis without the 'stabilized: true' marker")
    mem.add_argument("--max-order", type=_positive, default=20)
    mem.add_argument("--oracle", action="store_true")

    cmp_ = sub.add_parser("compare", help="decide v ⪯ w and print the witness")
    cmp_.add_argument("v")
    cmp_.add_argument("w")

    orb = sub.add_parser("orbit-gb", help="Gröbner basis of a monomial symmetric ideal")
    orb.add_argument("monomials", nargs="+")
    add_field(orb)
    return p


def _load(items: Sequence[str], field, marker: list | None = None):
    polys = []
    for item in items:
        if os.path.isfile(item):
            with open(item, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
            if marker is not None and any(
                    ln.strip().lstrip("#").strip() == STABLE_MARKER for ln in lines):
                marker.append(item)
            polys.extend(read_corpus(lines, field))
        else:
            polys.append(parse_polynomial(item, field))
    return polys


def _oracle_fail(msg: str, dump: Sequence[str]) -> int:
    print(f"oracle discrepancy: {msg}", file=sys.stderr)
    for line in dump:
        print(f"  {line}", file=sys.stderr)
    return EXIT_ORACLE


def _cmd_gb(args, out) -> int:
    fld = field_from_spec(args.field)
    gens = _load(args.inputs, fld)
    if not gens:
        raise GBError("no generators given")
    cfg = GBConfig(args.order_start, args.max_order, args.confirm, fld, not args.no_pair_pruning)
    try:
        report = symmetric_gb(gens, cfg)
    except MaxOrderExceeded as exc:
        text = format_corpus(exc.last_basis.elements,
                             ["max order exceeded; last truncated basis above"]
                             + exc.report.summary_lines())
        _emit(text, args.output, out)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MAX_ORDER
    if args.oracle:
        code = _gb_oracle(gens, report)
        if code:
            return code
    _emit(format_corpus(report.basis.elements, report.summary_lines()), args.output, out)
    return EXIT_OK


def _gb_oracle(gens, report) -> int:
    basis = list(report.basis.elements)
    m = max([report.basis.order_used or 1] + [g.max_index for g in gens + basis])
    ideal = TruncatedIdeal.orbit(gens, m)
    for b in basis:
        if not classical_membership(b, ideal):
            return _oracle_fail(f"basis element {format_polynomial(b)} not in the classical "
                                f"truncated ideal of order {m}", map(format_polynomial, basis))
    for g in gens:
        if not is_member(g, report.basis)[0]:
            return _oracle_fail(f"generator {format_polynomial(g)} does not reduce to 0",
                                map(format_polynomial, basis))
    return EXIT_OK


def _emit(text: str, path: str | None, out):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def _cmd_reduce(args, out) -> int:
    fld = field_from_spec(args.field)
    B = _load(args.basis, fld)
    for f in _load(args.inputs, fld):
        cert = reduce_full(f, B)
        out.write(format_polynomial(cert.remainder) + "\n")
        out.write(f"# steps: {cert.steps}\n")
    return EXIT_OK


def _cmd_member(args, out) -> int:
    fld = field_from_spec(args.field)
    if args.generators is not None:
        gens = _load(args.generators, fld)
        basis = symmetric_gb(gens, GBConfig(max_order=args.max_order, field=fld)).basis
    else:
        marked: list = []
        elems = _load(args.basis, fld, marked)
        if not elems:
            raise GBError("empty basis")
        if len(marked) != len(args.basis) and not args.assume_groebner:
            raise GBError("membership requires a Gröbner basis "
                          "(file lacks 'stabilized: true'; use --assume-groebner)")
        basis = BasisSet(tuple(p.monic() for p in elems), None, groebner=True)
    queries = _load(args.inputs, fld)
    if not queries:
        raise GBError("no polynomial to test")
    all_true = True
    for f in queries:
        ok, cert = is_member(f, basis)
        all_true &= ok
        out.write(f"{str(ok).lower()}\n")
        out.write(f"# steps: {cert.steps}, remainder: {format_polynomial(cert.remainder)}\n")
        if args.oracle:
            m = max([f.max_index, basis.order_used or 1] + [b.max_index for b in basis])
            classical = classical_membership(f, TruncatedIdeal.orbit(list(basis), m))
            if classical != ok:
                return _oracle_fail(
                    f"symmetric membership {ok} but classical membership {classical} at order {m}",
                    [format_polynomial(f)] + [format_polynomial(b) for b in basis])
    return EXIT_OK if all_true else EXIT_FALSE


def _cmd_compare(args, out) -> int:
    v = parse_polynomial(args.v)
    w = parse_polynomial(args.w)
    if len(v) != 1 or len(w) != 1:
        raise GBError("compare expects two monomials")
    vm, wm = v.leading_monomial(), w.leading_monomial()
    wit = sym_compare(vm, wm)
    if wit is None:
        out.write("incomparable\n")
        return EXIT_OK
    out.write(f"witness: {wit.sigma.cycle_string()}\n")
    out.write(f"one-line: {' '.join(map(str, wit.sigma.one_line(wit.order)))}\n")
    out.write("match: " + " ".join(f"({i},{j})" for i, j in sorted(wit.match_pairs)) + "\n")
    return EXIT_OK


def _cmd_orbit_gb(args, out) -> int:
    fld = field_from_spec(args.field)
    monos = []
    for text in args.monomials:
        p = parse_polynomial(text, fld)
        if len(p) != 1:
            raise GBError(f"{text!r} is not a monomial")
        monos.append(p.leading_monomial())
    full, minimal = monomial_orbit_gb(monos, fld)
    out.write("# full orbit basis\n")
    out.write(format_corpus(full.elements))
    tag = " (heuristic)" if minimal.heuristic else ""
    out.write(f"# minimal basis{tag}\n")
    out.write(format_corpus(minimal.elements))
    return EXIT_OK


COMMANDS = {
    "gb": _cmd_gb,
    "reduce": _cmd_reduce,
    "member": _cmd_member,
    "compare": _cmd_compare,
    "orbit-gb": _cmd_orbit_gb,
}


def run_command(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (ParseError, CycleParseError, GBError, ReductionError, DomainError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())
