"""Command line front end: ``affine-qschur <command> ...``.

Exit status: 0 on success, 1 for usage errors, 2 for input that does not
describe a valid matrix or element, 3 when a verification suite fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from .bases import BasisContext, factor_bidiagonal, transition_tables
from .schur import SchurElement, mult_general, standard
from .theta import ThetaMatrix, leq_a
from .verify import SUITES, run_suites

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3

ALL_SUITES = ("structure", "oracle", "unitriangular", "bar", "canonical", "algebra")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- input ------------------------------------------------------------------


def _load_json(source: str):
    """Inline JSON (anything starting with ``{``), ``-`` for stdin, otherwise a file path."""
    text = source.strip()
    try:
        if text.startswith("{"):
            return json.loads(text)
        if source == "-":
            return json.load(sys.stdin)
        return json.loads(Path(source).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {source!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {source!r}: {exc}") from None


def _matrix(source: str) -> ThetaMatrix:
    data = _load_json(source)
    if not isinstance(data, dict):
        raise InputError("a matrix must be a JSON object with 'n' and 'entries'")
    try:
        return ThetaMatrix.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid matrix: {_reason(exc)}") from None


def _element(source: str) -> SchurElement:
    """A SchurElement document, or a bare matrix standing for its standard basis element."""
    data = _load_json(source)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    if "terms" not in data:
        return standard(_matrix(source))
    try:
        return SchurElement.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid element: {_reason(exc)}") from None


def _reason(exc: Exception) -> str:
    if isinstance(exc, KeyError):
        return f"missing field {exc.args[0]!r}"
    return str(exc)


def _same_shape(*xs) -> None:
    if len({x.n for x in xs}) != 1:
        raise InputError("all inputs must share n")
    if len({x.d for x in xs}) != 1:
        raise InputError("all inputs must share d")


def _nonempty(A: ThetaMatrix) -> ThetaMatrix:
    if A.d == 0:
        raise InputError("the matrix has no entries (d = 0)")
    return A


# -- output -----------------------------------------------------------------


def _emit_element(x: SchurElement, out) -> None:
    if not x:
        print("0", file=out)
    for A, c in sorted(x.terms.items()):
        print(f"({c}) [{A}]", file=out)
    print(json.dumps(x.to_json()), file=out)


def _cmd_mult(args, out) -> int:
    x, y = _element(args.left), _element(args.right)
    _same_shape(x, y)
    _emit_element(mult_general(x, y), out)
    return EXIT_OK


def _cmd_factor(args, out) -> int:
    A = _nonempty(_matrix(args.matrix))
    chain = factor_bidiagonal(A)
    for t, B in enumerate(chain.upper, 1):
        _print_matrix(f"B^({t})", B, args.window, out)
    for s, B in enumerate(chain.lower, 1):
        _print_matrix(f"B_({s})", B, args.window, out)
    if args.show_chain:
        for t, U in enumerate(chain.u_steps[1:], 1):
            _print_matrix(f"U^({t})", U, args.window, out)
        for s, L in enumerate(chain.l_steps[1:], 1):
            _print_matrix(f"L^({s})", L, args.window, out)
    print(json.dumps(chain.to_json(show_chain=args.show_chain)), file=out)
    return EXIT_OK


def _print_matrix(label: str, A: ThetaMatrix, window: bool, out) -> None:
    print(f"{label} = {A}", file=out)
    if window:
        print(A.pretty(), file=out)


def _cmd_basis(args, out) -> int:
    A = _nonempty(_matrix(args.matrix))
    ctx = BasisContext(A.n, A.d)
    x = {"monomial": ctx.monomial, "bar": ctx.bar_standard, "canonical": ctx.canonical}[args.command](A)
    _emit_element(x, out)
    if args.command == "canonical":
        negative = [str(B) for B, p in x.terms.items() if any(a < 0 for _, a in p.items())]
        if negative:
            print(f"note: negative coefficients at {', '.join(negative)}", file=sys.stderr)
        else:
            print("note: all coefficients are nonnegative", file=sys.stderr)
    return EXIT_OK


def _cmd_order(args, out) -> int:
    A, B = _matrix(args.left), _matrix(args.right)
    if A.n != B.n:
        raise InputError("all inputs must share n")
    print(leq_a(A, B).value, file=out)
    return EXIT_OK


def _check_sizes(args) -> None:
    if args.n < 1 or args.d < 1 or args.band < 0:
        raise InputError("need n >= 1, d >= 1 and band >= 0")


def _cmd_tables(args, out) -> int:
    _check_sizes(args)
    mono, canon = transition_tables(args.n, args.d, args.band)
    if args.json:
        doc = {
            name: [{"matrix": A.to_json(), "element": x.to_json()} for A, x in sorted(table.items())]
            for name, table in (("monomial", mono), ("canonical", canon))
        }
        print(json.dumps(doc), file=out)
        return EXIT_OK
    for name, table in (("monomial", mono), ("canonical", canon)):
        print(f"# {name}", file=out)
        for A, x in sorted(table.items()):
            for B, c in sorted(x.terms.items()):
                print(f"{A} ; {B} ; {c}", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    _check_sizes(args)
    names = ALL_SUITES if args.suite == "all" else (args.suite,)
    try:
        results = run_suites(names, args.n, args.d, args.band, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for r in results:
        print(r.summary(), file=out)
        if r.counterexamples:
            print(json.dumps(r.counterexamples[0]), file=out)
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="affine-qschur", description="Exact computations in the affine q-Schur algebra.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    m = sub.add_parser("mult", help="product of two elements (a bare matrix means its standard basis element)")
    m.add_argument("--left", required=True)
    m.add_argument("--right", required=True)
    m.set_defaults(func=_cmd_mult)

    f = sub.add_parser("factor", help="bidiagonal factorisation of a matrix")
    f.add_argument("--matrix", required=True)
    f.add_argument("--show-chain", action="store_true", help="also print the intermediate U and L matrices")
    f.add_argument("--window", action="store_true", help="render each matrix on rows 1-n..2n")
    f.set_defaults(func=_cmd_factor)

    for name, text in (
        ("monomial", "monomial basis element in the standard basis"),
        ("bar", "bar involution of a standard basis element"),
        ("canonical", "canonical basis element in the standard basis"),
    ):
        b = sub.add_parser(name, help=text)
        b.add_argument("--matrix", required=True)
        b.set_defaults(func=_cmd_basis)

    o = sub.add_parser("order", help="compare two matrices in the quadrant order")
    o.add_argument("--left", required=True)
    o.add_argument("--right", required=True)
    o.set_defaults(func=_cmd_order)

    t = sub.add_parser("tables", help="monomial and canonical transition tables")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--band", type=int, default=2)
    t.add_argument("--json", action="store_true", help="machine-readable output")
    t.set_defaults(func=_cmd_tables)

    v = sub.add_parser("verify", help="run consistency suites")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--band", type=int, default=3)
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=_cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
