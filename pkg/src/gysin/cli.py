"""Command-line front end.

Exit codes: 0 ok, 1 parse error, 2 precondition violated, 3 result not
polynomial, 4 unsupported configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import (
    EnumerationCapExceeded,
    IncompatibleComposition,
    InvarianceError,
    NotDivisible,
    ParseError,
    UnsupportedConfiguration,
)
from .expr import format_polynomial, parse, parse_with_alphabet
from .pushforward import BundleSpec, FixedPointDatum, gysin_pushforward, localization_sum
from .roots import Convention
from .schubert import Partition, schur_bialternant, segre_check
from .verify import run_all
from .weyl import DEFAULT_CAP, Composition, GroupSpec, is_invariant

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_NOT_POLYNOMIAL, EXIT_UNSUPPORTED = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors share the parse-error exit code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _read_expression(args) -> str:
    if args.expr is not None:
        return args.expr
    if args.input is not None:
        return sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    raise UsageError("one of --expr or --input is required")


def _bundle(args) -> BundleSpec:
    group = GroupSpec(args.family, args.n)
    if args.comp is not None and args.k is not None:
        raise UsageError("give either --comp or --k, not both")
    if args.k is not None:
        if not 0 < args.k < args.n:
            raise IncompatibleComposition(f"--k must lie in 1..{args.n - 1}")
        comp = Composition((args.k, args.n - args.k))
    elif args.comp is not None:
        comp = Composition.parse(args.comp)
    else:
        comp = Composition.torus(args.n)
    return BundleSpec(group, comp, args.convention, args.cap)


def _operator_name(bundle: BundleSpec) -> str:
    if bundle.group.family == "A":
        if bundle.comp.is_torus():
            return "jacobi"
        if len(bundle.comp.parts) == 2:
            return "lagrange_sylvester"
    return "box"


def cmd_push(args) -> int:
    bundle = _bundle(args)
    source = _read_expression(args)
    b, alphabet = parse_with_alphabet(source, bundle.n)
    result = gysin_pushforward(b, bundle)
    invariant = is_invariant(result, bundle.group)
    if not invariant:
        raise NotDivisible(f"output {result} is not W-invariant")
    m = bundle.fiber_dimension
    payload = {
        "operator": _operator_name(bundle),
        "family": bundle.group.family,
        "n": bundle.n,
        "composition": list(bundle.comp.parts),
        "convention": bundle.convention.value,
        "input": format_polynomial(b, alphabet),
        "result": format_polynomial(result, alphabet),
        "degree_drop": m,
        "invariant": invariant,
    }
    _emit(args, payload, payload["result"])
    return EXIT_OK


def cmd_jacobi(args) -> int:
    args.comp, args.k = None, None
    return cmd_push(args)


def cmd_schur(args) -> int:
    try:
        lam = Partition.parse(args.lam)
    except ValueError as exc:
        raise ParseError(f"malformed partition {args.lam!r}", 1, 1) from exc
    if len(lam) > args.n:
        raise IncompatibleComposition(f"partition {lam.parts} has more than {args.n} parts")
    result = schur_bialternant(lam, args.n)
    text = format_polynomial(result)
    _emit(args, {"operator": "schur", "n": args.n, "partition": list(lam.parts), "result": text}, text)
    return EXIT_OK


def cmd_segre(args) -> int:
    report = segre_check(args.n, args.max_degree if args.max_degree is not None else 4)
    if args.format == "json":
        print(json.dumps(report.as_dict(), sort_keys=True))
    else:
        rows = [("j", "pushforward", "h_j", "ok")]
        rows += [(str(r.j), str(r.computed), str(r.expected), "pass" if r.passed else "FAIL")
                 for r in report.rows]
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        for row in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return EXIT_OK if report.passed else EXIT_NOT_POLYNOMIAL


def cmd_localize(args) -> int:
    if args.data is not None:
        raw = args.data
    elif args.input is not None:
        raw = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    else:
        raise UsageError("one of --data or --input is required")
    try:
        entries = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(entries, list) or not entries:
        raise ParseError("expected a non-empty JSON array of fixed points", 1, 1)
    data, alphabet = [], None
    for entry in entries:
        if not isinstance(entry, dict) or not {"restriction", "euler"} <= entry.keys():
            raise ParseError("each fixed point needs 'restriction' and 'euler'", 1, 1)
        r, a = parse_with_alphabet(str(entry["restriction"]), args.n)
        e = parse(str(entry["euler"]), args.n)
        alphabet = alphabet or a
        if e.is_zero():
            raise InvarianceError("Euler class must be nonzero")
        data.append(FixedPointDatum(r, e))
    result = localization_sum(data)
    text = format_polynomial(result, alphabet or "x")
    _emit(args, {"operator": "localize", "n": args.n, "points": len(data), "result": text}, text)
    return EXIT_OK


def cmd_check(args) -> int:
    max_n = args.n if args.n is not None else 4
    max_degree = args.max_degree if args.max_degree is not None else 6
    results = run_all(max_n, max_degree, args.convention, args.seed, args.samples)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({"passed": ok, "checks": [r.as_dict() for r in results]}, sort_keys=True))
    else:
        for r in results:
            print(r.line())
        print("all checks passed" if ok else "SOME CHECKS FAILED")
    return EXIT_OK if ok else EXIT_NOT_POLYNOMIAL


def _add_common(p, *, group=True, expression=True):
    if group:
        p.add_argument("--family", choices=["A", "B", "C"], default="A")
        p.add_argument("--comp", help="block sizes, e.g. 1,2")
        p.add_argument("--k", type=int, help="Grassmannian block size (composition k,n-k)")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="prop")
    if expression:
        p.add_argument("--expr", help="input class, e.g. 'a1^3'")
        p.add_argument("--input", help="file holding the input ('-' for stdin)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="Weyl group enumeration cap")
    p.add_argument("--max-degree", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gysin", description="Gysin pushforwards of flag bundles by localization.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("push", help="pushforward along a flag bundle with fiber G/H")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_push)

    p = sub.add_parser("jacobi", help="complete flag pushforward (Borel-Hirzebruch / Jacobi symmetrizer)")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("schur", help="Schur polynomial by the bialternant formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("segre", help="projective bundle pushforwards against h_j")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int, help="largest j (default 4)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("localize", help="certify a fixed-point sum given as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--data", help='JSON array of {"restriction": .., "euler": ..}')
    p.add_argument("--input", help="file holding the JSON ('-' for stdin)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("check", help="run the verification suite")
    p.add_argument("--n", type=int, help="largest rank (default 4)")
    p.add_argument("--max-degree", type=int, help="largest input degree (default 6)")
    p.add_argument("--convention", choices=[c.value for c in Convention], default="prop")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvarianceError, IncompatibleComposition) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NotDivisible as exc:
        msg = "sum is not polynomial"
        if exc.fraction is not None:
            f = exc.fraction
            den = " * ".join(f"({g})" for g in f.factors) or "1"
            msg += f"; residual fraction ({f.numerator}) / ({den})"
        else:
            msg += f": {exc}"
        print(msg, file=sys.stderr)
        return EXIT_NOT_POLYNOMIAL
    except (UnsupportedConfiguration, EnumerationCapExceeded) as exc:
        print(f"unsupported configuration: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
