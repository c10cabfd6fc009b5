"""Command-line front end: ``gf2split {split,verify,rcf,oracle,selftest}``.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition
error, 3 internal construction error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canonical import rcf
from .certificate import MODES, CertificateError, SplitCertificate
from .field import FieldError, parse_field
from .matrix import MatrixError, ParseError, format_matrix, parse_matrix
from .poly import format_poly
from .splitter import ConstructionError, SplitError, SplitOptions, split_any
from .verify import SearchLimitError, brute_force_exists, check_certificate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _load_matrix(args):
    field = parse_field(args.field) if args.field else None
    try:
        return parse_matrix(_read(args.matrix), field)
    except ParseError as exc:
        raise UsageError(f"{args.matrix}: {exc}") from None


def _hex(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hexadecimal value: {text!r}") from None


def cmd_split(args) -> int:
    A = _load_matrix(args)
    opts = SplitOptions(a=args.a, mode=args.mode, subfield_degree=args.subfield_degree)
    cert = split_any(A, opts)
    _write(cert.to_json(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = SplitCertificate.from_json(_read(args.certificate))
    except (CertificateError, ParseError) as exc:
        raise UsageError(f"{args.certificate}: {exc}") from None
    report = check_certificate(cert.A, cert)
    text = json.dumps(report.to_dict(), indent=2) + "\n" if args.json else report.format_text()
    _write(text, args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_rcf(args) -> int:
    A = _load_matrix(args)
    r = rcf(A)
    if args.json:
        doc = {
            "field": A.field.designation(),
            "factors": [format_poly(f) for f in r.factors],
            "basis": format_matrix(r.basis),
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [f"factor {format_poly(f)}" for f in r.factors]
        text = "\n".join(lines) + "\n# basis\n" + format_matrix(r.basis)
    _write(text, args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    A = _load_matrix(args)
    exists, witness = brute_force_exists(A, args.nil_index, args.potency)
    if args.json:
        doc = {"exists": exists, "potency": args.potency, "nil_index_max": args.nil_index}
        doc["witness"] = format_matrix(witness) if witness is not None else None
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = f"exists {str(exists).lower()} (E^{args.potency} = E, (A + E)^{args.nil_index} = 0)\n"
        if witness is not None:
            text += "# witness E\n" + format_matrix(witness)
    _write(text, args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    only = None
    if args.only:
        try:
            only = {int(x) for x in args.only.split(",")}
        except ValueError:
            raise UsageError(f"bad criterion list {args.only!r}") from None
    scale = 0.1 if args.quick else 1.0
    lines = []

    def report(line):
        lines.append(line)
        if not args.json:
            print(line, flush=True)

    results = run_selftest(seed=args.seed, scale=scale, only=only, report=report)
    if args.json:
        doc = {
            "seed": args.seed,
            "scale": scale,
            "criteria": [{"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results],
        }
        _write(json.dumps(doc, indent=2) + "\n", args.out)
    elif args.out:
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gf2split", description="Square-zero + diagonalizable/potent matrix splits over GF(2^m).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix=True):
        if matrix:
            p.add_argument("matrix", help="matrix file ('-' for stdin)")
            p.add_argument("--field", help="expected field, e.g. 'gf(2^4)'; the file header must agree")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("split", help="split a matrix and write a certificate")
    common(p)
    p.add_argument("--mode", choices=MODES, default="diag-split")
    p.add_argument("--subfield-degree", type=int, help="d with K = GF(2^d) for potent-subfield mode")
    p.add_argument("--a", type=_hex, help="force the free parameter a (hex)")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("verify", help="check a certificate independently")
    p.add_argument("certificate", help="certificate file ('-' for stdin)")
    common(p, matrix=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rcf", help="invariant factors and change of basis")
    common(p)
    p.set_defaults(func=cmd_rcf)

    p = sub.add_parser("oracle", help="exhaustive search for E^potency = E with (A + E)^k = 0 over GF(2)")
    common(p)
    p.add_argument("--potency", type=int, choices=(2, 4), default=4)
    p.add_argument("--nil-index", type=int, choices=(2, 3, 4), default=2)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    common(p, matrix=False)
    p.add_argument("--seed", type=int, default=0, help="seed for the random suites (default 0)")
    p.add_argument("--quick", action="store_true", help="a tenth of the random instances")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (UsageError, SplitError, FieldError, MatrixError, SearchLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
