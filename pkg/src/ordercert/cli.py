"""Command-line interface.

Subcommands::

    verify       check every generator identity, write a relation-report
    epsilon      compute the six-factor product and compare it to b^-36
    prove        build, check, and write the no-left-order derivation
    check-cert   re-check a derivation certificate from disk
    eval         apply a word to an exact rational point
    search       bounded non-left-orderability witness search

Exit codes: 0 success / verified, 1 a checked statement is false or a
derivation is invalid, 2 unknown or undecided facts (and "witness not
found" for search), 3 input, syntax, or I/O errors.  Stdout carries
human-readable text; certificates go only to files.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import certs
from .exactpl import PLError, format_rational
from .orderlogic import derivation as derivation_mod
from .orderlogic.derivation import check_derivation
from .orderlogic.scripts import script_theorem_main
from .orderlogic.signsearch import (
    OracleError,
    lattice_oracle,
    order_two_oracle,
    sign_search,
    skew_oracle,
    verify_nonlo_witness,
)
from .plane import PLANE_GENERATOR_NAMES, plane_word
from .skew import (
    SkewElement,
    compute_epsilon,
    epsilon_offsets,
    perturb_generators,
    standard_generators,
    verify_relations,
    word_to_element,
)
from .plane import verify_mirrored_relations
from .wordsyntax import WordSyntaxError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3


def _parse_point(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise WordSyntaxError(f"point must be 'x,y', got {text!r}")
    try:
        return (Fraction(parts[0].strip()), Fraction(parts[1].strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise WordSyntaxError(f"bad rational in point {text!r}") from exc


def _format_point(point) -> str:
    return f"{format_rational(point[0])},{format_rational(point[1])}"


def _write_cert(path, kind, payload, timestamp: bool) -> None:
    certificate = certs.make_certificate(kind, payload, timestamp=timestamp)
    certs.write_certificate(path, certificate)


def cmd_verify(args) -> int:
    try:
        gens = perturb_generators(args.perturb) if args.perturb else standard_generators()
    except WordSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report = verify_relations(gens)
    mirrored = verify_mirrored_relations(gens)
    rows = report.rows() + mirrored.rows()
    all_hold = report.all_hold and mirrored.all_hold
    payload = certs.serialize_relation_report(report, generators=gens)
    payload["facts"].extend(
        {"id": fid, "description": desc, "holds": holds}
        for fid, desc, holds in mirrored.rows()
    )
    payload["all_hold"] = all_hold
    if args.format == "json":
        print(certs.canonical_dumps(payload))
    else:
        for fid, desc, holds in rows:
            print(f"{fid:5s} {'ok  ' if holds else 'FAIL'} {desc}")
        print(f"total: {'all identities hold' if all_hold else 'some identities FAIL'}")
    try:
        _write_cert(args.out, "relation-report", payload, not args.no_timestamp)
    except OSError as exc:
        print(f"error: cannot write certificate: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK if all_hold else EXIT_FALSE


def cmd_epsilon(args) -> int:
    gens = standard_generators()
    eps = compute_epsilon(gens)
    offsets = epsilon_offsets(gens)
    target = gens["b"].power(-36)
    conj = gens["c"].conjugate(gens["d"])
    print("epsilon components:")
    print(f"  x_part breakpoints: {conj_pairs(eps.x_part.to_pairs())}")
    print(f"  shift  breakpoints: {conj_pairs(eps.shift.to_pairs())}")
    print(f"offsets on the line x = 0: ({', '.join(format_rational(v) for v in offsets)})")
    print(f"offset sum: {format_rational(sum(offsets))}")
    bps = sorted(conj.breakpoint_xs())
    print(f"breakpoints of c^d: {{{', '.join(format_rational(x) for x in bps)}}}")
    equal = eps == target
    print(f"epsilon == b^-36: {equal}")
    return EXIT_OK if equal else EXIT_FALSE


def conj_pairs(pairs) -> str:
    return " ".join(f"({x}, {y})" for x, y in pairs)


def cmd_prove(args) -> int:
    derivation = script_theorem_main()
    if not derivation.table.verify_all():
        bad = [fid for fid, ok in derivation.table.status.items() if not ok]
        print(f"facts failed verification: {', '.join(sorted(bad))}", file=sys.stderr)
        return EXIT_UNKNOWN
    verdict = check_derivation(derivation)
    print(
        f"derivation '{derivation.name}': {verdict} "
        f"({derivation.count_steps()} steps, {derivation.count_branches()} branches)"
    )
    if not verdict.is_valid:
        return EXIT_UNKNOWN if verdict.status == derivation_mod.UNKNOWN_FACTS else EXIT_FALSE
    try:
        _write_cert(args.out, "derivation", certs.serialize_derivation(derivation),
                    not args.no_timestamp)
    except OSError as exc:
        print(f"error: cannot write certificate: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(f"certificate written to {args.out}")
    return EXIT_OK


def cmd_check_cert(args) -> int:
    try:
        certificate = certs.read_certificate(args.path)
        if certificate["kind"] != "derivation":
            raise certs.CertificateError(
                f"expected a derivation certificate, found {certificate['kind']!r}"
            )
        derivation = certs.parse_derivation(certificate["payload"])
    except certs.CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    derivation.table.verify_all()
    verdict = check_derivation(derivation)
    print(f"derivation '{derivation.name}': {verdict}")
    if verdict.is_valid:
        return EXIT_OK
    return EXIT_UNKNOWN if verdict.status == derivation_mod.UNKNOWN_FACTS else EXIT_FALSE


def cmd_eval(args) -> int:
    try:
        word = plane_word(args.word)
        point = _parse_point(args.point)
    except (WordSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(_format_point(word.apply(point)))
    return EXIT_OK


def _build_oracle(args):
    if args.oracle == "test-z2":
        return order_two_oracle()
    if args.oracle == "lattice":
        spec = args.atoms or "1,0;0,1"
        vectors = []
        for chunk in spec.split(";"):
            x, y = chunk.split(",")
            vectors.append((int(x), int(y)))
        return lattice_oracle(vectors)
    if args.oracle == "skew":
        spec = args.atoms or "a;b;c;d"
        return skew_oracle([chunk.strip() for chunk in spec.split(";") if chunk.strip()])
    raise WordSyntaxError(f"unknown oracle {args.oracle!r}")


def cmd_search(args) -> int:
    try:
        oracle = _build_oracle(args)
    except (WordSyntaxError, ValueError, PLError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        witness = sign_search(oracle, max_depth=args.depth, max_products=args.max_products)
    except OracleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if witness is None:
        print(f"no witness within depth {args.depth} (bound {args.max_products} products)")
        return EXIT_UNKNOWN
    if not verify_nonlo_witness(witness, oracle):
        raise AssertionError("search produced a witness its own verifier rejects")
    print(f"witness found: every sign choice for {witness.n_atoms} atom(s) reaches the identity")
    for signs, indices in sorted(witness.products.items()):
        sign_text = "".join("+" if s > 0 else "-" for s in signs)
        product_text = " ".join(f"g{i}" if signs[i] > 0 else f"g{i}^-1" for i in indices)
        print(f"  signs {sign_text}: {product_text} == 1")
    if args.out:
        try:
            _write_cert(
                args.out,
                "nonlo-witness",
                certs.serialize_witness(witness, args.depth, args.atoms or ""),
                not args.no_timestamp,
            )
        except OSError as exc:
            print(f"error: cannot write certificate: {exc}", file=sys.stderr)
            return EXIT_ERROR
        print(f"certificate written to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordercert",
        description="Exact verification and certificates for a plane homeomorphism "
                    "group that admits no left-invariant order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check all generator identities")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--perturb", metavar="SPEC", default=None,
                   help="test hook: replace a generator, e.g. 'd:=d b'")
    p.add_argument("--out", default="relations.cert.json")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("epsilon", help="compute the six-factor product exactly")
    p.set_defaults(func=cmd_epsilon)

    p = sub.add_parser("prove", help="check the no-left-order derivation and write it")
    p.add_argument("--out", default="theorem.cert.json")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check-cert", help="re-check a derivation certificate from disk")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_cert)

    p = sub.add_parser("eval", help="apply a word to a point, e.g. eval 'c^d' 0,0")
    p.add_argument("word")
    p.add_argument("point")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("search", help="bounded non-left-orderability witness search")
    p.add_argument("--oracle", choices=("skew", "lattice", "test-z2"), default="skew")
    p.add_argument("--atoms", default=None,
                   help="semicolon-separated atoms (words for skew, 'x,y' pairs for lattice)")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--max-products", type=int, default=10000)
    p.add_argument("--out", default=None)
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
