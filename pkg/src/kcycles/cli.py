"""Command-line front end.

Subcommands: treepoly, coeff, table, cup, witten, verify, oracle.  JSON is
the canonical interchange format (LaTeX and text are conveniences with no
round-trip guarantee); identical invocations produce byte-identical
output.  Exit codes: 0 success, 2 usage error, 3 enumeration cap
exceeded, 4 verification/oracle failure, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import cache as cache_mod
from .coeffs import (
    a_lambda_mu,
    b_lambda_mu,
    cup_document,
    partition_key,
    table_document,
    witten_expansion,
)
from .exact import MultiPoly, format_rational, normalize_partition, partitions_of
from .oracles import (
    DEFAULT_LETTER_CAP,
    DEFAULT_TREE_CAP,
    EnumerationCapError,
    SIGN_SUM_VARIANTS,
    counting_identity_bruteforce,
    counting_identity_closed,
    reduced_tree_poly_bruteforce,
    shuffle_sign_sum_bruteforce,
    tree_poly_bruteforce,
)
from .treepoly import l_poly, p_family, reduced_tree_poly, tree_poly, xe_tables
from .verify import run_verify

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_VERIFY = 4
EXIT_IO = 5

ENV_CAPS = "KCYCLES_CAPS"


def _parse_caps_env() -> dict[str, int]:
    raw = os.environ.get(ENV_CAPS, "")
    caps: dict[str, int] = {}
    if not raw:
        return caps
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, _, value = chunk.partition("=")
        if name.strip() not in ("trees", "letters") or not value.strip().isdigit():
            raise ValueError(
                f"cannot parse {ENV_CAPS}={raw!r}; expected e.g. trees=5,letters=11"
            )
        caps[name.strip()] = int(value.strip())
    return caps


def _partition_arg(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
        return normalize_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from exc


def _variant_arg(text: str) -> str:
    if text in ("reduced", "full", "pfamily") or (
        text.startswith("l:") and text[2:].isdigit()
    ):
        return text
    raise argparse.ArgumentTypeError(
        f"bad variant {text!r}; use reduced, full, pfamily or l:N"
    )


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _signed_join(chunks: list[tuple[str, str]]) -> str:
    # chunks: (sign, body) with sign in {"+", "-"}
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def _latex_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(abs(value.numerator))
    return f"\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _kappa_latex(parts: tuple[int, ...]) -> str:
    if not parts:
        return "1"
    factors = []
    seen: dict[int, int] = {}
    for p in parts:
        seen[p] = seen.get(p, 0) + 1
    for value in sorted(seen, reverse=True):
        power = seen[value]
        body = f"\\tilde{{\\kappa}}_{{{value}}}"
        factors.append(body if power == 1 else f"{body}^{{{power}}}")
    return " ".join(factors)


def _render_poly(poly: MultiPoly, fmt: str) -> str:
    if fmt == "json":
        return cache_mod.canonical_json(poly.to_obj())
    if fmt == "latex":
        return poly.latex()
    return poly.text()


def _poly_summary(poly: MultiPoly) -> str:
    return f"{len(poly)} terms, coefficient sum {format_rational(poly.coefficient_sum())}"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_treepoly(args) -> int:
    k = args.k
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if args.variant == "reduced":
        _emit(_render_poly(reduced_tree_poly(k), args.format))
    elif args.variant == "full":
        _emit(_render_poly(tree_poly(k), args.format))
    elif args.variant.startswith("l:"):
        _emit(_render_poly(l_poly(k, int(args.variant[2:])), args.format))
    else:
        family = p_family(k)
        if args.format == "json":
            obj = {
                "k": k,
                "polys": {str(c): family.polys[c].to_obj() for c in sorted(family.polys)},
            }
            _emit(cache_mod.canonical_json(obj))
        else:
            lines = []
            for c in sorted(family.polys):
                rendered = (
                    family.polys[c].latex() if args.format == "latex"
                    else family.polys[c].text()
                )
                lines.append(f"P[{c}] = {rendered}")
            _emit("\n".join(lines))
    return EXIT_OK


def cmd_coeff(args) -> int:
    lam = args.lam
    if not lam:
        raise ValueError("--lambda must be a nonempty partition")
    mu = args.mu if args.mu is not None else (sum(lam),)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")
    value = b_lambda_mu(lam, mu) if args.kind == "b" else a_lambda_mu(lam, mu)
    _emit(format_rational(value))
    return EXIT_OK


def cmd_table(args) -> int:
    weight = args.weight
    if weight < 1:
        raise ValueError(f"need weight >= 1, got {weight}")
    cache_dir = Path(args.cache_dir) if args.cache_dir else cache_mod.default_cache_dir()
    cache_path = cache_mod.document_path(cache_dir, "table", f"w{weight}")
    doc = cache_mod.load_document(cache_path)
    if doc is None or doc.get("weight") != weight:
        doc = table_document(weight)
        cache_mod.write_atomic(cache_path, cache_mod.canonical_json(doc))
    if args.out:
        cache_mod.write_atomic(Path(args.out), cache_mod.canonical_json(doc))
        _emit(str(args.out))
    else:
        _emit(str(cache_path))
    return EXIT_OK


def cmd_cup(args) -> int:
    doc = cup_document(args.lam, args.mu if args.mu is not None else ())
    if args.format == "json":
        _emit(cache_mod.canonical_json(doc))
    elif args.format == "latex":
        chunks = []
        for key, value in doc["terms"].items():
            coeff = Fraction(value)
            body = _latex_rational(coeff)
            body += f"\\,[W^*_{{{key}}}]"
            chunks.append(("-" if coeff < 0 else "+", body))
        _emit(_signed_join(chunks) if chunks else "0")
    else:
        lines = [f"{key}: {value}" for key, value in doc["terms"].items()]
        _emit("\n".join(lines) if lines else "0")
    return EXIT_OK


def cmd_witten(args) -> int:
    lam = args.lam
    expansion = witten_expansion(lam)
    ordered = [
        (mu, expansion[mu]) for mu in partitions_of(sum(lam)) if mu in expansion
    ]
    if args.format == "json":
        obj = {
            "lambda": list(lam),
            "terms": {partition_key(mu): format_rational(v) for mu, v in ordered},
        }
        _emit(cache_mod.canonical_json(obj))
    elif args.format == "latex":
        chunks = []
        for mu, value in ordered:
            coeff = Fraction(value)
            body = _latex_rational(coeff)
            kappa = _kappa_latex(mu)
            chunks.append(("-" if coeff < 0 else "+", f"{body}\\,{kappa}"))
        _emit(_signed_join(chunks) if chunks else "0")
    else:
        lines = [f"{partition_key(mu)}: {format_rational(v)}" for mu, v in ordered]
        _emit("\n".join(lines) if lines else "0")
    return EXIT_OK


def cmd_verify(args) -> int:
    cache_dir = Path(args.cache_dir) if args.cache_dir else cache_mod.default_cache_dir()
    report = run_verify(args.level, cache_dir=cache_dir)
    for line in report.lines(timings=args.timings):
        _emit(line)
    return EXIT_OK if report.ok else EXIT_VERIFY


def _oracle_report(brute, other, brute_text: str, other_text: str) -> int:
    equal = brute == other
    _emit(f"brute-force: {brute_text}")
    _emit(f"reference:   {other_text}")
    _emit("verdict: equal" if equal else "verdict: UNEQUAL")
    return EXIT_OK if equal else EXIT_VERIFY


def cmd_oracle(args) -> int:
    caps = _parse_caps_env()
    cap_trees = args.cap_trees if args.cap_trees is not None else caps.get(
        "trees", DEFAULT_TREE_CAP
    )
    cap_letters = args.cap_letters if args.cap_letters is not None else caps.get(
        "letters", DEFAULT_LETTER_CAP
    )
    if args.what == "treepoly":
        brute = reduced_tree_poly_bruteforce(args.k, cap_trees)
        production = reduced_tree_poly(args.k)
        if len(brute) <= 12:
            return _oracle_report(brute, production, brute.text(), production.text())
        return _oracle_report(
            brute, production, _poly_summary(brute), _poly_summary(production)
        )
    if args.what == "shuffle-sum":
        values = args.tuple
        brute = tree_poly_bruteforce(values, cap_letters)
        k = (len(values) - 1) // 2
        closed = tree_poly(k).eval(values)
        return _oracle_report(brute, closed, str(brute), format_rational(closed))
    if args.what == "counting":
        brute = counting_identity_bruteforce(args.n, args.s)
        closed = counting_identity_closed(args.n, args.s)
        return _oracle_report(brute, closed, str(brute), str(closed))
    brute = shuffle_sign_sum_bruteforce(args.variant, args.n, args.m)
    closed, _ = xe_tables(args.variant, args.n, args.m)
    return _oracle_report(brute, closed, str(brute), str(closed))


def _odd_tuple_arg(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tuple {text!r}") from exc
    if not values or len(values) % 2 == 0 or any(v < 1 or v % 2 == 0 for v in values):
        raise argparse.ArgumentTypeError(
            f"need an odd-length tuple of positive odd integers, got {text!r}"
        )
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kcycles",
        description=(
            "Exact tree polynomials and the conversion coefficients between "
            "dual Kontsevich cycles and adjusted Miller-Morita-Mumford classes."
        ),
    )
    parser.add_argument("--cache-dir", default=None, help="result cache directory")
    parser.add_argument(
        "--cap-trees", type=int, default=None,
        help=f"max level for full tree enumeration (default {DEFAULT_TREE_CAP})",
    )
    parser.add_argument(
        "--cap-letters", type=int, default=None,
        help=f"max letters for shuffle enumeration (default {DEFAULT_LETTER_CAP})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("treepoly", help="emit a tree polynomial")
    p.add_argument("k", type=int)
    p.add_argument("--variant", type=_variant_arg, default="reduced",
                   help="reduced, full, pfamily or l:N")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_treepoly)

    p = sub.add_parser("coeff", help="print one conversion coefficient")
    p.add_argument("kind", choices=("b", "a"))
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", dest="mu", type=_partition_arg, default=None,
                   help="defaults to the one-part partition of the weight")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("table", help="write the b/a table document for a weight")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--out", default=None, help="output path (defaults into the cache)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cup", help="cup-product coefficients of two dual cycles")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", dest="mu", type=_partition_arg, default=None)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("witten", help="expand a dual cycle in kappa-monomials")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_witten)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--timings", action="store_true",
                   help="include elapsed times (non-deterministic output)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare brute force against the production route")
    oracle_sub = p.add_subparsers(dest="what", required=True)
    q = oracle_sub.add_parser("treepoly")
    q.add_argument("k", type=int)
    q.set_defaults(func=cmd_oracle)
    q = oracle_sub.add_parser("shuffle-sum")
    q.add_argument("tuple", type=_odd_tuple_arg)
    q.set_defaults(func=cmd_oracle)
    q = oracle_sub.add_parser("counting")
    q.add_argument("n", type=int)
    q.add_argument("s", type=int)
    q.set_defaults(func=cmd_oracle)
    q = oracle_sub.add_parser("xe")
    q.add_argument("variant", choices=SIGN_SUM_VARIANTS)
    q.add_argument("n", type=int)
    q.add_argument("m", type=int)
    q.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
