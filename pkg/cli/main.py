"""
circulantlab command line.

Exit codes: 0 success, 1 usage error, 2 domain error. Results go to stdout
(one JSON object with --json), diagnostics and logs to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from census import census_45, census_two_prime, sample_singularity, verify_census_45
from circulant import CirculantSpec, det_elimination, det_resultant, is_singular
from construct import construct_singular
from cyclo import CyclotomicCache, cyclotomic, factorize
from decomp import decompose_bounded, decompose_rational, is_p_uniformized, uniformize_p
from models.registry import DetMethod, det_methods_help, get_det_metadata, get_det_methods
from utils.errors import CirculantLabError, OracleBoundExceeded, UnsupportedCensus
from utils.formatting import format_scientific, format_times_ten
from utils.parsing import format_support, parse_nonnegative_int, parse_positive_int, parse_support
from utils.settings import Settings

from . import __version__
from .schemas import CensusOut, CheckOut, ConstructOut, CyclotomicOut, DecomposeOut, DetOut, SampleOut

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class UsageError(Exception):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _arg(fn: Callable[[str], object]) -> Callable[[str], object]:
    def convert(text: str):
        try:
            return fn(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e)) from e

    convert.__name__ = fn.__name__
    return convert


def canonical_json(payload: BaseModel) -> str:
    """Sorted keys, compact separators, None fields dropped."""
    return json.dumps(payload.model_dump(exclude_none=True), sort_keys=True, separators=(",", ":"))


# -------------------------
# Parser
# -------------------------

def build_parser() -> argparse.ArgumentParser:
    version = f"circulantlab {__version__}"
    parser = _Parser(prog="circulantlab", description="Singularity of circulant unital matrices")
    parser.add_argument("--version", action="version", version=version)
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr")
    parser.add_argument("--workers", type=_arg(parse_positive_int), default=1,
                        help="Worker processes for enumerations")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--version", action="version", version=version)
        p.add_argument("--json", action="store_true", help="Emit one JSON object")
        return p

    p = add("cyclotomic", "Print the n-th cyclotomic polynomial")
    p.add_argument("n", type=_arg(parse_positive_int))

    p = add("check", "Decide singularity of a unital circulant matrix")
    p.add_argument("--n", type=_arg(parse_positive_int), required=True)
    p.add_argument("--support", type=_arg(parse_support), required=True)

    p = add("det", "Exact determinant of a unital circulant matrix")
    p.add_argument("--n", type=_arg(parse_positive_int), required=True)
    p.add_argument("--support", type=_arg(parse_support), required=True)
    p.add_argument("--method", choices=[m.value for m in get_det_methods()],
                   default=DetMethod.RESULTANT.value, help=det_methods_help())
    p.add_argument("--oracle-bound", type=_arg(parse_positive_int), default=Settings().oracle_bound)

    p = add("decompose", "Recurrent decomposition of a unital polynomial")
    p.add_argument("--n", type=_arg(parse_positive_int), required=True)
    p.add_argument("--support", type=_arg(parse_support), required=True)
    p.add_argument("--bound", type=_arg(parse_nonnegative_int), default=None)

    p = add("construct", "Construct a singular weight-k unital circulant matrix")
    p.add_argument("--k", type=_arg(parse_positive_int), required=True)
    p.add_argument("--seed", type=_arg(parse_nonnegative_int), default=None)

    p = add("count", "Census of singular weight-k unital circulant matrices")
    p.add_argument("--n", type=_arg(parse_positive_int), required=True)
    p.add_argument("--k", type=_arg(parse_nonnegative_int), required=True)
    p.add_argument("--verify-bruteforce", action="store_true", help="Also run the brute-force oracles")
    p.add_argument("--experimental", action="store_true", help="Generalized census for n = p^a q^b")

    p = add("sample", "Monte-Carlo singularity rate")
    p.add_argument("--n", type=_arg(parse_positive_int), required=True)
    p.add_argument("--k", type=_arg(parse_nonnegative_int), required=True)
    p.add_argument("--trials", type=_arg(parse_positive_int), required=True)
    p.add_argument("--seed", type=_arg(parse_nonnegative_int), required=True)
    p.add_argument("--chunk-size", type=_arg(parse_positive_int), default=Settings().chunk_size)

    return parser


# -------------------------
# Commands
# -------------------------

def _cmd_cyclotomic(args: argparse.Namespace, settings: Settings) -> Tuple[BaseModel, str]:
    phi = cyclotomic(args.n)
    out = CyclotomicOut(n=args.n, degree=phi.degree, polynomial=str(phi), coefficients=phi.to_json_coeffs())
    return out, out.polynomial


def _cmd_check(args: argparse.Namespace, settings: Settings) -> Tuple[BaseModel, str]:
    spec = CirculantSpec.from_support(args.n, args.support)
    verdict = is_singular(spec)
    out = CheckOut(n=args.n, singular=verdict.singular, witnesses=sorted(verdict.witnesses), weight=spec.weight)
    if out.singular:
        text = f"singular (witnesses: {format_support(out.witnesses)})"
    else:
        text = "nonsingular"
    return out, text


def _cmd_det(args: argparse.Namespace, settings: Settings) -> Tuple[BaseModel, str]:
    spec = CirculantSpec.from_support(args.n, args.support)
    method = DetMethod(args.method)
    if get_det_metadata(method).bounded and spec.n > settings.oracle_bound:
        raise OracleBoundExceeded(
            f"Order {spec.n} exceeds the elimination oracle bound {settings.oracle_bound}"
        )
    out = DetOut(n=args.n, method=method.value)
    if method in (DetMethod.RESULTANT, DetMethod.BOTH):
        out.resultant = str(det_resultant(spec))
    if method in (DetMethod.ELIMINATION, DetMethod.BOTH):
        out.elimination = str(det_elimination(spec, oracle_bound=settings.oracle_bound))
    if method == DetMethod.BOTH:
        text = f"resultant: {out.resultant}\nelimination: {out.elimination}"
    else:
        text = out.resultant if out.resultant is not None else out.elimination
    return out, text


def _cmd_decompose(args: argparse.Namespace, settings: Settings) -> Tuple[BaseModel, str]:
    spec = CirculantSpec.from_support(args.n, args.support)
    two_primes = args.n >= 2 and factorize(args.n).num_primes == 2
    if args.bound is not None:
        dec = decompose_bounded(spec.row, args.n, args.bound)
    else:
        dec = decompose_rational(spec.row, args.n)
        if two_primes:
            dec = uniformize_p(dec)
    out = DecomposeOut(
        n=args.n,
        parts={str(p): h.to_json_coeffs() for p, h in dec.parts},
        uniformized=is_p_uniformized(dec) if two_primes else None,
        unital=dec.is_unital(),
    )
    text = "\n".join(f"h_{args.n // p} = {h}" for p, h in dec.parts)
    return out, text


def _cmd_construct(args: argparse.Namespace, settings: Settings) -> Tuple[BaseModel, str]:
    construction = construct_singular(args.k, seed=args.seed)
    out = ConstructOut(**construction.to_dict())
    text = (
        f"n={out.n} (p={out.p}, q={out.q}, r={out.r}), a={out.a}, b={out.b}, "
        f"R_a={format_support(out.R_a)}\nsupport: {format_support(out.support)}"
    )
    return out, text


def _cmd_count(args: argparse.Namespace, settings: Settings) -> Tuple[BaseModel, str]:
    if args.experimental:
        if 2 * args.k + 1 != args.n:
            raise UnsupportedCensus(f"Experimental census needs k = (n-1)/2, got n={args.n}, k={args.k}")
        report = census_two_prime(args.n)
    elif (args.n, args.k) == (45, 22):
        report = census_45()
    else:
        raise UnsupportedCensus("Census is available for n=45, k=22 (use --experimental for other n)")

    verified = None
    if args.verify_bruteforce:
        if report.experimental:
            raise UnsupportedCensus("Brute-force verification is only available for n=45, k=22")
        verified = verify_census_45(workers=settings.workers).agrees

    out = CensusOut(**report.to_dict(), verified=verified)
    text = "\n".join(
        [
            f"Phi_n divides: {out.count_phi_n}",
            f"proper divisor: {out.count_phi_sub}",
            f"both: {out.count_both}",
            f"total: {out.total} of {out.universe}",
            f"probability: {out.probability} ~ {format_times_ten(report.probability, 3)}",
        ]
        + ([f"brute force agrees: {verified}"] if verified is not None else [])
    )
    return out, text


def _cmd_sample(args: argparse.Namespace, settings: Settings) -> Tuple[BaseModel, str]:
    hits, trials = sample_singularity(args.n, args.k, args.trials, args.seed, chunk_size=settings.chunk_size)
    rate = format_scientific(Fraction(hits, trials), 4)
    out = SampleOut(n=args.n, k=args.k, trials=trials, hits=hits, seed=args.seed, rate=rate)
    return out, f"{hits} singular of {trials} ({rate})"


COMMANDS = {
    "cyclotomic": _cmd_cyclotomic,
    "check": _cmd_check,
    "det": _cmd_det,
    "decompose": _cmd_decompose,
    "construct": _cmd_construct,
    "count": _cmd_count,
    "sample": _cmd_sample,
}


# -------------------------
# Entry points
# -------------------------

def run(argv: Sequence[str]) -> Tuple[int, str]:
    """
    Execute one command.

    Returns:
        (exit code, stdout text); diagnostics are written to stderr
    """
    parser = build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured):
            args = parser.parse_args(list(argv))
    except SystemExit as e:
        # --help / --version
        return (e.code if isinstance(e.code, int) else EXIT_OK), captured.getvalue()
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE, ""

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        settings = Settings(
            workers=args.workers,
            oracle_bound=getattr(args, "oracle_bound", Settings().oracle_bound),
            chunk_size=getattr(args, "chunk_size", Settings().chunk_size),
        )
    except ValidationError as e:
        print(f"circulantlab: invalid settings: {e}", file=sys.stderr)
        return EXIT_USAGE, ""

    try:
        payload, text = COMMANDS[args.command](args, settings)
    except CirculantLabError as e:
        log.debug("Domain error in %s", args.command, exc_info=True)
        print(f"circulantlab {args.command}: {e}", file=sys.stderr)
        return EXIT_DOMAIN, ""

    output = canonical_json(payload) if args.json else text
    return EXIT_OK, output + "\n"


def main(argv: Optional[List[str]] = None) -> None:
    code, output = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(output)
    sys.exit(code)


if __name__ == "__main__":
    main()
