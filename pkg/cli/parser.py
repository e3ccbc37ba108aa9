"""Argument parser for the liequiver command line."""

import argparse
from typing import List, Optional, Tuple

from config.settings import (
    APP_NAME, DEFAULT_JOBS, DEFAULT_LAMBDA_MAX, DEFAULT_SEED, INTERVAL_VERTEX_CAP,
    MODULE_DIM_CAP, VERSION,
)
from models import LieQuiverError, LieQuiverErrorType, LieType, Weight

PSI_HELP = (
    "Psi specification. Type C: '1,3' means Psi(1,3) = {beta_11, beta_13, beta_33}. "
    "Type A: 'a:1,3x3,5' lists the roots alpha_{1,3} and alpha_{3,5}."
)

EPILOG = """
Examples:
  liequiver roots --type C --rank 2
  liequiver quiver --type C --rank 2 --psi 1,2 --window 0,0:6,6 --dot out.dot
  liequiver relations --type C --rank 3 --psi 1,3 --lam 1,0,2 --eta 2,2,1
  liequiver verify --type A --rank 5 --psi a:1,3x3,5 --lmax 3 --jobs 4
  liequiver families --xi 6,5 --parity 0 --count
  liequiver koszul --type C --rank 2 --psi 1,2 --window 0,0:4,4
"""


def parse_ints(text: str, what: str = "value") -> Tuple[int, ...]:
    """Parse a comma list of integers."""
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Cannot parse {what} '{text}'")


def parse_weight(text: str, rank: int) -> Weight:
    """Parse a weight given by its coordinates lambda(h_1), ..., lambda(h_l)."""
    coords = parse_ints(text, "weight")
    if len(coords) != rank:
        raise LieQuiverError(
            LieQuiverErrorType.INVALID_INPUT,
            f"Weight '{text}' needs {rank} coordinates, got {len(coords)}"
        )
    return Weight(coords)


def parse_window(text: str, rank: int) -> Tuple[Weight, Weight]:
    """Parse ``lo:hi`` into a pair of weights."""
    if ":" not in text:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"Window '{text}' must look like lo:hi")
    low, high = text.split(":", 1)
    return parse_weight(low, rank), parse_weight(high, rank)


def lie_type_from(args: argparse.Namespace) -> LieType:
    if getattr(args, "type", None) is None or getattr(args, "rank", None) is None:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "--type and --rank are required")
    return LieType(args.type.upper(), args.rank)


def _add_type_args(parser: argparse.ArgumentParser, psi: bool = True, psi_required: bool = True):
    parser.add_argument("--type", required=True, choices=["A", "C", "a", "c"], help="Lie type family")
    parser.add_argument("--rank", required=True, type=int, help="Rank l")
    if psi:
        parser.add_argument("--psi", required=psi_required, help=PSI_HELP)


def _add_output_args(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="Print JSON instead of text")
    parser.add_argument("-o", "--output", help="Write the JSON result to this file")


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Quivers with relations from Koszul algebras of g-invariants (types A and C)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    roots = commands.add_parser("roots", help="List the positive roots and Cartan matrix")
    _add_type_args(roots, psi=False)
    _add_output_args(roots)

    extremal = commands.add_parser("extremal", help="Enumerate extremal sets or test one")
    _add_type_args(extremal, psi_required=False)
    extremal.add_argument("--witness", action="store_true", help="Also print the LP witness")
    _add_output_args(extremal)

    quiver = commands.add_parser("quiver", help="Build a window of Delta_Psi")
    _add_type_args(quiver)
    region = quiver.add_mutually_exclusive_group(required=True)
    region.add_argument("--window", help="Coordinate box lo:hi of dominant weights")
    region.add_argument("--interval", help="Interval mu:nu in the Psi order")
    region.add_argument("--down", help="Down-set of a weight")
    region.add_argument("--up", help="Up-set of a weight, see --depth")
    quiver.add_argument("--depth", type=int, default=2, help="Psi-parts above the weight for --up")
    quiver.add_argument("--dot", help="Write DOT, one file per component")
    quiver.add_argument("--vertex-cap", type=int, default=INTERVAL_VERTEX_CAP)
    _add_output_args(quiver)

    families = commands.add_parser("families", help="Lattice quiver families Xi_a(m) and Gamma_a(m, n)")
    shape = families.add_mutually_exclusive_group(required=True)
    shape.add_argument("--xi", help="Box sides m, 'inf' allowed")
    shape.add_argument("--gamma", help="Box sides m;n for Gamma_a(m, n)")
    shape.add_argument("--gamma-t", type=int, help="The quiver Gamma(t)")
    families.add_argument("--parity", type=int, default=0, help="Parity a for Xi_a(m), offset a for Gamma_a(m, n)")
    families.add_argument("--window", help="Bounds replacing infinite sides")
    families.add_argument("--count", action="store_true", help="Print the vertex count only")
    families.add_argument("--classify", action="store_true", help="Print the isomorphism class key")
    families.add_argument("--dot", help="Write DOT output")
    _add_output_args(families)

    relations = commands.add_parser("relations", help="Relation space between lam and lam + eta")
    _add_type_args(relations)
    relations.add_argument("--lam", required=True, help="Target weight")
    target = relations.add_mutually_exclusive_group(required=True)
    target.add_argument("--eta", help="Element of Psi + Psi in simple-root coordinates")
    target.add_argument("--family", metavar="WINDOW", help="All lattice relations on the component of lam inside this window")
    relations.add_argument("--raw", action="store_true", help="Raw Pi coordinates instead of normalised paths")
    relations.add_argument("--oracle", action="store_true", help="Solve the relations from the oracle instead")
    relations.add_argument("--dual", action="store_true", help="Also print the Koszul dual relations")
    _add_output_args(relations)

    verify = commands.add_parser("verify", help="Compare the closed forms with the oracle over a weight grid")
    _add_type_args(verify)
    verify.add_argument("--lmax", type=int, default=DEFAULT_LAMBDA_MAX, help="Largest weight coordinate")
    verify.add_argument("--jobs", type=int, default=DEFAULT_JOBS, help="Worker processes")
    verify.add_argument("--sample", type=int, help="Check a random sample of this many weights")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for --sample")
    verify.add_argument("--adapted", action="store_true", help="Also check the adapted families on every arrow")
    verify.add_argument("--module-cap", type=int, default=MODULE_DIM_CAP)
    _add_output_args(verify)

    koszul = commands.add_parser("koszul", help="Hilbert series, Koszulity and global dimension")
    _add_type_args(koszul)
    algebra = koszul.add_mutually_exclusive_group(required=True)
    algebra.add_argument("--window", help="Interval mu:nu")
    algebra.add_argument("--down", help="Down-set of a weight")
    algebra.add_argument("--up", help="Up-set of a weight, see --depth")
    koszul.add_argument("--depth", type=int, default=2)
    koszul.add_argument("--degree", type=int, help="Top degree for the numerical test")
    _add_output_args(koszul)

    export = commands.add_parser("export", help="Write DOT and JSON for a window and its relations")
    _add_type_args(export)
    export.add_argument("--window", required=True, help="Interval mu:nu")
    export.add_argument("--dot", help="DOT output path")
    export.add_argument("--relations", help="JSON output path for the relation spaces")
    export.add_argument("--hilbert", help="JSON output path for the Hilbert matrix")
    export.add_argument("--degree", type=int, default=3, help="Top degree of the Hilbert matrix")
    _add_output_args(export)

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
