"""
steinberg
"""
import argparse

from ..frobenius.steinberg_block import steinberg_block_weight, steinberg_candidates
from .common import add_type_args, root_system, weight


def _steinberg(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    lam = weight(rs, args.lam)
    payload = {"mu": str(steinberg_block_weight(rs, lam, args.p))}
    if args.candidates:
        payload["candidates"] = [str(mu) for mu in steinberg_candidates(rs, lam, args.p)]
    return payload


def setup(cli) -> None:
    parser = cli.add_command("steinberg", help="μ with π_{(p-1)ρ} Fr_* O_X(λ) ≅ St ⊗ St ⊗ O_X(μ)", handler=_steinberg)
    add_type_args(parser)
    parser.add_argument("--lambda", dest="lam", required=True)
    parser.add_argument("--candidates", action="store_true", help="also list the candidate window")
