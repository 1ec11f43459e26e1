"""
dims
"""
import argparse

from ..lie.rep_dims import filtration_dimension, steinberg_dimension, weyl_dimension
from .common import add_type_args, root_system, weight


def _dims(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    lam = weight(rs, args.lam)
    payload = {
        "filtration_dim": str(filtration_dimension(rs, lam)),
        "weyl_dim": str(weyl_dimension(rs, lam)) if lam.is_dominant() else None,
    }
    if args.p is not None:
        payload["steinberg_dim"] = str(steinberg_dimension(rs, args.p))
    return payload


def setup(cli) -> None:
    parser = cli.add_command("dims", help="Weyl, filtration and Steinberg dimensions", handler=_dims)
    add_type_args(parser, prime_required=False)
    parser.add_argument("--lambda", dest="lam", required=True)
