"""
ranks | blocks
"""
import argparse

from ..blocks.blocks import (
    alcove_signature,
    block_dimension,
    d_lambda,
    linkage_class,
    linkage_classes,
    max_separation,
    rank_set_report,
    require_restricted,
)
from .common import add_type_args, root_system, weight


def _ranks(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    payload = rank_set_report(rs, args.p).to_dict()
    if not args.summary:
        payload["per_class"] = [
            {**cls.to_dict(), "d": sorted({d_lambda(rs, lam, args.p) for lam in cls.orbit})}
            for cls in linkage_classes(rs, args.p)
        ]
    return payload


def _blocks(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    lam = require_restricted(weight(rs, args.lam), args.p)
    cls = linkage_class(rs, lam, args.p)
    signature = alcove_signature(rs, lam, args.p)
    return {
        "a": cls.a_lambda,
        "d": d_lambda(rs, lam, args.p),
        "separation": signature.separation,
        "max_separation": max_separation(rs),
        "signature": list(signature.m),
        "block_dim": str(block_dimension(rs, lam, args.p)),
        "orbit": [str(w) for w in sorted(cls.orbit)],
    }


def setup(cli) -> None:
    ranks = cli.add_command("ranks", help="ranks a_λ d_λ d_μ of the block subbundles", handler=_ranks)
    add_type_args(ranks)
    ranks.add_argument("--summary", action="store_true", help="leave out the per-class listing")

    blocks = cli.add_command("blocks", help="linkage class, alcove and block dimension of λ", handler=_blocks)
    add_type_args(blocks)
    blocks.add_argument("--lambda", dest="lam", required=True)
