"""
Argument helpers shared by the command modules.
"""
from __future__ import annotations

import argparse

from ..lie.root_system import RootSystemData, Weight, build_root_system, parse_weight


def add_type_args(parser: argparse.ArgumentParser, prime: bool = True, prime_required: bool = True) -> None:
    parser.add_argument("--type", dest="type_tag", required=True, help="A<n>, B2 or G2")
    parser.add_argument("-n", dest="rank", type=int, default=None, help="rank when --type is a bare A")
    if prime:
        parser.add_argument("-p", "--prime", dest="p", type=int, required=prime_required, help="the prime p")


def root_system(args: argparse.Namespace) -> RootSystemData:
    return build_root_system(args.type_tag, args.rank)


def weight(rs: RootSystemData, text: str) -> Weight:
    return parse_weight(text, rs.rank)
