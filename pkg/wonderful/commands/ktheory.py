"""
kclass | chern
"""
import argparse

from ..ktheory.graded_ring import (
    chern_pushforward,
    denominator_bound,
    line_bundle_character,
    parse_ring,
    thomsen_chern_character,
    todd_projective,
)
from ..ktheory.ktheory import expand_class, localized_class, parse_point
from ..lie.root_system import require_prime
from .common import add_type_args, root_system, weight


def _kclass(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    require_prime(args.p)
    y, w = parse_point(args.point, rs)
    fpc = localized_class(rs, weight(rs, args.lam), args.p, y, w)
    payload = fpc.to_dict()
    if args.expand:
        terms = expand_class(fpc, args.limit)
        payload["expansion"] = [
            {**chi.to_dict(), "count": count} for chi, count in sorted(terms.items())
        ]
    return payload


def _chern(args: argparse.Namespace) -> dict:
    require_prime(args.p)
    ring = parse_ring(args.ring)
    m = ring.top_degree
    result = chern_pushforward(ring, line_bundle_character(ring, args.degree), todd_projective(m), args.p, m)
    return {
        "ring": ring.name,
        "basis": list(ring.labels),
        "coefficients": result.to_list(),
        "denominator_bound": str(denominator_bound(m, args.p)),
        "matches_line_bundle_sum": result == thomsen_chern_character(m, args.degree, args.p),
    }


def setup(cli) -> None:
    kclass = cli.add_command("kclass", help="K-class of Fr^* Fr_* O_X(λ) at a fixed point", handler=_kclass)
    add_type_args(kclass)
    kclass.add_argument("--lambda", dest="lam", required=True)
    kclass.add_argument("--point", required=True, help="Weyl indices y,w")
    kclass.add_argument("--expand", action="store_true", help="list every character")
    kclass.add_argument("--limit", type=int, default=None, help="maximum number of expanded terms")

    chern = cli.add_command("chern", help="ch(Fr_* O(d)) on projective space", handler=_chern)
    chern.add_argument("--ring", required=True, help="Pm:<m>")
    chern.add_argument("-p", "--prime", dest="p", type=int, required=True)
    chern.add_argument("-d", "--degree", dest="degree", type=int, required=True)
