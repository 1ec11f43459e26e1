"""
count-subdivisors
"""
import argparse

from ..errors import ExpansionTooLarge
from ..frobenius.subdivisor_count import enumerate_subdivisors, subdivisor_report
from .common import add_type_args, root_system, weight


def _count(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    lam = weight(rs, args.divisor_class)
    report = subdivisor_report(rs, lam, args.p)
    payload = report.to_dict()
    if report.caps_bind:
        payload["warning"] = (
            f"exponent caps p-1 = {args.p - 1} bind; the large-prime count is {report.stable_count}"
        )
    if args.list:
        if report.count > args.limit:
            raise ExpansionTooLarge(f"{report.count} subdivisors, over the listing limit of {args.limit}")
        payload["divisors"] = [d.to_dict() for d in enumerate_subdivisors(rs, lam, args.p)]
    return payload


def setup(cli) -> None:
    parser = cli.add_command("count-subdivisors", help="effective subdivisors of (p-1)K~_X in a class", handler=_count)
    add_type_args(parser)
    parser.add_argument("--class", dest="divisor_class", required=True, help="Picard class in ω-coordinates")
    parser.add_argument("--list", action="store_true", help="also list every subdivisor")
    parser.add_argument("--limit", type=int, default=1000, help="maximum number of listed subdivisors")
