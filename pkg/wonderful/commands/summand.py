"""
summand check | enumerate | bounds
"""
import argparse

from ..errors import ConjecturalForType
from ..frobenius.subdivisor_count import multiplicity_lower_bound
from ..frobenius.summand_conditions import (
    check_summand,
    enumerate_candidate_mu,
    enumerate_guaranteed_mu,
    exact_multiplicity_case,
    multiplicity_upper_bound,
    upper_bound_terms,
)
from .common import add_type_args, root_system, weight


def _check(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    verdict = check_summand(rs, weight(rs, args.lam), weight(rs, args.mu), args.p)
    return verdict.to_dict()


def _enumerate(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    lam = weight(rs, args.lam)
    candidates = enumerate_candidate_mu(rs, lam, args.p)
    guaranteed = enumerate_guaranteed_mu(rs, lam, args.p)
    return {
        "candidates": [str(mu) for mu in candidates],
        "guaranteed": [str(mu) for mu in guaranteed],
        "candidate_count": len(candidates),
        "guaranteed_count": len(guaranteed),
    }


def _bounds(args: argparse.Namespace) -> dict:
    rs = root_system(args)
    lam, mu = weight(rs, args.lam), weight(rs, args.mu)
    ratio, into, out = upper_bound_terms(rs, lam, mu, args.p)
    payload = {
        "upper": str(multiplicity_upper_bound(rs, lam, mu, args.p)),
        "upper_terms": {
            "ratio": str(ratio) if ratio is not None else None,
            "hom_into": str(into),
            "hom_from": str(out),
        },
        "exact_case": exact_multiplicity_case(rs, lam, mu, args.p),
    }
    try:
        payload["lower"] = str(multiplicity_lower_bound(rs, lam, mu, args.p))
    except ConjecturalForType as e:
        payload["lower"] = None
        payload["warning"] = str(e)
    return payload


def setup(cli) -> None:
    parser = cli.add_command("summand", help="line-bundle summands of Fr_* O_X(λ)")
    actions = parser.add_subparsers(dest="action", required=True)

    check = actions.add_parser("check", parents=[cli.common], help="necessary and sufficient conditions")
    add_type_args(check)
    check.add_argument("--lambda", dest="lam", required=True)
    check.add_argument("--mu", dest="mu", required=True)
    check.set_defaults(handler=_check)

    enumerate_ = actions.add_parser("enumerate", parents=[cli.common], help="all candidate and guaranteed μ")
    add_type_args(enumerate_)
    enumerate_.add_argument("--lambda", dest="lam", required=True)
    enumerate_.set_defaults(handler=_enumerate)

    bounds = actions.add_parser("bounds", parents=[cli.common], help="multiplicity bounds for (λ, μ)")
    add_type_args(bounds)
    bounds.add_argument("--lambda", dest="lam", required=True)
    bounds.add_argument("--mu", dest="mu", required=True)
    bounds.set_defaults(handler=_bounds)
