"""
verify
"""
import argparse

from ..acceptance import ROWS, run_rows
from ..output import banner, status_line


def _verify(args: argparse.Namespace) -> dict:
    results = run_rows(args.only)
    payload = {
        "rows": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
    }
    # Timings vary between runs, so they stay out of the JSON
    if args.pretty:
        payload["seconds"] = {r.name: r.seconds for r in results}
    return payload


def _render(payload: dict) -> str:
    lines = [banner("wonderful", "Acceptance table")]
    for row in payload["rows"]:
        seconds = payload.get("seconds", {}).get(row["name"], 0.0)
        lines.append(status_line(row["name"], row["passed"], f"{row['description']} ({seconds:.2f}s)"))
    verdict = "all rows passed" if payload["passed"] else "some rows FAILED"
    lines.append("")
    lines.append(f"  {verdict}")
    return "\n".join(lines)


def setup(cli) -> None:
    parser = cli.add_command("verify", help="run the bundled acceptance table", handler=_verify)
    parser.add_argument("--only", action="append", choices=sorted(ROWS), help="run a single row (repeatable)")
    parser.set_defaults(render=_render, check_passed=True)
