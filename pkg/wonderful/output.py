"""
JSON and human-readable rendering for command results.
"""
from __future__ import annotations

import json
from typing import Any

import humanize
from pyfiglet import Figlet

from .config import BANNER_FONT, JSON_SEPARATORS

# Integers past this magnitude are emitted as decimal strings
SAFE_INTEGER = 2 ** 53 - 1

CYAN = "\033[36m"
YELLOW = "\033[33m"
GREEN = "\033[32m"
RED = "\033[31m"
RESET = "\033[0m"


def _normalize(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > SAFE_INTEGER else value
    if isinstance(value, dict):
        return {str(k): _normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_normalize(v) for v in value]
    return value


def render_json(payload: dict) -> str:
    """Byte-deterministic: sorted keys, compact separators."""
    return json.dumps(_normalize(payload), sort_keys=True, separators=JSON_SEPARATORS, ensure_ascii=False)


def _humanize_scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, int):
        return humanize.intcomma(value)
    if isinstance(value, str) and value.lstrip("-").isdigit():
        return humanize.intcomma(int(value))
    if isinstance(value, list) and all(isinstance(v, (int, str)) and not isinstance(v, bool) for v in value):
        return ", ".join(_humanize_scalar(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def render_pretty(payload: dict, indent: int = 0) -> str:
    pad = " " * indent
    lines = []
    width = max((len(str(k)) for k in payload), default=0)
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_pretty(value, indent + 2))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{pad}{key}:")
            for row in value:
                lines.append(render_pretty(row, indent + 2))
                lines.append(f"{pad}  " + "-" * 20)
        else:
            lines.append(f"{pad}{str(key).ljust(width)}  {_humanize_scalar(value)}")
    return "\n".join(lines)


def banner(title: str, subtitle: str) -> str:
    figlet = Figlet(font=BANNER_FONT)
    return "\n".join([
        CYAN + figlet.renderText(title) + RESET,
        YELLOW + "=" * 50 + RESET,
        GREEN + subtitle + RESET,
        YELLOW + "=" * 50 + RESET,
        "",
    ])


def status_line(name: str, passed: bool, summary: str) -> str:
    mark = f"{GREEN}PASS{RESET}" if passed else f"{RED}FAIL{RESET}"
    return f"  {mark}  {name.ljust(20)} {summary}"
