"""Lossless JSON plan documents.  Rationals travel as "p/q" strings, never floats."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .geometry import CoveringPlan, Method, Orientation, Placement, Point2

VERSION = 1

_RATIONAL = re.compile(r"[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.)")


class PlanFormatError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Exact parse of "p/q", an integer, or a terminating decimal ("0.3" is 3/10)."""
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text.strip()):
        raise PlanFormatError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as exc:
        raise PlanFormatError(f"zero denominator in {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def plan_to_dict(plan: CoveringPlan) -> dict[str, Any]:
    return {
        "version": VERSION,
        "n": plan.n,
        "d": format_rational(plan.d),
        "method": plan.method.value,
        "j": plan.j,
        "count": plan.count,
        "placements": [
            {
                "o": p.orientation.value,
                "x": format_rational(p.anchor.x),
                "y": format_rational(p.anchor.y),
            }
            for p in plan.placements
        ],
    }


def plan_from_dict(doc: Any) -> CoveringPlan:
    if not isinstance(doc, dict):
        raise PlanFormatError("plan document must be a JSON object")
    if doc.get("version") != VERSION:
        raise PlanFormatError(f"unsupported plan version {doc.get('version')!r}")
    try:
        placements = [
            Placement(
                Orientation(item["o"]),
                Point2(parse_rational(item["x"]), parse_rational(item["y"])),
            )
            for item in doc["placements"]
        ]
        n, j, count = doc["n"], doc.get("j"), doc["count"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise PlanFormatError("n must be an integer")
        if j is not None and (not isinstance(j, int) or isinstance(j, bool)):
            raise PlanFormatError("j must be an integer or null")
        return CoveringPlan(
            placements, n, parse_rational(doc["d"]), Method(doc["method"]), j, count
        )
    except (KeyError, TypeError) as exc:
        raise PlanFormatError(f"malformed plan document: {exc}") from exc
    except PlanFormatError:
        raise
    except ValueError as exc:
        raise PlanFormatError(str(exc)) from exc


def dumps(plan: CoveringPlan) -> str:
    return json.dumps(plan_to_dict(plan), indent=1)


def loads(text: str) -> CoveringPlan:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PlanFormatError(f"invalid JSON: {exc}") from exc
    return plan_from_dict(doc)


def save(plan: CoveringPlan, path) -> None:
    Path(path).write_text(dumps(plan) + "\n")


def load(path) -> CoveringPlan:
    return loads(Path(path).read_text())
