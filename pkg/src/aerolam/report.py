"""Run reports: deterministic JSON and human-readable claim lists.

A claim is a dict {id, locus, status, witness} with status one of pass,
fail, flagged.  JSON output is byte-stable for a fixed command: claim
order is the assembly order, big rationals are rendered as "num/den"
strings, and no wall-clock data enters the claims.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import __version__
from .coding import Arc, Word


def jsonable(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Arc):
        return [jsonable(obj.lo), jsonable(obj.hi)]
    if isinstance(obj, Word):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj, key=repr) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    return obj


def make_report(command: str, claims: list[dict], timing: float | None = None) -> dict:
    return {
        "schema": 1,
        "tool": f"aerolam {__version__}",
        "command": command,
        "claims": [jsonable(c) for c in claims],
        "timing": None if timing is None else round(timing, 3),
    }


def to_json(report: dict) -> str:
    stripped = dict(report)
    stripped["timing"] = None  # byte-identical reruns
    return json.dumps(stripped, indent=2) + "\n"


def to_text(report: dict) -> str:
    lines = [f"# {report['tool']}  --  {report['command']}"]
    for claim in report["claims"]:
        mark = {"pass": "PASS", "fail": "FAIL", "flagged": "FLAG"}[claim["status"]]
        lines.append(f"{mark}  {claim['id']}  [{claim['locus']}]")
        if claim["status"] != "pass":
            lines.append(f"      witness: {json.dumps(claim['witness'])}")
    counts = summarize(report["claims"])
    lines.append(
        "# {pass} passed, {flagged} flagged, {fail} failed".format(**counts)
    )
    if report.get("timing") is not None:
        lines.append(f"# wall time {report['timing']} s")
    return "\n".join(lines) + "\n"


def summarize(claims: list[dict]) -> dict:
    return {
        "pass": sum(c["status"] == "pass" for c in claims),
        "flagged": sum(c["status"] == "flagged" for c in claims),
        "fail": sum(c["status"] == "fail" for c in claims),
    }


def exit_code(claims: list[dict], strict: bool) -> int:
    counts = summarize(claims)
    if counts["fail"]:
        return 1
    if strict and counts["flagged"]:
        return 1
    return 0
