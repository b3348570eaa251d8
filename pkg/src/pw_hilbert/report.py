"""Deterministic JSON reports (schema ``pw-hilbert/1``)."""

from __future__ import annotations

import json
from fractions import Fraction

from .invariants import SCHEMA
from .partitions import Partition


def _canonical(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Partition):
        return list(obj.parts)
    if isinstance(obj, dict):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_canonical(v) for v in obj)
    return obj


def make_report(command: str, parameters: dict, results, verdicts: dict | None = None, timing=None) -> dict:
    report = {
        "schema": SCHEMA,
        "command": command,
        "parameters": parameters,
        "results": results,
        "verdicts": verdicts or {},
    }
    if timing is not None:
        report["timing"] = timing
    return _canonical(report)


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
