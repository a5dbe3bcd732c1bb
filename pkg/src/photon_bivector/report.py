"""Verification reports with deterministic JSON and CSV output.

Floats are always written with 17 significant digits in exponent form, so a
report is byte-identical across runs with the same inputs.  Complex numbers
become ``[re, im]`` pairs and arrays become nested lists.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np


def _format_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(x, ".16e")


def to_plain(value):
    """Convert numpy and complex values into JSON-ready Python objects."""
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (np.complexfloating, complex)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    return value


def dumps(value, indent: int = 2, _level: int = 0) -> str:
    """JSON text with fixed float formatting and insertion-ordered keys."""
    value = to_plain(value)
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent, _level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(not isinstance(v, (list, dict)) for v in value):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in value) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def deviation(expected, actual) -> float:
    """Largest absolute elementwise difference."""
    e = np.asarray(expected, dtype=complex)
    a = np.asarray(actual, dtype=complex)
    if e.shape != a.shape and e.size != 1:
        raise ValueError(f"shape mismatch: {e.shape} vs {a.shape}")
    return float(np.max(np.abs(a - e))) if a.size else 0.0


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    actual: object
    tolerance: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": to_plain(self.expected),
            "actual": to_plain(self.actual),
            "tolerance": float(self.tolerance),
            "pass": bool(self.passed),
        }


@dataclass
class RunReport:
    """Accumulates checks and results for one CLI command."""

    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def close(self, name: str, expected, actual, tolerance: float) -> Check:
        """Record |actual - expected| <= tolerance (elementwise maximum)."""
        ok = deviation(expected, actual) <= tolerance
        check = Check(name, expected, actual, tolerance, ok)
        self.checks.append(check)
        return check

    def bound(self, name: str, value: float, tolerance: float) -> Check:
        """Record a non-negative residual that must not exceed ``tolerance``."""
        value = float(value)
        check = Check(name, 0.0, value, tolerance, bool(value <= tolerance))
        self.checks.append(check)
        return check

    def flag(self, name: str, condition: bool, actual=None) -> Check:
        check = Check(name, True, bool(condition) if actual is None else actual, 0.0, bool(condition))
        self.checks.append(check)
        return check

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": to_plain(self.inputs),
            "results": to_plain(self.results),
            "checks": [c.as_dict() for c in self.checks],
            "overallPass": self.overall_pass,
        }

    def to_json(self) -> str:
        return dumps(self.as_dict()) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "expected", "actual", "tolerance", "pass"])
        for c in self.checks:
            d = c.as_dict()
            writer.writerow([
                d["name"],
                _csv_value(d["expected"]),
                _csv_value(d["actual"]),
                _format_float(d["tolerance"]),
                "true" if d["pass"] else "false",
            ])
        return buf.getvalue()


def _csv_value(value) -> str:
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return dumps(value, indent=0).replace("\n", "")
    return str(value)
