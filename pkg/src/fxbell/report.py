"""Machine-readable analysis reports and their JSON schema.

Every CLI subcommand emits one report: a common envelope (tool, version,
command, configuration echo, timestamp) plus command-specific sections.
Everything except ``generated_at`` is a pure function of the inputs and the
recorded configuration, so re-running a command with the same configuration
reproduces the report bit-exactly modulo that one field.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone

from . import __version__

TOOL_NAME = "fxbell"


def make_report(command: str, config: dict, **sections) -> dict:
    report = {
        "tool": TOOL_NAME,
        "version": __version__,
        "command": command,
        "config": config,
        "generated_at": datetime.now(timezone.utc).isoformat(),
    }
    for key, value in sections.items():
        if value is not None:
            report[key] = value
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


_CURRENCY_TRIPLE = {
    "type": "object",
    "properties": {
        "a": {"type": "string"},
        "b": {"type": "string"},
        "c": {"type": "string"},
    },
    "required": ["a", "b", "c"],
}

_NULLABLE_NUMBER = {"type": ["number", "null"]}

_VIOLATION_ENTRY = {
    "type": "object",
    "properties": {
        "currencies": _CURRENCY_TRIPLE,
        "variant": {"enum": ["plus", "minus"]},
        "c1": {"type": "number"},
        "c2": {"type": "number"},
        "c3": {"type": "number"},
        "lhs": {"type": "number"},
        "violated": {"type": "boolean"},
        "sigma": _NULLABLE_NUMBER,
        "gamma": _NULLABLE_NUMBER,
        "slack": _NULLABLE_NUMBER,
    },
    "required": ["currencies", "variant", "lhs", "violated"],
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "fxbell analysis report",
    "type": "object",
    "properties": {
        "tool": {"const": TOOL_NAME},
        "version": {"type": "string"},
        "command": {
            "enum": ["ingest", "scan", "pooled", "gamma", "synth", "fine", "demo"]
        },
        "config": {"type": "object"},
        "generated_at": {"type": "string"},
        "dataset": {
            "type": "object",
            "properties": {
                "rows": {"type": "integer"},
                "skipped_rows": {"type": "integer"},
                "sign_rows": {"type": "integer"},
                "zero_count": {"type": "integer"},
                "dropped_zero_rows": {"type": "integer"},
                "segments": {"type": "integer"},
                "rows_per_segment": {"type": "integer"},
                "dropped": {"type": "integer"},
                "currencies": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["rows", "skipped_rows", "currencies"],
        },
        "correlations": {
            "type": "object",
            "properties": {
                "count": {"type": "integer"},
                "n": {"type": "integer"},
                "pooled": {"type": "boolean"},
                "min": {"type": "number"},
                "max": {"type": "number"},
            },
            "required": ["count", "n"],
        },
        "tests_total": {"type": "integer"},
        "violation_count": {"type": "integer"},
        "violations": {"type": "array", "items": _VIOLATION_ENTRY},
        "gamma": {"type": "object"},
        "synthetic": {"type": "object"},
        "fine": {"type": "object"},
        "demo": {"type": "object"},
    },
    "required": ["tool", "version", "command", "config", "generated_at"],
}


def violations_to_csv(entries: list[dict]) -> str:
    lines = ["a,b,c,variant,c1,c2,c3,lhs,violated,sigma,gamma,slack"]
    for e in entries:
        cur = e["currencies"]

        def fmt(key: str) -> str:
            value = e.get(key)
            return "" if value is None else repr(value)

        lines.append(
            ",".join(
                [
                    cur["a"],
                    cur["b"],
                    cur["c"],
                    e["variant"],
                    fmt("c1"),
                    fmt("c2"),
                    fmt("c3"),
                    fmt("lhs"),
                    str(e["violated"]).lower(),
                    fmt("sigma"),
                    fmt("gamma"),
                    fmt("slack"),
                ]
            )
        )
    return "\n".join(lines) + "\n"
