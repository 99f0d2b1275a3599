"""Report serialization for the command line."""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Literal

OutputFormat = Literal["json", "csv"]


@dataclass
class Report:
    """Result of one command.

    Exact values are stored as ``"p/q"`` strings and floats as floats, so the
    serialized form is stable for identical inputs.
    """

    verb: str
    inputs: dict[str, Any] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    passed: bool | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verb": self.verb, "inputs": self.inputs, "results": self.results}
        if self.passed is not None:
            out["pass"] = self.passed
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        """Flatten to ``key,value`` rows with dotted keys, one list item per row."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in _flatten(self.to_dict()):
            writer.writerow([key, value])
        return buffer.getvalue()

    def render(self, fmt: OutputFormat = "json") -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()


def _flatten(value: Any, prefix: str = "") -> list[tuple[str, Any]]:
    if isinstance(value, dict):
        rows = []
        for key in sorted(value):
            rows.extend(_flatten(value[key], f"{prefix}.{key}" if prefix else str(key)))
        return rows
    if isinstance(value, (list, tuple)):
        rows = []
        for i, item in enumerate(value):
            rows.extend(_flatten(item, f"{prefix}.{i}"))
        return rows
    if isinstance(value, bool):
        return [(prefix, "true" if value else "false")]
    return [(prefix, value)]
