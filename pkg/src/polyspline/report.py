"""Rendering of command results as text, TSV or JSON.

Rationals are always printed exactly: integers as integers, everything
else as ``p/q``.  In JSON, non-integral rationals become ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .hilbert import HilbPoly

FORMATS = ("text", "tsv", "json")


def _text(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, HilbPoly):
        return str(value)
    if value is None:
        return "-"
    return str(value)


def _json(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, HilbPoly):
        return {
            "a2": _json(value.a2),
            "a1": _json(value.a1),
            "a0": _json(value.a0),
            "text": str(value),
        }
    if isinstance(value, (list, tuple)):
        return [_json(v) for v in value]
    if isinstance(value, dict):
        return {k: _json(v) for k, v in value.items()}
    return value


@dataclass
class Report:
    command: str
    meta: dict = field(default_factory=dict)
    columns: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            return self._render_text()
        if fmt == "tsv":
            return self._render_tsv()
        if fmt == "json":
            return self._render_json()
        raise ValueError(f"unknown format {fmt!r}")

    def _render_text(self) -> str:
        lines = []
        if self.meta:
            width = max(len(k) for k in self.meta)
            lines += [f"{k.ljust(width)}  {_text(v)}" for k, v in self.meta.items()]
        if self.columns and self.rows:
            cells = [[_text(v) for v in row] for row in self.rows]
            numeric = [
                all(isinstance(row[i], (int, Fraction)) and not isinstance(row[i], bool) for row in self.rows)
                for i in range(len(self.columns))
            ]
            widths = [
                max(len(col), *(len(row[i]) for row in cells)) for i, col in enumerate(self.columns)
            ]
            if lines:
                lines.append("")
            lines.append("  ".join(col.ljust(w) for col, w in zip(self.columns, widths)).rstrip())
            lines.append("  ".join("-" * w for w in widths))
            for row in cells:
                lines.append(
                    "  ".join(
                        v.rjust(w) if num else v.ljust(w) for v, w, num in zip(row, widths, numeric)
                    ).rstrip()
                )
        if self.notes:
            if lines:
                lines.append("")
            lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines) + "\n"

    def _render_tsv(self) -> str:
        lines = [f"#{k}\t{_text(v)}" for k, v in self.meta.items()]
        if self.columns:
            lines.append("\t".join(self.columns))
            lines += ["\t".join(_text(v) for v in row) for row in self.rows]
        lines += [f"#note\t{n}" for n in self.notes]
        return "\n".join(lines) + "\n"

    def _render_json(self) -> str:
        doc = {
            "command": self.command,
            "meta": _json(self.meta),
            "rows": [dict(zip(self.columns, _json(list(row)))) for row in self.rows],
            "notes": list(self.notes),
        }
        return json.dumps(doc, indent=2) + "\n"


def parse_poly(doc: dict) -> tuple[Fraction, Fraction, Fraction]:
    """Inverse of the JSON encoding of a HilbPoly."""
    return tuple(Fraction(str(doc[key])) for key in ("a2", "a1", "a0"))
