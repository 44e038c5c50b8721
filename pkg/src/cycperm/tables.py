"""Count tables: a grid of counts indexed by n and pattern-set label.

Every cell carries provenance (oracle, formula, or golden) so verification
output always says where a number came from. JSON output round-trips to
an equal table; TSV matches how the reference tables read.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

PROVENANCES = ("oracle", "formula", "golden")


@dataclass(frozen=True)
class Cell:
    count: int
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass
class CountTable:
    columns: tuple[str, ...]
    rows: dict[int, dict[str, Cell]] = field(default_factory=dict)

    def set(self, n: int, column: str, count: int, provenance: str) -> None:
        if column not in self.columns:
            raise KeyError(f"unknown column {column!r}")
        if self.rows and n < max(self.rows):
            if n not in self.rows:
                raise ValueError("rows must be added with n ascending")
        self.rows.setdefault(n, {})[column] = Cell(count, provenance)

    def get(self, n: int, column: str) -> Cell:
        return self.rows[n][column]

    def to_json(self) -> str:
        payload = {
            "columns": list(self.columns),
            "rows": [
                {
                    "n": n,
                    "cells": {
                        col: {"count": cell.count, "provenance": cell.provenance}
                        for col, cell in cells.items()
                    },
                }
                for n, cells in self.rows.items()
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        payload = json.loads(text)
        table = cls(columns=tuple(payload["columns"]))
        for row in payload["rows"]:
            for col, cell in row["cells"].items():
                table.set(row["n"], col, cell["count"], cell["provenance"])
        return table

    def to_tsv(self, header: bool = True) -> str:
        lines = []
        if header:
            lines.append("\t".join(["n", *self.columns]))
        for n, cells in self.rows.items():
            lines.append(
                "\t".join(
                    [str(n)]
                    + [str(cells[c].count) if c in cells else "" for c in self.columns]
                )
            )
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        widths = [max(len("n"), *(len(str(n)) for n in self.rows))] if self.rows else [1]
        for c in self.columns:
            cell_w = max(
                (len(str(cells[c].count)) for cells in self.rows.values() if c in cells),
                default=0,
            )
            widths.append(max(len(c), cell_w))
        header = ["n", *self.columns]
        out = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        for n, cells in self.rows.items():
            vals = [str(n)] + [
                str(cells[c].count) if c in cells else "-" for c in self.columns
            ]
            out.append("  ".join(v.rjust(w) for v, w in zip(vals, widths)))
        return "\n".join(out) + "\n"
