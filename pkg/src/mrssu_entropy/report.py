"""Rectangular output tables with CSV/JSON rendering and optional figures.

Numbers are formatted once, to 12 significant digits, and both renderings
are built from the same formatted cells so the two formats always carry
identical values.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import DomainError


def format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.12g}"
    return str(value)


@dataclass
class OutputTable:
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    format: str = "csv"

    def __post_init__(self):
        if self.format not in ("csv", "json"):
            raise DomainError(f"unknown format {self.format!r}")

    def add_row(self, *cells):
        if len(cells) != len(self.columns):
            raise DomainError(
                f"row has {len(cells)} cells, table has {len(self.columns)} columns"
            )
        self.rows.append(list(cells))

    def formatted_rows(self) -> list[list[str]]:
        return [[format_cell(c) for c in row] for row in self.rows]

    def to_csv(self) -> str:
        def quote(cell: str) -> str:
            if any(ch in cell for ch in ',"\n'):
                return '"' + cell.replace('"', '""') + '"'
            return cell

        lines = [",".join(self.columns)]
        lines.extend(",".join(quote(c) for c in row) for row in self.formatted_rows())
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        records = []
        for row in self.formatted_rows():
            rec = {}
            for name, cell in zip(self.columns, row):
                try:
                    rec[name] = json.loads(cell)
                except (json.JSONDecodeError, ValueError):
                    rec[name] = cell
            records.append(rec)
        return json.dumps(records, indent=2) + "\n"

    def render(self) -> str:
        return self.to_json() if self.format == "json" else self.to_csv()


def write_table(table: OutputTable, out_path=None) -> str:
    text = table.render()
    if out_path is not None:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text)
    return text


def render_figure(table: OutputTable, x_column: str, y_columns, path, title=None):
    """Plot the named columns of a table against x_column and save to path.

    Matplotlib is imported lazily with the Agg backend so that the data
    paths never require a display.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    def col(name):
        try:
            j = table.columns.index(name)
        except ValueError:
            raise DomainError(f"no column named {name!r}") from None
        return [float(row[j]) for row in table.rows]

    xs = col(x_column)
    fig, ax = plt.subplots(figsize=(6, 4))
    for name in y_columns:
        ax.plot(xs, col(name), label=name)
    ax.set_xlabel(x_column)
    ax.legend()
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
