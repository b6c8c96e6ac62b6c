"""Text exports of colorings: Graphviz DOT and CSV edge lists."""

from __future__ import annotations

import csv
import io

from .coloring import EdgeColoring


def to_dot(c: EdgeColoring, name: str = "G") -> str:
    lines = [f"graph {name} {{", f'  label="{c.graph.family.label()}  t={c.t}";']
    for v in range(c.graph.vertex_count):
        lines.append(f"  {v};")
    for (u, v), col in zip(c.graph.edges, c.colors):
        lines.append(f'  {u} -- {v} [label="{col}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(c: EdgeColoring) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["u", "v", "color"])
    for (u, v), col in zip(c.graph.edges, c.colors):
        w.writerow([u, v, col])
    return buf.getvalue()


def render_coloring(c: EdgeColoring, fmt: str) -> str:
    if fmt == "json":
        return c.to_json() + "\n"
    if fmt == "dot":
        return to_dot(c)
    if fmt == "csv":
        return to_csv(c)
    raise ValueError(f"unknown format {fmt!r}")
