"""Per-instance tables comparing constructions with the closed-form bounds.

Every number is recomputed when a row is built; nothing is cached.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from .certificates import CertificateStore, complete_base
from .coloring import family_membership, graph_bounds
from .constructions import (
    FactorizationParams,
    build_complete_tower,
    build_hypercube_tower,
    canonical_complete_coloring,
    hypercube_lower_bound,
)
from .graphs import COMPLETE, HYPERCUBE
from .search import SearchBudget, exact_W


@dataclass
class ReportRow:
    family: str
    param: int
    graph: str
    vertices: int
    delta: int
    w: Optional[int]
    w_source: str
    construction_t: int
    base: str
    formula_lower: int
    vs_formula: str  # "equal", "above" or "below"
    upper_W: Optional[int]
    upper_via: Optional[str]
    oracle: str


def _compare(a: int, b: int) -> str:
    return "equal" if a == b else ("above" if a > b else "below")


def _oracle_cell(g, budget: Optional[SearchBudget]) -> str:
    if budget is None:
        return "skipped"
    res = exact_W(g, budget)
    if res.value is not None:
        return f"W={res.value}"
    if res.bracket is not None:
        lo, hi = res.bracket
        return f"W in [{lo if lo is not None else '?'}, {hi}]"
    return "not interval-colorable"


def complete_row(n: int, store: Optional[CertificateStore] = None,
                 oracle_budget: Optional[SearchBudget] = None) -> ReportRow:
    fp = FactorizationParams.of(n)
    base = complete_base(fp.p, store)
    base_kind = "K_2" if fp.p == 1 else "certificate"
    if base is None:
        base = canonical_complete_coloring(fp.p)
        base_kind = "canonical"
    top, _ = build_complete_tower(n, base)
    g = top.graph
    bounds = graph_bounds(g)
    best = bounds.best()
    member = family_membership(g)
    return ReportRow(
        family=COMPLETE, param=n, graph=g.family.label(), vertices=g.vertex_count,
        delta=g.max_degree, w=member.w, w_source="family fact",
        construction_t=top.t, base=f"{base_kind} t={base.t}",
        formula_lower=fp.complete_lower_bound,
        vs_formula=_compare(top.t, fp.complete_lower_bound),
        upper_W=bounds.upper_W, upper_via=best.name if best else None,
        oracle=_oracle_cell(g, oracle_budget),
    )


def hypercube_row(n: int, oracle_budget: Optional[SearchBudget] = None) -> ReportRow:
    top, _ = build_hypercube_tower(n)
    g = top.graph
    bounds = graph_bounds(g)
    best = bounds.best()
    member = family_membership(g)
    formula = hypercube_lower_bound(n)
    return ReportRow(
        family=HYPERCUBE, param=n, graph=g.family.label(), vertices=g.vertex_count,
        delta=g.max_degree, w=member.w, w_source="family fact",
        construction_t=top.t, base="Q_1 t=1", formula_lower=formula,
        vs_formula=_compare(top.t, formula),
        upper_W=bounds.upper_W, upper_via=best.name if best else None,
        oracle=_oracle_cell(g, oracle_budget),
    )


def build_report(family: str, params: Iterable[int], store: Optional[CertificateStore] = None,
                 oracle_budget: Optional[SearchBudget] = None) -> list[ReportRow]:
    if family == COMPLETE:
        return [complete_row(n, store, oracle_budget) for n in params]
    if family == HYPERCUBE:
        return [hypercube_row(n, oracle_budget) for n in params]
    raise ValueError(f"unknown family {family!r}")


def render(rows: list[ReportRow], fmt: str = "markdown") -> str:
    dicts = [asdict(r) for r in rows]
    if fmt == "json":
        return json.dumps(dicts, indent=1)
    cols = list(ReportRow.__dataclass_fields__)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        writer.writerows(dicts)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        for d in dicts:
            lines.append("| " + " | ".join("" if d[c] is None else str(d[c]) for c in cols) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
