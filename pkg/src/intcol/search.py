"""Exact backtracking search for interval t-colorings.

Edges are colored in a fixed order (larger endpoint-degree sums first, ties
by canonical index) with colors tried in ascending order.  A vertex of
degree d whose assigned colors span [lo, hi] can only accept colors in
[hi-d+1, lo+d-1]; that window, properness, and the count of still-unused
colors against still-uncolored edges are the only pruning rules, so an
Infeasible answer is a complete exhaustion.

The only symmetry used is color reversal c -> t+1-c, which maps interval
t-colorings onto interval t-colorings: the first edge takes colors up to
(t+1)/2 only.
"""

from __future__ import annotations

import enum
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .coloring import EdgeColoring, family_membership, graph_bounds, verify_interval, IN_N
from .graphs import Graph

DEFAULT_SECONDS = 30.0
DEFAULT_NODES = 10 ** 8
SMALL_EDGE_COUNT = 16
_CLOCK_MASK = (1 << 12) - 1


@dataclass(frozen=True)
class SearchBudget:
    seconds: Optional[float] = None
    nodes: Optional[int] = None

    @classmethod
    def default(cls) -> "SearchBudget":
        secs = os.environ.get("IC_BUDGET_SECS")
        return cls(float(secs) if secs else DEFAULT_SECONDS, DEFAULT_NODES)

    @property
    def unlimited(self) -> bool:
        return self.seconds is None and self.nodes is None


class Status(str, enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    coloring: Optional[EdgeColoring]
    nodes: int
    elapsed: float
    t: int = 0

    def stats(self) -> dict:
        return {"nodes": self.nodes, "elapsed_ms": round(self.elapsed * 1000, 3),
                "status": self.status.value}


class _OutOfBudget(Exception):
    pass


def edge_order(g: Graph) -> list[int]:
    deg = g.degrees
    return sorted(range(g.edge_count),
                  key=lambda i: (-(deg[g.edges[i][0]] + deg[g.edges[i][1]]), i))


def find_interval_coloring(g: Graph, t: int, budget: Optional[SearchBudget] = None,
                           symmetry_breaking: bool = True) -> SearchOutcome:
    if t < 1:
        raise ValueError("t must be positive")
    if budget is None:
        budget = SearchBudget.default()
    if budget.unlimited and g.edge_count > SMALL_EDGE_COUNT:
        raise ValueError(f"graphs with more than {SMALL_EDGE_COUNT} edges need a budget")

    start = time.perf_counter()
    m = g.edge_count
    deg = g.degrees
    # trivially infeasible: a vertex needs more than t colors, or more colors than edges
    if m == 0 or max(deg) > t or t > m:
        return SearchOutcome(Status.INFEASIBLE, None, 0, time.perf_counter() - start, t)

    order = edge_order(g)
    ends = [g.edges[i] for i in order]
    lo = [0] * g.vertex_count
    hi = [0] * g.vertex_count
    used = [0] * g.vertex_count  # bitmask of colors at each vertex
    count = [0] * (t + 1)        # edges per color
    assign = [0] * m             # color per position in ``order``
    state = {"nodes": 0, "unused": t}
    deadline = None if budget.seconds is None else start + budget.seconds
    node_limit = budget.nodes
    first_cap = (t + 1) // 2 if symmetry_breaking else t

    def extend(k: int) -> bool:
        if k == m:
            return state["unused"] == 0
        u, v = ends[k]
        du, dv = deg[u], deg[v]
        a, b = 1, t
        if lo[u]:
            a = max(a, hi[u] - du + 1)
            b = min(b, lo[u] + du - 1)
        if lo[v]:
            a = max(a, hi[v] - dv + 1)
            b = min(b, lo[v] + dv - 1)
        if k == 0:
            b = min(b, first_cap)
        busy = used[u] | used[v]
        left = m - k - 1
        for c in range(a, b + 1):
            bit = 1 << c
            if busy & bit:
                continue
            fresh = count[c] == 0
            if state["unused"] - fresh > left:
                continue
            state["nodes"] += 1
            n = state["nodes"]
            if node_limit is not None and n > node_limit:
                raise _OutOfBudget
            if deadline is not None and not n & _CLOCK_MASK and time.perf_counter() > deadline:
                raise _OutOfBudget
            su = (lo[u], hi[u])
            sv = (lo[v], hi[v])
            lo[u] = c if not lo[u] or c < lo[u] else lo[u]
            hi[u] = c if c > hi[u] else hi[u]
            lo[v] = c if not lo[v] or c < lo[v] else lo[v]
            hi[v] = c if c > hi[v] else hi[v]
            used[u] |= bit
            used[v] |= bit
            count[c] += 1
            state["unused"] -= fresh
            assign[k] = c
            if extend(k + 1):
                return True
            state["unused"] += fresh
            count[c] -= 1
            used[u] ^= bit
            used[v] ^= bit
            lo[u], hi[u] = su
            lo[v], hi[v] = sv
        return False

    old_limit = sys.getrecursionlimit()
    if m + 100 > old_limit:
        sys.setrecursionlimit(m + 100)
    try:
        found = extend(0)
        status = Status.FEASIBLE if found else Status.INFEASIBLE
    except _OutOfBudget:
        found, status = False, Status.UNKNOWN
    finally:
        sys.setrecursionlimit(old_limit)
    elapsed = time.perf_counter() - start

    coloring = None
    if found:
        colors = [0] * m
        for pos, i in enumerate(order):
            colors[i] = assign[pos]
        coloring = EdgeColoring.build(g, t, colors)
        verdict = verify_interval(g, coloring)
        if not verdict:
            raise RuntimeError(f"search produced an invalid witness: {verdict.message}")
    return SearchOutcome(status, coloring, state["nodes"], elapsed, t)


@dataclass
class ExtremeResult:
    """Outcome of an exact w or W computation.

    ``value`` is set when every query needed to pin the extreme resolved.
    Otherwise ``bracket`` is a ``(low, high)`` range known to contain it,
    with None for an open side.  ``colorable`` is False when every t from
    Delta up to the ceiling was exhausted.
    """

    which: str
    value: Optional[int] = None
    bracket: Optional[tuple[Optional[int], Optional[int]]] = None
    colorable: Optional[bool] = None
    witness: Optional[EdgeColoring] = None
    queries: dict[int, Status] = field(default_factory=dict)
    nodes: int = 0

    def to_dict(self) -> dict:
        return {"which": self.which, "value": self.value,
                "bracket": list(self.bracket) if self.bracket else None,
                "colorable": self.colorable, "nodes": self.nodes,
                "queries": {str(t): s.value for t, s in sorted(self.queries.items())}}


def _ceiling(g: Graph) -> int:
    report = graph_bounds(g)
    return report.upper_W if report.upper_W is not None else 0


def exact_W(g: Graph, budget: Optional[SearchBudget] = None, direction: str = "down",
            start: Optional[int] = None) -> ExtremeResult:
    """Largest t with an interval t-coloring, each query under ``budget``.

    ``down`` walks from the upper-bound ceiling toward Delta and stops at the
    first feasible t.  ``up`` walks from ``start`` (default Delta) to the
    ceiling; on regular graphs the feasible set has no gaps, so it stops at
    the first infeasible t above a feasible one.
    """
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    ceiling = _ceiling(g)
    delta = g.max_degree
    res = ExtremeResult("W")
    if direction == "down":
        ts = range(ceiling, delta - 1, -1)
    elif direction == "up":
        ts = range(max(delta, start or delta), ceiling + 1)
    else:
        raise ValueError(f"unknown direction {direction!r}")

    best = None
    for t in ts:
        out = find_interval_coloring(g, t, budget)
        res.queries[t] = out.status
        res.nodes += out.nodes
        if out.status is Status.FEASIBLE:
            if best is None or t > best:
                best, res.witness = t, out.coloring
            if direction == "down":
                break
        elif (direction == "up" and out.status is Status.INFEASIBLE
              and best is not None and g.is_regular()):
            break

    unresolved = [t for t, s in res.queries.items() if s is Status.UNKNOWN
                  and (best is None or t > best)]
    if direction == "up" and start and start > delta and best is None:
        unresolved.append(start - 1)
    if best is not None:
        res.colorable = True
        if unresolved:
            res.bracket = (best, max(unresolved))
        else:
            res.value = best
    elif unresolved:
        res.bracket = (None, max(unresolved))
    else:
        res.colorable = False
    return res


def exact_w(g: Graph, budget: Optional[SearchBudget] = None) -> ExtremeResult:
    """Smallest t with an interval t-coloring, scanning up from Delta."""
    if g.edge_count == 0:
        raise ValueError("graph has no edges")
    ceiling = _ceiling(g)
    res = ExtremeResult("w")
    best = None
    for t in range(g.max_degree, ceiling + 1):
        out = find_interval_coloring(g, t, budget)
        res.queries[t] = out.status
        res.nodes += out.nodes
        if out.status is Status.FEASIBLE:
            best, res.witness = t, out.coloring
            break
    unresolved = [t for t, s in res.queries.items() if s is Status.UNKNOWN]
    if best is not None:
        res.colorable = True
        if unresolved:
            res.bracket = (min(unresolved), best)
        else:
            res.value = best
    elif unresolved:
        res.bracket = (min(unresolved), None)
    else:
        res.colorable = False

    known = family_membership(g)
    if known.status == IN_N and res.value is not None and res.value != known.w:
        raise RuntimeError(f"oracle found w={res.value}, expected {known.w} for {g.family.label()}")
    return res
