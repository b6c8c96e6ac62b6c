"""Edge colorings, the proper/interval verifiers and the W upper bounds.

Colors are 1-based, as in "colours 1, 2, ..., t".  A coloring is bound to
one graph and stores one color per edge in the graph's canonical edge order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graphs import COMPLETE, HYPERCUBE, Graph, StructuralProfile, structural_profile

COLORING_FORMAT = "ic-coloring/1"
VERIFIER_VERSION = "1"


class ColoringMismatchError(ValueError):
    """The coloring does not belong to the graph it is checked against."""


@dataclass(frozen=True)
class EdgeColoring:
    graph: Graph
    t: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("palette size t must be positive")
        if len(self.colors) != self.graph.edge_count:
            raise ColoringMismatchError(
                f"{len(self.colors)} colors for {self.graph.edge_count} edges")
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.t:
                raise ValueError(f"edge {self.graph.edges[i]} has color {c} outside [1, {self.t}]")

    @classmethod
    def build(cls, graph: Graph, t: int, colors: Sequence[int]) -> "EdgeColoring":
        return cls(graph, t, tuple(int(c) for c in colors))

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.graph.index_of(u, v)]

    def to_dict(self) -> dict:
        return {
            "format": COLORING_FORMAT,
            "graph_hash": self.graph.content_hash,
            "t": self.t,
            "colors": list(self.colors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict, graph: Graph) -> "EdgeColoring":
        if data.get("format") != COLORING_FORMAT:
            raise ValueError(f"expected format {COLORING_FORMAT!r}, got {data.get('format')!r}")
        if data.get("graph_hash") != graph.content_hash:
            raise ColoringMismatchError("coloring was made for a different graph")
        return cls.build(graph, int(data["t"]), data["colors"])

    @classmethod
    def from_json(cls, text: str, graph: Graph) -> "EdgeColoring":
        return cls.from_dict(json.loads(text), graph)


def _check_bound(g: Graph, c: EdgeColoring) -> None:
    if c.graph is not g and c.graph != g:
        raise ColoringMismatchError("coloring is bound to a different graph")


def vertex_spectrum(g: Graph, c: EdgeColoring, v: int) -> tuple[int, ...]:
    """Sorted distinct colors on the edges at ``v``."""
    _check_bound(g, c)
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    return tuple(sorted({c.colors[i] for i in g.incidence[v]}))


def min_spectrum(g: Graph, c: EdgeColoring) -> list[int]:
    """Smallest incident color per vertex (0 for isolated vertices)."""
    colors = c.colors
    return [min((colors[i] for i in inc), default=0) for inc in g.incidence]


PROPER = "proper"
CONSECUTIVE = "consecutive"
PALETTE = "palette"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verifier.

    ``reason`` is None on success, otherwise one of ``"proper"``,
    ``"consecutive"`` or ``"palette"``.  ``witness`` names the first
    offending object: ``(vertex, edge_a, edge_b)`` for a properness clash,
    ``(vertex,)`` for a gap, ``(color,)`` for an unused color.
    """

    ok: bool
    reason: Optional[str] = None
    witness: tuple[int, ...] = ()
    message: str = field(default="", compare=False)

    def __bool__(self):
        return self.ok


OK = Verdict(True)


def verify_proper(g: Graph, c: EdgeColoring) -> Verdict:
    _check_bound(g, c)
    colors = c.colors
    for v, inc in enumerate(g.incidence):
        seen: dict[int, int] = {}
        for i in inc:
            col = colors[i]
            if col in seen:
                j = seen[col]
                return Verdict(False, PROPER, (v, j, i),
                               f"vertex {v}: edges {g.edges[j]} and {g.edges[i]} both have color {col}")
            seen[col] = i
    return OK


def verify_interval(g: Graph, c: EdgeColoring) -> Verdict:
    """Check that ``c`` is an interval t-coloring of ``g``."""
    verdict = verify_proper(g, c)
    if not verdict:
        return verdict
    colors = c.colors
    for v, inc in enumerate(g.incidence):
        if not inc:
            continue
        lo = min(colors[i] for i in inc)
        hi = max(colors[i] for i in inc)
        if hi - lo + 1 != len(inc):
            seen = sorted(colors[i] for i in inc)
            return Verdict(False, CONSECUTIVE, (v,),
                           f"vertex {v}: colors {seen} are not {len(inc)} consecutive integers")
    used = set(colors)
    for col in range(1, c.t + 1):
        if col not in used:
            return Verdict(False, PALETTE, (col,), f"color {col} of 1..{c.t} is never used")
    return OK


# upper bounds on W, each valid only for interval-colorable graphs

BIPARTITE_DIAMETER = "bipartite-diameter"  # d(G)(Delta-1)+1
GENERAL = "general"                        # 2|V|-3
GENERAL_3PLUS = "general-3plus"            # 2|V|-4 for |V| >= 3
TRIANGLE_FREE = "triangle-free"            # |V|-1


@dataclass(frozen=True)
class Bound:
    name: str
    value: Optional[int]
    applicable: bool


@dataclass(frozen=True)
class BoundReport:
    lower_w: int
    upper_W: Optional[int]
    bounds: tuple[Bound, ...]
    # every upper bound presupposes that the graph is interval-colorable
    conditional_on_membership: bool = True

    def best(self) -> Optional[Bound]:
        live = [b for b in self.bounds if b.applicable]
        return min(live, key=lambda b: b.value) if live else None

    def to_dict(self) -> dict:
        best = self.best()
        return {
            "lower_w": self.lower_w,
            "upper_W": self.upper_W,
            "via": best.name if best else None,
            "conditional_on_membership": self.conditional_on_membership,
            "bounds": [{"name": b.name, "value": b.value, "applicable": b.applicable}
                       for b in self.bounds],
        }


def upper_bound_W(profile: StructuralProfile) -> BoundReport:
    n = profile.num_vertices
    has_edges = profile.num_edges > 0
    bip_ok = has_edges and profile.is_bipartite and profile.diameter is not None
    bounds = (
        Bound(BIPARTITE_DIAMETER,
              profile.diameter * (profile.max_degree - 1) + 1 if bip_ok else None, bip_ok),
        Bound(GENERAL, 2 * n - 3 if has_edges else None, has_edges),
        Bound(GENERAL_3PLUS, 2 * n - 4 if has_edges and n >= 3 else None, has_edges and n >= 3),
        Bound(TRIANGLE_FREE, n - 1 if has_edges and profile.is_triangle_free else None,
              has_edges and profile.is_triangle_free),
    )
    live = [b.value for b in bounds if b.applicable]
    return BoundReport(profile.max_degree, min(live) if live else None, bounds)


def graph_bounds(g: Graph) -> BoundReport:
    return upper_bound_W(structural_profile(g))


IN_N = "in_N"
NOT_IN_N = "not_in_N"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Membership:
    status: str
    w: Optional[int] = None


def family_membership(g_or_family) -> Membership:
    """Known interval-colorability facts for complete graphs and hypercubes.

    Even complete graphs and hypercubes are regular with chromatic index
    equal to the maximum degree, so they are members with ``w = Delta``.
    Complete graphs of odd order are not members.  Anything else is left to
    the search oracle.
    """
    fam = g_or_family.family if isinstance(g_or_family, Graph) else g_or_family
    if fam.kind == COMPLETE:
        p = fam.param
        if p % 2:
            return Membership(NOT_IN_N)
        return Membership(IN_N, p - 1)
    if fam.kind == HYPERCUBE:
        return Membership(IN_N, fam.param)
    return Membership(UNKNOWN)
