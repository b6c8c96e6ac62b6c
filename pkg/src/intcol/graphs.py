"""Simple undirected graphs and the two families studied here.

Vertices are 0-based integers.  Edges are stored as ``(u, v)`` pairs with
``u < v`` in lexicographic order, so two equal graphs always serialize to
the same bytes and an edge index is a stable handle for colorings.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Optional

GRAPH_FORMAT = "ic-graph/1"

# vertex ids of Q_n are n-bit masks; 2**24 vertices is far past desk scale
MAX_HYPERCUBE_DIMENSION = 24

COMPLETE = "complete"
HYPERCUBE = "hypercube"
GENERIC = "generic"


class GraphError(ValueError):
    """Raised for malformed graphs or bad generator parameters."""


@dataclass(frozen=True)
class Family:
    kind: str = GENERIC
    # complete: number of vertices; hypercube: dimension
    param: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (COMPLETE, HYPERCUBE, GENERIC):
            raise GraphError(f"unknown family kind {self.kind!r}")

    def label(self) -> str:
        if self.kind == COMPLETE:
            return f"K_{self.param}"
        if self.kind == HYPERCUBE:
            return f"Q_{self.param}"
        return "generic"


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    family: Family = field(default=Family(), compare=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        prev = None
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise GraphError(f"edge {e} is not a canonical pair below {self.vertex_count}")
            if prev is not None and e <= prev:
                if e == prev:
                    raise GraphError(f"duplicate edge {e}")
                raise GraphError("edge list is not sorted")
            prev = e

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]],
                   family: Family = Family()) -> "Graph":
        """Build a graph from edges in any order and orientation.

        Loops and repeated edges are rejected rather than dropped.
        """
        canon = sorted((min(u, v), max(u, v)) if u != v else (u, v) for u, v in edges)
        return cls(vertex_count, tuple(canon), family)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Incident edge indices per vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge") from None

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) == 1

    # serialization

    def to_dict(self) -> dict:
        fam = {"kind": self.family.kind, "param": self.family.param}
        return {
            "format": GRAPH_FORMAT,
            "vertices": self.vertex_count,
            "edges": [list(e) for e in self.edges],
            "family": fam,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        if data.get("format") != GRAPH_FORMAT:
            raise GraphError(f"expected format {GRAPH_FORMAT!r}, got {data.get('format')!r}")
        fam = data.get("family") or {}
        family = Family(fam.get("kind", GENERIC), fam.get("param"))
        try:
            edges = tuple((int(u), int(v)) for u, v in data["edges"])
            n = int(data["vertices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph document: {exc}") from None
        g = cls(n, edges, family)
        if family.kind != GENERIC and g != family_graph(family):
            raise GraphError(f"edges do not match the {family.label()} family tag")
        return g

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    @cached_property
    def content_hash(self) -> str:
        """sha256 over vertex count and edge list only.

        The family tag is left out, so a generic file holding K_4 binds to
        the same colorings as a generated K_4.
        """
        body = json.dumps({"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]},
                          separators=(",", ":"))
        return "sha256:" + hashlib.sha256(body.encode()).hexdigest()


def complete_graph(num_vertices: int) -> Graph:
    """K_p on vertices 0..p-1 (the x_1..x_p labels shifted down by one)."""
    if num_vertices < 1:
        raise GraphError("complete graph needs num_vertices >= 1")
    edges = tuple((i, j) for i in range(num_vertices) for j in range(i + 1, num_vertices))
    assert len(edges) == comb(num_vertices, 2)
    return Graph(num_vertices, edges, Family(COMPLETE, num_vertices))


def hypercube_graph(dimension: int) -> Graph:
    """Q_n with bitmask vertex ids; edges join masks at Hamming distance one.

    Vertices with the top bit clear form the first copy of Q_{n-1}, those
    with it set form the second.
    """
    if dimension < 1:
        raise GraphError("hypercube needs dimension >= 1")
    if dimension > MAX_HYPERCUBE_DIMENSION:
        raise GraphError(f"dimension {dimension} exceeds the limit {MAX_HYPERCUBE_DIMENSION}")
    n = 1 << dimension
    edges = []
    for x in range(n):
        for b in range(dimension):
            y = x | (1 << b)
            if y != x:
                edges.append((x, y))
    edges.sort()
    return Graph(n, tuple(edges), Family(HYPERCUBE, dimension))


def family_graph(family: Family) -> Graph:
    if family.kind != GENERIC and not isinstance(family.param, int):
        raise GraphError(f"{family.kind} family needs an integer param")
    if family.kind == COMPLETE:
        return complete_graph(family.param)
    if family.kind == HYPERCUBE:
        return hypercube_graph(family.param)
    raise GraphError("generic graphs have no generator")


@dataclass(frozen=True)
class StructuralProfile:
    num_vertices: int
    num_edges: int
    max_degree: int
    is_regular: bool
    is_bipartite: bool
    is_triangle_free: bool
    diameter: Optional[int]  # None when disconnected


def _bfs_distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.neighbors[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


def is_triangle_free(g: Graph) -> bool:
    nb = g.neighbors
    return all(not (nb[u] & nb[v]) for u, v in g.edges)


def diameter(g: Graph) -> Optional[int]:
    """Eccentricity maximum by BFS from every vertex; None if disconnected."""
    best = 0
    for s in range(g.vertex_count):
        dist = _bfs_distances(g, s)
        if min(dist) < 0:
            return None
        best = max(best, max(dist))
    return best


def structural_profile(g: Graph) -> StructuralProfile:
    if g.family.kind == HYPERCUBE:
        # BFS from every vertex is quadratic; Q_n is vertex-transitive
        dist = _bfs_distances(g, 0)
        diam = max(dist) if min(dist) >= 0 else None
    else:
        diam = diameter(g)
    return StructuralProfile(
        num_vertices=g.vertex_count,
        num_edges=g.edge_count,
        max_degree=g.max_degree,
        is_regular=g.is_regular(),
        is_bipartite=is_bipartite(g),
        is_triangle_free=is_triangle_free(g),
        diameter=diam,
    )


def recognize_family(g: Graph) -> Graph:
    """Return ``g`` re-tagged as complete or hypercube when it is one."""
    if g.family.kind != GENERIC:
        return g
    n = g.vertex_count
    if g.edge_count == comb(n, 2):
        return Graph(n, g.edges, Family(COMPLETE, n))
    k = n.bit_length() - 1
    if k >= 1 and n == 1 << k and g.edge_count == k << (k - 1) and g == hypercube_graph(k):
        return Graph(n, g.edges, Family(HYPERCUBE, k))
    return g
