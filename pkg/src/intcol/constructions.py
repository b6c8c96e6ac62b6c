"""Interval colorings of K_{2n} and Q_n built by recursive doubling.

Complete graphs: a 1-factorization gives t = 2n-1, and doubling K_{2m} to
K_{4m} adds 4m-1 colors.  Writing n = p * 2**q with p odd and starting from
an interval (3p-2)-coloring of K_{2p}, q doublings reach 4n-2-p-q colors.

Hypercubes: coloring by dimension gives t = n, and doubling Q_{n-1} to Q_n
adds n colors, so the tower from Q_1 reaches n(n+1)/2.

Every regular interval t-coloring with t > Delta can be pushed down one
color at a time, which realizes every t between Delta and the top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, min_spectrum, verify_interval
from .graphs import Graph, complete_graph, hypercube_graph


class ConstructionError(ValueError):
    """Input not acceptable for a construction."""


class InternalConstructionError(RuntimeError):
    """A construction produced a coloring the verifier rejects."""


@dataclass(frozen=True)
class DoublingTrace:
    step: int
    source_vertices: int
    offsets: tuple[int, ...]
    source_t: int
    result_t: int

    def to_dict(self) -> dict:
        return {"step": self.step, "source_vertices": self.source_vertices,
                "offsets": list(self.offsets), "source_t": self.source_t,
                "result_t": self.result_t}


@dataclass(frozen=True)
class FactorizationParams:
    n: int
    p: int
    q: int

    @classmethod
    def of(cls, n: int) -> "FactorizationParams":
        if n < 1:
            raise ConstructionError("n must be positive")
        p, q = n, 0
        while p % 2 == 0:
            p //= 2
            q += 1
        return cls(n, p, q)

    @property
    def complete_lower_bound(self) -> int:
        """4n - 2 - p - q, the color count of a tower from a (3p-2) base."""
        return 4 * self.n - 2 - self.p - self.q

    @property
    def base_target(self) -> int:
        return 3 * self.p - 2


def hypercube_lower_bound(dimension: int) -> int:
    return dimension * (dimension + 1) // 2


def _checked(g: Graph, t: int, colors: list[int]) -> EdgeColoring:
    c = EdgeColoring.build(g, t, colors)
    verdict = verify_interval(g, c)
    if not verdict:
        raise InternalConstructionError(verdict.message)
    return c


def _require_interval(c: EdgeColoring) -> None:
    verdict = verify_interval(c.graph, c)
    if not verdict:
        raise ConstructionError(f"base is not an interval coloring: {verdict.message}")


def canonical_complete_coloring(n: int) -> EdgeColoring:
    """Round-robin 1-factorization of K_{2n} with 2n-1 colors.

    Vertex 2n-1 is fixed; in round r it meets r, and the remaining vertices
    pair up as (r-k, r+k) mod 2n-1.
    """
    if n < 1:
        raise ConstructionError("n must be positive")
    g = complete_graph(2 * n)
    mod = 2 * n - 1
    colors = [0] * g.edge_count
    for r in range(mod):
        colors[g.index_of(r, mod)] = r + 1
        for k in range(1, n):
            colors[g.index_of((r - k) % mod, (r + k) % mod)] = r + 1
    return _checked(g, mod, colors)


def double_complete(base: EdgeColoring) -> EdgeColoring:
    """Interval coloring of K_{4m} from one of K_{2m}, with 4m-1 more colors.

    With the first copy on ids [0, 2m) and the second on [2m, 4m):

    * inside the first copy the base colors are kept;
    * the matching edge (i, i+2m) gets min S(i) + 2m - 1;
    * a cross edge (i, j), j != i+2m, gets the base color of (i, j-2m) plus 2m;
    * inside the second copy the base colors are shifted by 4m-1.
    """
    g0 = base.graph
    if g0 != complete_graph(g0.vertex_count) or g0.vertex_count % 2:
        raise ConstructionError("base must be a complete graph of even order")
    _require_interval(base)
    two_m = g0.vertex_count
    lows = min_spectrum(g0, base)
    alpha = base.colors
    idx = g0.edge_index
    g = complete_graph(2 * two_m)
    colors = []
    for i, j in g.edges:
        if j < two_m:
            colors.append(alpha[idx[(i, j)]])
        elif i < two_m:
            jj = j - two_m
            if jj == i:
                colors.append(lows[i] + two_m - 1)
            else:
                colors.append(alpha[idx[(min(i, jj), max(i, jj))]] + two_m)
        else:
            colors.append(alpha[idx[(i - two_m, j - two_m)]] + 2 * two_m - 1)
    return _checked(g, base.t + 2 * two_m - 1, colors)


def build_complete_tower(n: int, base: EdgeColoring) -> tuple[EdgeColoring, list[DoublingTrace]]:
    """Double ``base`` (a coloring of K_{2p}, p the odd part of n) up to K_{2n}."""
    fp = FactorizationParams.of(n)
    if base.graph.vertex_count != 2 * fp.p:
        raise ConstructionError(
            f"n={n} has odd part {fp.p}; base must color K_{2 * fp.p}, "
            f"got {base.graph.vertex_count} vertices")
    _require_interval(base)
    cur = base
    trace = []
    for step in range(fp.q):
        two_m = cur.graph.vertex_count
        nxt = double_complete(cur)
        trace.append(DoublingTrace(step + 1, two_m, (two_m - 1, two_m, 2 * two_m - 1),
                                   cur.t, nxt.t))
        cur = nxt
    return cur, trace


def dimension_coloring(dimension: int) -> EdgeColoring:
    """Color each edge of Q_n by the bit it flips (bit i -> color i+1)."""
    g = hypercube_graph(dimension)
    colors = [(u ^ v).bit_length() for u, v in g.edges]
    return _checked(g, dimension, colors)


def double_hypercube(base: EdgeColoring) -> EdgeColoring:
    """Interval coloring of Q_n from one of Q_{n-1}, with n more colors.

    The copies are split by the top bit and f(x) = x + 2**(n-1).  The first
    copy keeps the base colors, a matching edge (x, f(x)) gets
    min S(x) + n - 1, and the second copy gets the base colors plus n.
    """
    g0 = base.graph
    k = g0.vertex_count.bit_length() - 1
    if k < 1 or g0.vertex_count != 1 << k or g0 != hypercube_graph(k):
        raise ConstructionError("base must be a hypercube coloring")
    _require_interval(base)
    n = k + 1
    half = 1 << k
    lows = min_spectrum(g0, base)
    alpha = base.colors
    idx = g0.edge_index
    g = hypercube_graph(n)
    colors = []
    for x, y in g.edges:
        if y < half:
            colors.append(alpha[idx[(x, y)]])
        elif x < half:
            colors.append(lows[x] + n - 1)
        else:
            colors.append(alpha[idx[(x - half, y - half)]] + n)
    return _checked(g, base.t + n, colors)


def build_hypercube_tower(dimension: int) -> tuple[EdgeColoring, list[DoublingTrace]]:
    if dimension < 1:
        raise ConstructionError("dimension must be positive")
    cur = dimension_coloring(1)
    trace = []
    for n in range(2, dimension + 1):
        nxt = double_hypercube(cur)
        trace.append(DoublingTrace(n - 1, cur.graph.vertex_count, (n - 1, n), cur.t, nxt.t))
        cur = nxt
    return cur, trace


def downshift_regular(c: EdgeColoring) -> EdgeColoring:
    """Turn a regular interval t-coloring into an interval (t-1)-coloring.

    Each edge of color t is recolored t - Delta.  A vertex meeting color t
    has spectrum [t-Delta+1, t], so t - Delta is free there and the new
    spectrum [t-Delta, t-1] is again consecutive.
    """
    g = c.graph
    if not g.is_regular():
        raise ConstructionError("downshift needs a regular graph")
    _require_interval(c)
    delta = g.max_degree
    if c.t <= delta:
        raise ConstructionError(f"already at minimum: t = {c.t} = Delta")
    top, low = c.t, c.t - delta
    colors = [low if col == top else col for col in c.colors]
    return _checked(g, top - 1, colors)


def spectrum_colorings(top: EdgeColoring) -> list[EdgeColoring]:
    """Interval colorings for every t in [Delta, top.t], ascending by t."""
    g = top.graph
    if not g.is_regular():
        raise ConstructionError("spectrum needs a regular graph")
    _require_interval(top)
    out = [top]
    while out[-1].t > g.max_degree:
        out.append(downshift_regular(out[-1]))
    out.reverse()
    return out


def complete_tower_from_k2(n: int) -> tuple[EdgeColoring, list[DoublingTrace]]:
    """Tower for n a power of two, from the single-edge K_2 base."""
    fp = FactorizationParams.of(n)
    if fp.p != 1:
        raise ConstructionError(f"n={n} is not a power of two")
    return build_complete_tower(n, canonical_complete_coloring(1))

