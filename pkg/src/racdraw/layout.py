"""Vertex placement and six-bend edge routing on the integer grid.

Vertices are arranged in ``l**2`` horizontal levels of ``l**2`` positions
(row-major by vertex id). Every edge is routed from its endpoint that comes
first in (level, position) order down to the other endpoint through six
bends; the two long diagonal segment families have exact slopes ``1/l**3``
and ``-l**3``, so any crossing between them is a right angle by arithmetic,
not by tolerance.

Routing one edge costs O(1) and touches nothing but the two endpoints, so a
whole drawing is O(n + m) and per-edge output never depends on which other
edges are present.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import Iterable

from .model import Drawing, EdgePolyline, GridParams, LevelPos, Point


@dataclass(frozen=True)
class GraphInput:
    """A simple undirected graph: ``n`` vertices (ids 0..n-1) and an edge list."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("empty graph")
        seen: set[frozenset[int]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"vertex id out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)


def params_from_n(n: int) -> GridParams:
    """Grid constants for an ``n``-vertex drawing.

    ``l`` is found by exact integer search (two nested integer square
    roots), never by floating-point root extraction.
    """
    if n < 1:
        raise ValueError("empty graph")
    l = isqrt(isqrt(n))
    if l**4 < n:
        l += 1
    return GridParams(
        n_input=n,
        l=l,
        capacity=l**4,
        levels=l * l,
        per_level=l * l,
        slope_num=1,
        slope_den=l**3,
        level_gap=8 * l**3 + l + 1,
        col_gap=l**4 + 1,
        level_shift=l * l + 8,
    )


def place_vertices(params: GridParams, n: int) -> dict[int, tuple[LevelPos, Point]]:
    """Map each vertex id to its (level, position) slot and grid point.

    Row-major: vertex v sits at level v // per_level + 1, position
    v % per_level + 1. Level 1 has y = 0 and each deeper level drops by
    ``level_gap`` and shifts right by ``level_shift``; neighbours within a
    level are ``col_gap`` apart.
    """
    if n > params.capacity:
        raise ValueError("capacity exceeded")
    s = params.per_level
    out: dict[int, tuple[LevelPos, Point]] = {}
    for v in range(n):
        i, j = v // s + 1, v % s + 1
        pt = Point(
            (i - 1) * params.level_shift + (j - 1) * params.col_gap,
            -(i - 1) * params.level_gap,
        )
        out[v] = (LevelPos(i, j), pt)
    return out


def route_edge(
    params: GridParams,
    src: tuple[LevelPos, Point],
    dst: tuple[LevelPos, Point],
) -> EdgePolyline:
    """Compute the six-bend polyline from ``src`` down to ``dst``.

    ``src`` must precede ``dst`` in (level, position) order. The first bend
    index k encodes the target slot (k = u*s - w + 1 for target level u,
    position w); segment S2 rises right at slope 1/l^3, S3 falls at slope
    -l^3 into the target's level strip, S4/S5 mirror them back, S6 climbs
    vertically to just below the target, and S7 closes the edge.
    """
    (slp, spt), (dlp, dpt) = src, dst
    if (slp.level, slp.pos) >= (dlp.level, dlp.pos):
        raise ValueError("invalid edge orientation")
    l = params.l
    s = params.per_level
    cap = params.capacity
    l3 = params.slope_den
    i, j = slp.level, slp.pos
    u, w = dlp.level, dlp.pos

    k = u * s - w + 1
    rise = s - j + i  # S2 vertical budget, in units of l
    run = 8 * (u - i + 1) - 1  # S3 horizontal extent
    drop = i + s - w  # S4 vertical budget, in units of l

    ax, ay = spt.x + k, spt.y + 1
    bx, by = ax + rise * cap + l3, ay + rise * l + 1
    cx, cy = bx + run, by - run * l3
    dx, dy = cx - drop * cap - l3, cy - drop * l - 1
    ex, ey = dx - 3, dy + 3 * l3
    fx, fy = ex, dpt.y - 1

    return EdgePolyline(
        source=(i - 1) * s + j - 1,
        target=(u - 1) * s + w - 1,
        source_lp=slp,
        target_lp=dlp,
        source_pt=spt,
        target_pt=dpt,
        k=k,
        bends=(
            Point(ax, ay),
            Point(bx, by),
            Point(cx, cy),
            Point(dx, dy),
            Point(ex, ey),
            Point(fx, fy),
        ),
    )


def _route_all(
    params: GridParams,
    placements: dict[int, tuple[LevelPos, Point]],
    edge_iter: Iterable[tuple[int, int]],
) -> tuple[EdgePolyline, ...]:
    # Vertex ids are row-major in (level, pos), so id order is drawing order.
    return tuple(
        route_edge(params, placements[min(u, v)], placements[max(u, v)])
        for u, v in edge_iter
    )


def draw_graph(g: GraphInput) -> Drawing:
    """Place all vertices of ``g`` and route every edge; O(n + m)."""
    params = params_from_n(g.n)
    placements = place_vertices(params, g.n)
    return Drawing(params, placements, _route_all(params, placements, g.edges))


def draw_complete(n: int) -> Drawing:
    """Drawing of the complete graph on ``n`` vertices.

    Equivalent to ``draw_graph`` on K_n but streams the vertex pairs instead
    of materializing an edge list first.
    """
    params = params_from_n(n)
    placements = place_vertices(params, n)
    return Drawing(
        params, placements, _route_all(params, placements, combinations(range(n), 2))
    )
