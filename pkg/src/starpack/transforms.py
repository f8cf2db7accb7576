"""The chamfer transformation and its canonical type-P0 packing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph_core import Fullerene, build_graph, validate_fullerene
from .packing_solver import StarPacking


@dataclass(frozen=True)
class ChamferResult:
    graph: Fullerene
    original_vertex_map: Mapping[int, int]
    # ((u, v) with u < v, id of the old face on that side) -> new vertex
    edge_vertex_map: Mapping[tuple[tuple[int, int], int], int]


def chamfer(f: Fullerene) -> ChamferResult:
    """Replace every edge of ``f`` by a hexagon, keeping vertices and face sizes.

    For a face g and a boundary dart u->v of g (in trace order), the new
    vertex x(uv, g) sits at the source u. It joins u by a spoke and its two
    neighbours x(., g) along the shrunken copy of g. Originals keep ids
    0..n-1; the vertex on dart u->v of edge index i (edges sorted, u < v
    first) gets id n + 2*i, the one on v->u gets n + 2*i + 1.
    """
    g = f.graph
    n = g.n
    edge_index = {e: i for i, e in enumerate(g.edges)}

    def x(u: int, v: int) -> int:
        if u < v:
            return n + 2 * edge_index[(u, v)]
        return n + 2 * edge_index[(v, u)] + 1

    rot: list[tuple[int, int, int]] = [None] * (4 * n)  # type: ignore[list-item]
    for u in range(n):
        rot[u] = tuple(x(u, a) for a in g.rot[u])  # type: ignore[assignment]
    for face in f.faces:
        b = face.boundary
        k = len(b)
        for i in range(k):
            prev_, u, a = b[i - 1], b[i], b[(i + 1) % k]
            nxt = x(a, b[(i + 2) % k])
            rot[x(u, a)] = (nxt, u, x(prev_, u))

    new = validate_fullerene(build_graph(4 * n, rot))
    edge_map = {}
    for (u, v) in g.edges:
        edge_map[((u, v), f.dart_face[(u, v)])] = x(u, v)
        edge_map[((u, v), f.dart_face[(v, u)])] = x(v, u)
    return ChamferResult(new, {v: v for v in range(n)}, edge_map)


def canonical_chamfer_packing(r: ChamferResult) -> StarPacking:
    """Centres at the original vertices; every new vertex has exactly one spoke."""
    return StarPacking.from_centers(r.graph, r.original_vertex_map.values())
