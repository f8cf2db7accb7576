"""Embedded cubic plane graphs: rotation systems, faces, fullerene validation.

Vertices are dense integers ``0..n-1``. The rotation system is the single
source of truth for the embedding; faces are recovered by tracing darts and
planarity is certified by the Euler count rather than a separate test.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    AsymmetricAdjacency,
    BadFaceSize,
    Disconnected,
    EmbeddingInconsistent,
    FacialCycle,
    GraphError,
    NonCubic,
    NotACycle,
    NotInduced,
    NotThreeConnected,
    WrongPentagonCount,
)

Dart = tuple[int, int]


@dataclass(frozen=True)
class RotationSystem:
    """Cubic graph with a cyclic (counterclockwise) neighbour order per vertex."""

    n: int
    rot: tuple[tuple[int, int, int], ...]

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.rot[v]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rot)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Undirected edges as ``(u, v)`` with ``u < v``, sorted."""
        return tuple(sorted((u, v) for u in range(self.n) for v in self.rot[u] if u < v))

    def darts(self) -> Iterable[Dart]:
        for u in range(self.n):
            for v in self.rot[u]:
                yield (u, v)

    def next_in_rotation(self, v: int, u: int) -> int:
        """Neighbour of ``v`` following ``u`` in the rotation at ``v``."""
        r = self.rot[v]
        return r[(r.index(u) + 1) % 3]

    def relabel(self, perm: Sequence[int]) -> RotationSystem:
        """Return the same embedded graph with vertex ``v`` renamed ``perm[v]``."""
        rot: list[tuple[int, int, int] | None] = [None] * self.n
        for v in range(self.n):
            rot[perm[v]] = tuple(perm[w] for w in self.rot[v])  # type: ignore[assignment]
        return RotationSystem(self.n, tuple(rot))  # type: ignore[arg-type]


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def edges(self) -> Iterable[tuple[int, int]]:
        b = self.boundary
        for i in range(len(b)):
            yield b[i], b[(i + 1) % len(b)]


@dataclass(frozen=True)
class Fullerene:
    graph: RotationSystem
    faces: tuple[Face, ...]
    vertex_faces: tuple[tuple[int, int, int], ...]
    pentagon_ids: tuple[int, ...]
    dart_face: Mapping[Dart, int] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.graph.n

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.graph.rot[v]

    @cached_property
    def hexagon_ids(self) -> tuple[int, ...]:
        return tuple(f.id for f in self.faces if f.size == 6)

    @cached_property
    def pentagon_vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.pentagon_ids for v in self.faces[p].boundary)

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        """The two faces on either side of edge ``uv``."""
        return self.dart_face[(u, v)], self.dart_face[(v, u)]


@dataclass(frozen=True)
class CycleSides:
    cycle: tuple[int, ...]
    inside: frozenset[int]
    outside: frozenset[int]


GraphLike = Union[RotationSystem, Fullerene]


def _rotation_of(g: GraphLike) -> RotationSystem:
    return g.graph if isinstance(g, Fullerene) else g


def build_graph(n: int, rot: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> RotationSystem:
    """Validate a neighbour-order mapping and freeze it into a RotationSystem."""
    if isinstance(rot, Mapping):
        if set(rot) != set(range(n)):
            raise GraphError(f"rotation must cover vertices 0..{n - 1}")
        rows = [rot[v] for v in range(n)]
    else:
        rows = list(rot)
        if len(rows) != n:
            raise GraphError(f"expected {n} rotation entries, got {len(rows)}")
    frozen = []
    for v, row in enumerate(rows):
        row = tuple(int(w) for w in row)
        if len(row) != 3 or len(set(row)) != 3 or v in row:
            raise NonCubic(f"vertex {v} has neighbour list {row}")
        for w in row:
            if not 0 <= w < n:
                raise GraphError(f"vertex {v} lists neighbour {w} outside 0..{n - 1}")
        frozen.append(row)
    for v, row in enumerate(frozen):
        for w in row:
            if v not in frozen[w]:
                raise AsymmetricAdjacency(f"{v} lists {w} but {w} does not list {v}")
    g = RotationSystem(n, tuple(frozen))
    if n and len(_component(g, 0)) != n:
        raise Disconnected(f"graph on {n} vertices is not connected")
    return g


def _component(g: RotationSystem, start: int, removed: frozenset[int] = frozenset()) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.rot[v]:
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return seen


def trace_faces(g: RotationSystem) -> tuple[Face, ...]:
    """Trace every face: arriving at v from u, leave along the neighbour after u in rot(v)."""
    used: set[Dart] = set()
    faces = []
    for start in g.darts():
        if start in used:
            continue
        boundary = []
        u, v = start
        while (u, v) not in used:
            used.add((u, v))
            boundary.append(u)
            u, v = v, g.next_in_rotation(v, u)
        if (u, v) != start:
            raise EmbeddingInconsistent(f"face trace from {start} closed at {(u, v)}")
        faces.append(Face(len(faces), tuple(boundary)))
    return tuple(faces)


def _has_articulation_point(g: RotationSystem, removed: int) -> bool:
    """Tarjan lowpoint test on ``g - removed`` (iterative)."""
    root = 0 if removed != 0 else 1
    disc = [-1] * g.n
    low = [0] * g.n
    disc[removed] = -2
    disc[root] = low[root] = 0
    timer = 1
    root_children = 0
    stack = [(root, -1, iter(g.rot[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == removed or w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(g.rot[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if parent == root:
            root_children += 1
        elif low[v] >= disc[parent]:
            return True
    if any(d == -1 for d in disc):
        return True  # g - removed is disconnected
    return root_children > 1


def is_three_connected(g: RotationSystem) -> bool:
    """Exhaustive 2-vertex-cut search: for each vertex a, look for a cut vertex of g - a."""
    if g.n < 4:
        return False
    return not any(_has_articulation_point(g, a) for a in range(g.n))


def validate_fullerene(g: RotationSystem) -> Fullerene:
    faces = trace_faces(g)
    for f in faces:
        if f.size not in (5, 6):
            raise BadFaceSize(f"face {f.id} has size {f.size}")
    pentagons = tuple(f.id for f in faces if f.size == 5)
    if len(pentagons) != 12:
        raise WrongPentagonCount(f"{len(pentagons)} pentagons")
    if g.n - 3 * g.n // 2 + len(faces) != 2:
        raise EmbeddingInconsistent(f"Euler characteristic violated: n={g.n}, f={len(faces)}")

    dart_face: dict[Dart, int] = {}
    incidence: list[list[int]] = [[] for _ in range(g.n)]
    for f in faces:
        if len(set(f.boundary)) != f.size:
            raise EmbeddingInconsistent(f"face {f.id} boundary {f.boundary} is not a simple cycle")
        for u, v in f.edges():
            if (u, v) in dart_face:
                raise EmbeddingInconsistent(f"dart {(u, v)} used twice")
            dart_face[(u, v)] = f.id
        for v in f.boundary:
            incidence[v].append(f.id)
    if len(dart_face) != 3 * g.n:
        raise EmbeddingInconsistent("not every dart lies on a face")
    if not is_three_connected(g):
        raise NotThreeConnected("graph has a vertex cut of size at most 2")
    return Fullerene(
        graph=g,
        faces=faces,
        vertex_faces=tuple(tuple(fs) for fs in incidence),  # type: ignore[misc]
        pentagon_ids=pentagons,
        dart_face=dart_face,
    )


def _check_cycle(g: RotationSystem, cycle: Sequence[int]) -> tuple[int, ...]:
    cycle = tuple(cycle)
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle(f"{cycle} is not a sequence of at least 3 distinct vertices")
    for i, v in enumerate(cycle):
        if not 0 <= v < g.n:
            raise NotACycle(f"vertex {v} out of range")
        w = cycle[(i + 1) % len(cycle)]
        if not g.has_edge(v, w):
            raise NotACycle(f"consecutive vertices {v}, {w} are not adjacent")
    return cycle


def chords(g: GraphLike, cycle: Sequence[int]) -> list[tuple[int, int]]:
    g = _rotation_of(g)
    cycle = _check_cycle(g, cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    k = len(cycle)
    out = []
    for i, v in enumerate(cycle):
        for w in g.rot[v]:
            j = pos.get(w)
            if j is not None and i < j and (j - i) % k not in (1, k - 1):
                out.append((v, w))
    return out


def is_induced_cycle(g: GraphLike, cycle: Sequence[int]) -> bool:
    return not chords(g, cycle)


def cycle_sides(f: Fullerene, cycle: Sequence[int]) -> CycleSides:
    """Split the vertices off an induced non-facial cycle into its two sides.

    Faces are flood-filled across every edge that is not on the cycle; the
    side containing the face of dart ``cycle[0] -> cycle[1]`` is ``inside``.
    """
    if chords(f, cycle):
        raise NotInduced(f"cycle {tuple(cycle)} has a chord")
    cycle = tuple(cycle)
    vset = frozenset(cycle)
    if any(frozenset(face.boundary) == vset for face in f.faces):
        raise FacialCycle(f"cycle {cycle} bounds a face")

    on_cycle = set()
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        on_cycle.add((v, w))
        on_cycle.add((w, v))

    start = f.dart_face[(cycle[0], cycle[1])]
    region = {start}
    queue = deque([start])
    while queue:
        face = f.faces[queue.popleft()]
        for u, v in face.edges():
            if (u, v) in on_cycle:
                continue
            other = f.dart_face[(v, u)]
            if other not in region:
                region.add(other)
                queue.append(other)

    inside = set()
    outside = set()
    for face in f.faces:
        target = inside if face.id in region else outside
        target.update(v for v in face.boundary if v not in vset)
    if inside & outside:
        raise EmbeddingInconsistent(f"cycle {cycle} does not separate the sphere cleanly")
    if not inside or not outside:
        raise FacialCycle(f"cycle {cycle} has an empty side")
    return CycleSides(cycle, frozenset(inside), frozenset(outside))
