"""Reading, writing and constructing fullerenes.

* planar code (1-byte variant, plantri/buckygen compatible)
* face-spiral winding
* JSON export (schema version 1, see docs/json_schema.md)
"""

from __future__ import annotations

import json
from typing import BinaryIO, Iterable, Iterator, Sequence

from .errors import BadHeader, GraphError, TooLarge, TruncatedGraph, UnwindableSpiral, VertexOutOfRange
from .graph_core import Fullerene, RotationSystem, build_graph, validate_fullerene

HEADER = b">>planar_code<<"
JSON_SCHEMA_VERSION = 1


# --- planar code -----------------------------------------------------------

def read_planar_code(stream: BinaryIO | bytes) -> Iterator[RotationSystem]:
    """Lazily yield graphs from a planar-code stream (header required)."""
    if isinstance(stream, (bytes, bytearray)):
        import io

        stream = io.BytesIO(stream)
    header = stream.read(len(HEADER))
    if header != HEADER:
        raise BadHeader(f"expected {HEADER!r}, got {header!r}")
    index = 0
    while True:
        first = stream.read(1)
        if not first:
            return
        n = first[0]
        if n == 0:
            raise TooLarge(f"graph {index}: 2-byte planar code is not supported")
        rot = []
        for v in range(n):
            row = []
            while True:
                b = stream.read(1)
                if not b:
                    raise TruncatedGraph(f"graph {index}: stream ended inside vertex {v + 1}")
                w = b[0]
                if w == 0:
                    break
                if w > n:
                    raise VertexOutOfRange(f"graph {index}: vertex {v + 1} lists {w} but n = {n}")
                row.append(w - 1)
            rot.append(row)
        yield build_graph(n, rot)
        index += 1


def write_planar_code(graphs: Iterable[RotationSystem], sink: BinaryIO) -> int:
    """Write header plus graphs; returns the number of bytes written."""
    chunks = [HEADER]
    for g in graphs:
        if g.n > 255:
            raise TooLarge(f"planar code (1-byte) supports n <= 255, got {g.n}")
        buf = bytearray([g.n])
        for row in g.rot:
            buf.extend(w + 1 for w in row)
            buf.append(0)
        chunks.append(bytes(buf))
    data = b"".join(chunks)
    sink.write(data)
    return len(data)


# --- face spirals ----------------------------------------------------------

def _wind_dual(face_sizes: Sequence[int]) -> list[list[int]]:
    """Wind the spiral into the dual triangulation.

    Returns, for every face, its neighbouring faces in counterclockwise
    order. The open boundary of the growing patch is kept as a list
    ``[front, ..., back]``; each new face attaches to the back and the front
    and then closes any saturated faces at either end.
    """
    nf = len(face_sizes)
    nbrs: list[list[int]] = [[] for _ in range(nf)]
    remaining = list(face_sizes)

    def link_front(k: int, front: int) -> None:
        if remaining[front] <= 0 or front in nbrs[k]:
            raise UnwindableSpiral(f"face {k} cannot attach to face {front}")
        nbrs[k].insert(0, front)
        nbrs[front].append(k)
        remaining[front] -= 1
        remaining[k] -= 1

    def link_back(k: int, back: int) -> None:
        if remaining[back] <= 0 or back in nbrs[k]:
            raise UnwindableSpiral(f"face {k} cannot attach to face {back}")
        nbrs[k].append(back)
        nbrs[back].insert(0, k)
        remaining[back] -= 1
        remaining[k] -= 1

    nbrs[0].append(1)
    nbrs[1].append(0)
    remaining[0] -= 1
    remaining[1] -= 1
    open_faces = [0, 1]

    for k in range(2, nf - 1):
        link_back(k, open_faces[-1])
        link_front(k, open_faces[0])
        while remaining[open_faces[0]] == 0:
            open_faces.pop(0)
            if not open_faces:
                raise UnwindableSpiral(f"boundary closed early at face {k}")
            link_front(k, open_faces[0])
        while len(open_faces) >= 2 and remaining[open_faces[-1]] == 0:
            open_faces.pop()
            link_back(k, open_faces[-1])
        if remaining[k] <= 0:
            raise UnwindableSpiral(f"face {k} saturated before the cage closed")
        open_faces.append(k)

    last = nf - 1
    if len(open_faces) != face_sizes[last] or any(remaining[f] != 1 for f in open_faces):
        raise UnwindableSpiral("final face does not close the boundary")
    for f in open_faces:
        nbrs[f].append(last)
        remaining[f] -= 1
    nbrs[last] = list(reversed(open_faces))
    remaining[last] = 0
    return nbrs


def spiral_to_graph(face_sizes: Sequence[int]) -> RotationSystem:
    """Build the cubic plane graph whose faces, taken in spiral order, have ``face_sizes``.

    Raises UnwindableSpiral if the code is malformed or does not close into
    a fullerene.
    """
    face_sizes = [int(s) for s in face_sizes]
    if any(s not in (5, 6) for s in face_sizes) or face_sizes.count(5) != 12:
        raise UnwindableSpiral("spiral must consist of 5s and 6s with exactly twelve 5s")
    dual = _wind_dual(face_sizes)

    # Vertices of the cubic graph are the triangles of the dual. A triangle
    # is keyed by its dart (a, b) with a < b and c = the face after b at a.
    tri_id: dict[tuple[int, int, int], int] = {}
    tris: list[tuple[int, int, int]] = []

    def corner(a: int, b: int) -> tuple[int, int, int]:
        ring = dual[a]
        c = ring[(ring.index(b) + 1) % len(ring)]
        t = (a, b, c)
        # canonical rotation of the triangle
        i = t.index(min(t))
        return t[i:] + t[:i]

    for a in range(len(dual)):
        for b in dual[a]:
            t = corner(a, b)
            if t not in tri_id:
                tri_id[t] = len(tris)
                tris.append(t)
    for a, b, c in tris:
        if corner(b, c) != (a, b, c) and corner(b, c) != corner(a, b):
            raise UnwindableSpiral("dual is not a consistent triangulation")

    def across(a: int, b: int) -> int:
        # triangle on the other side of dual edge a-b
        return tri_id[corner(b, a)]

    rot = []
    for a, b, c in tris:
        rot.append((across(a, b), across(b, c), across(c, a)))
    try:
        g = build_graph(len(tris), rot)
        validate_fullerene(g)
    except GraphError as exc:
        raise UnwindableSpiral(f"spiral does not wind into a fullerene: {exc}") from exc
    return g


def dodecahedron() -> Fullerene:
    return validate_fullerene(spiral_to_graph([5] * 12))


# --- JSON ------------------------------------------------------------------

def fullerene_document(f: Fullerene, report=None) -> dict:
    doc = {
        "schema": JSON_SCHEMA_VERSION,
        "n": f.n,
        "vertices": list(range(f.n)),
        "rotation": [list(r) for r in f.graph.rot],
        "faces": [list(face.boundary) for face in f.faces],
        "pentagons": len(f.pentagon_ids),
        "pentagon_faces": list(f.pentagon_ids),
    }
    if report is not None:
        doc["report"] = report.to_dict()
    return doc


def export_json(f: Fullerene, report=None) -> str:
    """Stable-key JSON document for a fullerene and optional PackingReport."""
    return json.dumps(fullerene_document(f, report), sort_keys=True)


def graph_from_document(doc: dict) -> RotationSystem:
    if doc.get("schema") != JSON_SCHEMA_VERSION:
        raise BadHeader(f"unsupported JSON schema {doc.get('schema')!r}")
    return build_graph(doc["n"], doc["rotation"])
