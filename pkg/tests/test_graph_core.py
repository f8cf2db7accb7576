import itertools

import pytest

from starpack import fixtures
from starpack.errors import (
    AsymmetricAdjacency,
    BadFaceSize,
    Disconnected,
    FacialCycle,
    NonCubic,
    NotACycle,
    NotInduced,
)
from starpack.graph_core import (
    build_graph,
    chords,
    cycle_sides,
    is_induced_cycle,
    is_three_connected,
    trace_faces,
    validate_fullerene,
)
from starpack.packing_solver import enumerate_packings
from starpack.structure_analysis import complement_cycles

from .conftest import cube_rotation


def test_build_graph_dodecahedron(c20):
    g = build_graph(20, {v: c20.graph.rot[v] for v in range(20)})
    assert g == c20.graph
    assert len(g.edges) == 30


def test_build_graph_rejects_asymmetric(c20):
    rot = [list(r) for r in c20.graph.rot]
    # vertex 1 forgets vertex 0 (replaced by a vertex it is not adjacent to)
    other = next(w for w in range(20) if w not in rot[1] and w != 1 and 0 != w)
    rot[1] = [other if w == 0 else w for w in rot[1]]
    with pytest.raises(AsymmetricAdjacency):
        build_graph(20, rot)


def test_build_graph_rejects_disconnected(c20):
    rot = list(c20.graph.rot) + [tuple(w + 20 for w in r) for r in c20.graph.rot]
    with pytest.raises(Disconnected):
        build_graph(40, rot)


@pytest.mark.parametrize("row", [(1, 2), (1, 1, 2), (0, 1, 2), (1, 2, 3, 4)])
def test_build_graph_rejects_non_cubic(row):
    rot = [row] + [(0, 2, 3)] * 3
    with pytest.raises(NonCubic):
        build_graph(4, rot)


def test_trace_faces_dodecahedron(c20):
    faces = trace_faces(c20.graph)
    assert len(faces) == 12
    assert all(f.size == 5 for f in faces)


def test_trace_faces_chamfer(c80):
    faces = trace_faces(c80.graph)
    sizes = sorted(f.size for f in faces)
    # Euler: 80 - 120 + f = 2; one new hexagon per original edge (30)
    assert len(faces) == 42
    assert sizes.count(5) == 12 and sizes.count(6) == 30


@pytest.mark.parametrize("name", fixtures.names())
def test_face_trace_consumes_each_dart_once(name):
    f = fixtures.fixture(name)
    darts = [d for face in f.faces for d in face.edges()]
    assert len(darts) == 3 * f.n == len(set(darts))
    assert len(f.faces) == f.n // 2 + 2
    assert len(f.pentagon_ids) == 12
    assert all(len(fs) == 3 for fs in f.vertex_faces)


@pytest.mark.parametrize("name", fixtures.names())
def test_face_boundaries_are_induced(name):
    f = fixtures.fixture(name)
    assert all(is_induced_cycle(f, face.boundary) for face in f.faces)


def test_validate_dodecahedron(c20):
    assert len(c20.pentagon_ids) == 12
    assert c20.hexagon_ids == ()


def test_validate_cube_bad_face_size():
    g = build_graph(8, cube_rotation())
    with pytest.raises(BadFaceSize):
        validate_fullerene(g)


def test_validate_chamfer_output(c80):
    assert c80.n == 80
    assert validate_fullerene(c80.graph).n == 80


def test_three_connectivity_detects_two_cut():
    # {2, 3} separates {0, 1} from the rest
    rot = {
        0: (1, 2, 3), 1: (0, 2, 3), 2: (0, 1, 4), 3: (0, 1, 5),
        4: (2, 6, 7), 5: (3, 6, 7), 6: (4, 5, 7), 7: (4, 5, 6),
    }
    assert not is_three_connected(build_graph(8, rot))


def test_three_connectivity_positive(c20, c60):
    assert is_three_connected(c20.graph)
    assert is_three_connected(c60.graph)


def test_is_induced_cycle_pentagons(c60):
    for p in c60.pentagon_ids:
        assert is_induced_cycle(c60, c60.faces[p].boundary)


def test_is_induced_cycle_with_chord():
    # hexagon 0..5 with chord 0-3, plus pendant structure to stay cubic: K_{3,3}
    rot = {0: (1, 5, 3), 1: (0, 2, 4), 2: (1, 3, 5), 3: (2, 4, 0), 4: (3, 5, 1), 5: (4, 0, 2)}
    g = build_graph(6, rot)
    assert not is_induced_cycle(g, [0, 1, 2, 3, 4, 5])
    assert chords(g, [0, 1, 2, 3, 4, 5])


def test_is_induced_cycle_not_a_cycle(c20):
    face = c20.faces[0].boundary
    with pytest.raises(NotACycle):
        is_induced_cycle(c20, [face[0], face[2], face[1]])
    with pytest.raises(NotACycle):
        is_induced_cycle(c20, [face[0], face[1], face[0]])


def test_cycle_sides_facial(c20):
    with pytest.raises(FacialCycle):
        cycle_sides(c20, c20.faces[3].boundary)


def _region_boundary(f, face_ids):
    """Order the edges lying on exactly one face of ``face_ids`` into a cycle."""
    count = {}
    for fid in face_ids:
        for u, v in f.faces[fid].edges():
            key = frozenset((u, v))
            count[key] = count.get(key, 0) + 1
    edges = [tuple(e) for e, c in count.items() if c == 1]
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    cyc, prev, cur = [start], None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev][0] if prev is not None else adj[cur][0]
        if nxt == start:
            return cyc
        cyc.append(nxt)
        prev, cur = cur, nxt


def test_cycle_sides_around_shrunken_face(c80_result):
    f = c80_result.graph
    # shrunken original pentagon plus its five edge-hexagons
    pent = f.pentagon_ids[0]
    ring = {f.dart_face[(v, w)] for u, v in f.faces[pent].edges() for w in f.neighbors(v)}
    ring |= {f.dart_face[(w, v)] for u, v in f.faces[pent].edges() for w in f.neighbors(v)}
    hexes = {h for h in ring if f.faces[h].size == 6 and set(f.faces[h].boundary) & set(f.faces[pent].boundary)}
    assert len(hexes) == 5
    cycle = _region_boundary(f, hexes | {pent})
    assert len(cycle) == 15
    sides = cycle_sides(f, cycle)
    parts = [sides.inside, sides.outside, set(cycle)]
    assert sum(map(len, parts)) == 80
    assert set().union(*parts) == set(range(80))
    assert {len(sides.inside), len(sides.outside)} == {5, 60}
    for a in sides.inside:
        assert not set(f.neighbors(a)) & sides.outside


def test_cycle_sides_fig3a_cycle(c80):
    packs = enumerate_packings(c80)
    cycles = [c for p in packs for c in complement_cycles(c80, p) if not c.facial]
    assert cycles and all(c.length == 25 for c in cycles)
    for c in cycles:
        sides = cycle_sides(c80, c.vertices)
        assert sides.inside and sides.outside
        assert len(sides.inside) + len(sides.outside) + 25 == 80
        assert not sides.inside & sides.outside


def test_cycle_sides_rejects_chorded_cycle(c80):
    face = c80.faces[c80.hexagon_ids[0]].boundary
    # walk around two adjacent faces: the shared edge is a chord of the union
    other = c80.dart_face[(face[1], face[0])]
    ob = c80.faces[other].boundary
    i = ob.index(face[0])
    path = [ob[(i + k) % len(ob)] for k in range(len(ob))]  # starts at face[0], ends at face[1]
    assert path[-1] == face[1]
    union = list(face[1:]) + [face[0]]  # face[1] .. face[0]
    cycle = union + path[1:-1]
    assert len(cycle) == 6 + len(ob) - 2
    with pytest.raises(NotInduced):
        cycle_sides(c80, cycle)


def test_relabel_round_trip(c20):
    perm = list(range(20))[::-1]
    g = c20.graph.relabel(perm)
    inv = [0] * 20
    for v, p in enumerate(perm):
        inv[p] = v
    assert g.relabel(inv) == c20.graph
