import pytest

from starpack import fixtures
from starpack.graph_core import validate_fullerene
from starpack.packing_solver import verify_packing
from starpack.structure_analysis import packing_report
from starpack.transforms import canonical_chamfer_packing, chamfer

BASES = [k for k in fixtures.SPIRALS if fixtures.SPIRALS[k][0] <= 60]


def test_chamfer_dodecahedron(c20):
    r = chamfer(c20)
    f = r.graph
    assert f.n == 80
    assert len(f.graph.edges) == 120
    assert len(f.pentagon_ids) == 12 and len(f.hexagon_ids) == 30


def test_chamfer_twice(c80):
    f = chamfer(c80).graph
    assert f.n == 320
    assert len(f.pentagon_ids) == 12
    assert len(f.hexagon_ids) == 30 + 120


@pytest.mark.parametrize("name", BASES)
def test_chamfer_counts_and_canonical_packing(name):
    old = fixtures.fixture(name)
    r = chamfer(old)
    f = r.graph
    assert f.n == 4 * old.n
    assert len(f.hexagon_ids) == len(old.hexagon_ids) + len(old.graph.edges)
    validate_fullerene(f.graph)
    image = set(r.original_vertex_map.values())
    assert all(w not in image for v in image for w in f.neighbors(v))
    s = canonical_chamfer_packing(r)
    assert verify_packing(f, s.centers)
    assert not s.center_set & f.pentagon_vertices


def test_edge_vertex_map(c20):
    r = chamfer(c20)
    f = r.graph
    assert len(r.edge_vertex_map) == 60
    assert sorted(r.edge_vertex_map.values()) == list(range(20, 80))
    for ((u, v), face), x in r.edge_vertex_map.items():
        assert u < v
        assert face in (c20.dart_face[(u, v)], c20.dart_face[(v, u)])
        # each new vertex has exactly one spoke, to an endpoint of its edge
        spokes = [w for w in f.neighbors(x) if w < 20]
        assert len(spokes) == 1 and spokes[0] in (u, v)


def test_original_faces_keep_their_size(c60):
    r = chamfer(c60)
    sizes = sorted(r.graph.faces[p].size for p in r.graph.pentagon_ids)
    assert sizes == [5] * 12
    # every pentagon of the image avoids the originals
    assert not r.graph.pentagon_vertices & set(range(60))


def test_canonical_report(c80_result):
    rep = packing_report(c80_result.graph, canonical_chamfer_packing(c80_result))
    assert rep.p0 and rep.odd_cycle_count == 12


def test_ids_are_deterministic(c20):
    assert chamfer(c20).graph.graph == chamfer(c20).graph.graph
