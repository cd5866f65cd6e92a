from __future__ import annotations

import pytest

from zigzag_lab.generators import (catalog_map, cube, dodecahedron, g_series,
                                   gm_3n, icosahedron, prism)
from zigzag_lab.planar_map import MapError
from zigzag_lab.railroad import (curvature_graph, curve_arrangement, is_tight,
                                 extended_road_cycles, pseudo_roads,
                                 railroad_self_intersections, railroads,
                                 tight_zigzag_bound)
from zigzag_lab.zigzag import ZigzagStructure


def test_chain_family_railroads():
    # g_series(n) carries n width-one rings chained between its two caps
    for n in (1, 2, 3):
        g = g_series(n)
        st = ZigzagStructure(g)
        rr = railroads(g, st)
        assert len(rr) == n
        assert [r.length for r in rr] == [2] * n
        assert not any(r.self_paired for r in rr)
        assert not is_tight(g)
    r = railroads(g_series(1))[0]
    assert r.bounding == (0, 1)
    assert sorted(r.multiplicities().values()) == [1, 1]  # visits 2 hexagons once


def test_ring_family_railroad_count():
    # 3 distinct zigzag lengths would leave 0 rails; here 6 zigzags -> 3 rails
    g = gm_3n(2, 2)
    st = ZigzagStructure(g)
    rr = railroads(g, st)
    assert len(rr) == len(st.zigzags) - 3 == 3
    assert {r.bounding for r in rr} == {(0, 4), (1, 5), (2, 3)}
    assert all(r.length == 4 for r in rr)


def test_tightness():
    assert is_tight(dodecahedron())
    assert is_tight(cube())
    assert is_tight(catalog_map("TruncatedOctahedron"))
    assert is_tight(gm_3n(3, 1))
    assert is_tight(gm_3n(5, 1))
    assert is_tight(prism(6))
    assert not is_tight(g_series(4))
    assert not is_tight(gm_3n(2, 2))


def test_railroads_need_3_valence():
    with pytest.raises(MapError):
        railroads(icosahedron())


def test_tight_zigzag_bound():
    to = catalog_map("TruncatedOctahedron")
    assert tight_zigzag_bound(to) == 12          # six squares, 24/2
    assert len(ZigzagStructure(to)) <= 12
    assert tight_zigzag_bound(dodecahedron()) == 30
    with pytest.raises(MapError, match="tight"):
        tight_zigzag_bound(g_series(1))


def test_pseudo_roads_prism6():
    roads = pseudo_roads(prism(6))
    assert sorted(r.length for r in roads) == [0] * 6 + [1] * 6
    # every end is one of the six square faces
    p6 = prism(6)
    for r in roads:
        assert all(len(p6.faces[f]) == 4 for f in r.ends)


def test_curvature_graph_is_4_regular_on_squares():
    for m in (cube(), prism(6), catalog_map("TruncatedOctahedron")):
        g = curvature_graph(m)
        assert g.number_of_nodes() == 6
        assert g.number_of_edges() == 12
        assert sorted(d for _, d in g.degree()) == [4] * 6


def test_extended_road_cycles():
    assert sorted(extended_road_cycles(prism(6))) == [4, 4, 4, 6]
    assert sorted(extended_road_cycles(catalog_map("TruncatedOctahedron"))) == [6] * 6


def test_railroad_self_intersections_simple_ring():
    g = g_series(1)
    st = ZigzagStructure(g)
    r = railroads(g, st)[0]
    assert railroad_self_intersections(g, st, r) == {"m2": 0, "m3": 0, "kinds": {}}


def test_curve_arrangement_crossing_counts():
    arr = curve_arrangement(gm_3n(2, 4))
    assert arr.n_curves == 5
    assert (arr.n_double_points, arr.n_triple_points) == (10, 2)
    assert len(arr.faces) == 16
    assert all(f.chi == 1 for f in arr.faces)
    assert all(f.curvature_identity_holds() for f in arr.faces)
    assert dict(arr.q_census()) == {3: 12, 4: 4}
    # sphere count for the arrangement graph: 12 - 26 + 16 == 2
    v = arr.n_double_points + arr.n_triple_points
    e = (4 * arr.n_double_points + 6 * arr.n_triple_points) // 2
    assert v - e + len(arr.faces) == 2
    assert arr.to_planar_map() is not None


def test_curve_arrangement_without_crossings():
    # two disjoint circles split the sphere into two caps and an annulus
    arr = curve_arrangement(g_series(2))
    assert arr.n_curves == 2
    assert arr.n_double_points == 0 and arr.n_triple_points == 0
    assert sorted(f.chi for f in arr.faces) == [0, 1, 1]
    assert arr.gauss_codes == [[], []]
    assert arr.to_planar_map() is None
