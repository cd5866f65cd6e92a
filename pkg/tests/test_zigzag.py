from __future__ import annotations

import random

import pytest

from zigzag_lab.generators import (antiprism, catalog_map, cube, dodecahedron,
                                   g_series, gm_3n, octahedron, prism,
                                   tetrahedron)
from zigzag_lab.planar_map import MapError
from zigzag_lab.zigzag import (ZigzagStructure, central_circuits,
                               edge_type_census, edge_types, face_type1_counts,
                               int_vector_string, orient_all_type1,
                               vertex_type2_counts, z_balanced, z_knotted,
                               z_predicates, z_uniform, z_vector_string)


def test_tetrahedron_zigzags_in_full():
    st = ZigzagStructure(tetrahedron())
    assert len(st) == 3
    assert st.lengths() == [4, 4, 4]
    assert all(z.signature == (0, 0) and z.is_simple for z in st.zigzags)
    assert st.int_matrix == [[0, 2, 2], [2, 0, 2], [2, 2, 0]]
    assert st.int_vector(0) == [2, 2]
    assert z_vector_string(st) == "4^3"
    assert int_vector_string(st, 0) == "2^2"


@pytest.mark.parametrize("make, zv", [
    (cube, "6^4"),
    (dodecahedron, "10^6"),
    (lambda: catalog_map("TruncatedTetrahedron"), "12^3"),
    (lambda: catalog_map("TruncatedOctahedron"), "12^6"),
    (lambda: catalog_map("SnubCube"), "30_{3,0}^4"),
    (lambda: prism(3), "18_{3,6}"),
    (lambda: prism(6), "18_{3,0}^2"),
    (lambda: antiprism(4), "8; 24_{0,8}"),
    (lambda: gm_3n(3, 1), "12^3"),
    (lambda: gm_3n(2, 2), "8^6"),
    (lambda: g_series(2), "4^3,12^2"),
])
def test_z_vector_strings(make, zv):
    assert z_vector_string(ZigzagStructure(make())) == zv


def test_int_vector_string_with_repeats():
    st = ZigzagStructure(catalog_map("TruncatedOctahedron"))
    assert int_vector_string(st, 0) == "4,2^4"


def test_zigzag_dicts():
    st = ZigzagStructure(prism(3))
    (z,) = st.zigzags
    assert z.as_dict() == {"length": 18, "type1": 3, "type2": 6, "simple": False}
    assert (z.a1, z.a2) == (3, 6)
    assert st.int_matrix == [[9]]  # 3 + 6 self-intersections on the diagonal


def test_lengths_sum_to_twice_edges(corpus):
    for name, m in corpus.items():
        st = ZigzagStructure(m)
        assert sum(st.lengths()) == 2 * m.n_edges, name
        assert all(length % 2 == 0 for length in st.lengths()), name


def test_int_matrix_shape(corpus):
    for name, m in corpus.items():
        st = ZigzagStructure(m)
        mat = st.int_matrix
        for i, row in enumerate(mat):
            assert row == [mat[j][i] for j in range(len(mat))], name
            # every traversed edge of the circuit is accounted for exactly once
            total = 2 * mat[i][i] + sum(row[j] for j in range(len(row)) if j != i)
            assert total == st.zigzags[i].length, name


def test_state_partition():
    m = dodecahedron()
    st = ZigzagStructure(m)
    claimed = [st.zigzag_of_state(d, t) for d in range(m.n_darts) for t in (0, 1)]
    # each circuit owns 2*length of the 2*n_darts (dart, turn) states
    for i, z in enumerate(st.zigzags):
        assert claimed.count(i) == 2 * z.length


def test_orientation_parity_laws():
    rng = random.Random(7)
    for m in (cube(), dodecahedron(), catalog_map("TruncatedOctahedron")):
        st = ZigzagStructure(m)
        for _ in range(25):
            bits = [rng.randint(0, 1) for _ in range(len(st))]
            types = edge_types(st, bits)
            assert all(c % 2 == 0 for c in vertex_type2_counts(m, types))
            assert all(c % 2 == 0 for c in face_type1_counts(m, types))


def test_all_type1_orientation_on_bipartite_maps():
    for m in (cube(), catalog_map("TruncatedOctahedron"), prism(6)):
        st = ZigzagStructure(m)
        bits = orient_all_type1(m, st)
        assert bits is not None
        census = edge_type_census(m, st, bits)
        assert census["type2_edges"] == 0
        assert census["type1_edges"] == m.n_edges


def test_all_type1_requires_bipartite():
    t = tetrahedron()
    with pytest.raises(MapError, match="bipartite"):
        orient_all_type1(t, ZigzagStructure(t))


def test_predicates():
    d = dodecahedron()
    assert z_predicates(d) == {"z_uniform": True, "z_knotted": False,
                               "z_balanced": True, "z_transitive": True}
    assert z_predicates(g_series(1)) == {"z_uniform": False, "z_knotted": False,
                                         "z_balanced": True, "z_transitive": False}
    st3 = ZigzagStructure(prism(3))
    assert z_knotted(st3) and z_uniform(st3) and z_balanced(st3)


def test_central_circuits():
    # the octahedron is 4-valent: its three straight-ahead circuits are the
    # equatorial squares
    assert sorted(len(c) for c in central_circuits(octahedron())) == [4, 4, 4]
    with pytest.raises(MapError, match="degrees even"):
        central_circuits(cube())


def test_medial_central_circuits_mirror_zigzags(corpus):
    for name, m in corpus.items():
        st = ZigzagStructure(m)
        med_lengths = sorted(len(c) for c in central_circuits(m.medial()))
        assert med_lengths == sorted(st.lengths()), name
