from __future__ import annotations

from collections import Counter
from math import gcd

import pytest

from zigzag_lab.generators import (antiprism, catalog_map, catalog_names,
                                   chamfer, cube, dodecahedron, enumerate_3n,
                                   fullerene_h, g_series, gm_3n,
                                   goldberg_coxeter, icosahedron, octahedron,
                                   pentagon_triples_to_triangles, prism,
                                   tetrahedron, triangles_to_pentagon_triples)
from zigzag_lab.planar_map import MapError
from zigzag_lab.railroad import is_tight, railroads
from zigzag_lab.symmetry import automorphisms, point_group
from zigzag_lab.zigzag import ZigzagStructure, z_vector_string

VERTEX_COUNTS = {
    "Tetrahedron": 4, "Cube": 8, "Octahedron": 6, "Dodecahedron": 20,
    "Icosahedron": 12, "Cuboctahedron": 12, "Icosidodecahedron": 30,
    "Rhombicuboctahedron": 24, "Rhombicosidodecahedron": 60,
    "TruncatedTetrahedron": 12, "TruncatedCube": 24, "TruncatedOctahedron": 24,
    "TruncatedDodecahedron": 60, "TruncatedIcosahedron": 60,
    "TruncatedCuboctahedron": 48, "TruncatedIcosidodecahedron": 120,
    "SnubCube": 24, "SnubDodecahedron": 60,
}


def test_catalog_inventory():
    assert catalog_names() == sorted(VERTEX_COUNTS, key=catalog_names().index)
    for name, n in VERTEX_COUNTS.items():
        assert catalog_map(name).n_vertices == n, name


def test_catalog_errors():
    with pytest.raises(MapError, match="higher-genus"):
        catalog_map("Klein")
    with pytest.raises(MapError, match="higher-genus"):
        catalog_map("Dyck")
    with pytest.raises(MapError, match="unknown catalog solid"):
        catalog_map("Teapot")


# -- prisms and antiprisms -------------------------------------------------

def test_prism_antiprism_counts():
    for m in (3, 5, 8):
        assert prism(m).n_vertices == 2 * m
        assert prism(m).p_vector == {4: m, m: 2}
        assert antiprism(m).n_vertices == 2 * m
        expected = Counter({3: 2 * m})
        expected[m] += 2            # caps; they merge into the triangle count at m=3
        assert antiprism(m).p_vector == expected
    with pytest.raises(MapError):
        prism(2)
    with pytest.raises(MapError):
        antiprism(2)


@pytest.mark.parametrize("m, zv", [
    (3, "18_{3,6}"),            # odd
    (4, "6^4"),                 # 0 mod 4
    (5, "30_{5,10}"),
    (6, "18_{3,0}^2"),          # 2 mod 4
    (8, "12^4"),
    (12, "18^4"),
])
def test_prism_z_vectors(m, zv):
    assert z_vector_string(ZigzagStructure(prism(m))) == zv


@pytest.mark.parametrize("m, zv", [
    (3, "6^4"),                 # 0 mod 3
    (4, "8; 24_{0,8}"),
    (5, "10; 30_{0,10}"),
    (6, "12^4"),
    (9, "18^4"),
])
def test_antiprism_z_vectors(m, zv):
    assert z_vector_string(ZigzagStructure(antiprism(m))) == zv


# -- the two-cap chain family -----------------------------------------------

def test_chain_series():
    with pytest.raises(MapError):
        g_series(0)
    for n in (1, 2, 3, 4):
        g = g_series(n)
        assert g.n_vertices == 4 * n + 4
        st = ZigzagStructure(g)
        assert sorted(st.lengths()) == [4] * (n + 1) + [4 * n + 4] * 2
        assert g.node_connectivity() == 2
        assert point_group(g) == ("D2h" if n % 2 else "D2d")


# -- triangle/hexagon rings ---------------------------------------------------

def test_ring_construction_validation():
    with pytest.raises(MapError):
        gm_3n(1, 1)
    with pytest.raises(MapError):
        gm_3n(0, 5)


@pytest.mark.parametrize("s, m, twist, zv, tight", [
    (2, 1, 0, "4^2,8^2", False),
    (3, 1, 0, "12^3", True),
    (5, 1, 0, "20^3", True),
    (7, 1, 0, "28^3", True),
    (2, 2, 0, "8^6", False),
    (2, 2, 1, "8^2,16^2", False),
    (3, 2, 0, "8^3,12^2,24", False),
])
def test_ring_z_vectors(s, m, twist, zv, tight):
    g = gm_3n(s, m, twist)
    assert g.n_vertices == 4 * s * m
    st = ZigzagStructure(g)
    assert z_vector_string(st) == zv
    assert is_tight(g) == tight
    assert len(railroads(g, st)) == len(st.zigzags) - 3


def test_ring_twist_changes_the_map():
    assert not gm_3n(2, 2, 0).is_isomorphic(gm_3n(2, 2, 1))


# -- hexagon inflation ---------------------------------------------------------

def test_inflation_validation():
    with pytest.raises(MapError, match="k >= 1"):
        goldberg_coxeter(cube(), 0, 0)
    with pytest.raises(MapError, match="l <= k"):
        goldberg_coxeter(cube(), 1, 2)
    with pytest.raises(MapError, match="3-valent"):
        goldberg_coxeter(octahedron(), 2, 1)


def test_inflation_classics():
    assert goldberg_coxeter(tetrahedron(), 1, 1).is_isomorphic(
        catalog_map("TruncatedTetrahedron"))
    assert goldberg_coxeter(cube(), 1, 1).is_isomorphic(
        catalog_map("TruncatedOctahedron"))
    assert goldberg_coxeter(dodecahedron(), 1, 1).is_isomorphic(
        catalog_map("TruncatedIcosahedron"))
    assert goldberg_coxeter(cube(), 2, 0).is_isomorphic(chamfer(cube()))
    assert chamfer(cube()).n_vertices == 32


@pytest.mark.parametrize("k, l", [(1, 0), (1, 1), (2, 0), (2, 1), (3, 2)])
def test_inflation_laws_on_dodecahedron(k, l):
    g = goldberg_coxeter(dodecahedron(), k, l)
    assert g.n_vertices == 20 * (k * k + k * l + l * l)
    assert g.p_vector[5] == 12
    assert is_tight(g) == (gcd(k, l) == 1)
    reflexible = any(a.reflect for a in automorphisms(g))
    assert reflexible == (l == 0 or l == k)


# -- fullerenes with a designated intersecting pair ------------------------------

def test_fullerene_validation():
    for h in (0, 1, 3):
        with pytest.raises(MapError, match="even h >= 2"):
            fullerene_h(h)


FULLERENE_ROWS = [
    (2, "12^7", "Td"),
    (4, "12^4,24^2; 48_{4,0}^2", "D2h"),
    (6, "12^7,36^2; 36_{1,0}^4", "D2d"),
    (8, "12^10,48^2; 96_{8,0}^2", "D2h"),
    (10, "12^13,60^2; 60_{2,0}^4", "D2d"),
]


@pytest.mark.parametrize("h, zv, group", FULLERENE_ROWS)
def test_fullerene_family(h, zv, group):
    f = fullerene_h(h)
    assert f.n_vertices == 18 * h - 8
    assert f.p_vector[5] == 12
    st = ZigzagStructure(f)
    assert z_vector_string(st) == zv
    assert point_group(f) == group
    # the two simple circuits of length 6h share exactly h edges
    simple = [z.index for z in st.zigzags if z.is_simple and z.length == 6 * h]
    assert any(st.int_matrix[i][j] == h
               for a, i in enumerate(simple) for j in simple[a + 1:])


# -- contraction/expansion between triangle and pentagon neighborhoods ------------

def test_contraction_and_expansion_round_trip():
    host = goldberg_coxeter(tetrahedron(), 2, 1)
    small = triangles_to_pentagon_triples(host)
    assert small.n_vertices == host.n_vertices - 8
    assert small.is_isomorphic(dodecahedron())
    assert pentagon_triples_to_triangles(small).is_isomorphic(host)


def test_contraction_cross_check():
    host = goldberg_coxeter(tetrahedron(), 3, 0)
    assert triangles_to_pentagon_triples(host).is_isomorphic(fullerene_h(2))
    assert pentagon_triples_to_triangles(fullerene_h(2)).is_isomorphic(host)


def test_contraction_requires_isolated_triangles():
    with pytest.raises(MapError):
        triangles_to_pentagon_triples(tetrahedron())


def test_expansion_requires_pentagon_triples():
    # 60-vertex fullerene: all pentagons isolated, no triples exist
    big = goldberg_coxeter(dodecahedron(), 1, 1)
    with pytest.raises(MapError):
        pentagon_triples_to_triangles(big)


# -- exhaustive listing of the triangle/hexagon maps ------------------------------

def test_enumeration_validation():
    with pytest.raises(MapError):
        enumerate_3n(14)
    with pytest.raises(MapError):
        enumerate_3n(4)


@pytest.mark.parametrize("n, count, tight_count", [
    (12, 1, 1),
    (16, 2, 0),
    (20, 1, 1),
    (28, 2, 2),
    (48, 7, 0),
])
def test_enumeration_counts(n, count, tight_count):
    classes = enumerate_3n(n)
    assert len(classes) == count
    assert sum(is_tight(g) for g in classes) == tight_count
    for g in classes:
        assert g.n_vertices == n
        assert set(g.p_vector) <= {3, 6}
        assert g.node_connectivity() >= 3
    codes = {g.canonical_code for g in classes}
    assert len(codes) == count


def test_enumeration_28_point_groups():
    assert sorted(point_group(g) for g in enumerate_3n(28)) == ["D2d", "T"]
