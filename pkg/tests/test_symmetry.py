from __future__ import annotations

import pytest

from zigzag_lab.generators import (antiprism, catalog_map, dodecahedron,
                                   fullerene_h, g_series, gm_3n,
                                   goldberg_coxeter, prism)
from zigzag_lab.symmetry import (automorphisms, point_group, z_transitive,
                                 zigzag_orbits)
from zigzag_lab.zigzag import ZigzagStructure

GROUPS = {
    "Tetrahedron": ("Td", 24),
    "Cube": ("Oh", 48),
    "Octahedron": ("Oh", 48),
    "Dodecahedron": ("Ih", 120),
    "Icosahedron": ("Ih", 120),
    "Cuboctahedron": ("Oh", 48),
    "Icosidodecahedron": ("Ih", 120),
    "TruncatedOctahedron": ("Oh", 48),
    "TruncatedIcosahedron": ("Ih", 120),
    "SnubCube": ("O", 24),
    "SnubDodecahedron": ("I", 60),
}


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_catalog_point_groups(name):
    label, order = GROUPS[name]
    m = catalog_map(name)
    assert point_group(m) == label
    assert len(automorphisms(m)) == order


def test_group_structure_sanity():
    auts = automorphisms(catalog_map("Tetrahedron"))
    assert sum(1 for g in auts if g.is_identity()) == 1
    assert all(24 % g.order == 0 for g in auts)
    # chiral solids carry no orientation-reversing element
    assert not any(g.reflect for g in automorphisms(catalog_map("SnubCube")))
    assert any(g.reflect for g in automorphisms(prism(5)))


@pytest.mark.parametrize("m, label", [
    (prism(5), "D5h"),
    (prism(6), "D6h"),
    (antiprism(4), "D4d"),
    (antiprism(5), "D5d"),
    (gm_3n(3, 1), "Td"),
    (gm_3n(5, 1), "D2d"),
    (gm_3n(3, 2), "D2"),
    (gm_3n(2, 2, twist=1), "D2h"),
])
def test_family_point_groups(m, label):
    assert point_group(m) == label


def test_chain_family_group_alternates():
    assert point_group(g_series(1)) == "D2h"
    assert point_group(g_series(2)) == "D2d"
    assert point_group(g_series(3)) == "D2h"
    assert point_group(g_series(4)) == "D2d"


def test_zigzag_orbits_dodecahedron():
    d = dodecahedron()
    st = ZigzagStructure(d)
    orbits = zigzag_orbits(d, st)
    assert [len(o) for o in orbits] == [6]
    assert z_transitive(d, st)


def test_zigzag_orbits_fullerene():
    f = fullerene_h(2)
    st = ZigzagStructure(f)
    assert sorted(len(o) for o in zigzag_orbits(f, st)) == [3, 4]
    assert not z_transitive(f, st)


def test_zigzag_orbits_goldberg():
    g = goldberg_coxeter(dodecahedron(), 2, 1)
    st = ZigzagStructure(g)
    assert point_group(g) == "I"
    assert sorted(len(o) for o in zigzag_orbits(g, st)) == [15]


def test_orbit_members_share_length():
    m = g_series(2)          # lengths 4,4,4,12,12
    st = ZigzagStructure(m)
    for orbit in zigzag_orbits(m, st):
        lengths = {st.zigzags[i].length for i in orbit}
        assert len(lengths) == 1
