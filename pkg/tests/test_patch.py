from __future__ import annotations

from collections import Counter

import pytest

from zigzag_lab.generators import (catalog_map, cube, dodecahedron,
                                   fullerene_h, gm_3n)
from zigzag_lab.patch import (arrangement_face_report, region_patch_report,
                              zigzag_interior)
from zigzag_lab.planar_map import MapError
from zigzag_lab.railroad import curve_arrangement
from zigzag_lab.zigzag import ZigzagStructure


def test_dodecahedron_zigzag_halves():
    # each simple circuit of length 10 encloses six of the twelve pentagons
    d = dodecahedron()
    st = ZigzagStructure(d)
    for i in range(len(st)):
        for side in ("left", "right"):
            rep = zigzag_interior(d, st, i, side)
            assert rep.p_prime == Counter({5: 6})
            assert (rep.obtuse, rep.acute) == (0, 0)
            assert rep.regular
            assert rep.lhs == rep.rhs == 6
            assert rep.identity_holds()


def test_fullerene_zigzag_side():
    f = fullerene_h(2)
    st = ZigzagStructure(f)
    rep = zigzag_interior(f, st, 0, "left")
    assert rep.p_prime == Counter({5: 6, 6: 2})
    assert rep.identity_holds()
    # and the two sides together cover the whole face set
    other = zigzag_interior(f, st, 0, "right")
    assert sum(rep.p_prime.values()) + sum(other.p_prime.values()) == f.n_faces


def test_interior_rejects_self_intersecting_circuits():
    st = ZigzagStructure(catalog_map("SnubCube"))
    assert not st.zigzags[0].is_simple
    with pytest.raises(MapError):
        zigzag_interior(catalog_map("SnubCube"), st, 0)


def test_single_face_region():
    rep = region_patch_report(dodecahedron(), [0])
    assert rep.arcs == 5
    assert (rep.obtuse, rep.acute) == (5, 0)
    assert rep.p_prime == Counter({5: 1})
    assert rep.regular
    assert rep.lhs == rep.rhs == 1


def test_region_identity_across_sizes():
    # growing regions of the truncated octahedron: face, face + neighbor
    m = catalog_map("TruncatedOctahedron")
    hexagon = next(f for f, c in enumerate(m.faces) if len(c) == 6)
    square = next(f for f, c in enumerate(m.faces) if len(c) == 4)
    for region in ([hexagon], [square]):
        rep = region_patch_report(m, region)
        if rep.regular:
            assert rep.identity_holds()


def test_arrangement_face_reports():
    m = gm_3n(2, 4)
    arr = curve_arrangement(m)
    for i, face in enumerate(arr.faces):
        if face.chi != 1:
            with pytest.raises(MapError):
                arrangement_face_report(arr, i)
        else:
            rep = arrangement_face_report(arr, i)
            assert rep.identity_holds()
            assert (rep.obtuse, rep.acute) == (face.t_obtuse, face.t_acute)


def test_whole_map_region_is_rejected():
    m = cube()
    with pytest.raises(MapError):
        region_patch_report(m, list(range(m.n_faces)))
