from __future__ import annotations

import pytest

from zigzag_lab.generators import (antiprism, catalog_map, fullerene_h,
                                   g_series, gm_3n, goldberg_coxeter, prism)


@pytest.fixture(scope="session")
def corpus():
    """Name -> map over a spread of families, shared by the property tests."""
    maps = {name: catalog_map(name) for name in
            ("Tetrahedron", "Cube", "Dodecahedron", "TruncatedOctahedron",
             "TruncatedIcosahedron", "SnubCube")}
    maps["prism6"] = prism(6)
    maps["antiprism4"] = antiprism(4)
    maps["g2"] = g_series(2)
    maps["gm-2-2"] = gm_3n(2, 2)
    maps["gm-3-1"] = gm_3n(3, 1)
    maps["fullerene-h2"] = fullerene_h(2)
    maps["gc-2-1-tet"] = goldberg_coxeter(catalog_map("Tetrahedron"), 2, 1)
    return maps
