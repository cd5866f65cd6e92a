"""Map automorphisms, point-group names, and circuit orbits.

Automorphisms are found by comparing breadth-first label streams: the walk
rooted at dart 0 is the reference, and every (dart, reflect) pair whose walk
reproduces it yields one automorphism, recovered as a dart bijection.  The
point-group name is then read off the group order, the maximal rotation
order, and the number of genuine reflections.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .planar_map import MapError, PlanarMap
from .zigzag import ZigzagStructure


@dataclass(frozen=True)
class Automorphism:
    darts: tuple[int, ...]
    reflect: bool

    @property
    def order(self) -> int:
        seen = bytearray(len(self.darts))
        out = 1
        for d0 in range(len(self.darts)):
            if seen[d0]:
                continue
            d, n = d0, 0
            while not seen[d]:
                seen[d] = 1
                d = self.darts[d]
                n += 1
            out = lcm(out, n)
        return out

    def is_identity(self) -> bool:
        return not self.reflect and all(g == d for d, g in enumerate(self.darts))


def automorphisms(m: PlanarMap) -> list[Automorphism]:
    """All map automorphisms, including orientation-reversing ones."""
    cached = m.__dict__.get("_automorphisms")
    if cached is not None:
        return cached
    ref = list(m._stream(0, False))
    out = []
    for reflect in (False, True):
        for d0 in range(m.n_darts):
            if all(x == r for x, r in zip(m._stream(d0, reflect), ref)):
                out.append(Automorphism(tuple(m._dart_map(d0, reflect)), reflect))
    m.__dict__["_automorphisms"] = out
    return out


def _fixed_cells(m: PlanarMap, g: Automorphism) -> tuple[int, int, int]:
    gd = g.darts
    fv = sum(1 for v, cyc in enumerate(m.vertices) if m.vertex_of[gd[cyc[0]]] == v)
    fe = sum(1 for k in range(m.n_edges) if gd[2 * k] >> 1 == k)
    ff = sum(1 for f, cyc in enumerate(m.faces) if m.face_of[gd[cyc[0]]] == f)
    return fv, fe, ff


def _is_reflection(m: PlanarMap, g: Automorphism) -> bool:
    """Orientation-reversing involution whose mirror passes through the map.

    A mirror circle must touch the skeleton somewhere: run along an edge
    (a fixed dart), cross an edge at its midpoint (a dart sent to its
    reverse), or pass through a vertex.  An involution with none of these
    anchors acts antipodally and counts as an inversion, not a reflection.
    (Merely stabilizing a face setwise is not enough: the inversion can
    rotate an equatorial 2k-gon onto itself in maps that are not
    3-connected.)
    """
    if not g.reflect or g.order != 2:
        return False
    gd = g.darts
    if any(gd[d] == d or gd[d] == d ^ 1 for d in range(m.n_darts)):
        return True
    return any(m.vertex_of[gd[cyc[0]]] == v for v, cyc in enumerate(m.vertices))


def point_group(m: PlanarMap) -> str:
    """Schoenflies name of the automorphism group acting on the sphere."""
    autos = automorphisms(m)
    rot = [g for g in autos if not g.reflect]
    r = len(rot)
    full = len(autos)
    m_max = max(g.order for g in rot)
    n_refl = sum(1 for g in autos if _is_reflection(m, g))
    doubled = full == 2 * r
    if not doubled and full != r:
        raise MapError("automorphism bookkeeping corrupt")

    if m_max == r:  # cyclic rotation group (including trivial)
        if not doubled:
            return f"C{r}"
        if r == 1:
            return "Cs" if n_refl == 1 else "Ci"
        if n_refl == r:
            return f"C{r}v"
        if n_refl == 1:
            return f"C{r}h"
        if n_refl == 0:
            return f"S{2 * r}"
        raise MapError(f"unrecognized extension of C{r} with {n_refl} reflections")
    if r == 12 and m_max == 3:
        if not doubled:
            return "T"
        return {6: "Td", 3: "Th"}[n_refl]
    if r == 24 and m_max == 4:
        return "Oh" if doubled else "O"
    if r == 60 and m_max == 5:
        return "Ih" if doubled else "I"
    if r % 2 == 0 and m_max == r // 2:
        k = r // 2
        if not doubled:
            return f"D{k}"
        if n_refl == k + 1:
            return f"D{k}h"
        if n_refl == k:
            return f"D{k}d"
        raise MapError(f"unrecognized extension of D{k} with {n_refl} reflections")
    raise MapError(f"unrecognized rotation group of order {r} with max order {m_max}")


def zigzag_orbits(m: PlanarMap, st: ZigzagStructure) -> list[list[int]]:
    """Orbits of the circuits under the full automorphism group."""
    k = len(st.zigzags)
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in automorphisms(m):
        for z in st.zigzags:
            d, t = z.darts[0], z.turns[0]
            img = st.zigzag_of_state(g.darts[d], 1 - t if g.reflect else t)
            a, b = find(z.index), find(img)
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda o: (len(o), o))


def z_transitive(m: PlanarMap, st: ZigzagStructure) -> bool:
    return len(zigzag_orbits(m, st)) == 1
