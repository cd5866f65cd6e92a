"""Constructors for the standard solids and the parametric families.

The five seed solids are built from coordinates (edges = minimal distance,
rotations = angular order in the tangent plane); everything else is derived
combinatorially: medials, truncations, snubs, prisms/antiprisms, and the
lattice/ring constructions that produce the two-faced families.
"""

from __future__ import annotations

from functools import lru_cache
from math import sqrt

from .planar_map import (
    EulerError,
    MapError,
    PlanarMap,
    build_map,
    build_map_from_faces,
    from_dart_system,
)

_PHI = (1 + sqrt(5)) / 2


# -- seed solids from coordinates ---------------------------------------------


def _map_from_points(points) -> PlanarMap:
    """Convex solid with all edges of equal (minimal) length.

    Rotations are read off geometrically: at each vertex the neighbors are
    sorted by angle in the tangent plane of the circumscribed sphere,
    counterclockwise as seen from outside.
    """
    import numpy as np

    pts = np.asarray(points, dtype=float)
    nv = len(pts)
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff**2).sum(axis=2))
    dmin = dist[dist > 1e-9].min()
    neighbor_lists = []
    for v in range(nv):
        nbrs = [w for w in range(nv) if w != v and dist[v, w] < dmin * (1 + 1e-6)]
        n = pts[v] / np.linalg.norm(pts[v])
        # tangent-plane basis (u, w, n) right-handed
        seed = np.array([1.0, 0.0, 0.0])
        if abs(n @ seed) > 0.9:
            seed = np.array([0.0, 1.0, 0.0])
        u = seed - (seed @ n) * n
        u /= np.linalg.norm(u)
        w = np.cross(n, u)
        def angle(q):
            t = pts[q] - pts[v]
            return float(np.arctan2(t @ w, t @ u))
        nbrs.sort(key=angle)
        neighbor_lists.append(nbrs)
    return build_map(neighbor_lists)


def tetrahedron() -> PlanarMap:
    return _map_from_points([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


def cube() -> PlanarMap:
    return _map_from_points(
        [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    )


def octahedron() -> PlanarMap:
    pts = []
    for i in range(3):
        for s in (-1, 1):
            p = [0, 0, 0]
            p[i] = s
            pts.append(tuple(p))
    return _map_from_points(pts)


def icosahedron() -> PlanarMap:
    pts = []
    for a in (-1, 1):
        for b in (-_PHI, _PHI):
            pts += [(0, a, b), (a, b, 0), (b, 0, a)]
    return _map_from_points(pts)


def dodecahedron() -> PlanarMap:
    pts = [(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    for a in (-1 / _PHI, 1 / _PHI):
        for b in (-_PHI, _PHI):
            pts += [(0, a, b), (a, b, 0), (b, 0, a)]
    return _map_from_points(pts)


# -- prisms and antiprisms ----------------------------------------------------


def prism(m: int) -> PlanarMap:
    """m-gonal prism: two m-rings joined by squares."""
    if m < 3:
        raise MapError(f"prism needs m >= 3, got {m}")
    faces = [list(range(m - 1, -1, -1)), list(range(m, 2 * m))]
    for i in range(m):
        j = (i + 1) % m
        faces.append([i, j, m + j, m + i])
    return build_map_from_faces(faces)


def antiprism(m: int) -> PlanarMap:
    """m-gonal antiprism: two m-rings joined by a band of 2m triangles."""
    if m < 3:
        raise MapError(f"antiprism needs m >= 3, got {m}")
    faces = [list(range(m - 1, -1, -1)), list(range(m, 2 * m))]
    for i in range(m):
        j = (i + 1) % m
        faces.append([i, j, m + i])
        faces.append([j, m + j, m + i])
    return build_map_from_faces(faces)


# -- snub ----------------------------------------------------------------------


def snub(m: PlanarMap) -> PlanarMap:
    """Snub of a map: one vertex per dart, old faces twisted apart by triangles.

    Each dart d of the host becomes a 5-valent vertex joined to the darts
    sigma(d), sigma^-1(d), phi^-1(d), phi(d) and alpha(d); the host's faces
    and vertices survive as faces, and every host edge is replaced by a pair
    of triangles.
    """
    sigma, sigma_inv = m.sigma, m.sigma_inv
    phi, phi_inv = m.phi, m.phi_inv
    sig: dict[tuple[int, int], tuple[int, int]] = {}
    alf: dict[tuple[int, int], tuple[int, int]] = {}
    for d in range(m.n_darts):
        for j in range(5):
            sig[(d, j)] = (d, (j + 1) % 5)
        alf[(d, 0)] = (sigma[d], 1)
        alf[(d, 1)] = (sigma_inv[d], 0)
        alf[(d, 2)] = (phi_inv[d], 3)
        alf[(d, 3)] = (phi[d], 2)
        alf[(d, 4)] = (d ^ 1, 4)
    return from_dart_system(sig, alf)


# -- named catalog --------------------------------------------------------------


_NON_SPHERE = ("Klein", "Dyck")

_CATALOG: dict[str, object] = {
    "Tetrahedron": tetrahedron,
    "Cube": cube,
    "Octahedron": octahedron,
    "Dodecahedron": dodecahedron,
    "Icosahedron": icosahedron,
    "Cuboctahedron": lambda: cube().medial(),
    "Icosidodecahedron": lambda: dodecahedron().medial(),
    "Rhombicuboctahedron": lambda: cube().medial().medial(),
    "Rhombicosidodecahedron": lambda: dodecahedron().medial().medial(),
    "TruncatedTetrahedron": lambda: tetrahedron().truncate(),
    "TruncatedCube": lambda: cube().truncate(),
    "TruncatedOctahedron": lambda: octahedron().truncate(),
    "TruncatedDodecahedron": lambda: dodecahedron().truncate(),
    "TruncatedIcosahedron": lambda: icosahedron().truncate(),
    "TruncatedCuboctahedron": lambda: cube().medial().truncate(),
    "TruncatedIcosidodecahedron": lambda: dodecahedron().medial().truncate(),
    "SnubCube": lambda: snub(cube()),
    "SnubDodecahedron": lambda: snub(dodecahedron()),
}


def catalog_names() -> list[str]:
    return list(_CATALOG)


@lru_cache(maxsize=None)
def catalog_map(name: str) -> PlanarMap:
    """Look one of the named solids up by its catalog name."""
    if name in _NON_SPHERE:
        raise MapError(f"{name!r} is not a sphere map; higher-genus maps are unsupported")
    try:
        make = _CATALOG[name]
    except KeyError:
        raise MapError(f"unknown catalog solid {name!r}") from None
    return make()


# -- ring construction for the triangles+hexagons family ------------------------


def _gm_ring_map(s: int, m: int, delta: int, mirror: int) -> PlanarMap:
    """m stacked rings of 4s vertices capped with nested-chord patches.

    Odd positions of ring i hook up to even positions of ring i+1.  The
    innermost ring closes with nested chords on its even positions (two
    triangles and a chain of s-1 hexagons); the outermost gets the same
    pattern on its odd positions, optionally reflected, rotated by delta.
    """
    w = 4 * s

    def vid(i: int, j: int) -> int:
        return (i - 1) * w + (j % w)

    inner: dict[int, int] = {0: 2, 2: 0}
    for i in range(1, s):
        a, b = 2 * i + 2, w - 2 * i
        inner[a], inner[b] = b, a
    outer: dict[int, int] = {}
    pairs = [(1, 3)] + [(2 * i + 3, w - 2 * i + 1) for i in range(1, s)]
    for a, b in pairs:
        if mirror:
            a, b = -a, -b
        a, b = (a + delta) % w, (b + delta) % w
        outer[a], outer[b] = b, a

    rot: list[list[int]] = []
    for i in range(1, m + 1):
        for j in range(w):
            nxt, prv = vid(i, j + 1), vid(i, j - 1)
            if j % 2:
                third = vid(i + 1, j + 1) if i < m else vid(m, outer[j])
                rot.append([third, nxt, prv])
            else:
                if i == 1:
                    rot.append([nxt, vid(1, inner[j]), prv])
                else:
                    rot.append([nxt, vid(i - 1, j - 1), prv])
    return build_map(rot)


def gm_3n(s: int, m: int, twist: int = 0) -> PlanarMap:
    """3-valent map with four triangles on 4*s*m vertices, built from m rings.

    The two caps are pseudo-roads of s-1 hexagons between two triangles; the
    m rings in between carry the hexagon railroads.  twist picks between the
    two standard attachments of the outer cap.
    """
    if s < 1 or m < 1 or s * m < 2:
        raise MapError(f"ring construction needs s, m >= 1 and s*m >= 2, got ({s}, {m})")
    return _gm_ring_map(s, m, 2 * (twist + 1), 0)


def g_series(n: int) -> PlanarMap:
    """The n-th member of the chain of 2- but not 3-connected maps with four
    triangles: n+1 rings, one hexagon band between consecutive rings."""
    if n < 1:
        raise MapError(f"series index must be >= 1, got {n}")
    return gm_3n(1, n + 1, 0)


# -- hexagon inflation on the triangular lattice ---------------------------------
#
# Eisenstein integers a + b*w with w = exp(i*pi/3), so w^2 = w - 1.  Stored as
# plain (a, b) tuples; all arithmetic below is exact.

_W = (0, 1)


def _eadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _esub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _eneg(x):
    return (-x[0], -x[1])


def _emul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c + b * d)


def _enorm(x):
    a, b = x
    return a * a + a * b + b * b


def _ediv(x, y):
    """Exact quotient x / y; raises if y does not divide x."""
    n = _enorm(y)
    if n == 0:
        raise ZeroDivisionError("division by zero Eisenstein integer")
    a, b = _emul(x, (y[0] + y[1], -y[1]))  # x * conj(y)
    if a % n or b % n:
        raise MapError(f"{x} not divisible by {y} in the triangle lattice")
    return (a // n, b // n)


def _ecross(x, y):
    """Orientation form: positive when y lies counterclockwise of x."""
    return x[0] * y[1] - x[1] * y[0]


def goldberg_coxeter(g0: PlanarMap, k: int, l: int = 0) -> PlanarMap:
    """Inflate a 3-valent sphere map, scaling each face of the dual
    triangulation by the Eisenstein integer k + l*w.

    Every triangle of the dual becomes a chart carrying a copy of the master
    triangle with corners 0, z, w*z (z = k + l*w); charts are glued along
    their sides by exact unit rotations.  The vertices of the refined
    triangulation are the lattice points of the glued surface; walking the
    six (or deg-many, at chart corners) unit directions around each point
    rebuilds the refined map, whose dual is the result.

    The vertex count multiplies by k^2 + k*l + l^2.
    """
    if any(len(c) != 3 for c in g0.vertices):
        raise MapError("hexagon inflation requires a 3-valent map")
    if not (isinstance(k, int) and isinstance(l, int) and k >= 1 and 0 <= l <= k):
        raise MapError(f"inflation parameters need k >= 1 and 0 <= l <= k, got ({k}, {l})")
    if (k, l) == (1, 0):
        return PlanarMap(list(g0.sigma))

    tri = g0.dual()
    charts = tri.faces
    if any(len(f) != 3 for f in charts):
        raise MapError("dual of a 3-valent map must be a triangulation")

    z = (k, l)
    corners = [(0, 0), z, _emul(z, _W)]

    def side(j):
        return corners[j], corners[(j + 1) % 3]

    # gluing data per (chart, side): neighbour chart, its side, rotation unit
    glue = {}
    for f, darts in enumerate(charts):
        for j, d in enumerate(darts):
            f2 = tri.face_of[d ^ 1]
            j2 = charts[f2].index(d ^ 1)
            s, e = side(j)
            s2, e2 = side(j2)
            r = _ediv(_esub(s2, e2), _esub(e, s))
            assert _enorm(r) == 1
            glue[f, j] = (f2, j2, r, s, e2)

    def transport(f, p, u, j):
        f2, _, r, s, e2 = glue[f, j]
        return f2, _eadd(e2, _emul(_esub(p, s), r)), _emul(u, r)

    def side_values(p):
        out = []
        for j in range(3):
            s, e = side(j)
            out.append(_ecross(_esub(e, s), _esub(p, s)))
        return out

    # lattice points of the closed master triangle
    amin = min(c[0] for c in corners)
    amax = max(c[0] for c in corners)
    bmin = min(c[1] for c in corners)
    bmax = max(c[1] for c in corners)
    points = []
    for a in range(amin, amax + 1):
        for b in range(bmin, bmax + 1):
            if min(side_values((a, b))) >= 0:
                points.append((a, b))

    def on_sides(p):
        return [j for j, val in enumerate(side_values(p)) if val == 0]

    # glue lattice points into surface vertices (union-find)
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for f in range(len(charts)):
        for p in points:
            parent[f, p] = (f, p)
    for f in range(len(charts)):
        for p in points:
            for j in on_sides(p):
                f2, p2, _ = transport(f, p, (1, 0), j)
                ra, rb = find((f, p)), find((f2, p2))
                if ra != rb:
                    parent[ra] = rb

    classes = {}
    for f in range(len(charts)):
        for p in points:
            classes.setdefault(find((f, p)), []).append((f, p))

    corner_point = {c: j for j, c in enumerate(corners)}
    w_cw = {0: z, 1: _esub(corners[2], z), 2: _eneg(corners[2])}
    w_ccw = {0: corners[2], 1: _eneg(z), 2: _esub(z, corners[2])}
    ccw_side = {0: 2, 1: 0, 2: 1}

    def wedge_normalize(f, p, u):
        """Transport a corner-anchored frame until u lies in the chart's wedge."""
        for _ in range(12 * len(charts) + 12):
            c = corner_point.get(p)
            if c is None:
                return f, p, u
            if _ecross(w_cw[c], u) >= 0 and _ecross(w_ccw[c], u) <= 0:
                return f, p, u
            f, p, u = transport(f, p, u, ccw_side[c])
        raise MapError("corner wedge normalization failed to settle")

    def canonical(f, p, u):
        """Lex-least valid representation of the dart leaving point p along u.

        A representation is valid when u points into the anchor chart: inside
        the corner wedge for corner anchors, into the bounded half-plane for
        side anchors.  Boundary directions are valid in both adjacent charts;
        taking the minimum over that pair makes the name unambiguous.  (Names
        must not be chased all the way around a chart corner: the cone there
        is flat only piecewise, and holonomy would conflate distinct darts.)
        """
        c = corner_point.get(p)
        if c is not None:
            f, p, u = wedge_normalize(f, p, u)
            c = corner_point[p]
            reps = [(f, p, u)]
            if _ecross(w_cw[c], u) == 0:
                reps.append(transport(f, p, u, c))
            if _ecross(w_ccw[c], u) == 0:
                reps.append(transport(f, p, u, ccw_side[c]))
            return min(reps)
        sides_here = on_sides(p)
        if not sides_here:
            return (f, p, u)
        j = sides_here[0]
        s, e = side(j)
        c_val = _ecross(_esub(e, s), u)
        if c_val < 0:
            f, p, u = transport(f, p, u, j)
            return (f, p, u)
        if c_val == 0:
            return min((f, p, u), transport(f, p, u, j))
        return (f, p, u)

    def locate(f, p, u):
        """Re-anchor until the segment p -> p+u lies inside one chart."""
        while True:
            q = _eadd(p, u)
            vals = side_values(q)
            if min(vals) >= 0:
                return f, p, u, q
            # exit through the side crossed first along the segment; the
            # crossing parameter is pv / (pv - qv), compared as fractions
            best_j = bp = bq = None
            for j, qv in enumerate(vals):
                if qv >= 0:
                    continue
                s, e = side(j)
                pv = _ecross(_esub(e, s), _esub(p, s))
                if best_j is None:
                    best_j, bp, bq = j, pv, qv
                    continue
                lhs, rhs = pv * (bp - bq), bp * (pv - qv)
                if lhs == rhs:
                    raise MapError("segment exits a chart through a corner")
                if lhs < rhs:
                    best_j, bp, bq = j, pv, qv
            f, p, u = transport(f, p, u, best_j)

    sigma_map = {}
    alpha_map = {}
    for members in classes.values():
        f, p = min(members)
        u = (1, 0)
        ci = corner_point.get(p)
        if ci is not None:
            f, p, u = wedge_normalize(f, p, u)
        first = canonical(f, p, u)
        seq = []
        while True:
            name = canonical(f, p, u)
            if seq and name == first:
                break
            seq.append(name)
            f2, p2, u2, q = locate(f, p, u)
            rev = canonical(f2, q, _eneg(u2))
            prev = alpha_map.get(name)
            assert prev is None or prev == rev
            alpha_map[name] = rev
            alpha_map[rev] = name
            u = _emul(u, _W)
            if corner_point.get(p) is not None:
                f, p, u = wedge_normalize(f, p, u)
            if len(seq) > 6 + 2 * g0.n_darts:
                raise MapError("rotation walk failed to close")
        expected = 6
        c = corner_point.get(p)
        if c is not None:
            v = tri.vertex_of[charts[f][c]]
            expected = len(tri.vertices[v])
        if len(seq) != expected:
            raise MapError(f"vertex walk closed after {len(seq)} darts, expected {expected}")
        for i, name in enumerate(seq):
            assert name not in sigma_map
            sigma_map[name] = seq[(i + 1) % len(seq)]

    refined = from_dart_system(sigma_map, alpha_map)
    nval = _enorm(z)
    if any(len(fc) != 3 for fc in refined.faces):
        raise MapError("refined surface is not a triangulation")
    if refined.n_vertices != g0.n_vertices * nval // 2 + 2:
        raise MapError("refined triangulation has the wrong vertex count")
    return refined.dual()


def chamfer(m: PlanarMap) -> PlanarMap:
    """Shrink every face and replace every edge by a hexagon.

    Agrees with goldberg_coxeter(m, 2, 0) on 3-valent maps but is defined for
    any valence: original vertices keep their degree, and one new 3-valent
    vertex appears per corner (vertex-face incidence).
    """
    nv = m.n_vertices
    corner_id = {}
    for f, cyc in enumerate(m.faces):
        for d in cyc:
            corner_id[m.vertex_of[d], f] = nv + len(corner_id)

    faces = []
    for f, cyc in enumerate(m.faces):
        faces.append([corner_id[m.vertex_of[d], f] for d in cyc])
    for e in range(m.n_edges):
        d = 2 * e
        u, v = m.vertex_of[d], m.vertex_of[d ^ 1]
        g, h = m.face_of[d], m.face_of[d ^ 1]
        faces.append([u, corner_id[u, h], corner_id[v, h],
                      v, corner_id[v, g], corner_id[u, g]])
    return build_map_from_faces(faces)


# -- fullerenes with two crossing simple circuits ---------------------------------


def _noncrossing_matchings(points: list) -> list[list[tuple]]:
    """All non-crossing perfect matchings of points on the boundary of a disk."""
    if not points:
        return [[]]
    out = []
    for j in range(1, len(points), 2):
        for inner in _noncrossing_matchings(points[1:j]):
            for outer in _noncrossing_matchings(points[j + 1:]):
                out.append([(points[0], points[j])] + inner + outer)
    return out


def _two_curve_blueprints(h: int) -> list[PlanarMap]:
    """4-valent sphere maps cut out by two simple closed curves crossing at
    every one of their h common points: four 2-gons and h-2 squares.

    Take one curve as an equatorial h-cycle; the other pierces it at every
    vertex, so each of its halves is a non-crossing matching of the crossing
    points inside a hemisphere.  Sweeping all matching pairs and keeping the
    configurations whose second curve closes into a single circuit through
    all h points gives every blueprint; the list is deduplicated up to
    isomorphism.
    """
    from .zigzag import central_circuits

    if h == 2:
        # two curves crossing twice: a pair of doubled edges, four 2-gons
        sigma = {0: 2, 2: 4, 4: 6, 6: 0, 7: 5, 5: 3, 3: 1, 1: 7}
        return [from_dart_system(sigma, {d: d ^ 1 for d in range(8)})]

    sizes = [2] * 4 + [4] * (h - 2)
    classes: dict[bytes, PlanarMap] = {}
    for north in _noncrossing_matchings(list(range(h))):
        for south in _noncrossing_matchings(list(range(h))):
            hook: dict[tuple[int, int], int] = {}
            for j, (a, b) in enumerate(north):
                hook[a, 0] = 2 * h + 2 * j
                hook[b, 0] = 2 * h + 2 * j + 1
            for j, (a, b) in enumerate(south):
                hook[a, 1] = 3 * h + 2 * j
                hook[b, 1] = 3 * h + 2 * j + 1
            sigma: dict[int, int] = {}
            for v in range(h):
                east, west = 2 * v, 2 * ((v - 1) % h) + 1
                rot = (east, hook[v, 0], west, hook[v, 1])
                for i, d in enumerate(rot):
                    sigma[d] = rot[(i + 1) % 4]
            m = from_dart_system(sigma, {d: d ^ 1 for d in range(4 * h)})
            if sorted(len(f) for f in m.faces) != sizes:
                continue
            circs = central_circuits(m)
            if len(circs) != 2:
                continue
            if any(len(c) != h or {m.vertex_of[d] for d in c} != set(range(h))
                   for c in circs):
                continue
            # the four 2-gons must fall into two pairs meeting at a vertex
            dig = [f for f, fc in enumerate(m.faces) if len(fc) == 2]
            dv = [{m.vertex_of[d] for d in m.faces[f]} for f in dig]
            if not any(dv[0] & dv[i] and dv[j] & dv[k]
                       for i, j, k in ((1, 2, 3), (2, 1, 3), (3, 1, 2))):
                continue
            classes.setdefault(m.canonical_code, m)
    if len(classes) != 1:
        raise MapError(f"expected one blueprint for h={h}, found {len(classes)}")
    return list(classes.values())


def _open_crossings(master: PlanarMap, bits: int) -> PlanarMap | None:
    """Blow every crossing of a two-curve blueprint up into an edge and tile
    the faces with pentagons and hexagons.

    Bit v of ``bits`` picks which diagonal pair of corners at crossing v runs
    alongside the whole opened edge (the other pair touches one endpoint
    only).  The choice must give every 2-gon exactly one long corner and must
    alternate around every square; otherwise, or if the tiles fail to close
    up into a sphere, the candidate is discarded and None returned.  Each
    curve segment between crossings is subdivided by four new vertices, each
    2-gon becomes three pentagons and a hexagon, and each square nine
    hexagons.
    """
    pos = {}
    for cyc in master.vertices:
        for i, d in enumerate(cyc):
            pos[d] = i

    def corner(din: int) -> list[tuple]:
        # face corner following the incoming dart, as opened-edge endpoints
        x = din ^ 1
        v = master.vertex_of[x]
        r = (pos[x] - ((bits >> v) & 1)) % 4
        if r == 0:
            return [("c", v, 1), ("c", v, 0)]
        if r == 2:
            return [("c", v, 0), ("c", v, 1)]
        return [("c", v, 0)] if r == 1 else [("c", v, 1)]

    def arc(d: int) -> list[tuple]:
        js = (0, 1, 2, 3) if d % 2 == 0 else (3, 2, 1, 0)
        return [("a", d >> 1, j) for j in js]

    small: list[tuple] = []
    for fidx, cyc in enumerate(master.faces):
        k = len(cyc)
        corns = [corner(cyc[j - 1]) for j in range(k)]
        long = [len(c) == 2 for c in corns]
        if k == 2:
            if long[0] == long[1]:
                return None
        elif k == 4:
            if long[0] == long[1] or long[0] != long[2] or long[1] != long[3]:
                return None
        else:
            raise MapError("blueprint face is neither a 2-gon nor a square")
        j0 = long.index(True)
        walk: list[tuple] = []
        for t in range(k):
            j = (j0 + t) % k
            walk += corns[j] + arc(cyc[j])
        inner = [("i", fidx, t) for t in range(8)]
        if k == 2:
            p, q, a0, a1, a2, a3, r, b0, b1, b2, b3 = walk
            x, y = inner[0], inner[1]
            small += [
                (p, q, a0, x, b3),
                (a0, a1, a2, y, x),
                (b3, x, y, b1, b2),
                (a2, a3, r, b0, b1, y),
            ]
        else:
            (p, q, a0, a1, a2, a3, r, b0, b1, b2, b3,
             p2, q2, c0, c1, c2, c3, r2, d0, d1, d2, d3) = walk
            u1, u2, z, z2, v1, v2, w1, w2 = inner
            small += [
                (u1, z, v2, v1, z2, u2),
                (p, q, a0, u1, u2, d3),
                (a0, a1, a2, w1, z, u1),
                (a2, a3, r, b0, b1, w1),
                (w1, b1, b2, b3, v2, z),
                (p2, q2, c0, v1, v2, b3),
                (c0, c1, c2, w2, z2, v1),
                (c2, c3, r2, d0, d1, w2),
                (w2, d1, d2, d3, u2, z2),
            ]

    ids: dict[tuple, int] = {}
    faces = [[ids.setdefault(nm, len(ids)) for nm in f] for f in small]
    try:
        return build_map_from_faces(faces)
    except MapError:
        return None


def fullerene_h(h: int) -> PlanarMap:
    """Fullerene with 18h-8 vertices carrying two simple zigzags that share
    exactly h edges, for even h >= 2.

    Built by opening the h crossings of the (unique) two-curve blueprint into
    edges and filling its faces with pentagon/hexagon tiles; the two curves
    survive as the designated pair of simple zigzags, of length 6h each,
    meeting exactly in the h opened edges.  All opening choices are swept and
    screened: face vector, the designated pair, and purely type-1
    self-intersections (a few openings produce different fullerenes that also
    carry an h-sharing pair but fail the last screen).  The survivors must
    form a single isomorphism class.
    """
    from .zigzag import ZigzagStructure

    if h < 2 or h % 2:
        raise MapError("defined for even h >= 2 only")
    want_p = {5: 12, 6: 9 * (h - 2) + 4}
    found: dict[bytes, PlanarMap] = {}
    for master in _two_curve_blueprints(h):
        for bits in range(1 << h):
            cand = _open_crossings(master, bits)
            if cand is None or cand.n_vertices != 18 * h - 8:
                continue
            if cand.p_vector != want_p:
                continue
            st = ZigzagStructure(cand)
            if any(z.a2 for z in st.zigzags):
                continue
            simple = [i for i, z in enumerate(st.zigzags)
                      if z.is_simple and z.length == 6 * h]
            if not any(st.int_matrix[i][j] == h
                       for n_, i in enumerate(simple) for j in simple[n_ + 1:]):
                continue
            found.setdefault(cand.canonical_code, cand)
    if not found:
        raise MapError(f"no admissible fullerene for h={h}")
    if len(found) > 1:
        raise MapError(f"construction for h={h} is ambiguous: "
                       f"{len(found)} isomorphism classes")
    return next(iter(found.values()))


# -- trading triangles for pentagon triples ---------------------------------------


def triangles_to_pentagon_triples(m: PlanarMap) -> PlanarMap:
    """Contract every triangle together with its three surrounding hexagons
    into a triple of pentagons around a new 3-valent vertex.

    Each triangle region (triangle + 3 hexagons, 12 vertices) collapses to 10
    vertices: the triangle disappears, its three vertices merge into one new
    centre, and the hexagons - which keep their outer boundary - close up as
    pentagons pairwise adjacent along the centre's edges.  Every triangle
    must be bordered by three hexagons and every hexagon may border at most
    one triangle, so the regions are disjoint.  Inverse of
    pentagon_triples_to_triangles.
    """
    if any(len(cyc) != 3 for cyc in m.vertices):
        raise MapError("host must be 3-valent")
    tris = [f for f, cyc in enumerate(m.faces) if len(cyc) == 3]
    if any(len(cyc) not in (3, 6) for cyc in m.faces):
        raise MapError("host must have triangle and hexagon faces only")
    owner: dict[int, int] = {}
    for j, t in enumerate(tris):
        for d in m.faces[t]:
            h = m.face_of[d ^ 1]
            if len(m.faces[h]) != 6:
                raise MapError(f"face {h} beside triangle {t} is not a hexagon")
            if h in owner:
                raise MapError(f"hexagon {h} borders two triangles")
            owner[h] = j
    tri_verts = {m.vertex_of[d] for t in tris for d in m.faces[t]}
    nv = m.n_vertices
    faces: list[list[int]] = []
    for f, cyc in enumerate(m.faces):
        verts = [m.vertex_of[d] for d in cyc]
        if f in owner:
            drop = [v in tri_verts for v in verts]
            if sum(drop) != 2:
                raise MapError(f"hexagon {f} meets its triangle oddly")
            i = next(i for i in range(6) if drop[i] and not drop[i - 1])
            if not drop[(i + 1) % 6]:
                raise MapError(f"hexagon {f} meets its triangle oddly")
            faces.append([verts[(i + 2 + t) % 6] for t in range(4)]
                         + [nv + owner[f]])
        elif len(verts) == 6:
            faces.append(verts)
    ids: dict[int, int] = {}
    relab = [[ids.setdefault(v, len(ids)) for v in fc] for fc in faces]
    return build_map_from_faces(relab)


def pentagon_triples_to_triangles(m: PlanarMap) -> PlanarMap:
    """Blow up each triple of pentagons around a common 3-valent vertex into
    a triangle surrounded by three hexagons (truncating that vertex).

    The fullerene's twelve pentagons must admit a partition into four such
    vertex triples; when several partitions exist they must all produce the
    same map.  Inverse of triangles_to_pentagon_triples, adds 8 vertices.
    """
    if any(len(cyc) != 3 for cyc in m.vertices):
        raise MapError("host must be 3-valent")
    pents = [f for f, cyc in enumerate(m.faces) if len(cyc) == 5]
    if len(pents) != 12 or any(len(cyc) not in (5, 6) for cyc in m.faces):
        raise MapError("host must be a fullerene")
    cands = []
    for v, rot in enumerate(m.vertices):
        fs = [m.face_of[d] for d in rot]
        if len(set(fs)) == 3 and all(len(m.faces[f]) == 5 for f in fs):
            cands.append(v)
    covering: dict[int, list[int]] = {p: [] for p in pents}
    for v in cands:
        for d in m.vertices[v]:
            covering[m.face_of[d]].append(v)

    covers: list[list[int]] = []

    def extend(chosen: list[int], done: set[int]) -> None:
        if len(done) == 12:
            covers.append(list(chosen))
            return
        p = min((q for q in pents if q not in done),
                key=lambda q: len(covering[q]))
        for v in covering[p]:
            fs = {m.face_of[d] for d in m.vertices[v]}
            if fs & done:
                continue
            chosen.append(v)
            extend(chosen, done | fs)
            chosen.pop()

    extend([], set())
    if not covers:
        raise MapError("pentagons do not fall into four triples around vertices")

    out: dict[bytes, PlanarMap] = {}
    nv = m.n_vertices
    for chosen in covers:
        spot = {}  # face -> (centre index, rotation position)
        for j, c in enumerate(chosen):
            for i, d in enumerate(m.vertices[c]):
                spot[m.face_of[d]] = (j, i)
        centres = set(chosen)
        faces = []
        for f, cyc in enumerate(m.faces):
            verts = [m.vertex_of[d] for d in cyc]
            if f in spot:
                j, i = spot[f]
                p = verts.index(chosen[j])
                # the corner at the centre opens into two triangle vertices
                faces.append(verts[:p]
                             + [nv + 3 * j + (i - 1) % 3, nv + 3 * j + i]
                             + verts[p + 1:])
            else:
                faces.append(verts)
        for j in range(len(chosen)):
            faces.append([nv + 3 * j, nv + 3 * j + 2, nv + 3 * j + 1])
        ids: dict[int, int] = {}
        relab = [[ids.setdefault(v, len(ids)) for v in fc] for fc in faces]
        cand = build_map_from_faces(relab)
        out.setdefault(cand.canonical_code, cand)
    if len(out) > 1:
        raise MapError("triple partitions give non-isomorphic expansions")
    return next(iter(out.values()))


def enumerate_3n(n: int) -> list[PlanarMap]:
    """Distinct 3-connected triangle/hexagon 3-valent maps with n vertices,
    one representative per isomorphism class.

    Sweeps every factorization n = 4*s*m of the ring construction together
    with every rotation and reflection of the outer cap, keeps the outcomes
    whose faces are triangles and hexagons only, and rejects isomorphic
    duplicates and the non-polyhedral (2-connected) chain members.  Whether
    this reaches every such map is checked against independent counts in the
    test suite, not assumed here.
    """
    if n % 4 or n < 8:
        raise MapError("vertex count must be a multiple of 4, at least 8")
    classes: dict[bytes, PlanarMap] = {}
    sm = n // 4
    for s in range(1, sm + 1):
        if sm % s:
            continue
        for mirror in (0, 1):
            for delta in range(0, 4 * s, 2):
                g = _gm_ring_map(s, sm // s, delta, mirror)
                if any(len(f) not in (3, 6) for f in g.faces):
                    continue
                if g.canonical_code not in classes and g.node_connectivity() >= 3:
                    classes[g.canonical_code] = g
    return [classes[c] for c in sorted(classes)]
