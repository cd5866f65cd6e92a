"""Hexagon-chain structures: railroads, pseudo-roads, curve arrangements.

A railroad is a closed chain of hexagons, each entered and left through
opposite edges; a pseudo-road is the same kind of chain running between two
non-hexagonal faces (possibly with no hexagons at all).  Every hexagon lies on
exactly three such chains — one per pair of opposite edges — which is asserted
here and used for the incidence counts.

Railroads double as closed curves on the sphere (through the midpoints of the
opposite edge pairs).  The arrangement of these curves is built as a cell
complex: hexagons carrying one passage split in half, hexagons carrying two or
three split into sectors around the crossing, and cells are merged across
every edge piece not cut by a curve.  Each arrangement face knows its corners
and its Euler characteristic, so the curvature identities can be checked on
spheres, disks and annuli alike.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .planar_map import MapError, PlanarMap, from_dart_system
from .zigzag import LEFT, ZigzagStructure, zigzag_structure


@dataclass(frozen=True)
class Railroad:
    index: int
    darts: tuple[int, ...]      # entry dart per hexagon passage, in orbit order
    hexagons: tuple[int, ...]   # face ids, parallel to darts
    bounding: tuple[int, int]   # the circuits along the two rails (sorted)
    self_paired: bool           # orbit equals its own reversal

    @property
    def length(self) -> int:
        return len(self.darts)

    def multiplicities(self) -> Counter:
        return Counter(self.hexagons)


@dataclass(frozen=True)
class PseudoRoad:
    darts: tuple[int, ...]      # entry dart per hexagon, possibly empty
    hexagons: tuple[int, ...]
    ends: tuple[int, int]       # the non-hexagonal faces at either end
    edge: int                   # first edge crossed

    @property
    def length(self) -> int:
        return len(self.darts)


def _trace_structures(m: PlanarMap) -> tuple[list[list[int]], list[PseudoRoad]]:
    """Partition all hexagon-boundary darts into road chains and rail orbits."""
    if any(len(c) != 3 for c in m.vertices):
        raise MapError("hexagon roads are defined for 3-valent maps only")
    phi = m.phi
    face_of = m.face_of
    is_hex = [len(f) == 6 for f in m.faces]
    visited = bytearray(m.n_darts)

    def opp(d: int) -> int:
        return phi[phi[phi[d]]]

    roads: list[PseudoRoad] = []
    # chains first: their darts must not be mistaken for railroad orbits
    for b0 in range(m.n_darts):
        if visited[b0] or not is_hex[face_of[b0]]:
            continue
        if is_hex[face_of[b0 ^ 1]]:
            continue  # not an entry dart
        chain = []
        b = b0
        while True:
            chain.append(b)
            visited[b] = visited[opp(b)] = 1
            nxt = opp(b) ^ 1
            if not is_hex[face_of[nxt]]:
                break
            b = nxt
        roads.append(
            PseudoRoad(
                darts=tuple(chain),
                hexagons=tuple(face_of[b] for b in chain),
                ends=(face_of[b0 ^ 1], face_of[opp(chain[-1]) ^ 1]),
                edge=b0 >> 1,
            )
        )
    for k in range(m.n_edges):
        if not is_hex[face_of[2 * k]] and not is_hex[face_of[2 * k + 1]]:
            roads.append(
                PseudoRoad(darts=(), hexagons=(), ends=(face_of[2 * k], face_of[2 * k + 1]), edge=k)
            )

    rails: list[list[int]] = []
    for b0 in range(m.n_darts):
        if visited[b0] or not is_hex[face_of[b0]]:
            continue
        orbit = []
        b = b0
        while True:
            orbit.append(b)
            b = opp(b) ^ 1
            assert is_hex[face_of[b]], "hexagon chain bookkeeping corrupt"
            if b == b0:
                break
        for b in orbit:
            visited[b] = visited[opp(b)] = 1
        rails.append(orbit)
    assert all(visited[d] for d in range(m.n_darts) if is_hex[face_of[d]])

    roads.sort(key=lambda r: (r.length, r.edge))
    return rails, roads


def _canonical_orbit(m: PlanarMap, orbit: list[int]) -> tuple[tuple[int, ...], bool]:
    """Pick the lexicographically smaller of the two traversal directions,
    each rotated to start at its smallest dart."""
    phi = m.phi

    def rotated(seq: list[int]) -> tuple[int, ...]:
        i = seq.index(min(seq))
        return tuple(seq[i:] + seq[:i])

    fwd = rotated(orbit)
    rev_orbit = [phi[phi[phi[b]]] for b in reversed(orbit)]
    rev = rotated(rev_orbit)
    if set(rev) == set(orbit):
        return fwd, True
    return min(fwd, rev), False


def railroads(m: PlanarMap, st: ZigzagStructure | None = None) -> list[Railroad]:
    """All railroads, each tagged with the circuits running along its rails."""
    if st is None:
        st = zigzag_structure(m)
    phi = m.phi
    raw, _ = _trace_structures(m)
    out = []
    for orbit in raw:
        darts, self_paired = _canonical_orbit(m, orbit)
        pairs = set()
        for b in darts:
            za = st.zigzag_of_state(phi[b], LEFT)
            zb = st.zigzag_of_state(phi[phi[phi[phi[b]]]], LEFT)
            pairs.add((min(za, zb), max(za, zb)))
        assert len(pairs) == 1, "railroad rails change circuit mid-orbit"
        out.append(
            Railroad(
                index=0,
                darts=darts,
                hexagons=tuple(m.face_of[b] for b in darts),
                bounding=pairs.pop(),
                self_paired=self_paired,
            )
        )
    out.sort(key=lambda r: (r.length, r.darts))
    return [
        Railroad(i, r.darts, r.hexagons, r.bounding, r.self_paired)
        for i, r in enumerate(out)
    ]


def pseudo_roads(m: PlanarMap) -> list[PseudoRoad]:
    """Chains of hexagons (possibly none) joining two non-hexagonal faces."""
    _, roads = _trace_structures(m)
    return roads


def is_tight(m: PlanarMap) -> bool:
    """A map is tight when it carries no railroad."""
    return not _trace_structures(m)[0]


def tight_zigzag_bound(m: PlanarMap) -> int:
    """Upper bound for the number of circuits of a tight map: half the total
    boundary length of the non-hexagonal faces."""
    if not is_tight(m):
        raise MapError("circuit bound applies to tight maps only")
    return sum(i * c for i, c in m.p_vector.items() if i != 6) // 2


def curvature_graph(m: PlanarMap):
    """Multigraph on the non-hexagonal faces, one link per pseudo-road."""
    import networkx as nx

    g = nx.MultiGraph()
    for f, cyc in enumerate(m.faces):
        if len(cyc) != 6:
            g.add_node(f, size=len(cyc))
    for r in pseudo_roads(m):
        g.add_edge(r.ends[0], r.ends[1], length=r.length)
    return g


def railroad_self_intersections(m: PlanarMap, st: ZigzagStructure, rail: Railroad) -> dict:
    """Classify the multiply-visited hexagons of one railroad.

    At a hexagon the rail crosses twice, the bounding circuits run four
    corner strands around the crossing, one per passage side, each turning at
    one hexagon vertex.  Two corners at adjacent vertices overlap along the
    boundary edge between them; when they belong to the same circuit that
    edge is traversed twice through one dart (type 2).  Two corners at
    vertices two apart both use the pendant edge hanging off the vertex
    between them; same circuit there means opposite-dart reuse (type 1).
    A double point therefore owns exactly two self-intersection edges of one
    shared type, which names its kind; a triple point owns six, either all
    type 1 or a 2:4 split of types 1 and 2.
    """
    if rail.self_paired:
        raise MapError("cannot classify crossings of a self-paired railroad")
    phi = m.phi
    vertex_of = m.vertex_of
    passages: dict[int, list[int]] = {}
    for b, h in zip(rail.darts, rail.hexagons):
        passages.setdefault(h, []).append(b)

    kinds: dict[int, str] = {}
    m2 = m3 = 0
    for h, bs in passages.items():
        if len(bs) == 1:
            continue
        if len(bs) > 3:
            raise MapError(f"hexagon {h} visited {len(bs)} times by one railroad")
        corner: dict[int, int] = {}  # hexagon vertex -> circuit turning there
        for b in bs:
            p1 = phi[b]
            p4 = phi[phi[phi[p1]]]
            for d in (p1, p4):
                v = vertex_of[d ^ 1]
                if v in corner:
                    raise MapError(f"two rail corners at vertex {v} of hexagon {h}")
                corner[v] = st.zigzag_of_state(d, LEFT)

        cyc = m.faces[h]
        verts = [vertex_of[d] for d in cyc]
        found: list[tuple[int, int, int]] = []  # (edge, type, circuit)
        for i, d in enumerate(cyc):
            a, b2 = verts[i], verts[(i + 1) % 6]
            if corner.get(a) is not None and corner.get(a) == corner.get(b2):
                found.append((d >> 1, 2, corner[a]))
        for i in range(6):
            a, b2 = verts[i - 1], verts[(i + 1) % 6]
            if corner.get(a) is None or corner.get(a) != corner.get(b2):
                continue
            spoke = [d for d in m.vertices[verts[i]] if d != cyc[i] and d != cyc[i - 1] ^ 1]
            if len(spoke) != 1:
                raise MapError(f"vertex {verts[i]} of hexagon {h} is not 3-valent")
            found.append((spoke[0] >> 1, 1, corner[a]))

        for e, t, zi in found:
            z = st.zigzags[zi]
            pool = z.type1_edges if t == 1 else z.type2_edges
            if e not in pool:
                raise MapError(
                    f"edge {e} at hexagon {h} is not a type-{t} "
                    f"self-intersection of circuit {zi}"
                )
        marked = sorted(t for _, t, _ in found)
        if len(bs) == 2:
            m2 += 1
            if marked == [1, 1]:
                kinds[h] = "double-1"
            elif marked == [2, 2]:
                kinds[h] = "double-2"
            else:
                raise MapError(f"double hexagon {h} has edge types {marked}")
        else:
            m3 += 1
            if marked == [1] * 6:
                kinds[h] = "triple-a"
            elif marked == [1, 1, 2, 2, 2, 2]:
                kinds[h] = "triple-b"
            else:
                raise MapError(f"triple hexagon {h} has edge types {marked}")
    return {"m2": m2, "m3": m3, "kinds": kinds}


def extended_road_cycles(m: PlanarMap, roads: Sequence[PseudoRoad] | None = None) -> list[int]:
    """Lengths of the cycles formed by chaining pseudo-roads straight through
    the (even-sided) non-hexagonal faces, counted in edge crossings."""
    if roads is None:
        roads = pseudo_roads(m)
    phi = m.phi
    face_of = m.face_of
    sizes = [len(f) for f in m.faces]
    if any(s % 2 and s != 6 for s in sizes):
        raise MapError("straight continuation needs even-sided faces")

    # jump across a road, keyed by the dart that enters its first hexagon
    # (for empty roads the crossing itself is the jump)
    skip: dict[int, tuple[int, int]] = {}  # entry dart -> (arrival dart, crossings)
    for r in roads:
        if not r.darts:
            a, b = 2 * r.edge, 2 * r.edge + 1
            skip[a] = (a, 1)
            skip[b] = (b, 1)
            continue
        first, last = r.darts[0], r.darts[-1]

        def opp(d: int) -> int:
            return phi[phi[phi[d]]]

        skip[first] = (opp(last) ^ 1, len(r.darts) + 1)
        skip[opp(last)] = (first ^ 1, len(r.darts) + 1)

    visited = bytearray(m.n_darts)
    lengths = []

    def half_exit(c: int) -> int:
        k = sizes[face_of[c]] // 2
        x = c
        for _ in range(k):
            x = phi[x]
        return x

    for c0 in range(m.n_darts):
        # states: darts entering a non-hexagonal face
        if visited[c0] or sizes[face_of[c0]] == 6:
            continue
        c, total = c0, 0
        while True:
            x = half_exit(c)
            visited[c] = visited[x] = 1  # x is where the reverse run enters
            c, crossings = skip[x ^ 1]
            total += crossings
            if c == c0:
                break
        lengths.append(total)
    return sorted(lengths)


# -- curve arrangements ------------------------------------------------------


@dataclass
class ArrangementFace:
    index: int
    whole_faces: tuple[int, ...]
    p_prime: Counter
    t_acute: int
    t_obtuse: int
    chi: int
    n_cells: int

    @property
    def corners(self) -> int:
        return self.t_acute + self.t_obtuse

    def curvature_identity_holds(self) -> bool:
        lhs = 6 * self.chi - self.t_obtuse - 2 * self.t_acute
        rhs = sum((6 - i) * c for i, c in self.p_prime.items())
        return lhs == rhs


@dataclass
class Arrangement:
    map: PlanarMap
    railroads: list[Railroad]
    crossings: dict[int, int]          # hexagon -> number of railroad passages (>= 2)
    faces: list[ArrangementFace]
    gauss_codes: list[list[int] | None]
    _sphere_map: PlanarMap | None = field(default=None, repr=False)

    @property
    def n_curves(self) -> int:
        return len(self.railroads)

    @property
    def n_double_points(self) -> int:
        return sum(1 for c in self.crossings.values() if c == 2)

    @property
    def n_triple_points(self) -> int:
        return sum(1 for c in self.crossings.values() if c == 3)

    def q_census(self) -> Counter:
        """How many disk faces have 0, 1, 2, ... corners."""
        return Counter(f.corners for f in self.faces if f.chi == 1)

    def to_planar_map(self) -> PlanarMap | None:
        return self._sphere_map


def curve_arrangement(m: PlanarMap, st: ZigzagStructure | None = None) -> Arrangement:
    rails = railroads(m, st)
    face_of = m.face_of
    phi = m.phi

    passages: dict[int, list[int]] = {}
    for r in rails:
        for b in r.darts:
            passages.setdefault(face_of[b], []).append(b)
    for h, bs in passages.items():
        if len(bs) > 3:
            raise MapError(f"hexagon {h} carries {len(bs)} railroad passages")
    crossings = {h: len(bs) for h, bs in passages.items() if len(bs) >= 2}

    pos_in_face = {}
    for h in passages:
        for i, d in enumerate(m.faces[h]):
            pos_in_face[d] = i

    # -- cells and their boundary pieces
    cells: list[tuple] = []
    cell_index: dict[tuple, int] = {}
    key_users: dict[tuple, list[int]] = {}
    cell_keys: dict[int, list[tuple]] = {}
    cell_chords: dict[int, list[tuple]] = {}
    corner_of_cell: dict[int, int] = {}  # 0 = acute, 1 = obtuse

    def new_cell(cid: tuple) -> int:
        cell_index[cid] = len(cells)
        cells.append(cid)
        cell_keys[cell_index[cid]] = []
        cell_chords[cell_index[cid]] = []
        return cell_index[cid]

    def register(ci: int, key: tuple) -> None:
        key_users.setdefault(key, []).append(ci)
        cell_keys[ci].append(key)

    crossed_edges = set()
    for h, bs in passages.items():
        for b in bs:
            crossed_edges.add(b >> 1)
            crossed_edges.add(phi[phi[phi[b]]] >> 1)

    for f, cyc in enumerate(m.faces):
        if f not in passages:
            ci = new_cell(("face", f))
            for d in cyc:
                register(ci, ("F", d >> 1))
            continue
        bs = passages[f]
        crossed = sorted({pos_in_face[b] for b in bs} | {pos_in_face[phi[phi[phi[b]]]] for b in bs})
        k = len(bs)
        for j, p in enumerate(crossed):
            q = crossed[(j + 1) % len(crossed)]
            ci = new_cell(("sector", f, p, q))
            dp, dq = cyc[p], cyc[q]
            register(ci, ("H", dp >> 1, m.vertex_of[dp ^ 1]))
            i = (p + 1) % 6
            gap = 0
            while i != q:
                register(ci, ("F", cyc[i] >> 1))
                gap += 1
                i = (i + 1) % 6
            register(ci, ("H", dq >> 1, m.vertex_of[dq]))
            if k == 1:
                cell_chords[ci].append(("chord", f, min(p, q), max(p, q)))
            else:
                cell_chords[ci].append(("piece", f, p))
                cell_chords[ci].append(("piece", f, q))
                corner_of_cell[ci] = 0 if gap == 0 else 1

    for key, users in key_users.items():
        if len(users) != 2:
            raise MapError(f"cell boundary piece {key} used {len(users)} times")

    parent = list(range(len(cells)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in key_users.values():
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    comp_cells: dict[int, list[int]] = {}
    for ci in range(len(cells)):
        comp_cells.setdefault(find(ci), []).append(ci)

    faces_out = []
    for root, members in sorted(comp_cells.items()):
        whole = tuple(sorted(cells[ci][1] for ci in members if cells[ci][0] == "face"))
        p_prime = Counter(len(m.faces[f]) for f in whole)
        t_ac = sum(1 for ci in members if corner_of_cell.get(ci) == 0)
        t_ob = sum(1 for ci in members if corner_of_cell.get(ci) == 1)
        # Euler characteristic of the closed region: count the distinct cells
        # of its boundary-inclusive complex
        one_cells: set[tuple] = set()
        zero_cells: set[tuple] = set()
        for ci in members:
            for key in cell_keys[ci]:
                one_cells.add(key)
                if key[0] == "F":
                    u, v = m.edge_endpoints(key[1])
                    zero_cells.add(("v", u))
                    zero_cells.add(("v", v))
                else:
                    zero_cells.add(("v", key[2]))
                    zero_cells.add(("mid", key[1]))
            for piece in cell_chords[ci]:
                one_cells.add(piece)
                if piece[0] == "chord":
                    _, f, p, q = piece
                    zero_cells.add(("mid", m.faces[f][p] >> 1))
                    zero_cells.add(("mid", m.faces[f][q] >> 1))
                else:
                    _, f, p = piece
                    zero_cells.add(("mid", m.faces[f][p] >> 1))
                    zero_cells.add(("x", f))
        chi = len(zero_cells) - len(one_cells) + len(members)
        faces_out.append(
            ArrangementFace(
                index=len(faces_out),
                whole_faces=whole,
                p_prime=p_prime,
                t_acute=t_ac,
                t_obtuse=t_ob,
                chi=chi,
                n_cells=len(members),
            )
        )

    # -- gauss codes, one per curve
    codes: list[list[int] | None] = []
    for r in rails:
        if any(crossings.get(h) == 3 for h in r.hexagons):
            codes.append(None)
            continue
        codes.append([h for h in r.hexagons if h in crossings])

    arr = Arrangement(
        map=m,
        railroads=rails,
        crossings=crossings,
        faces=faces_out,
        gauss_codes=codes,
    )
    arr._sphere_map = _arrangement_sphere_map(m, rails, crossings, passages, pos_in_face)
    return arr


def _arrangement_sphere_map(
    m: PlanarMap,
    rails: list[Railroad],
    crossings: dict[int, int],
    passages: dict[int, list[int]],
    pos_in_face: dict[int, int],
) -> PlanarMap | None:
    """The arrangement itself as a 4- or 6-valent sphere map, when connected."""
    if not crossings:
        return None
    if any(not any(h in crossings for h in r.hexagons) for r in rails):
        return None  # a crossing-free curve cannot join the complex
    phi = m.phi
    sig: dict[tuple, tuple] = {}
    alf: dict[tuple, tuple] = {}
    for h, count in crossings.items():
        positions = sorted(
            {pos_in_face[b] for b in passages[h]}
            | {pos_in_face[phi[phi[phi[b]]]] for b in passages[h]}
        )
        assert len(positions) == 2 * count
        for i, p in enumerate(positions):
            sig[(h, p)] = (h, positions[(i + 1) % len(positions)])
    for r in rails:
        stops = [
            (m.face_of[b], pos_in_face[b], pos_in_face[phi[phi[phi[b]]]])
            for b in r.darts
            if m.face_of[b] in crossings
        ]
        for (h1, _, out1), (h2, in2, _) in zip(stops, stops[1:] + stops[:1]):
            alf[(h1, out1)] = (h2, in2)
            alf[(h2, in2)] = (h1, out1)
    try:
        return from_dart_system(sig, alf)
    except MapError:
        return None
