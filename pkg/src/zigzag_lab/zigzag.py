"""Left-right circuits of a map and their intersection bookkeeping.

A circuit state is a pair (dart, next turn): after traversing the dart we
turn left (toward ``sigma(alpha(d))``) or right (toward ``sigma_inv(alpha(d))``)
and the turn sense alternates at every step.  Orbits of this step rule come in
mirror pairs — one per traversal direction — and each mirror pair is one
left-right circuit of the map.  Every edge is traversed exactly twice over all
circuits, which is what makes the intersection counts below well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .planar_map import MapError, PlanarMap

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class Zigzag:
    """One left-right circuit, recorded in a fixed traversal direction."""

    index: int
    darts: tuple[int, ...]
    turns: tuple[int, ...]
    type1_edges: frozenset[int]  # edges traversed twice, in opposite directions
    type2_edges: frozenset[int]  # edges traversed twice, in the same direction

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def a1(self) -> int:
        return len(self.type1_edges)

    @property
    def a2(self) -> int:
        return len(self.type2_edges)

    @property
    def signature(self) -> tuple[int, int]:
        return (self.a1, self.a2)

    @property
    def is_simple(self) -> bool:
        return not self.type1_edges and not self.type2_edges

    def as_dict(self) -> dict:
        return {
            "length": self.length,
            "type1": self.a1,
            "type2": self.a2,
            "simple": self.is_simple,
        }


class ZigzagStructure:
    """All left-right circuits of a map, in canonical order.

    Canonical order puts simple circuits first (ascending length), then
    self-intersecting ones ascending by (length, type-1 count, type-2 count);
    ties fall back to the smallest dart on the circuit.
    """

    def __init__(self, m: PlanarMap):
        self.map = m
        sigma, sigma_inv = m.sigma, m.sigma_inv
        n = m.n_darts
        visited = bytearray(2 * n)
        raw: list[tuple[list[int], list[int]]] = []
        orbit_of_state = [-1] * (2 * n)
        for s0 in range(2 * n):
            if visited[s0]:
                continue
            d0, t0 = s0 >> 1, s0 & 1
            darts: list[int] = []
            turns: list[int] = []
            d, t = d0, t0
            idx = len(raw)
            while True:
                s = 2 * d + t
                r = 2 * (d ^ 1) + t
                assert not visited[s] and not visited[r]
                visited[s] = visited[r] = 1
                orbit_of_state[s] = orbit_of_state[r] = idx
                darts.append(d)
                turns.append(t)
                d, t = (sigma[d ^ 1] if t == LEFT else sigma_inv[d ^ 1]), 1 - t
                if d == d0 and t == t0:
                    break
            raw.append((darts, turns))
        assert sum(len(darts) for darts, _ in raw) == n

        # exactly two passages per edge, over all circuits
        records: list[list[tuple[int, int, int]]] = [[] for _ in range(n // 2)]
        for zi, (darts, turns) in enumerate(raw):
            for d, t in zip(darts, turns):
                records[d >> 1].append((zi, d, t))
        assert all(len(r) == 2 for r in records)

        type1: list[set[int]] = [set() for _ in raw]
        type2: list[set[int]] = [set() for _ in raw]
        for e, ((z1, d1, _), (z2, d2, _)) in enumerate(records):
            if z1 == z2:
                (type2 if d1 == d2 else type1)[z1].add(e)

        def key(i: int):
            darts, _ = raw[i]
            md = min(min(darts), min(d ^ 1 for d in darts))
            if not type1[i] and not type2[i]:
                return (0, len(darts), 0, 0, md)
            return (1, len(darts), len(type1[i]), len(type2[i]), md)

        order = sorted(range(len(raw)), key=key)
        rank = [0] * len(raw)
        for new, old in enumerate(order):
            rank[old] = new
        self.zigzags = [
            Zigzag(
                index=new,
                darts=tuple(raw[old][0]),
                turns=tuple(raw[old][1]),
                type1_edges=frozenset(type1[old]),
                type2_edges=frozenset(type2[old]),
            )
            for new, old in enumerate(order)
        ]
        self.edge_records = [
            ((rank[z1], d1, t1), (rank[z2], d2, t2))
            for (z1, d1, t1), (z2, d2, t2) in records
        ]
        self._state_zig = [rank[i] for i in orbit_of_state]

    def __len__(self) -> int:
        return len(self.zigzags)

    def zigzag_of_state(self, d: int, t: int) -> int:
        """Index of the circuit passing through state (dart, next-turn),
        in either traversal direction."""
        return self._state_zig[2 * d + t]

    @cached_property
    def int_matrix(self) -> list[list[int]]:
        """Symmetric matrix of pairwise edge counts; the diagonal holds each
        circuit's self-intersection count."""
        k = len(self.zigzags)
        mat = [[0] * k for _ in range(k)]
        for (z1, _, _), (z2, _, _) in self.edge_records:
            if z1 == z2:
                mat[z1][z1] += 1
            else:
                mat[z1][z2] += 1
                mat[z2][z1] += 1
        return mat

    def int_vector(self, i: int) -> list[int]:
        """Edge counts shared with every other circuit, largest first."""
        row = self.int_matrix[i]
        return sorted((row[j] for j in range(len(row)) if j != i), reverse=True)

    def lengths(self) -> list[int]:
        return [z.length for z in self.zigzags]


def zigzag_structure(m: PlanarMap) -> ZigzagStructure:
    return ZigzagStructure(m)


# -- string forms ---------------------------------------------------------------


def _grouped(values: Sequence, render=str) -> str:
    parts = []
    for v in values:
        if parts and parts[-1][0] == v:
            parts[-1][1] += 1
        else:
            parts.append([v, 1])
    return ",".join(render(v) + (f"^{c}" if c > 1 else "") for v, c in parts)


def z_vector_string(st: ZigzagStructure) -> str:
    """Lengths of the circuits: simple ones first, then self-intersecting ones
    annotated with their two self-intersection counts, e.g. ``8; 24_{0,8}``."""
    simple = [z.length for z in st.zigzags if z.is_simple]
    tangled = [(z.length, z.a1, z.a2) for z in st.zigzags if not z.is_simple]
    parts = []
    if simple:
        parts.append(_grouped(simple))
    if tangled:
        parts.append(_grouped(tangled, lambda v: f"{v[0]}_{{{v[1]},{v[2]}}}"))
    return "; ".join(parts)


def int_vector_string(st: ZigzagStructure, i: int) -> str:
    return _grouped(st.int_vector(i))


# -- orientations and edge types --------------------------------------------------


def edge_types(st: ZigzagStructure, bits: Sequence[int]) -> list[int]:
    """Per-edge intersection type (1 or 2) once every circuit is oriented.

    ``bits[z]`` = 1 reverses circuit z.  An edge is type 1 when its two
    passages run in opposite directions, type 2 when they run in the same
    direction.
    """
    out = []
    for (z1, d1, _), (z2, d2, _) in st.edge_records:
        e1 = d1 ^ (1 if bits[z1] else 0)
        e2 = d2 ^ (1 if bits[z2] else 0)
        out.append(1 if e1 == (e2 ^ 1) else 2)
    return out


def vertex_type2_counts(m: PlanarMap, types: Sequence[int]) -> list[int]:
    return [sum(types[d >> 1] == 2 for d in cyc) for cyc in m.vertices]


def face_type1_counts(m: PlanarMap, types: Sequence[int]) -> list[int]:
    return [sum(types[d >> 1] == 1 for d in cyc) for cyc in m.faces]


def orient_all_type1(m: PlanarMap, st: ZigzagStructure) -> list[int]:
    """Orientation bits making every edge type 1.

    Exists exactly when the map is bipartite: each circuit is oriented to turn
    left at one color class and right at the other.
    """
    bp = m.bipartition
    if bp is None:
        raise MapError("an all-type-1 orientation needs a bipartite map")
    white = bp[0]
    bits = []
    for z in st.zigzags:
        at = m.vertex_of[z.darts[0] ^ 1]
        good = (at in white) == (z.turns[0] == LEFT)
        bits.append(0 if good else 1)
    assert all(ty == 1 for ty in edge_types(st, bits))
    return bits


def edge_type_census(m: PlanarMap, st: ZigzagStructure, bits: Sequence[int]) -> dict:
    """Vertex classes of a 3-valent map under an orientation of its circuits.

    Every vertex sees either three type-1 edges (class 1) or one type-1 and
    two type-2 edges (class 2); any other pattern is a bookkeeping bug.
    """
    if any(len(c) != 3 for c in m.vertices):
        raise MapError("edge-type census is defined for 3-valent maps")
    types = edge_types(st, bits)
    n1 = n2 = 0
    for v, cyc in enumerate(m.vertices):
        pattern = sorted(types[d >> 1] for d in cyc)
        if pattern == [1, 1, 1]:
            n1 += 1
        elif pattern == [1, 2, 2]:
            n2 += 1
        else:
            raise MapError(f"vertex {v} has edge types {pattern}; orientation corrupt")
    n = m.n_vertices
    t1 = types.count(1)
    t2 = types.count(2)
    assert t1 == n1 + n // 2 and t2 == n - n1
    return {"class1": n1, "class2": n2, "type1_edges": t1, "type2_edges": t2}


# -- predicates -------------------------------------------------------------------


def z_uniform(st: ZigzagStructure) -> bool:
    first = (st.zigzags[0].length, st.zigzags[0].signature)
    return all((z.length, z.signature) == first for z in st.zigzags)


def z_knotted(st: ZigzagStructure) -> bool:
    return len(st.zigzags) == 1


def z_balanced(st: ZigzagStructure) -> bool:
    by_class: dict[tuple, list[int]] = {}
    for z in st.zigzags:
        by_class.setdefault((z.length, z.signature), []).append(z.index)
    for members in by_class.values():
        vecs = {tuple(st.int_vector(i)) for i in members}
        if len(vecs) > 1:
            return False
    return True


def z_predicates(m: PlanarMap, st: ZigzagStructure | None = None) -> dict[str, bool]:
    """The four standard circuit-structure flags in one dictionary."""
    from .symmetry import z_transitive
    if st is None:
        st = ZigzagStructure(m)
    return {
        "z_uniform": z_uniform(st),
        "z_knotted": z_knotted(st),
        "z_balanced": z_balanced(st),
        "z_transitive": z_transitive(m, st),
    }


# -- central circuits --------------------------------------------------------------


def central_circuits(m: PlanarMap) -> list[list[int]]:
    """Straight-ahead circuits of an even-valence map, as dart orbits.

    At each vertex the walk leaves through the edge opposite the one it came
    in by.  Orbits are deduplicated across traversal direction; the result is
    ordered by (length, smallest dart).
    """
    if any(len(c) % 2 for c in m.vertices):
        raise MapError("central circuits need all vertex degrees even")
    pos = [0] * m.n_darts
    for cyc in m.vertices:
        for i, d in enumerate(cyc):
            pos[d] = i

    def step(d: int) -> int:
        x = d ^ 1
        cyc = m.vertices[m.vertex_of[x]]
        return cyc[(pos[x] + len(cyc) // 2) % len(cyc)]

    visited = bytearray(m.n_darts)
    orbits = []
    for d0 in range(m.n_darts):
        if visited[d0]:
            continue
        orbit = []
        d = d0
        while True:
            orbit.append(d)
            d = step(d)
            if d == d0:
                break
        for d in orbit:
            visited[d] = visited[d ^ 1] = 1
        orbits.append(orbit)
    orbits.sort(key=lambda o: (len(o), min(o)))
    return orbits
