"""Rotation-system representation of plane graphs.

A map is a single permutation on darts 0..2E-1.  Edge k owns the dart pair
(2k, 2k+1), so the edge involution is ``d ^ 1`` and is never stored.  The
permutation ``sigma`` gives the counterclockwise successor of a dart around
its origin vertex, and ``phi(d) = sigma[d ^ 1]`` walks the boundary of the
face lying to the left of ``d``.  Vertices, faces, duals and medials are all
derived from these two permutations; the sphere condition V - E + F = 2 is
enforced at construction time.
"""

from __future__ import annotations

from array import array
from collections import Counter, deque
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class MapError(ValueError):
    """Raised when dart data does not describe a valid map."""


class EulerError(MapError):
    """Raised when the rotation system does not describe a sphere map."""


class PlanarMap:
    """An oriented plane (sphere) graph given by its rotation system.

    Parameters
    ----------
    sigma:
        Sequence of length 2E mapping each dart to the next dart
        counterclockwise around its origin vertex.
    strict:
        When true, reject loops and parallel edges.
    """

    def __init__(self, sigma: Sequence[int], strict: bool = False):
        sigma = [int(x) for x in sigma]
        n = len(sigma)
        if n == 0 or n % 2:
            raise MapError(f"dart count must be positive and even, got {n}")
        seen = bytearray(n)
        for x in sigma:
            if not 0 <= x < n or seen[x]:
                raise MapError("sigma is not a permutation of the darts")
            seen[x] = 1
        self.sigma = sigma
        self._check_connected()
        chi = self.n_vertices - self.n_edges + self.n_faces
        if chi != 2:
            raise EulerError(f"not a sphere map: V - E + F = {chi}, expected 2")
        if strict and not self.is_simple:
            raise MapError("map has a loop or parallel edges (strict mode)")

    # -- basic counts ------------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    @property
    def n_edges(self) -> int:
        return len(self.sigma) // 2

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def _check_connected(self) -> None:
        n = len(self.sigma)
        seen = bytearray(n)
        stack = [0]
        seen[0] = 1
        count = 1
        while stack:
            d = stack.pop()
            for e in (self.sigma[d], d ^ 1):
                if not seen[e]:
                    seen[e] = 1
                    count += 1
                    stack.append(e)
        if count != n:
            raise MapError("dart system is not connected")

    # -- derived permutations and orbits -----------------------------------

    @staticmethod
    def alpha(d: int) -> int:
        return d ^ 1

    @cached_property
    def sigma_inv(self) -> list[int]:
        inv = [0] * len(self.sigma)
        for d, e in enumerate(self.sigma):
            inv[e] = d
        return inv

    @cached_property
    def phi(self) -> list[int]:
        """Face permutation: next dart along the face left of d."""
        return [self.sigma[d ^ 1] for d in range(len(self.sigma))]

    @cached_property
    def phi_inv(self) -> list[int]:
        inv = [0] * len(self.sigma)
        for d, e in enumerate(self.phi):
            inv[e] = d
        return inv

    @staticmethod
    def _orbits(perm: Sequence[int]) -> tuple[list[int], list[list[int]]]:
        of = [-1] * len(perm)
        cycles: list[list[int]] = []
        for d in range(len(perm)):
            if of[d] >= 0:
                continue
            idx = len(cycles)
            cyc = []
            x = d
            while of[x] < 0:
                of[x] = idx
                cyc.append(x)
                x = perm[x]
            cycles.append(cyc)
        return of, cycles

    @cached_property
    def _vertex_orbits(self) -> tuple[list[int], list[list[int]]]:
        return self._orbits(self.sigma)

    @cached_property
    def _face_orbits(self) -> tuple[list[int], list[list[int]]]:
        return self._orbits(self.phi)

    @property
    def vertex_of(self) -> list[int]:
        """Dart -> index of its origin vertex."""
        return self._vertex_orbits[0]

    @property
    def vertices(self) -> list[list[int]]:
        """Per vertex, its darts in counterclockwise rotation order."""
        return self._vertex_orbits[1]

    @property
    def face_of(self) -> list[int]:
        """Dart -> index of the face on its left."""
        return self._face_orbits[0]

    @property
    def faces(self) -> list[list[int]]:
        """Per face, its boundary darts in phi order."""
        return self._face_orbits[1]

    def origin(self, d: int) -> int:
        return self.vertex_of[d]

    def head(self, d: int) -> int:
        return self.vertex_of[d ^ 1]

    @staticmethod
    def edge_of(d: int) -> int:
        return d >> 1

    def edge_endpoints(self, k: int) -> tuple[int, int]:
        return self.vertex_of[2 * k], self.vertex_of[2 * k + 1]

    def degree(self, v: int) -> int:
        return len(self.vertices[v])

    @cached_property
    def v_vector(self) -> Counter:
        """Histogram degree -> number of vertices."""
        return Counter(len(c) for c in self.vertices)

    @cached_property
    def p_vector(self) -> Counter:
        """Histogram face size -> number of faces."""
        return Counter(len(c) for c in self.faces)

    @cached_property
    def is_simple(self) -> bool:
        vo = self.vertex_of
        for k in range(self.n_edges):
            if vo[2 * k] == vo[2 * k + 1]:
                return False
        for cyc in self.vertices:
            heads = [vo[d ^ 1] for d in cyc]
            if len(set(heads)) != len(heads):
                return False
        return True

    def neighbors(self, v: int) -> list[int]:
        """Heads of the darts at v, in rotation order (repeats possible)."""
        return [self.vertex_of[d ^ 1] for d in self.vertices[v]]

    def to_neighbor_lists(self) -> list[list[int]]:
        return [self.neighbors(v) for v in range(self.n_vertices)]

    # -- derived maps -------------------------------------------------------

    def dual(self) -> "PlanarMap":
        """The dual map on the same darts (an exact involution)."""
        return PlanarMap(self.phi)

    def medial(self) -> "PlanarMap":
        """Map whose vertices are this map's edges, joined along corners.

        Each dart c of the original contributes one medial edge (the corner
        between c and its rotation predecessor); the four medial darts around
        the vertex sitting on edge {d, d^1} are interleaved so that original
        faces and original vertices alternate around it.
        """
        sig: dict[tuple[int, int], tuple[int, int]] = {}
        alf: dict[tuple[int, int], tuple[int, int]] = {}
        inv = self.sigma_inv
        for d in range(0, self.n_darts, 2):
            cyc = [(d, 0), (inv[d ^ 1], 1), (d ^ 1, 0), (inv[d], 1)]
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                sig[a] = b
        for c in range(self.n_darts):
            alf[(c, 0)] = (c, 1)
            alf[(c, 1)] = (c, 0)
        return from_dart_system(sig, alf)

    def truncate(self) -> "PlanarMap":
        """Cut every vertex, replacing it with a face of the same degree."""
        sig: dict[tuple[int, int], tuple[int, int]] = {}
        alf: dict[tuple[int, int], tuple[int, int]] = {}
        for d in range(self.n_darts):
            sig[(d, 0)] = (d, 1)
            sig[(d, 1)] = (d, 2)
            sig[(d, 2)] = (d, 0)
            alf[(d, 0)] = (d ^ 1, 0)
            alf[(d, 1)] = (self.sigma[d], 2)
            alf[(d, 2)] = (self.sigma_inv[d], 1)
        return from_dart_system(sig, alf)

    # -- classification ------------------------------------------------------

    def classify_two_faced(self) -> dict | None:
        """Recognize 3-valent maps whose faces take at most two sizes <= 6.

        Returns a dict with the two face sizes, their counts and a family tag
        ("3n", "4n", "5n") when the large size is 6, or None when the map is
        not of this kind.
        """
        if any(len(c) != 3 for c in self.vertices):
            return None
        sizes = sorted(self.p_vector)
        if len(sizes) == 1 and sizes[0] < 6:
            a, b = sizes[0], 6
        elif len(sizes) == 2 and sizes[1] <= 6:
            a, b = sizes
        else:
            return None
        family = {3: "3n", 4: "4n", 5: "5n"}.get(a) if b == 6 else None
        return {
            "small": a,
            "large": b,
            "count_small": self.p_vector[a],
            "count_large": self.p_vector.get(b, 0),
            "n_vertices": self.n_vertices,
            "family": family,
        }

    @cached_property
    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """2-coloring of the vertices, or None if an odd cycle exists."""
        color = [-1] * self.n_vertices
        color[0] = 0
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
        return (
            frozenset(v for v, c in enumerate(color) if c == 0),
            frozenset(v for v, c in enumerate(color) if c == 1),
        )

    def to_networkx(self, multigraph: bool = False):
        import networkx as nx

        g = nx.MultiGraph() if multigraph else nx.Graph()
        g.add_nodes_from(range(self.n_vertices))
        for k in range(self.n_edges):
            g.add_edge(*self.edge_endpoints(k))
        return g

    def node_connectivity(self) -> int:
        import networkx as nx

        return nx.node_connectivity(self.to_networkx())

    # -- canonical form ------------------------------------------------------

    def _stream(self, d0: int, reflect: bool) -> Iterator[int]:
        """Label stream of the breadth-first walk rooted at dart d0.

        Vertices are numbered from 1 in order of first visit; each vertex's
        block lists its neighbors' numbers in rotation order starting from the
        entry dart, terminated by 0.  Two rooted walks produce equal streams
        exactly when a map isomorphism (orientation-reversing iff ``reflect``
        differs) carries one root to the other.
        """
        rot = self.sigma_inv if reflect else self.sigma
        vo = self.vertex_of
        number = [0] * self.n_vertices
        number[vo[d0]] = 1
        count = 1
        queue = deque([d0])
        while queue:
            e = queue.popleft()
            d = e
            while True:
                w = vo[d ^ 1]
                if number[w] == 0:
                    count += 1
                    number[w] = count
                    queue.append(d ^ 1)
                yield number[w]
                d = rot[d]
                if d == e:
                    break
            yield 0

    @cached_property
    def canonical_code(self) -> bytes:
        """Minimum label stream over all rooted walks, as bytes.

        Equal codes characterize isomorphism of maps (allowing reflection).
        """
        best: list[int] | None = None
        for reflect in (False, True):
            for d0 in range(self.n_darts):
                gen = self._stream(d0, reflect)
                if best is None:
                    best = list(gen)
                    continue
                for i, x in enumerate(gen):
                    if x > best[i]:
                        break
                    if x < best[i]:
                        best = best[:i] + [x]
                        best.extend(gen)
                        break
        assert best is not None
        return array("i", best).tobytes()

    def is_isomorphic(self, other: "PlanarMap") -> bool:
        if self.n_darts != other.n_darts:
            return False
        if sorted(self.p_vector.items()) != sorted(other.p_vector.items()):
            return False
        return self.canonical_code == other.canonical_code

    def _dart_map(self, d0: int, reflect: bool, other: "PlanarMap" | None = None) -> list[int]:
        """Dart bijection carrying this map's walk from dart 0 onto
        ``other``'s walk from d0.  Only meaningful when the two streams agree.
        """
        other = other if other is not None else self
        rot_a = self.sigma
        rot_b = other.sigma_inv if reflect else other.sigma
        g = [-1] * self.n_darts
        seen = bytearray(self.n_vertices)
        seen[self.vertex_of[0]] = 1
        queue = deque([(0, d0)])
        while queue:
            ea, eb = queue.popleft()
            da, db = ea, eb
            while True:
                g[da] = db
                w = self.vertex_of[da ^ 1]
                if not seen[w]:
                    seen[w] = 1
                    queue.append((da ^ 1, db ^ 1))
                da = rot_a[da]
                db = rot_b[db]
                if da == ea:
                    break
        return g

    def __reduce__(self):
        return (PlanarMap, (self.sigma,))

    def __repr__(self) -> str:
        pv = ",".join(f"{s}^{c}" for s, c in sorted(self.p_vector.items()))
        return f"<PlanarMap V={self.n_vertices} E={self.n_edges} F={self.n_faces} p=({pv})>"


# -- constructors ------------------------------------------------------------


def from_dart_system(sigma_map: dict, alpha_map: dict, strict: bool = False) -> PlanarMap:
    """Build a map from rotation and edge involutions on arbitrary dart keys.

    Darts are renumbered so that each edge owns a consecutive pair; the keys
    themselves can be any hashable objects.
    """
    if len(sigma_map) != len(alpha_map):
        raise MapError("sigma and alpha must cover the same darts")
    ids: dict = {}
    k = 0
    for x in sigma_map:
        if x in ids:
            continue
        try:
            y = alpha_map[x]
        except KeyError:
            raise MapError(f"alpha undefined on dart {x!r}") from None
        if y == x:
            raise MapError(f"alpha fixes dart {x!r}")
        if alpha_map.get(y) != x:
            raise MapError(f"alpha is not an involution at {x!r}")
        ids[x] = 2 * k
        ids[y] = 2 * k + 1
        k += 1
    sigma = [0] * (2 * k)
    for x, i in ids.items():
        try:
            sigma[i] = ids[sigma_map[x]]
        except KeyError:
            raise MapError(f"sigma image of {x!r} is not a known dart") from None
    return PlanarMap(sigma, strict=strict)


def build_map(neighbor_lists: Sequence[Sequence[int]], strict: bool = True) -> PlanarMap:
    """Build a map from counterclockwise neighbor lists.

    ``neighbor_lists[v]`` lists the other endpoint of each edge at v in
    counterclockwise order.  A bundle of parallel edges appears reversed at
    its two ends up to a cyclic shift the lists do not record, so bundle
    shifts are searched (deterministically, bounded) for a sphere-consistent
    assignment; a loop at v must appear as two entries, matched consecutively.
    """
    deg = [len(nbrs) for nbrs in neighbor_lists]
    nv = len(neighbor_lists)
    offset = [0] * nv
    for v in range(1, nv):
        offset[v] = offset[v - 1] + deg[v - 1]
    n_slots = sum(deg)
    if n_slots % 2:
        raise MapError("odd total degree")

    occ: dict[tuple[int, int], list[int]] = {}
    for v, nbrs in enumerate(neighbor_lists):
        for i, w in enumerate(nbrs):
            if not 0 <= w < nv:
                raise MapError(f"vertex {v} lists unknown neighbor {w}")
            occ.setdefault((v, w), []).append(offset[v] + i)

    base: list[tuple[list[int], list[int]]] = []   # fixed pairs, then bundles
    fixed: list[tuple[int, int]] = []
    for (u, v), slots_uv in sorted(occ.items()):
        if u > v:
            continue
        if u == v:
            if len(slots_uv) % 2:
                raise MapError(f"loop at vertex {u} has an odd occurrence count")
            for j in range(0, len(slots_uv), 2):
                fixed.append((slots_uv[j], slots_uv[j + 1]))
            continue
        slots_vu = occ.get((v, u))
        if slots_vu is None or len(slots_vu) != len(slots_uv):
            raise MapError(f"inconsistent adjacency between {u} and {v}")
        if len(slots_uv) == 1:
            fixed.append((slots_uv[0], slots_vu[0]))
        else:
            base.append((slots_uv, slots_vu))

    combos = 1
    for slots_uv, _ in base:
        combos *= len(slots_uv)
    if combos > 4096:
        raise MapError("parallel-edge structure too ambiguous to reconstruct")

    def attempt(shifts: Sequence[int]) -> PlanarMap:
        mate = [-1] * n_slots
        for a, b in fixed:
            mate[a], mate[b] = b, a
        for (slots_uv, slots_vu), r in zip(base, shifts):
            k = len(slots_uv)
            for j, a in enumerate(slots_uv):
                b = slots_vu[(r - j) % k]
                mate[a], mate[b] = b, a
        dart = [-1] * n_slots
        k = 0
        for s in range(n_slots):
            if dart[s] < 0:
                t = mate[s]
                dart[s] = 2 * k
                dart[t] = 2 * k + 1
                k += 1
        sigma = [0] * n_slots
        for v in range(nv):
            for i in range(deg[v]):
                sigma[dart[offset[v] + i]] = dart[offset[v] + (i + 1) % deg[v]]
        return PlanarMap(sigma, strict=strict)

    if not base:
        return attempt(())
    first_err: EulerError | None = None
    for pick in range(combos):
        shifts = []
        x = pick
        for slots_uv, _ in base:
            k = len(slots_uv)
            # start from the all-(k-1) assignment: nested bundles pair the
            # innermost entry of one end with the outermost of the other
            shifts.append((k - 1 + x) % k)
            x //= k
        try:
            return attempt(shifts)
        except EulerError as exc:
            first_err = first_err or exc
    raise first_err if first_err is not None else MapError("no valid pairing")


def build_map_from_faces(face_lists: Iterable[Sequence[int]], strict: bool = True) -> PlanarMap:
    """Build a map from its faces, each given as a counterclockwise vertex cycle.

    Only valid for simple graphs: the successor pairs (u, v, w) of all face
    cycles must assemble into one full rotation at every vertex.
    """
    succ: dict[int, dict[int, int]] = {}
    for cyc in face_lists:
        m = len(cyc)
        for i in range(m):
            u, v, w = cyc[i - 1], cyc[i], cyc[(i + 1) % m]
            at_v = succ.setdefault(v, {})
            if u in at_v:
                raise MapError(f"corner ({u},{v}) used by two faces")
            at_v[u] = w
    nv = len(succ)
    if sorted(succ) != list(range(nv)):
        raise MapError("face cycles must cover vertices 0..n-1")
    neighbor_lists = []
    for v in range(nv):
        at_v = succ[v]
        start = next(iter(at_v))
        rot = [start]
        x = at_v[start]
        while x != start:
            if x not in at_v or len(rot) > len(at_v):
                raise MapError(f"rotation at vertex {v} does not close up")
            rot.append(x)
            x = at_v[x]
        if len(rot) != len(at_v):
            raise MapError(f"rotation at vertex {v} splits into several cycles")
        neighbor_lists.append(rot)
    return build_map(neighbor_lists, strict=strict)
