"""Curvature accounting on disk regions bounded by circuit arcs.

A patch is a disk of faces whose boundary decomposes into arcs of left-right
circuits.  Its corners are either obtuse — two arcs overlapping on one
boundary edge — or acute — two arcs meeting at a vertex only.  For regular
patches (every arc's circuit continues to the outside) the face inventory
satisfies 6 - t_ob - 2*t_ac = sum (6-i) p'_i, which is the workhorse local
form of Euler's formula used throughout the test-suite.

Boundary walks keep the region on the left.  A left turn at a boundary
vertex means the third edge there points outward (the vertex has degree 2 in
the induced subgraph); a right turn means it points inward.  Along a single
arc the turns alternate, so corners are exactly the spots where alternation
breaks: an isolated left-left break is an obtuse corner (the overlapped
edge sits between the two turns), and a left-left-left run is an acute
corner at the middle vertex.  A right-right break would be a reflex corner,
which no patch has.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .planar_map import MapError, PlanarMap
from .railroad import Arrangement
from .zigzag import LEFT, ZigzagStructure


@dataclass
class PatchReport:
    arcs: int
    obtuse: int
    acute: int
    p_prime: Counter
    regular: bool
    faces: tuple[int, ...] = field(default=())

    @property
    def lhs(self) -> int:
        return 6 - self.obtuse - 2 * self.acute

    @property
    def rhs(self) -> int:
        return sum((6 - i) * c for i, c in self.p_prime.items())

    def identity_holds(self) -> bool:
        return self.lhs == self.rhs


def _check_3valent(m: PlanarMap) -> None:
    if any(len(c) != 3 for c in m.vertices):
        raise MapError("patch accounting is defined for 3-valent maps only")


def _flood(m: PlanarMap, seeds: Iterable[int], cut: set[int]) -> set[int]:
    seen = set(seeds)
    stack = list(seen)
    while stack:
        f = stack.pop()
        for d in m.faces[f]:
            if d >> 1 in cut:
                continue
            g = m.face_of[d ^ 1]
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return seen


def zigzag_interior(m: PlanarMap, st: ZigzagStructure, index: int, side: str = "left") -> PatchReport:
    """The faces on one side of a simple circuit, as a 0-gonal patch."""
    _check_3valent(m)
    z = st.zigzags[index]
    if not z.is_simple:
        raise MapError(f"circuit {index} self-intersects; its sides are not disks")
    if side not in ("left", "right"):
        raise MapError(f"side must be 'left' or 'right', not {side!r}")
    cut = {d >> 1 for d in z.darts}
    flip = 0 if side == "left" else 1
    seeds = {m.face_of[d ^ flip] for d in z.darts}
    other = {m.face_of[d ^ 1 ^ flip] for d in z.darts}
    region = _flood(m, seeds, cut)
    if region & other:
        raise MapError(f"circuit {index} does not separate the sphere")
    return PatchReport(
        arcs=0,
        obtuse=0,
        acute=0,
        p_prime=Counter(len(m.faces[f]) for f in region),
        regular=True,
        faces=tuple(sorted(region)),
    )


def region_boundary(m: PlanarMap, region: Iterable[int]) -> tuple[list[int], list[int]]:
    """Closed boundary walk of a face set (region on the left) plus the turn
    at the head of each dart: 0 for left, 1 for right.  A region whose
    boundary is not a single cycle is rejected."""
    reg = set(region)
    face_of = m.face_of
    bset = {d for f in reg for d in m.faces[f] if face_of[d ^ 1] not in reg}
    if not bset:
        raise MapError("region has empty boundary")
    d = start = min(bset)
    walk: list[int] = []
    turns: list[int] = []
    while True:
        walk.append(d)
        x = m.phi[d]
        while face_of[x ^ 1] in reg:
            x = m.sigma[x]
        turns.append(0 if x == m.phi[d] else 1)
        d = x
        if d == start:
            break
        if len(walk) > len(bset):
            raise MapError("region boundary does not close")
    if len(walk) != len(bset):
        raise MapError("region boundary has more than one component")
    return walk, turns


def _arc_decomposition(
    m: PlanarMap, walk: Sequence[int], turns: Sequence[int], acute: set[int]
) -> tuple[list[list[int]], int, int]:
    """Split a boundary walk into circuit arcs.

    Corners live at alternation breaks.  Every claimed acute vertex must sit
    at the middle of a left-left-left run; remaining left-left breaks are
    obtuse corners whose shared edge both neighbouring arcs carry.
    """
    n = len(walk)
    if any(turns[i] == 1 and turns[(i + 1) % n] == 1 for i in range(n)):
        raise MapError("boundary has a reflex corner; not a patch")
    ll = [i for i in range(n) if turns[i] == 0 and turns[(i + 1) % n] == 0]
    absorbed: set[int] = set()
    acute_cuts: list[int] = []
    for j in range(n):
        v = m.vertex_of[walk[j] ^ 1]
        if v not in acute:
            continue
        prev = (j - 1) % n
        if not (turns[prev] == turns[j] == turns[(j + 1) % n] == 0):
            raise MapError(f"vertex {v} is not at an acute corner of the walk")
        if prev in absorbed or j in absorbed:
            raise MapError(f"acute corner at vertex {v} overlaps another corner")
        absorbed.update((prev, j))
        acute_cuts.append(j)
    leftover = [i for i in ll if i not in absorbed]
    if not ll:
        return [list(walk)], 0, 0

    # a cut after position i starts the next arc at walk[i+1]; an obtuse cut
    # additionally lets the previous arc run through that shared dart
    cuts = sorted([(i, True) for i in leftover] + [(j, False) for j in acute_cuts])
    arcs: list[list[int]] = []
    for k, (i, _) in enumerate(cuts):
        jnext, shared_next = cuts[(k + 1) % len(cuts)]
        arc = [walk[(i + 1) % n]]
        p = (i + 2) % n
        stop = (jnext + 1) % n
        while p != stop:
            arc.append(walk[p])
            p = (p + 1) % n
        if shared_next:
            arc.append(walk[stop])
        arcs.append(arc)
    return arcs, len(leftover), len(acute_cuts)


def _zigzag_step(m: PlanarMap, d: int, turn: int) -> int:
    return m.phi[d] if turn == LEFT else m.sigma_inv[d ^ 1]


def _continuations(m: PlanarMap, arc: Sequence[int]) -> list[int]:
    """Darts the bounding circuit takes just beyond either end of an arc.
    One-dart arcs constrain nothing, so both turn senses count at each end."""
    if len(arc) == 1:
        d = arc[0]
        return [
            _zigzag_step(m, d, 0),
            _zigzag_step(m, d, 1),
            _pre_step(m, d, 0),
            _pre_step(m, d, 1),
        ]
    first = _turn_between(m, arc[0], arc[1])
    last = _turn_between(m, arc[-2], arc[-1])
    out = [_zigzag_step(m, arc[-1], 1 - last), _pre_step(m, arc[0], 1 - first)]
    return out


def _turn_between(m: PlanarMap, d: int, d2: int) -> int:
    if m.phi[d] == d2:
        return 0
    if m.sigma_inv[d ^ 1] == d2:
        return 1
    raise MapError(f"darts {d} -> {d2} are not a circuit step")


def _pre_step(m: PlanarMap, d: int, turn: int) -> int:
    """The dart from which a circuit reaches d by a turn of the given sense."""
    if turn == LEFT:
        return m.sigma_inv[d] ^ 1
    return m.sigma[d] ^ 1


def regularity_check(m: PlanarMap, arcs: Sequence[Sequence[int]]) -> bool:
    """True iff the closed arc sequence bounds a patch all of whose bounding
    circuits continue to the outside.  Raises if the arcs do not join up into
    the boundary of a disk of faces kept on their left."""
    _check_3valent(m)
    if not arcs or any(not a for a in arcs):
        raise MapError("arcs must be non-empty dart sequences")
    for arc in arcs:
        steps = [_turn_between(m, d, d2) for d, d2 in zip(arc, arc[1:])]
        if any(a == b for a, b in zip(steps, steps[1:])):
            raise MapError("arc turns do not alternate; not a circuit segment")
    for a, b in zip(arcs, [*arcs[1:], arcs[0]]):
        if a[-1] == b[0]:
            continue  # obtuse: shared dart
        if m.vertex_of[a[-1] ^ 1] != m.vertex_of[b[0]]:
            raise MapError("consecutive arcs neither share a dart nor a vertex")
    edge_cut = {d >> 1 for arc in arcs for d in arc}
    seeds = {m.face_of[d] for arc in arcs for d in arc}
    region = _flood(m, seeds, edge_cut)
    if any(m.face_of[d ^ 1] in region for arc in arcs for d in arc):
        raise MapError("arcs do not close off a region")
    for arc in arcs:
        for c in _continuations(m, arc):
            e = c >> 1
            if e in edge_cut:
                return False
            u, v = m.face_of[2 * e], m.face_of[2 * e + 1]
            if u in region or v in region:
                return False
    return True


def region_patch_report(
    m: PlanarMap, region: Iterable[int], acute: Iterable[int] = ()
) -> PatchReport:
    """View a disk of faces as a patch.  Corner spots are read off the
    boundary turns; the caller says which of them are acute (all others are
    taken as obtuse, which is the coarsest reading).  The regular flag comes
    from the continuation test on the resulting arcs."""
    _check_3valent(m)
    reg = sorted(set(region))
    walk, turns = region_boundary(m, reg)
    arcs, t_ob, t_ac = _arc_decomposition(m, walk, turns, set(acute))
    if t_ob + t_ac == 0:
        regular = True  # closed circuit boundary: nothing continues anywhere
    else:
        regular = regularity_check(m, arcs)
    return PatchReport(
        arcs=t_ob + t_ac,
        obtuse=t_ob,
        acute=t_ac,
        p_prime=Counter(len(m.faces[f]) for f in reg),
        regular=regular,
        faces=tuple(reg),
    )


def arrangement_face_report(arr: Arrangement, index: int) -> PatchReport:
    """A disk face of a curve arrangement as a patch: its corners are curve
    crossings, obtuse when the two curve branches cut adjacent edges of the
    crossing hexagon on both sides of a shared boundary edge, acute when
    they pinch a single vertex."""
    f = arr.faces[index]
    if f.chi != 1:
        raise MapError(f"arrangement face {index} is not a disk (chi={f.chi})")
    return PatchReport(
        arcs=f.t_obtuse + f.t_acute,
        obtuse=f.t_obtuse,
        acute=f.t_acute,
        p_prime=Counter(f.p_prime),
        regular=True,
        faces=f.whole_faces,
    )
