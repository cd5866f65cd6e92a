"""Binary interchange, ASCII adjacency lists, JSON reports, and SVG drawings.

The binary stream is the usual generator-interchange format: a 15-byte
``>>planar_code<<`` header, then one record per graph holding the vertex
count and each vertex's neighbor list (1-based, 0-terminated).  Streams store
rotations clockwise while this library keeps them counterclockwise, so lists
are reversed on both legs unless the caller opts out.  Counts of 255 or more
switch the record to little-endian 16-bit numbers throughout.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .planar_map import MapError, PlanarMap, build_map

HEADER = b">>planar_code<<"


# -- planar code -------------------------------------------------------------------


def _neighbor_lists(m: PlanarMap) -> list[list[int]]:
    return [[m.vertex_of[d ^ 1] for d in cyc] for cyc in m.vertices]


def read_planar_code(data: bytes, reverse: bool = True) -> list[PlanarMap]:
    """Decode every graph in a planar-code stream.

    With ``reverse`` (the default) the stored clockwise lists are flipped to
    the library's counterclockwise convention; pass False for streams that
    are already counterclockwise.
    """
    if not data.startswith(HEADER):
        raise MapError("planar-code header missing or misspelled")
    pos = len(HEADER)

    def take(width: int) -> int:
        nonlocal pos
        if pos + width > len(data):
            raise MapError("truncated planar-code record")
        val = int.from_bytes(data[pos:pos + width], "little")
        pos += width
        return val

    out = []
    while pos < len(data):
        n = take(1)
        width = 1
        if n == 255:
            n = take(2)
            width = 2
        if n == 0:
            raise MapError("planar-code record with zero vertices")
        nbrs: list[list[int]] = []
        for _ in range(n):
            cur: list[int] = []
            while (w := take(width)) != 0:
                if w > n:
                    raise MapError(f"neighbor {w} out of range in {n}-vertex record")
                cur.append(w - 1)
            nbrs.append(cur[::-1] if reverse else cur)
        out.append(build_map(nbrs, strict=False))
    return out


def write_planar_code(maps, reverse: bool = True) -> bytes:
    """Encode maps as one planar-code stream; inverse of read_planar_code."""
    out = bytearray(HEADER)
    for m in maps:
        wide = m.n_vertices >= 255
        width = 2 if wide else 1

        def put(x: int) -> None:
            out.extend(x.to_bytes(width, "little"))

        if wide:
            out.append(255)
        put(m.n_vertices)
        for cur in _neighbor_lists(m):
            for w in (cur[::-1] if reverse else cur):
                put(w + 1)
            put(0)
    return bytes(out)


# -- ASCII adjacency ---------------------------------------------------------------


def read_adjacency(text: str) -> PlanarMap:
    """One vertex per line: its counterclockwise neighbors as 0-based ids.

    Blank lines and ``#`` comments are skipped.
    """
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([int(tok) for tok in line.split()])
    if not rows:
        raise MapError("no adjacency rows found")
    return build_map(rows)


def write_adjacency(m: PlanarMap) -> str:
    return "\n".join(" ".join(map(str, row)) for row in _neighbor_lists(m)) + "\n"


# -- JSON reports ------------------------------------------------------------------


def z_report(m: PlanarMap, graph_id: str = "", selectors: set[str] | None = None) -> dict:
    """Assemble the analysis report for one map.

    selectors limits the expensive sections; None means everything.  Keys:
    z (zigzags + intersection data), railroads, symmetry, predicates.
    """
    from .railroad import is_tight, railroads
    from .symmetry import point_group, z_transitive
    from .zigzag import (ZigzagStructure, int_vector_string, z_balanced,
                         z_knotted, z_uniform, z_vector_string)

    want = selectors if selectors is not None else {"z", "railroads", "symmetry",
                                                    "predicates"}
    rep: dict = {
        "id": graph_id,
        "n": m.n_vertices,
        "edges": m.n_edges,
        "p_vector": {str(k): v for k, v in sorted(m.p_vector.items())},
    }
    st = ZigzagStructure(m) if want & {"z", "predicates"} else None
    if "z" in want:
        rep["z_vector"] = z_vector_string(st)
        rep["zigzags"] = [
            dict(z.as_dict(), int_vector=int_vector_string(st, z.index))
            for z in st.zigzags
        ]
        rep["int_matrix"] = st.int_matrix
    if "railroads" in want:
        rep["railroads"] = [
            {
                "length": r.length,
                "bounding": list(r.bounding),
                "self_paired": r.self_paired,
            }
            for r in railroads(m)
        ]
        rep["tight"] = is_tight(m)
    if "symmetry" in want:
        rep["point_group"] = point_group(m)
    if "predicates" in want:
        rep["predicates"] = {
            "z_uniform": z_uniform(st),
            "z_knotted": z_knotted(st),
            "z_balanced": z_balanced(st),
            "z_transitive": z_transitive(m, st),
        }
    return rep


def report_json(rep: dict) -> str:
    return json.dumps(rep, sort_keys=True, separators=(",", ":"))


# -- SVG ---------------------------------------------------------------------------


def tutte_layout(m: PlanarMap, outer_face: int) -> np.ndarray:
    """Barycentric coordinates: outer face on a regular polygon, every other
    vertex at the average of its neighbors (counted with multiplicity)."""
    ring = [m.vertex_of[d] for d in m.faces[outer_face]]
    if len(set(ring)) != len(ring):
        raise MapError("outer face passes through a vertex twice")
    n = m.n_vertices
    a = np.zeros((n, n))
    b = np.zeros((n, 2))
    for i, v in enumerate(ring):
        # face cycles run counterclockwise, so flip the outer ring to keep
        # the interior on the conventional side
        ang = -2 * math.pi * i / len(ring) + math.pi / 2
        a[v, v] = 1.0
        b[v] = (math.cos(ang), math.sin(ang))
    for v in range(n):
        if a[v, v]:
            continue
        deg = len(m.vertices[v])
        a[v, v] = deg
        for d in m.vertices[v]:
            a[v, m.vertex_of[d ^ 1]] -= 1.0
    try:
        xy = np.linalg.solve(a, b)
    except np.linalg.LinAlgError as exc:
        raise MapError(f"layout system is singular: {exc}") from None
    resid = float(np.abs(a @ xy - b).max())
    if resid > 1e-9:
        raise MapError(f"layout residual {resid:.3e} too large")
    return xy


def to_svg(m: PlanarMap, outer_face: int | None = None, size: int = 600) -> str:
    """Planar straight-line drawing as an SVG document.

    Maps that are not 3-connected still get a drawing, flagged with a
    warning annotation, but coincident vertices are then possible.
    """
    if outer_face is None:
        outer_face = max(range(len(m.faces)),
                         key=lambda f: (len(m.faces[f]),
                                        len({m.vertex_of[d] for d in m.faces[f]})))
    xy = tutte_layout(m, outer_face)
    pad, span = 0.06 * size, 0.88 * size
    lo, hi = xy.min(), xy.max()
    pts = (xy - lo) / (hi - lo) * span + pad
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    if m.node_connectivity() < 3:
        lines.append("<!-- warning: map is not 3-connected; "
                     "barycentric layout is best-effort -->")
    lines.append('<g stroke="black" stroke-width="1.2" fill="none">')
    for k in range(m.n_edges):
        (x1, y1), (x2, y2) = pts[m.vertex_of[2 * k]], pts[m.vertex_of[2 * k + 1]]
        lines.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" '
                     f'x2="{x2:.3f}" y2="{y2:.3f}"/>')
    lines.append("</g>")
    lines.append('<g fill="black">')
    for x, y in pts:
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2.4"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines)
