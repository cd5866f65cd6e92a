"""Command-line surface: ingest or generate maps, analyze them, run check suites.

Reports are newline-delimited JSON on stdout with deterministic key order;
diagnostics go to stderr.  Exit codes: 0 all good, 1 analysis or check
failures, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .planar_map import MapError, PlanarMap
from . import generators as gen
from .io_formats import (read_adjacency, read_planar_code, report_json, to_svg,
                         write_planar_code, z_report)

_SECTIONS = {"z", "railroads", "symmetry", "predicates"}
_ALIASES = {"tight": "railroads", "all": "all"}


def _parse_selectors(spec: str) -> set[str]:
    want: set[str] = set()
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        tok = _ALIASES.get(tok, tok)
        if tok == "all":
            return set(_SECTIONS)
        if tok not in _SECTIONS:
            raise MapError(f"unknown report section '{tok}'")
        want.add(tok)
    return want or set(_SECTIONS)


def _analyze_one(item: tuple[str, PlanarMap, frozenset[str]]) -> tuple[str, bool]:
    gid, m, selectors = item
    try:
        return report_json(z_report(m, gid, set(selectors))), True
    except Exception as exc:  # per-graph failures become data
        return json.dumps({"error": str(exc), "id": gid}, sort_keys=True), False


def _jobs(args) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("ZIGZAG_LAB_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise MapError(f"ZIGZAG_LAB_JOBS is not an integer: {env!r}")
    return os.cpu_count() or 1


def _read_stream(path: str, fmt: str, reverse: bool) -> list[PlanarMap]:
    data = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
    if fmt == "adjacency":
        return [read_adjacency(data.decode())]
    return read_planar_code(data, reverse=reverse)


def _run_reports(items: list[tuple[str, PlanarMap]], selectors: set[str],
                 jobs: int) -> tuple[list[str], bool]:
    work = [(gid, m, frozenset(selectors)) for gid, m in items]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_analyze_one, work))
    else:
        results = [_analyze_one(w) for w in work]
    lines = [line for line, _ in results]
    return lines, all(ok for _, ok in results)


def _cmd_analyze(args) -> int:
    try:
        selectors = _parse_selectors(args.report)
        jobs = _jobs(args)
        items: list[tuple[str, PlanarMap]] = []
        for nm in args.catalog or []:
            items.append((nm, gen.catalog_map(nm)))
        for path in args.inputs or []:
            for i, m in enumerate(_read_stream(path, args.format,
                                               not args.no_reverse)):
                items.append((f"{path}[{i}]", m))
    except (MapError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not items:
        print("error: nothing to analyze (use --catalog or --in)", file=sys.stderr)
        return 2
    lines, ok = _run_reports(items, selectors, jobs)
    for line in lines:
        print(line)
    if args.svg_dir:
        os.makedirs(args.svg_dir, exist_ok=True)
        for gid, m in items:
            safe = re.sub(r"[^A-Za-z0-9_.-]+", "_", gid)
            with open(os.path.join(args.svg_dir, safe + ".svg"), "w") as fh:
                fh.write(to_svg(m))
    return 0 if ok else 1


def _generate(args) -> list[tuple[str, PlanarMap]]:
    fam = args.family
    if fam == "catalog":
        return [(args.name, gen.catalog_map(args.name))]
    if fam == "prism":
        return [(f"prism-{args.m}", gen.prism(args.m))]
    if fam == "antiprism":
        return [(f"antiprism-{args.m}", gen.antiprism(args.m))]
    if fam == "g":
        return [(f"g-{args.n}", gen.g_series(args.n))]
    if fam == "gc":
        base = gen.catalog_map(args.base)
        return [(f"gc-{args.k}-{args.l}-{args.base}",
                 gen.goldberg_coxeter(base, args.k, args.l))]
    if fam == "gm":
        return [(f"gm-{args.s}-{args.m}-{args.twist}",
                 gen.gm_3n(args.s, args.m, args.twist))]
    if fam == "fullerene-h":
        return [(f"fullerene-h-{args.h}", gen.fullerene_h(args.h))]
    if fam == "3n":
        maps = gen.enumerate_3n(args.n)
        return [(f"3n-{args.n}-{i}", m) for i, m in enumerate(maps)]
    raise MapError(f"unknown family {fam}")


def _cmd_generate(args) -> int:
    try:
        items = _generate(args)
    except MapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.analyze:
        try:
            selectors = _parse_selectors(args.report)
            jobs = _jobs(args)
        except MapError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        lines, ok = _run_reports(items, selectors, jobs)
        for line in lines:
            print(line)
        return 0 if ok else 1
    payload = write_planar_code([m for _, m in items])
    if args.out and args.out != "-":
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
    return 0


# -- verification suites -----------------------------------------------------------

# z-vector and first-circuit intersection vector for the 18 named solids
_TABLE1 = {
    "Tetrahedron": ("4^3", "2^2"),
    "Cube": ("6^4", "2^3"),
    "Octahedron": ("6^4", "2^3"),
    "Dodecahedron": ("10^6", "2^5"),
    "Icosahedron": ("10^6", "2^5"),
    "Cuboctahedron": ("8^6", "2^4,0"),
    "Icosidodecahedron": ("10^12", "2^5,0^6"),
    "Rhombicuboctahedron": ("12^8", "2^6,0"),
    "Rhombicosidodecahedron": ("20^12", "2^10,0"),
    "TruncatedTetrahedron": ("12^3", "6^2"),
    "TruncatedCube": ("18^4", "6^3"),
    "TruncatedOctahedron": ("12^6", "4,2^4"),
    "TruncatedDodecahedron": ("30^6", "6^5"),
    "TruncatedIcosahedron": ("18^10", "2^9"),
    "TruncatedCuboctahedron": ("18^8", "6,2^6"),
    "TruncatedIcosidodecahedron": ("30^12", "10,2^10"),
    "SnubCube": ("30_{3,0}^4", "8^3"),
    "SnubDodecahedron": ("50_{5,0}^6", "8^5"),
}


def _check(name: str, expected, actual) -> dict:
    return {"assertion": name, "expected": expected, "actual": actual,
            "ok": expected == actual}


def _suite_table1() -> list[dict]:
    from .zigzag import ZigzagStructure, int_vector_string, z_vector_string
    out = []
    for nm, (wz, wi) in _TABLE1.items():
        st = ZigzagStructure(gen.catalog_map(nm))
        out.append(_check(f"{nm} z-vector", wz, z_vector_string(st)))
        out.append(_check(f"{nm} intersection vector", wi,
                          int_vector_string(st, 0)))
    return out


def _suite_theorems_3n() -> list[dict]:
    from .railroad import is_tight, railroads
    from .zigzag import ZigzagStructure
    out = []
    for s in range(1, 17):
        for m in range(1, 17):
            if s * m > 16 or s * m < 2:
                continue
            for twist in (0, 1):
                g = gen.gm_3n(s, m, twist)
                st = ZigzagStructure(g)
                tag = f"gm({s},{m},{twist})"
                lengths = sorted({z.length for z in st.zigzags})
                out.append(_check(f"{tag} lengths divisible by 4",
                                  [], [x for x in lengths if x % 4]))
                out.append(_check(f"{tag} at most 3 length classes",
                                  True, len(lengths) <= 3))
                out.append(_check(f"{tag} all circuits simple", True,
                                  all(z.is_simple for z in st.zigzags)))
                out.append(_check(f"{tag} railroads = circuits - 3",
                                  len(st.zigzags) - 3, len(railroads(g, st))))
                if is_tight(g):
                    n = g.n_vertices
                    out.append(_check(f"{tag} tight: z = n^3",
                                      [n, n, n],
                                      sorted(z.length for z in st.zigzags)))
                    pair = {st.int_matrix[i][j]
                            for i in range(3) for j in range(i + 1, 3)}
                    out.append(_check(f"{tag} tight: pairwise n/2",
                                      {n // 2}, pair))
    for q in (3, 5, 7, 9, 11):
        g = gen.gm_3n(q, 1, 0)
        out.append(_check(f"tight witness for n={4 * q}", True, is_tight(g)))
    for q in (3, 5, 7, 13):
        gs = gen.enumerate_3n(4 * q)
        out.append(_check(f"all {len(gs)} maps on {4 * q} vertices tight "
                          f"(n/4 prime)", True, all(is_tight(g) for g in gs)))
    return out


def _suite_theorems_4n() -> list[dict]:
    from .railroad import is_tight
    from .zigzag import ZigzagStructure, orient_all_type1
    out = []
    corpus = [
        ("Cube", gen.cube()),
        ("TruncatedOctahedron", gen.catalog_map("TruncatedOctahedron")),
        ("prism(6)", gen.prism(6)),
        ("chamfered cube", gen.chamfer(gen.cube())),
        ("gc(2,1) of cube", gen.goldberg_coxeter(gen.cube(), 2, 1)),
        ("gc(2,2) of cube", gen.goldberg_coxeter(gen.cube(), 2, 2)),
        ("gc(3,1) of cube", gen.goldberg_coxeter(gen.cube(), 3, 1)),
    ]
    for nm in ("Cube", "TruncatedOctahedron"):
        m = gen.catalog_map(nm)
        st = ZigzagStructure(m)
        out.append(_check(f"{nm} tight", True, is_tight(m)))
        out.append(_check(f"{nm} all circuits simple", True,
                          all(z.is_simple for z in st.zigzags)))
    for nm, m in corpus:
        st = ZigzagStructure(m)
        bits = orient_all_type1(m, st)
        out.append(_check(f"{nm} has an all-type-1 orientation", True,
                          bits is not None))
        ints = {st.int_matrix[i][j]
                for i, zi in enumerate(st.zigzags) if zi.is_simple
                for j, zj in enumerate(st.zigzags) if zj.is_simple and j > i}
        out.append(_check(f"{nm} simple-pair intersections in 0/2/4/6",
                          [], sorted(ints - {0, 2, 4, 6})))
        if is_tight(m):
            out.append(_check(f"{nm} tight: at most 9 circuits", True,
                              len(st.zigzags) <= 9))
    return out


def _suite_fullerene_h() -> list[dict]:
    from .symmetry import point_group, zigzag_orbits
    from .zigzag import ZigzagStructure, int_vector_string, z_vector_string
    out = []
    for h in (2, 4, 6, 8, 10):
        m = gen.fullerene_h(h)
        st = ZigzagStructure(m)
        out.append(_check(f"h={h} vertex count", 18 * h - 8, m.n_vertices))
        out.append(_check(f"h={h} pentagon count", 12,
                          m.p_vector.get(5, 0)))
        simple = [z.index for z in st.zigzags
                  if z.is_simple and z.length == 6 * h]
        ok = any(st.int_matrix[i][j] == h
                 for a, i in enumerate(simple) for j in simple[a + 1:])
        out.append(_check(f"h={h} designated pair shares {h} edges", True, ok))
        want = "Td" if h == 2 else ("D2h" if h % 4 == 0 else "D2d")
        out.append(_check(f"h={h} point group", want, point_group(m)))
        if h == 2:
            out.append(_check("h=2 z-vector", "12^7", z_vector_string(st)))
            out.append(_check("h=2 intersection vector", "2^6",
                              int_vector_string(st, 0)))
            orbit_sizes = sorted(len(o) for o in zigzag_orbits(m, st))
            out.append(_check("h=2 circuit orbits", [3, 4], orbit_sizes))
    return out


def _default_corpus() -> list[tuple[str, PlanarMap]]:
    corpus = [(nm, gen.catalog_map(nm)) for nm in gen.catalog_names()]
    corpus += [(f"g({i})", gen.g_series(i)) for i in (1, 2, 3)]
    corpus += [(f"gm(2,4,{t})", gen.gm_3n(2, 4, t)) for t in (0, 1)]
    corpus += [("gm(3,2,0)", gen.gm_3n(3, 2, 0)), ("gm(5,1,0)", gen.gm_3n(5, 1, 0))]
    corpus += [(f"fullerene-h({h})", gen.fullerene_h(h)) for h in (2, 4)]
    corpus += [("gc(2,1) of tetrahedron",
                gen.goldberg_coxeter(gen.tetrahedron(), 2, 1)),
               ("gc(2,0) of dodecahedron",
                gen.goldberg_coxeter(gen.dodecahedron(), 2, 0)),
               ("chamfered cube", gen.chamfer(gen.cube())),
               ("prism(6)", gen.prism(6)), ("prism(7)", gen.prism(7)),
               ("antiprism(4)", gen.antiprism(4))]
    return corpus


def _suite_invariants(extra: list[tuple[str, PlanarMap]] | None = None,
                      orientations: int = 100) -> list[dict]:
    from .patch import arrangement_face_report, zigzag_interior
    from .railroad import (curve_arrangement, pseudo_roads, railroads,
                           railroad_self_intersections)
    from .zigzag import (ZigzagStructure, central_circuits, edge_types,
                         face_type1_counts, vertex_type2_counts)
    out = []
    corpus = _default_corpus() + (extra or [])
    rng = random.Random(138979)
    for nm, m in corpus:
        st = ZigzagStructure(m)
        out.append(_check(f"{nm}: circuit lengths sum to 2E", 2 * m.n_edges,
                          sum(z.length for z in st.zigzags)))
        out.append(_check(f"{nm}: circuit lengths even", [],
                          [z.length for z in st.zigzags if z.length % 2]))
        parity_bad = 0
        for _ in range(orientations):
            bits = [rng.randint(0, 1) for _ in st.zigzags]
            types = edge_types(st, bits)
            if any(c % 2 for c in vertex_type2_counts(m, types)):
                parity_bad += 1
            if any(c % 2 for c in face_type1_counts(m, types)):
                parity_bad += 1
        out.append(_check(f"{nm}: orientation parity laws", 0, parity_bad))

        three_valent = all(len(c) == 3 for c in m.vertices)
        if three_valent:
            bad_sides = 0
            for z in st.zigzags:
                if not z.is_simple:
                    continue
                for side in ("left", "right"):
                    rep = zigzag_interior(m, st, z.index, side)
                    if not rep.identity_holds():
                        bad_sides += 1
            out.append(_check(f"{nm}: local Euler identity on circuit sides",
                              0, bad_sides))
            arr = curve_arrangement(m, st)
            bad_faces = sum(
                1 for i, f in enumerate(arr.faces)
                if f.chi == 1 and not arrangement_face_report(arr, i).identity_holds()
            )
            out.append(_check(f"{nm}: local Euler identity on arrangement faces",
                              0, bad_faces))

            rails = railroads(m, st)
            law_bad = 0
            for r in rails:
                if r.self_paired:
                    continue
                d = railroad_self_intersections(m, st, r)
                za, zb = r.bounding
                if za == zb and sum(1 for r2 in rails
                                    if za in r2.bounding) == 1:
                    z = st.zigzags[za]
                    if d["m2"] + 3 * d["m3"] != z.a1 + z.a2:
                        law_bad += 1
            out.append(_check(f"{nm}: double/triple crossing law", 0, law_bad))

            sizes = {len(f) for f in m.faces}
            if 6 in sizes and len(sizes - {6}) == 1:
                hexes = sum(1 for f in m.faces if len(f) == 6)
                cover = sum(len(r.hexagons) for r in rails)
                cover += sum(len(r.hexagons) for r in pseudo_roads(m))
                out.append(_check(f"{nm}: hexagons triple-covered",
                                  3 * hexes, cover))

            med = m.medial()
            out.append(_check(f"{nm}: medial central circuits match circuits",
                              sorted(z.length for z in st.zigzags),
                              sorted(len(c) for c in central_circuits(med))))
    return out


_SUITES = {
    "table1": _suite_table1,
    "theorems-3n": _suite_theorems_3n,
    "theorems-4n": _suite_theorems_4n,
    "fullerene-h": _suite_fullerene_h,
    "invariants": _suite_invariants,
}


def _cmd_verify(args) -> int:
    suite = _SUITES[args.suite]
    if args.suite == "invariants":
        extra: list[tuple[str, PlanarMap]] = []
        try:
            for path in args.inputs or []:
                for i, m in enumerate(_read_stream(path, "planar-code",
                                                   not args.no_reverse)):
                    extra.append((f"{path}[{i}]", m))
        except (MapError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        results = suite(extra)
    else:
        results = suite()
    failures = 0
    for r in results:
        print(json.dumps(r, sort_keys=True, default=sorted))
        failures += not r["ok"]
    total = len(results)
    print(f"{args.suite}: {total - failures}/{total} assertions passed",
          file=sys.stderr)
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    top = argparse.ArgumentParser(prog="zigzag-lab", description=__doc__)
    sub = top.add_subparsers(dest="cmd", required=True)

    pa = sub.add_parser("analyze", help="report circuit structure of maps")
    pa.add_argument("--catalog", action="append",
                    help="named solid (repeatable)")
    pa.add_argument("--in", dest="inputs", action="append", metavar="PATH",
                    help="planar-code file, - for stdin (repeatable)")
    pa.add_argument("--format", choices=("planar-code", "adjacency"),
                    default="planar-code")
    pa.add_argument("--no-reverse", action="store_true",
                    help="input lists are already counterclockwise")
    pa.add_argument("--report", default="all",
                    help="comma list: z, railroads/tight, symmetry, predicates")
    pa.add_argument("--svg-dir", help="also write one SVG per graph here")
    pa.add_argument("--jobs", type=int, default=None)
    pa.set_defaults(fn=_cmd_analyze)

    pg = sub.add_parser("generate", help="construct family members")
    pg.add_argument("family", choices=("catalog", "prism", "antiprism", "g",
                                       "gc", "gm", "fullerene-h", "3n"))
    pg.add_argument("--name", help="catalog solid name")
    pg.add_argument("--m", type=int, default=3, help="prism/antiprism size, gm rings")
    pg.add_argument("--n", type=int, default=1, help="g-series index / 3n vertices")
    pg.add_argument("--base", default="Dodecahedron")
    pg.add_argument("--k", type=int, default=1)
    pg.add_argument("--l", type=int, default=0)
    pg.add_argument("--s", type=int, default=2)
    pg.add_argument("--twist", type=int, default=0, choices=(0, 1))
    pg.add_argument("--h", type=int, default=2)
    pg.add_argument("--analyze", action="store_true",
                    help="emit reports instead of planar code")
    pg.add_argument("--report", default="all")
    pg.add_argument("--out", help="write planar code here instead of stdout")
    pg.add_argument("--jobs", type=int, default=None)
    pg.set_defaults(fn=_cmd_generate)

    pv = sub.add_parser("verify", help="run a named assertion suite")
    pv.add_argument("suite", choices=sorted(_SUITES))
    pv.add_argument("--in", dest="inputs", action="append", metavar="PATH",
                    help="extra planar-code graphs (invariants suite)")
    pv.add_argument("--no-reverse", action="store_true")
    pv.set_defaults(fn=_cmd_verify)

    args = top.parse_args(argv)
    if args.cmd == "generate" and args.family == "catalog" and not args.name:
        top.error("generate catalog requires --name")
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
