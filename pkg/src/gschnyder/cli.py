"""Command-line front-end.

One executable covers the whole pipeline: generate instances, compute and
validate woods, encode/decode the bit stream, check roundtrips, dump DOT,
and benchmark.  Exit code 0 means success, 1 a domain failure (invalid
wood, failed roundtrip, undecodable stream), 2 a usage or file problem.
Diagnostics go to stderr; data goes to the requested file or stdout.
"""

from __future__ import annotations

import argparse
import csv
import os
import statistics
import sys
import time

from .codec import decode, deserialize, encode, serialize
from .core_map import (
    Map,
    build_from_faces,
    maps_isomorphic,
    read_mesh,
    to_face_list,
    write_dot,
    write_tri,
)
from .errors import GSchnyderError
from .generators import (
    grid_torus,
    handle_sum,
    planar_random,
    planar_stacked,
    refine,
)
from .traversal import compute_schnyder
from .wood import (
    GSchnyderWood,
    SpecialSide,
    WoodSpecial,
    load_gsw,
    save_gsw,
    woods_equivalent,
)

_REPORT_CHECKS = (
    "well_formed",
    "root_face_condition",
    "inner_local_condition",
    "cut_graph_condition",
    "g0_cellular",
    "g1_cellular",
)


def _usage(msg: str) -> SystemExit:
    print(f"usage error: {msg}", file=sys.stderr)
    return SystemExit(2)


def _default_seed() -> int:
    env = os.environ.get("GSCHNYDER_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise _usage(f"GSCHNYDER_SEED must be an integer, got {env!r}")


def _out_stream(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def _write_text(path: str | None, emit) -> None:
    fh, close = _out_stream(path)
    try:
        emit(fh)
    finally:
        if close:
            fh.close()


def _load_wood(m: Map, path: str):
    with open(path, "r", encoding="ascii") as fh:
        return load_gsw(m, fh)


# ------------------------------------------------------------- subcommands


def _cmd_compute(args) -> int:
    m = read_mesh(args.mesh)
    wood = compute_schnyder(
        m, root_face=args.root_face, check_invariants=args.check_invariants
    )
    _write_text(args.output, lambda fh: save_gsw(wood, fh))
    print(
        f"computed wood: n={m.n_vertices} g={m.genus} "
        f"specials={len(wood.specials)}",
        file=sys.stderr,
    )
    return 0


def _cmd_validate(args) -> int:
    m = read_mesh(args.mesh)
    wood = _load_wood(m, args.wood)
    rep = wood.validate()
    for name in _REPORT_CHECKS:
        state = "ok" if getattr(rep, name) else "FAIL"
        print(f"{name}: {state}")
    for msg in rep.messages:
        print(f"  {msg}", file=sys.stderr)
    return 0 if rep.passed else 1


def _cmd_encode(args) -> int:
    m = read_mesh(args.mesh)
    if args.wood:
        wood = _load_wood(m, args.wood)
    else:
        wood = compute_schnyder(m, root_face=args.root_face)
    blob = serialize(encode(m, wood, force=args.force))
    if args.output is None or args.output == "-":
        sys.stdout.buffer.write(blob)
    else:
        with open(args.output, "wb") as fh:
            fh.write(blob)
    bits = 8 * len(blob)
    print(
        f"encoded: n={m.n_vertices} g={m.genus} {len(blob)} bytes "
        f"({bits / m.n_vertices:.3f} bits/vertex)",
        file=sys.stderr,
    )
    return 0


def _rekey_as_written(wood: GSchnyderWood) -> GSchnyderWood:
    """Re-express a wood against the numbering a .tri reader will rebuild.

    Edge and brin ids follow first appearance in the face list, so the
    in-memory numbering of a freshly decoded map does not survive the file.
    Vertex and face ids do, which pins a unique brin correspondence on a
    simple triangulation.
    """
    m = wood.map
    m2 = build_from_faces(m.n_vertices, to_face_list(m))
    pair = {
        (m2.origin[b], m2.origin[b ^ 1]): b for b in range(2 * m2.n_edges)
    }
    f = [
        pair[(m.origin[b], m.origin[b ^ 1])] for b in range(2 * m.n_edges)
    ]
    color = [-1] * m2.n_edges
    out = [-1] * m2.n_edges
    for e in range(m.n_edges):
        e2 = f[2 * e] >> 1
        color[e2] = wood.color[e]
        out[e2] = f[wood.out[e]] if wood.out[e] >= 0 else -1
    specials = []
    for sp in wood.specials:
        a = SpecialSide(sp.side_a.color, f[sp.side_a.out])
        b = SpecialSide(sp.side_b.color, f[sp.side_b.out])
        if f[2 * sp.edge] & 1:
            a, b = b, a
        specials.append(WoodSpecial(f[2 * sp.edge] >> 1, a, b))
    # face ids permute on a rebuild, so locate the root face geometrically
    return GSchnyderWood(
        m2, m2.face_of[f[wood.b_star]], color, out, specials,
        from_traversal=wood.from_traversal,
    )


def _cmd_decode(args) -> int:
    with open(args.stream, "rb") as fh:
        code = deserialize(fh.read())
    m, wood = decode(code)
    _write_text(args.output, lambda fh: write_tri(m, fh))
    if args.wood_out:
        with open(args.wood_out, "w", encoding="ascii") as fh:
            save_gsw(_rekey_as_written(wood), fh)
    print(
        f"decoded: n={m.n_vertices} g={m.genus} faces={m.n_faces}",
        file=sys.stderr,
    )
    return 0


def _cmd_roundtrip(args) -> int:
    m = read_mesh(args.mesh)
    wood = compute_schnyder(m, root_face=args.root_face)
    code = encode(m, wood)
    m2, w2 = decode(deserialize(serialize(code)))
    ok_map = maps_isomorphic(m, m2)
    ok_wood = woods_equivalent(wood, w2)
    verdict = "ok" if ok_map and ok_wood else "MISMATCH"
    print(
        f"roundtrip {verdict}: n={m.n_vertices} g={m.genus} "
        f"map={'ok' if ok_map else 'differs'} "
        f"wood={'ok' if ok_wood else 'differs'}"
    )
    return 0 if ok_map and ok_wood else 1


def _gen_instance(args) -> Map:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.kind == "torus":
        if len(args.params) != 2:
            raise _usage("gen torus needs two sizes: P Q")
        m = grid_torus(args.params[0], args.params[1])
    elif args.kind == "planar":
        if len(args.params) != 1:
            raise _usage("gen planar needs one size: N")
        m = planar_random(args.params[0], seed=seed)
    elif args.kind == "stacked":
        if len(args.params) != 1:
            raise _usage("gen stacked needs one size: N")
        m = planar_stacked(args.params[0], seed=seed)
    else:
        raise _usage(f"unknown generator kind {args.kind!r}")
    if args.handles:
        m = handle_sum(m, args.handles, seed=seed + 1)
    if args.refine:
        m = refine(m, args.refine)
    return m


def _cmd_gen(args) -> int:
    m = _gen_instance(args)
    _write_text(args.output, lambda fh: write_tri(m, fh))
    print(
        f"generated: n={m.n_vertices} e={m.n_edges} f={m.n_faces} "
        f"g={m.genus}",
        file=sys.stderr,
    )
    return 0


def _cmd_stats(args) -> int:
    print(f"{'file':<32} {'n':>8} {'g':>3} {'bytes':>9} {'bits/vertex':>12}")
    for path in args.streams:
        with open(path, "rb") as fh:
            blob = fh.read()
        code = deserialize(blob)
        bpv = 8 * len(blob) / code.n
        print(
            f"{os.path.basename(path):<32} {code.n:>8} {code.g:>3} "
            f"{len(blob):>9} {bpv:>12.3f}"
        )
    return 0


def _cmd_export_dot(args) -> int:
    m = read_mesh(args.mesh)
    wood = _load_wood(m, args.wood) if args.wood else None
    _write_text(args.output, lambda fh: write_dot(m, fh, wood=wood))
    return 0


def _bench_bases(genus: int, seed: int) -> Map:
    if genus == 0:
        return planar_random(60, seed=seed)
    if genus == 1:
        return grid_torus(6, 6)
    return handle_sum(grid_torus(5, 5), genus - 1, seed=seed)


def _cmd_bench(args) -> int:
    if args.kind != "refine-scaling":
        raise _usage(f"unknown bench kind {args.kind!r}")
    seed = args.seed if args.seed is not None else _default_seed()
    genus_list = [int(x) for x in args.genus.split(",") if x]
    os.makedirs(args.out_dir, exist_ok=True)
    rows = []
    for g in genus_list:
        m = _bench_bases(g, seed)
        for _ in range(args.rounds + 1):
            times = []
            bits = 0
            for _ in range(args.runs):
                t0 = time.perf_counter()
                wood = compute_schnyder(m, 0)
                blob = serialize(encode(m, wood))
                decode(deserialize(blob))
                times.append(time.perf_counter() - t0)
                bits = 8 * len(blob)
            rows.append(
                {
                    "genus": m.genus,
                    "n": m.n_vertices,
                    "seconds": statistics.median(times),
                    "bits_per_vertex": bits / m.n_vertices,
                }
            )
            r = rows[-1]
            print(
                f"g={r['genus']} n={r['n']:>7} {r['seconds']:.4f}s "
                f"{r['bits_per_vertex']:.3f} bits/vertex",
                file=sys.stderr,
            )
            m = refine(m, 1)
    csv_path = os.path.join(args.out_dir, "bench.csv")
    with open(csv_path, "w", newline="", encoding="ascii") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["genus", "n", "seconds", "bits_per_vertex"]
        )
        writer.writeheader()
        writer.writerows(rows)
    print(csv_path)
    for path in _bench_figures(rows, args.out_dir):
        print(path)
    return 0


def _bench_figures(rows, out_dir: str) -> list[str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_genus: dict[int, list[dict]] = {}
    for r in rows:
        by_genus.setdefault(r["genus"], []).append(r)
    made = []
    for field, label, fname in (
        ("seconds", "wall time (s)", "time_vs_n.png"),
        ("bits_per_vertex", "bits per vertex", "bits_per_vertex.png"),
    ):
        fig, ax = plt.subplots(figsize=(6, 4))
        for g in sorted(by_genus):
            pts = sorted(by_genus[g], key=lambda r: r["n"])
            ax.plot(
                [p["n"] for p in pts],
                [p[field] for p in pts],
                marker="o",
                label=f"genus {g}",
            )
        ax.set_xscale("log")
        if field == "seconds":
            ax.set_yscale("log")
        ax.set_xlabel("vertices")
        ax.set_ylabel(label)
        ax.legend()
        ax.grid(True, which="both", alpha=0.3)
        fig.tight_layout()
        path = os.path.join(out_dir, fname)
        fig.savefig(path, dpi=120)
        plt.close(fig)
        made.append(path)
    return made


# ------------------------------------------------------------------ parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gschnyder",
        description="Schnyder woods on triangulated surfaces: "
        "compute, validate, encode, decode, benchmark.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a wood and write it as .gsw")
    p.add_argument("mesh")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--root-face", type=int, default=0)
    p.add_argument("--check-invariants", action="store_true")
    p.set_defaults(run=_cmd_compute)

    p = sub.add_parser("validate", help="check a .gsw against its mesh")
    p.add_argument("wood")
    p.add_argument("--mesh", required=True)
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("encode", help="compress a mesh into a .gsc stream")
    p.add_argument("mesh")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--wood", default=None, help="reuse a saved .gsw")
    p.add_argument("--root-face", type=int, default=0)
    p.add_argument(
        "--force",
        action="store_true",
        help="accept a wood that did not come from the traversal",
    )
    p.set_defaults(run=_cmd_encode)

    p = sub.add_parser("decode", help="rebuild the mesh from a .gsc stream")
    p.add_argument("stream")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--wood-out", default=None, help="also save the wood")
    p.set_defaults(run=_cmd_decode)

    p = sub.add_parser("roundtrip", help="encode+decode and compare")
    p.add_argument("mesh")
    p.add_argument("--root-face", type=int, default=0)
    p.set_defaults(run=_cmd_roundtrip)

    p = sub.add_parser("gen", help="generate a triangulation")
    p.add_argument("kind", choices=["planar", "stacked", "torus"])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--handles", type=int, default=0)
    p.add_argument("--refine", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(run=_cmd_gen)

    p = sub.add_parser("stats", help="bits/vertex table for .gsc files")
    p.add_argument("streams", nargs="+")
    p.set_defaults(run=_cmd_stats)

    p = sub.add_parser("export-dot", help="Graphviz view, optionally colored")
    p.add_argument("mesh")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--wood", default=None)
    p.set_defaults(run=_cmd_export_dot)

    p = sub.add_parser("bench", help="scaling benchmark with CSV and figures")
    p.add_argument("--kind", default="refine-scaling")
    p.add_argument("--genus", default="1,2,4")
    p.add_argument("--rounds", type=int, default=3)
    p.add_argument("--runs", type=int, default=3)
    p.add_argument("--out-dir", default="bench-out")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(run=_cmd_bench)

    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except GSchnyderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
