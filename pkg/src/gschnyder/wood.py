"""Three-color edge labelings of rooted triangulations, and their validation.

A wood assigns every edge of a rooted triangulation a color in {0, 1, 2}
and an orientation (the ``out`` brin), except for the three root-face edges
and for a set of *special* edges.  A special edge stands for two parallel
copies separated by a flat 2-gon; each copy carries its own color (always
0 or 1) and orientation.  ``side_a`` is the copy that flanks the face on
the ``2e`` side of the original edge and keeps the edge id when the copies
are materialized; ``side_b`` is the added copy.  The working copy with all
specials materialized is rebuilt deterministically by doubling the special
edges in list order, so the doubled form never needs to be stored.

Validation checks, reported separately:

* ``well_formed``: label arrays shaped and ranged correctly;
* ``root_face_condition``: every colored edge at v2 points in with color 2
  and v2 touches no special; at v0 and v1 the sector at the root face
  holds only inward color-0 (resp. color-1) edges;
* ``inner_local_condition``: each inner vertex has exactly one outward
  color-2 edge, and every sector between consecutive cuts (the outward
  color-2 edge, the flat 2-gons of specials, the root face at v0/v1)
  reads, in ccw order: inward 1s, one outward 0, inward 2s, one outward 1,
  inward 0s;
* ``cut_graph_condition``: outward color-2 edges leave only inner
  vertices, one each, and with the two root edges at v2 they form a
  spanning tree (so the flow along them cannot cycle and drains into v2,
  directly or through v0/v1); adding the special edges cuts the surface
  into a disk: the remaining edges are a spanning tree of the dual; the
  special count is twice the genus;
* ``g0_cellular`` / ``g1_cellular``: the color-0 (resp. color-1) labels
  plus the two root edges at v0 (resp. v1) span all vertices, are
  connected, have n + 4g - 1 edges, and leave exactly 1 + 2g faces when
  embedded.

The first four make up ``passed``; the two cellular checks follow from
them and are reported for cross-checking.
"""

from __future__ import annotations

from typing import TextIO

from .core_map import (
    Map,
    _insert_parallel_edge,
    anchored_correspondence,
    root_roles,
    validate_triangulation,
)
from .errors import CorruptMap, MissingOut2

__all__ = [
    "SpecialSide",
    "WoodSpecial",
    "GSchnyderWood",
    "ValidationReport",
    "validate",
    "sectors_of",
    "ColorClass",
    "color_subgraph",
    "cut_subgraph",
    "woods_equivalent",
    "save_gsw",
    "load_gsw",
]


class SpecialSide:
    """One copy of a special edge: its color and its out brin.

    The out brin is expressed in original-edge brins (2e or 2e + 1) for
    both sides; for side_b it names the added copy's brin at the same
    extremity.
    """

    __slots__ = ("color", "out")

    def __init__(self, color: int, out: int) -> None:
        self.color = color
        self.out = out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SpecialSide)
            and self.color == other.color
            and self.out == other.out
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SpecialSide({self.color}, {self.out})"


class WoodSpecial:
    __slots__ = ("edge", "side_a", "side_b")

    def __init__(self, edge: int, side_a: SpecialSide, side_b: SpecialSide):
        self.edge = edge
        self.side_a = side_a
        self.side_b = side_b

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"WoodSpecial({self.edge}, {self.side_a!r}, {self.side_b!r})"


class GSchnyderWood:
    __slots__ = (
        "map",
        "root_face",
        "b_star",
        "v0",
        "v1",
        "v2",
        "e01",
        "e02",
        "e12",
        "color",
        "out",
        "specials",
        "from_traversal",
    )

    def __init__(
        self,
        m: Map,
        root_face: int,
        color: list[int],
        out: list[int],
        specials: list[WoodSpecial],
        from_traversal: bool = False,
    ) -> None:
        self.map = m
        self.root_face = root_face
        b_star, b_theta, v0, v2, v1 = root_roles(m, root_face)
        self.b_star = b_star
        self.v0 = v0
        self.v1 = v1
        self.v2 = v2
        self.e01 = b_star >> 1
        self.e02 = b_theta >> 1
        self.e12 = m.phi(b_theta) >> 1
        self.color = color
        self.out = out
        self.specials = specials
        self.from_traversal = from_traversal

    def validate(self) -> "ValidationReport":
        return validate(self)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"GSchnyderWood(n={self.map.n_vertices}, g={self.map.genus}, "
            f"specials={len(self.specials)})"
        )


# ------------------------------------------------------------ doubled rebuild


class _Doubled:
    """Working copy of the host map with every special edge doubled."""

    __slots__ = (
        "origin",
        "follower",
        "prev",
        "face_of",
        "vertex_rep",
        "c2",
        "o2",
        "twin_of",
        "cut_faces",
        "n_edges",
    )


def _rebuild_doubled(wood: GSchnyderWood) -> _Doubled:
    m = wood.map
    d = _Doubled()
    d.origin, d.follower, d.prev, d.face_of = m.copy_arrays()
    d.twin_of = []
    for i, sp in enumerate(wood.specials):
        twin = _insert_parallel_edge(
            d.origin, d.follower, d.prev, d.face_of, sp.edge, m.n_faces + i
        )
        d.twin_of.append(twin)
    d.cut_faces = set(range(m.n_faces, m.n_faces + len(wood.specials)))
    ne = len(d.origin) >> 1
    d.n_edges = ne
    d.c2 = [-1] * ne
    d.o2 = [-1] * ne
    for e in range(m.n_edges):
        d.c2[e] = wood.color[e]
        d.o2[e] = wood.out[e]
    for sp, twin in zip(wood.specials, d.twin_of):
        d.c2[sp.edge] = sp.side_a.color
        d.o2[sp.edge] = sp.side_a.out
        d.c2[twin] = sp.side_b.color
        d.o2[twin] = 2 * twin + (sp.side_b.out & 1)
    d.vertex_rep = [-1] * m.n_vertices
    for b, v in enumerate(d.origin):
        if d.vertex_rep[v] < 0:
            d.vertex_rep[v] = b
    return d


# -------------------------------------------------------------------- sectors


def _sectors_at(wood: GSchnyderWood, d: _Doubled, v: int) -> list[list[int]]:
    """Sectors at v over the doubled map, as ccw brin runs between cuts.

    Cuts are the flat 2-gon gaps of specials, the root-face gap at v0/v1,
    and the outward color-2 brin at an inner vertex.  Root-edge brins are
    dropped from the runs.  At v0 the root sector is the first run; at v1
    it is the last; an inner vertex's first run starts right after its
    outward color-2 brin.
    """
    rot = [d.vertex_rep[v]]
    b = d.prev[rot[0]]
    while b != rot[0]:
        rot.append(b)
        b = d.prev[b]
    k = len(rot)
    root_edges = (wood.e01, wood.e02, wood.e12)
    inner = v not in (wood.v0, wood.v1, wood.v2)

    gap_cut = [False] * k
    item_cut = [False] * k
    root_gap_at = -1
    for i in range(k):
        f = d.face_of[rot[(i + 1) % k]]
        if f in d.cut_faces:
            gap_cut[i] = True
        elif v in (wood.v0, wood.v1) and f == wood.root_face:
            gap_cut[i] = True
            root_gap_at = i
    if inner:
        for i, bb in enumerate(rot):
            e = bb >> 1
            if d.c2[e] == 2 and d.o2[e] == bb:
                item_cut[i] = True
        if not any(item_cut):
            raise MissingOut2(f"vertex {v} has no outward color-2 edge")

    if not any(gap_cut) and not any(item_cut):
        return [[bb for bb in rot if (bb >> 1) not in root_edges]]

    if root_gap_at >= 0:
        start = (root_gap_at + 1) % k
    elif inner:
        start = (item_cut.index(True) + 1) % k
    else:
        start = (gap_cut.index(True) + 1) % k

    sectors: list[list[int]] = []
    cur: list[int] = []
    for j in range(k):
        i = (start + j) % k
        bb = rot[i]
        if item_cut[i]:
            sectors.append(cur)
            cur = []
        elif (bb >> 1) not in root_edges:
            cur.append(bb)
        if gap_cut[i]:
            sectors.append(cur)
            cur = []
    assert not cur, "sector walk must end on the starting cut"
    return sectors


def _sector_matches(d: _Doubled, items: list[int]) -> bool:
    """ccw pattern: inward 1s, outward 0, inward 2s, outward 1, inward 0s."""
    seq = [(d.c2[bb >> 1], d.o2[bb >> 1] == bb) for bb in items]
    i = 0
    n = len(seq)
    while i < n and seq[i] == (1, False):
        i += 1
    if i == n or seq[i] != (0, True):
        return False
    i += 1
    while i < n and seq[i] == (2, False):
        i += 1
    if i == n or seq[i] != (1, True):
        return False
    i += 1
    while i < n and seq[i] == (0, False):
        i += 1
    return i == n


def sectors_of(wood: GSchnyderWood, v: int) -> list[list[tuple[int, int, bool]]]:
    """Sectors at v as (brin, color, points_out) triples, ccw per sector.

    Brins refer to the working copy with specials doubled; for a wood
    without specials they are the host map's brins.  Raises MissingOut2
    for an inner vertex lacking an outward color-2 edge.
    """
    d = _rebuild_doubled(wood)
    return [
        [(bb, d.c2[bb >> 1], d.o2[bb >> 1] == bb) for bb in run]
        for run in _sectors_at(wood, d, v)
    ]


# ----------------------------------------------------------------- validation


class ValidationReport:
    __slots__ = (
        "well_formed",
        "root_face_condition",
        "inner_local_condition",
        "cut_graph_condition",
        "g0_cellular",
        "g1_cellular",
        "messages",
    )

    def __init__(self) -> None:
        self.well_formed = False
        self.root_face_condition = False
        self.inner_local_condition = False
        self.cut_graph_condition = False
        self.g0_cellular = False
        self.g1_cellular = False
        self.messages: list[str] = []

    @property
    def passed(self) -> bool:
        return (
            self.well_formed
            and self.root_face_condition
            and self.inner_local_condition
            and self.cut_graph_condition
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        flags = ", ".join(
            f"{k}={getattr(self, k)}"
            for k in (
                "well_formed",
                "root_face_condition",
                "inner_local_condition",
                "cut_graph_condition",
                "g0_cellular",
                "g1_cellular",
            )
        )
        return f"ValidationReport({flags})"


def _check_well_formed(wood: GSchnyderWood, rep: ValidationReport) -> bool:
    m = wood.map
    bad = rep.messages
    if not validate_triangulation(m).is_triangulation:
        bad.append("host map is not a simple triangulation")
        return False
    if len(wood.color) != m.n_edges or len(wood.out) != m.n_edges:
        bad.append("label arrays do not match the edge count")
        return False
    special_ids = [sp.edge for sp in wood.specials]
    if len(set(special_ids)) != len(special_ids):
        bad.append("an edge is doubled twice")
        return False
    special_set = set(special_ids)
    roots = {wood.e01, wood.e02, wood.e12}
    if special_set & roots:
        bad.append("a root edge is marked special")
        return False
    ok = True
    for e in range(m.n_edges):
        c = wood.color[e]
        if e in roots or e in special_set:
            if c != -1:
                bad.append(f"edge {e} must stay uncolored")
                ok = False
        elif c not in (0, 1, 2):
            bad.append(f"edge {e} has color {c}")
            ok = False
        elif wood.out[e] >> 1 != e:
            bad.append(f"edge {e} out brin {wood.out[e]} is foreign")
            ok = False
    for sp in wood.specials:
        for side in (sp.side_a, sp.side_b):
            if side.color not in (0, 1):
                bad.append(f"special {sp.edge} side color {side.color}")
                ok = False
            if side.out >> 1 != sp.edge:
                bad.append(f"special {sp.edge} side out brin is foreign")
                ok = False
    return ok


def _check_root_face(
    wood: GSchnyderWood, d: _Doubled, rep: ValidationReport
) -> bool:
    ok = True
    roots = {wood.e01, wood.e02, wood.e12}
    special_set = {sp.edge for sp in wood.specials}
    # v2: no specials, all colored edges inward 2
    b0 = d.vertex_rep[wood.v2]
    b = b0
    while True:
        e = b >> 1
        if e >= wood.map.n_edges or e in special_set:
            rep.messages.append("a special edge touches v2")
            ok = False
        elif e not in roots and not (d.c2[e] == 2 and d.o2[e] == (b ^ 1)):
            rep.messages.append(f"edge {e} at v2 is not inward color 2")
            ok = False
        b = d.follower[b]
        if b == b0:
            break
    # v0 and v1: the root sector carries only inward 0s / inward 1s
    for v, col, pick_last in ((wood.v0, 0, False), (wood.v1, 1, True)):
        sectors = _sectors_at(wood, d, v)
        sector = sectors[-1] if pick_last else sectors[0]
        for bb in sector:
            e = bb >> 1
            if not (d.c2[e] == col and d.o2[e] == (bb ^ 1)):
                rep.messages.append(
                    f"root sector at vertex {v} holds a non-inward-{col} edge"
                )
                ok = False
                break
    return ok


def _check_inner_local(
    wood: GSchnyderWood, d: _Doubled, rep: ValidationReport
) -> bool:
    ok = True
    m = wood.map
    out2_count = [0] * m.n_vertices
    for e in range(d.n_edges):
        if d.c2[e] == 2:
            out2_count[d.origin[d.o2[e]]] += 1
    for v in range(m.n_vertices):
        if v in (wood.v0, wood.v1, wood.v2):
            continue
        if out2_count[v] != 1:
            rep.messages.append(
                f"inner vertex {v} has {out2_count[v]} outward color-2 edges"
            )
            ok = False
            continue
        try:
            sectors = _sectors_at(wood, d, v)
        except MissingOut2:
            rep.messages.append(f"inner vertex {v} lost its color-2 cut")
            ok = False
            continue
        for run in sectors:
            if not _sector_matches(d, run):
                rep.messages.append(f"a sector at vertex {v} is malformed")
                ok = False
                break
    # non-root sectors at v0 and v1 follow the same pattern
    for v, pick_last in ((wood.v0, False), (wood.v1, True)):
        sectors = _sectors_at(wood, d, v)
        rest = sectors[1:] if not pick_last else sectors[:-1]
        for run in rest:
            if not _sector_matches(d, run):
                rep.messages.append(f"a sector at root vertex {v} is malformed")
                ok = False
                break
    return ok


def _host_tree(m: Map, edges: set[int]) -> bool:
    """Do the edges connect every vertex of the host map?"""
    parent = list(range(m.n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = bytearray(m.n_vertices)
    for e in edges:
        a, b = m.edge_endpoints(e)
        touched[a] = touched[b] = 1
        parent[find(a)] = find(b)
    if not all(touched):
        return False
    return len({find(v) for v in range(m.n_vertices)}) == 1


def _check_cut_graph(
    wood: GSchnyderWood, rep: ValidationReport
) -> bool:
    ok = True
    m = wood.map
    g = m.genus
    if len(wood.specials) != 2 * g:
        rep.messages.append(
            f"{len(wood.specials)} specials for genus {g} (need {2 * g})"
        )
        ok = False
    # outward color-2 edges: exactly one per inner vertex, none at roots
    outs = [0] * m.n_vertices
    for e in range(m.n_edges):
        if wood.color[e] != 2:
            continue
        tail = m.origin[wood.out[e]]
        if tail in (wood.v0, wood.v1, wood.v2):
            rep.messages.append(f"color-2 edge {e} points out of a root vertex")
            ok = False
        else:
            outs[tail] += 1
    for v in range(m.n_vertices):
        if v in (wood.v0, wood.v1, wood.v2):
            continue
        if outs[v] != 1:
            rep.messages.append(
                f"inner vertex {v} has {outs[v]} outward color-2 edges"
            )
            ok = False
    # color-2 skeleton plus the root edges at v2 spans every vertex as a
    # tree; with one outward edge per inner vertex the flow along it can
    # only drain, never cycle
    tree = {e for e in range(m.n_edges) if wood.color[e] == 2}
    tree.add(wood.e02)
    tree.add(wood.e12)
    if len(tree) != m.n_vertices - 1 or not _host_tree(m, tree):
        rep.messages.append("the color-2 skeleton is not a spanning tree")
        ok = False
    # cutting along skeleton + specials leaves one disk: the remaining
    # edges must form a spanning tree of the dual
    cut = set(tree)
    cut.update(sp.edge for sp in wood.specials)
    rest = [e for e in range(m.n_edges) if e not in cut]
    if len(rest) != m.n_faces - 1:
        rep.messages.append(
            f"cut complement has {len(rest)} edges, expected {m.n_faces - 1}"
        )
        ok = False
    seen = bytearray(m.n_faces)
    adj: list[list[int]] = [[] for _ in range(m.n_faces)]
    for e in rest:
        fa, fb = m.face_of[2 * e], m.face_of[2 * e + 1]
        adj[fa].append(fb)
        adj[fb].append(fa)
    stack = [0]
    seen[0] = 1
    count = 1
    while stack:
        f = stack.pop()
        for gg in adj[f]:
            if not seen[gg]:
                seen[gg] = 1
                count += 1
                stack.append(gg)
    if count != m.n_faces:
        rep.messages.append("cut complement does not connect all faces")
        ok = False
    return ok


def _submap_profile(
    d: _Doubled, n_vertices: int, edges: set[int]
) -> tuple[bool, bool, int, int]:
    """(connected, spanning, edge count, face count) of an embedded subgraph."""
    in_sub = bytearray(d.n_edges)
    for e in edges:
        in_sub[e] = 1
    # connectivity and span via union-find on vertices
    parent = list(range(n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = bytearray(n_vertices)
    for e in edges:
        a, b = d.origin[2 * e], d.origin[2 * e + 1]
        touched[a] = touched[b] = 1
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    spanning = all(touched)
    roots = {find(v) for v in range(n_vertices) if touched[v]}
    connected = len(roots) == 1
    # submap facial walks: next-in-subgraph around each origin
    fol = d.follower
    brins = [b for b in range(2 * d.n_edges) if in_sub[b >> 1]]
    seen = {b: False for b in brins}
    faces = 0
    for b0 in brins:
        if seen[b0]:
            continue
        faces += 1
        b = b0
        while not seen[b]:
            seen[b] = True
            c = fol[b]
            while not in_sub[c >> 1]:
                c = fol[c]
            b = c ^ 1
    return connected, spanning, len(edges), faces


def _check_cellular(
    wood: GSchnyderWood, d: _Doubled, col: int, rep: ValidationReport
) -> bool:
    m = wood.map
    g = m.genus
    n = m.n_vertices
    edges = {e for e in range(d.n_edges) if d.c2[e] == col}
    edges.add(wood.e01)
    edges.add(wood.e02 if col == 0 else wood.e12)
    connected, spanning, ne, nf = _submap_profile(d, n, edges)
    want_e = n + 4 * g - 1
    ok = True
    if not connected or not spanning:
        rep.messages.append(f"color-{col} subgraph does not span connectedly")
        ok = False
    if ne != want_e:
        rep.messages.append(
            f"color-{col} subgraph has {ne} edges, expected {want_e}"
        )
        ok = False
    if nf != 1 + 2 * g:
        rep.messages.append(
            f"color-{col} subgraph bounds {nf} faces, expected {1 + 2 * g}"
        )
        ok = False
    return ok


def validate(wood: GSchnyderWood) -> ValidationReport:
    rep = ValidationReport()
    rep.well_formed = _check_well_formed(wood, rep)
    if not rep.well_formed:
        return rep
    d = _rebuild_doubled(wood)
    try:
        rep.root_face_condition = _check_root_face(wood, d, rep)
    except MissingOut2 as exc:
        rep.messages.append(str(exc))
        rep.root_face_condition = False
    try:
        rep.inner_local_condition = _check_inner_local(wood, d, rep)
    except MissingOut2 as exc:
        rep.messages.append(str(exc))
        rep.inner_local_condition = False
    rep.cut_graph_condition = _check_cut_graph(wood, rep)
    rep.g0_cellular = _check_cellular(wood, d, 0, rep)
    rep.g1_cellular = _check_cellular(wood, d, 1, rep)
    return rep


# -------------------------------------------------------------- color classes


class ColorClass:
    """Embedded color subgraph with its audit numbers."""

    __slots__ = ("edges", "connected", "spanning", "n_faces")

    def __init__(self, edges, connected, spanning, n_faces):
        self.edges = edges
        self.connected = connected
        self.spanning = spanning
        self.n_faces = n_faces


def color_subgraph(wood: GSchnyderWood, col: int) -> ColorClass:
    """Color class col with its root edges, over the doubled working copy.

    Edge ids up to the host edge count are host ids; larger ids are the
    added copies of specials, in special-list order.
    """
    if col not in (0, 1):
        raise CorruptMap("color classes are built for colors 0 and 1")
    d = _rebuild_doubled(wood)
    edges = {e for e in range(d.n_edges) if d.c2[e] == col}
    edges.add(wood.e01)
    edges.add(wood.e02 if col == 0 else wood.e12)
    connected, spanning, _, nf = _submap_profile(
        d, wood.map.n_vertices, edges
    )
    return ColorClass(sorted(edges), connected, spanning, nf)


def cut_subgraph(wood: GSchnyderWood) -> ColorClass:
    """Color-2 skeleton, the v2 root edges, and the specials, on the host.

    Cutting the surface along these edges opens it into a single disk, so
    the profile of a valid wood reports exactly one face.
    """
    m = wood.map
    host = _Doubled()
    host.origin, host.follower, host.prev, host.face_of = m.copy_arrays()
    host.n_edges = m.n_edges
    edges = {e for e in range(m.n_edges) if wood.color[e] == 2}
    edges.add(wood.e02)
    edges.add(wood.e12)
    edges.update(sp.edge for sp in wood.specials)
    connected, spanning, _, nf = _submap_profile(host, m.n_vertices, edges)
    return ColorClass(sorted(edges), connected, spanning, nf)


# ----------------------------------------------------------------- equivalence


def woods_equivalent(w1: GSchnyderWood, w2: GSchnyderWood) -> bool:
    """Rooted isomorphism carrying every label of w1 onto w2."""
    f = anchored_correspondence(w1.map, w1.b_star, w2.map, w2.b_star)
    if f is None:
        return False
    sp2 = {sp.edge: sp for sp in w2.specials}
    if len(w1.specials) != len(w2.specials):
        return False
    special1 = {sp.edge for sp in w1.specials}
    for e in range(w1.map.n_edges):
        if e in special1:
            continue
        e2 = f[2 * e] >> 1
        if w1.color[e] != w2.color[e2]:
            return False
        if w1.color[e] != -1 and f[w1.out[e]] != w2.out[e2]:
            return False
    for sp in w1.specials:
        img = f[2 * sp.edge]
        e2 = img >> 1
        other = sp2.get(e2)
        if other is None:
            return False
        # f preserves sides when 2e lands on the even brin
        if img & 1 == 0:
            pa, pb = other.side_a, other.side_b
        else:
            pa, pb = other.side_b, other.side_a
        for mine, theirs in ((sp.side_a, pa), (sp.side_b, pb)):
            if mine.color != theirs.color:
                return False
            if f[mine.out] != (2 * e2) | (theirs.out & 1):
                return False
    return True


# -------------------------------------------------------------------- text io


def save_gsw(wood: GSchnyderWood, out: TextIO) -> None:
    m = wood.map
    out.write(f"GSW {m.n_vertices} {m.genus} {wood.root_face}\n")
    for e in range(m.n_edges):
        if wood.color[e] != -1:
            out.write(f"edge {e} color {wood.color[e]} out {wood.out[e]}\n")
    for sp in wood.specials:
        out.write(
            f"special {sp.edge}"
            f" side {2 * sp.edge} color {sp.side_a.color} out {sp.side_a.out}"
            f" side {2 * sp.edge + 1} color {sp.side_b.color}"
            f" out {sp.side_b.out}\n"
        )


def load_gsw(m: Map, inp: TextIO) -> GSchnyderWood:
    lines = [ln.split() for ln in inp.read().splitlines() if ln.strip()]
    if not lines or lines[0][0] != "GSW" or len(lines[0]) != 4:
        raise CorruptMap("missing GSW header")
    n, g, root_face = (int(x) for x in lines[0][1:])
    if n != m.n_vertices or g != m.genus:
        raise CorruptMap("labels were saved for a different mesh")
    color = [-1] * m.n_edges
    out = [-1] * m.n_edges
    specials: list[WoodSpecial] = []
    for ln in lines[1:]:
        if ln[0] == "edge" and len(ln) == 6 and ln[2:5:2] == ["color", "out"]:
            e = int(ln[1])
            color[e] = int(ln[3])
            out[e] = int(ln[5])
        elif (
            ln[0] == "special"
            and len(ln) == 14
            and ln[2::2] == ["side", "color", "out", "side", "color", "out"]
        ):
            e = int(ln[1])
            side_a = SpecialSide(int(ln[5]), int(ln[7]))
            side_b = SpecialSide(int(ln[11]), int(ln[13]))
            specials.append(WoodSpecial(e, side_a, side_b))
        else:
            raise CorruptMap(f"unreadable GSW line: {' '.join(ln)}")
    return GSchnyderWood(m, root_face, color, out, specials)
