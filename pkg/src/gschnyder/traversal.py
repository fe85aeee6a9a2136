"""Region-growing computation of the three-color edge labeling.

Starting from the root face, the region swallows one fan of faces at a time,
always at a *free* corner of its boundary: a corner on the walk through the
root edge, spanning no chord, and not pinned at v0/v1 by the root edge.
Conquering a corner colors its two delimiting edges (1 where the corner
starts, 0 where it ends) and points every swallowed spoke at the corner
vertex with color 2; the rim edges of the fan join the boundary uncolored
and are colored later, when their own corners fall.

When no free corner is left the boundary is blocked by chords.  Doubling a
chord whose two sides lie on different boundary walks merges those walks;
doubling one with both sides on the main walk splits it in two, which is
sound only when the chord's dual edge is not a bridge of the unconquered
part.  Each doubling records a special edge; a closed surface of genus g
needs exactly 2g of them, so requesting more is reported as being stuck.
"""

from __future__ import annotations

from collections import deque

from .core_map import Map, validate_triangulation
from .errors import CorruptMap, InternalStuck, NotFree, TooSmall
from .subcomplex import Region
from .wood import GSchnyderWood, SpecialSide, WoodSpecial

__all__ = [
    "TraversalLog",
    "find_bridges",
    "classify_chord",
    "conquer",
    "compute_schnyder",
]


class TraversalLog:
    """Flat event list with derived counters.

    Events are tuples: ("conquest", corner_brin, vertex, fan_size),
    ("merge", edge), ("split", edge).
    """

    __slots__ = ("events",)

    def __init__(self) -> None:
        self.events: list[tuple] = []

    @property
    def n_conquests(self) -> int:
        return sum(1 for ev in self.events if ev[0] == "conquest")

    @property
    def n_merges(self) -> int:
        return sum(1 for ev in self.events if ev[0] == "merge")

    @property
    def n_splits(self) -> int:
        return sum(1 for ev in self.events if ev[0] == "split")


def find_bridges(n: int, edges: list[tuple[int, int]]) -> set[int]:
    """Indices of the bridge edges of an undirected multigraph.

    Parallel copies are honored: two edges on the same endpoints are never
    bridges.  Iterative lowlink scan, one pass per component.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (a, b) in enumerate(edges):
        adj[a].append((b, i))
        adj[b].append((a, i))
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    timer = 0
    for s in range(n):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = timer
        timer += 1
        stack = [(s, -1, iter(adj[s]))]
        while stack:
            u, pei, it = stack[-1]
            descended = False
            for w, ei in it:
                if ei == pei:
                    continue  # the tree edge to the parent, skipped once
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, ei, iter(adj[w])))
                    descended = True
                    break
                if disc[w] < low[u]:
                    low[u] = disc[w]
            if descended:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] > disc[p]:
                    bridges.add(pei)
    return bridges


def _outside_dual(r: Region) -> tuple[int, list[tuple[int, int]], list[int]]:
    """Dual of the unconquered part: one node per outside face, one edge
    per edge not yet in the region.  Returns (nodes, endpoint pairs, the
    region edge id behind each dual edge)."""
    dense = [-1] * r.n_faces
    k = 0
    for f in range(r.n_faces):
        if not r.in_face[f]:
            dense[f] = k
            k += 1
    pairs: list[tuple[int, int]] = []
    ids: list[int] = []
    for e in range(r.n_edges):
        if not r.in_edge[e]:
            pairs.append((dense[r.face_of[2 * e]], dense[r.face_of[2 * e + 1]]))
            ids.append(e)
    return k, pairs, ids


def classify_chord(r: Region, e: int) -> str:
    """Effect of doubling edge e on the boundary.

    "merge" joins two walks, "split" divides the walk both sides lie on,
    "separating" would disconnect the unconquered part and is never taken,
    "not-chord" disqualifies e outright.
    """
    if not r.is_chordal(e):
        return "not-chord"
    wa = r.walk_id[r.corner_of(2 * e)]
    wb = r.walk_id[r.corner_of(2 * e + 1)]
    if wa != wb:
        return "merge"
    k, pairs, ids = _outside_dual(r)
    if ids.index(e) in find_bridges(k, pairs):
        return "separating"
    return "split"


def _pick_surgery(r: Region) -> tuple[int, str]:
    """Lowest mergeable chord touching walk 0, else lowest splittable one."""
    cands = sorted(r.chords)
    for e in cands:
        wa = r.walk_id[r.corner_of(2 * e)]
        wb = r.walk_id[r.corner_of(2 * e + 1)]
        if wa != wb and 0 in (wa, wb):
            return e, "merge"
    k, pairs, ids = _outside_dual(r)
    bridges = {ids[i] for i in find_bridges(k, pairs)}
    for e in cands:
        if e in bridges:
            continue
        wa = r.walk_id[r.corner_of(2 * e)]
        wb = r.walk_id[r.corner_of(2 * e + 1)]
        if wa == 0 and wb == 0:
            return e, "split"
    raise InternalStuck(
        f"{len(cands)} chords on the boundary but none can merge or split"
    )


def conquer(
    r: Region,
    h: int,
    c2: list[int],
    o2: list[int],
    fifo: deque | None = None,
) -> tuple[int, int]:
    """Swallow the fan at free corner h; returns (vertex, fan size).

    Colors the delimiters and spokes, repairs the boundary walk, the chord
    set and the corner chord counts, and pushes the corners that may have
    turned free onto fifo.
    """
    if not r.is_free(h):
        raise NotFree(f"corner {h} is not free")
    v = r.origin[h]
    h2 = r.corner_end(h)
    xs = r.corner_exteriors(h)
    fan = [h] + xs
    mm = len(fan)
    # rim_wb[j] runs along the fan rim w_j -> w_{j+1}; its face is fan
    # face j, so rho = opposite(rim_wb) are the future boundary brins
    rim_wb = [r.prev[b ^ 1] for b in fan]
    rho = [b ^ 1 for b in rim_wb]
    final = r.n_outside_faces == mm
    assert bool(r.in_edge[rim_wb[0] >> 1]) == final
    if final:
        assert mm == 1 and rim_wb[0] >> 1 == r.e01
        x_owner = -1
    else:
        # owner of the corner that absorbs the rim start, located before
        # the flags change the corner structure at w_0
        x_owner = r.corner_of(rim_wb[0])

    for b in fan:
        r.in_face[r.face_of[b]] = 1
    r.n_outside_faces -= mm
    for b in rim_wb:
        r.in_edge[b >> 1] = 1
    for x in xs:
        r.in_edge[x >> 1] = 1
        r.in_vertex[r.origin[x ^ 1]] = 1

    if (h >> 1) == r.e12 and (h2 >> 1) == r.e02:
        pass  # opening conquest at v2: both delimiters are root edges
    else:
        for b, col in ((h, 1), (h2, 0)):
            e = b >> 1
            assert c2[e] == -1, "a delimiter edge would be colored twice"
            c2[e] = col
            o2[e] = b
    for x in xs:
        e = x >> 1
        assert c2[e] == -1, "a spoke edge would be colored twice"
        c2[e] = 2
        o2[e] = x ^ 1

    # walk splice: ... x_owner, h, succ(h) ... -> ... x_owner, rho ...
    r.walk_id[h] = -1
    r.walk_id[h2 ^ 1] = -1
    r.chord_cnt[h] = 0
    r.chord_cnt[h2 ^ 1] = 0
    if final:
        return v, mm
    for b in rho:
        r.walk_id[b] = 0
    if mm == 1:
        # a one-face fan rides over an existing chord, now swallowed
        r.chords.discard(rim_wb[0] >> 1)

    # chords revealed by the new rim vertices; the far corner is counted
    # here, the near side lands in a recounted rho corner below
    for x in xs:
        b0 = x ^ 1
        b = b0
        while True:
            e = b >> 1
            if not r.in_edge[e] and r.in_vertex[r.origin[b ^ 1]]:
                r.chords.add(e)
                r.chord_cnt[r.corner_of(b ^ 1)] += 1
            b = r.follower[b]
            if b == b0:
                break

    for b in rho:
        r.recount_corner(b)
    r.recount_corner(x_owner)
    if fifo is not None:
        for b in rho:
            if r.is_free(b):
                fifo.append(b)
        if r.is_free(x_owner):
            fifo.append(x_owner)
    return v, mm


def _refill(r: Region, fifo: deque) -> None:
    fifo.clear()
    for b in r.boundary_walk(r.r01):
        if r.is_free(b):
            fifo.append(b)


def compute_schnyder(
    m: Map,
    root_face: int = 0,
    check_invariants: bool = False,
    log: TraversalLog | None = None,
) -> GSchnyderWood:
    """Label the edges of a rooted triangulation by growing a region.

    Deterministic for a fixed map and root face.  With check_invariants
    the finished labeling is run through the independent validator and a
    failure raises InternalStuck.
    """
    if m.n_vertices < 4:
        raise TooSmall("closed simple triangulations need at least 4 vertices")
    check = validate_triangulation(m)
    if not check.is_triangulation:
        kind, who = check.violations[0]
        raise CorruptMap(f"not a simple triangulation: {kind} at {who}")

    r = Region(m, root_face)
    c2 = [-1] * m.n_edges
    o2 = [-1] * m.n_edges
    fifo: deque[int] = deque()
    _refill(r, fifo)
    while not r.complete:
        h = -1
        while fifo:
            cand = fifo.popleft()
            if r.is_free(cand):
                h = cand
                break
        if h < 0:
            if len(r.specials) >= 2 * m.genus:
                raise InternalStuck(
                    f"no free corner left and the doubling budget of "
                    f"{2 * m.genus} is spent"
                )
            e, kind = _pick_surgery(r)
            r.double_edge(e, kind)
            c2.append(-1)
            o2.append(-1)
            if log is not None:
                log.events.append((kind, e))
            r.retrace_walks()
            r.recount_all_chords()
            _refill(r, fifo)
            continue
        v, mm = conquer(r, h, c2, o2, fifo)
        if log is not None:
            log.events.append(("conquest", h, v, mm))

    special_ids = {rec.edge for rec in r.specials}
    roots = (r.e01, r.e02, r.e12)
    specials = []
    for rec in r.specials:
        ca, cb = c2[rec.edge], c2[rec.twin]
        if ca not in (0, 1) or cb not in (0, 1):
            raise InternalStuck("a doubled edge finished with a flow color")
        specials.append(
            WoodSpecial(
                rec.edge,
                SpecialSide(ca, o2[rec.edge]),
                SpecialSide(cb, 2 * rec.edge + (o2[rec.twin] & 1)),
            )
        )
    color = c2[: m.n_edges]
    out = o2[: m.n_edges]
    for e in special_ids:
        color[e] = -1
        out[e] = -1
    for e in range(m.n_edges):
        if color[e] == -1 and e not in roots and e not in special_ids:
            raise InternalStuck(f"edge {e} finished uncolored")
    wood = GSchnyderWood(
        m, root_face, color, out, specials, from_traversal=True
    )
    if check_invariants:
        rep = wood.validate()
        if not rep.passed:
            raise InternalStuck(
                "the finished labeling fails validation: "
                + "; ".join(rep.messages)
            )
    return wood
