"""Growing region state used by the traversal.

The region C holds a set of vertices, edges, and faces of a rooted
triangulation, starting from the root face and growing until it covers
everything.  The triangulation itself is kept as mutable arrays because the
traversal occasionally doubles an edge in place (adding a parallel copy and
a flat 2-gon between the two copies).

Vocabulary, fixed here and relied on by the traversal:

* a brin b is a *boundary* brin when its edge is in C but the face on its
  side is not; boundary brins chain into closed walks via
  ``walk_successor``;
* the *corner* of a boundary brin h is the clockwise fan at its origin from
  h to the next C-edge brin; the brins strictly inside are *exterior*;
* an edge is a *chord* when it is not in C but both endpoints are;
* a corner is *free* when it lies on walk 0, spans no chord, and is not one
  of the two corners at v0/v1 delimited by the root edge.
"""

from __future__ import annotations

from .core_map import Map, _insert_parallel_edge, root_roles

__all__ = ["Region", "SpecialRecord"]


class SpecialRecord:
    """One doubled edge: original id, its parallel copy, and the cause."""

    __slots__ = ("edge", "twin", "kind")

    def __init__(self, edge: int, twin: int, kind: str) -> None:
        self.edge = edge
        self.twin = twin
        self.kind = kind

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"SpecialRecord({self.edge}, {self.twin}, {self.kind!r})"


class Region:
    __slots__ = (
        "origin",
        "follower",
        "prev",
        "face_of",
        "n_vertices",
        "n_faces",
        "n_outside_faces",
        "v0",
        "v1",
        "v2",
        "e01",
        "e02",
        "e12",
        "b_star",
        "b_theta",
        "r01",
        "in_vertex",
        "in_edge",
        "in_face",
        "walk_id",
        "chord_cnt",
        "chords",
        "specials",
    )

    def __init__(self, m: Map, root_face: int) -> None:
        self.origin, self.follower, self.prev, self.face_of = m.copy_arrays()
        self.n_vertices = m.n_vertices
        self.n_faces = m.n_faces
        self.n_outside_faces = m.n_faces - 1

        self.b_star, self.b_theta, self.v0, self.v2, self.v1 = root_roles(
            m, root_face
        )
        walk = [self.b_star, self.b_theta, m.phi(self.b_theta)]
        self.e01 = self.b_star >> 1
        self.e02 = self.b_theta >> 1
        self.e12 = m.phi(self.b_theta) >> 1
        self.r01 = self.b_star ^ 1

        self.in_vertex = bytearray(m.n_vertices)
        self.in_edge = bytearray(m.n_edges)
        self.in_face = bytearray(m.n_faces)
        for v in (self.v0, self.v1, self.v2):
            self.in_vertex[v] = 1
        for b in walk:
            self.in_edge[b >> 1] = 1
        self.in_face[root_face] = 1

        nb = 2 * m.n_edges
        self.walk_id = [-1] * nb
        self.chord_cnt = [0] * nb
        for b in walk:
            self.walk_id[b ^ 1] = 0
        self.chords: set[int] = set()
        self.specials: list[SpecialRecord] = []

    # ------------------------------------------------------------ predicates

    @property
    def n_edges(self) -> int:
        return len(self.origin) >> 1

    @property
    def complete(self) -> bool:
        return self.n_outside_faces == 0

    def is_boundary(self, b: int) -> bool:
        return bool(self.in_edge[b >> 1]) and not self.in_face[self.face_of[b]]

    def is_chordal(self, e: int) -> bool:
        return (
            not self.in_edge[e]
            and bool(self.in_vertex[self.origin[2 * e]])
            and bool(self.in_vertex[self.origin[2 * e + 1]])
        )

    # --------------------------------------------------------------- corners

    def corner_end(self, h: int) -> int:
        """Next C-edge brin clockwise after h at origin(h)."""
        fol = self.follower
        ine = self.in_edge
        b = fol[h]
        while not ine[b >> 1]:
            b = fol[b]
        return b

    def corner_exteriors(self, h: int) -> list[int]:
        fol = self.follower
        ine = self.in_edge
        out = []
        b = fol[h]
        while not ine[b >> 1]:
            out.append(b)
            b = fol[b]
        return out

    def corner_of(self, x: int) -> int:
        """Boundary brin owning the corner that exterior brin x lies in."""
        prv = self.prev
        ine = self.in_edge
        b = prv[x]
        while not ine[b >> 1]:
            b = prv[b]
        return b

    def walk_successor(self, h: int) -> int:
        return self.corner_end(h) ^ 1

    def boundary_walk(self, h: int) -> list[int]:
        """Boundary brins of the walk through h, in walk order."""
        out = [h]
        b = self.walk_successor(h)
        while b != h:
            out.append(b)
            b = self.walk_successor(b)
        return out

    def complete_list(self, h: int) -> list[int]:
        """Walk through h with each corner's exterior brins interleaved."""
        out: list[int] = []
        b = h
        while True:
            out.append(b)
            out.extend(self.corner_exteriors(b))
            b = self.walk_successor(b)
            if b == h:
                return out

    # --------------------------------------------------------------- freedom

    def is_excluded(self, h: int) -> bool:
        if self.origin[h] not in (self.v0, self.v1):
            return False
        return self.e01 in (h >> 1, self.corner_end(h) >> 1)

    def is_free(self, h: int) -> bool:
        return (
            self.is_boundary(h)
            and self.walk_id[h] == 0
            and self.chord_cnt[h] == 0
            and not self.is_excluded(h)
        )

    # ------------------------------------------------------------- accounting

    def recount_corner(self, h: int) -> None:
        cnt = 0
        for x in self.corner_exteriors(h):
            if self.is_chordal(x >> 1):
                cnt += 1
        self.chord_cnt[h] = cnt

    def recount_all_chords(self) -> None:
        """Rebuild the chord set and every boundary corner's chord count."""
        self.chords.clear()
        ine = self.in_edge
        inv = self.in_vertex
        org = self.origin
        for e in range(self.n_edges):
            if not ine[e] and inv[org[2 * e]] and inv[org[2 * e + 1]]:
                self.chords.add(e)
        for b in range(len(self.walk_id)):
            if self.is_boundary(b):
                self.recount_corner(b)
            else:
                self.chord_cnt[b] = 0

    def retrace_walks(self) -> list[list[int]]:
        """Recompute walk ids from scratch.

        The walk through the root-edge brin r01 keeps id 0; the rest get ids
        by increasing smallest brin.  Returns the walks, indexed by id.
        """
        nb = len(self.walk_id)
        for b in range(nb):
            self.walk_id[b] = -1
        walks: list[list[int]] = []
        if self.is_boundary(self.r01):
            walks.append(self.boundary_walk(self.r01))
            for b in walks[0]:
                self.walk_id[b] = 0
        for b in range(nb):
            if self.walk_id[b] == -1 and self.is_boundary(b):
                w = self.boundary_walk(b)
                wid = len(walks)
                for c in w:
                    self.walk_id[c] = wid
                walks.append(w)
        return walks

    # --------------------------------------------------------------- surgery

    def double_edge(self, e: int, kind: str) -> int:
        """Double chord e; the copies and the 2-gon between them join C.

        Walk ids and chord counts are stale afterwards; the caller follows
        up with retrace_walks and recount_all_chords.
        """
        assert self.is_chordal(e), "only chords are ever doubled"
        new_face = self.n_faces
        twin = _insert_parallel_edge(
            self.origin, self.follower, self.prev, self.face_of, e, new_face
        )
        self.n_faces += 1
        self.in_face.append(1)
        self.in_edge[e] = 1
        self.in_edge.append(1)
        self.walk_id.extend((-1, -1))
        self.chord_cnt.extend((0, 0))
        self.chords.discard(e)
        self.specials.append(SpecialRecord(e, twin, kind))
        return twin
