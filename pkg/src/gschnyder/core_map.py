"""Orientable combinatorial maps in dense half-edge (brin) form.

A map is two integer arrays indexed by brin id: ``origin[b]`` is the vertex
a brin is attached to and ``follower[b]`` is the next brin clockwise around
that vertex.  The two brins of edge ``e`` are ``2*e`` and ``2*e + 1``, so
the opposite brin is ``b ^ 1`` and needs no table.  Faces are the orbits of
``phi: b -> opposite(follower(b))``; an orbit read in order is the
counter-clockwise contour of one face, with the face interior on the left.
Counting orbits closes the Euler identity ``V - E + F = 2 - 2g`` from which
the genus is read off.

Conventions used everywhere downstream:

* for a ccw face contour ``... x -> y -> z ...`` the walk brin at ``y`` is
  the brin from ``y`` toward ``x``, and its follower is the brin from ``y``
  toward ``z``;
* ``face_of(b)`` is the face swept clockwise from ``b`` to ``follower(b)``;
* ``build_from_faces`` makes each input contour one facial walk, in the
  given vertex order.
"""

from __future__ import annotations

from typing import Iterable, Sequence, TextIO

from .errors import CorruptMap, Disconnected, NonOrientable, OpenSurface

__all__ = [
    "Map",
    "TriangulationCheck",
    "build_from_faces",
    "root_roles",
    "facial_walk",
    "genus",
    "dual",
    "validate_triangulation",
    "to_face_list",
    "canonical_form",
    "anchored_correspondence",
    "maps_isomorphic",
    "brute_force_isomorphic",
    "read_tri",
    "write_tri",
    "read_off",
    "read_mesh",
    "write_dot",
]


class Map:
    """Immutable orientable map over dense brin arrays."""

    __slots__ = (
        "origin",
        "follower",
        "prev",
        "face_of",
        "face_rep",
        "vertex_rep",
        "n_vertices",
        "n_edges",
        "n_faces",
        "genus",
        "root_face",
    )

    def __init__(
        self,
        origin: list[int],
        follower: list[int],
        prev: list[int],
        face_of: list[int],
        face_rep: list[int],
        vertex_rep: list[int],
        n_vertices: int,
        n_edges: int,
        n_faces: int,
        genus_: int,
        root_face: int | None = None,
    ) -> None:
        self.origin = origin
        self.follower = follower
        self.prev = prev
        self.face_of = face_of
        self.face_rep = face_rep
        self.vertex_rep = vertex_rep
        self.n_vertices = n_vertices
        self.n_edges = n_edges
        self.n_faces = n_faces
        self.genus = genus_
        self.root_face = root_face

    # -------------------------------------------------------------- basics

    @property
    def n_brins(self) -> int:
        return 2 * self.n_edges

    @staticmethod
    def opposite(b: int) -> int:
        return b ^ 1

    def phi(self, b: int) -> int:
        """Next brin of the facial walk through b (ccw contour)."""
        return self.follower[b] ^ 1

    def phi_inv(self, b: int) -> int:
        return self.prev[b ^ 1]

    def degree(self, v: int) -> int:
        b0 = self.vertex_rep[v]
        d = 1
        b = self.follower[b0]
        while b != b0:
            d += 1
            b = self.follower[b]
        return d

    def brins_at(self, v: int) -> list[int]:
        """Brins attached to v in clockwise rotation order."""
        b0 = self.vertex_rep[v]
        out = [b0]
        b = self.follower[b0]
        while b != b0:
            out.append(b)
            b = self.follower[b]
        return out

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        return self.origin[2 * e], self.origin[2 * e + 1]

    def copy_arrays(self) -> tuple[list[int], list[int], list[int], list[int]]:
        """Mutable copies of (origin, follower, prev, face_of)."""
        return (
            list(self.origin),
            list(self.follower),
            list(self.prev),
            list(self.face_of),
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"Map(V={self.n_vertices}, E={self.n_edges}, "
            f"F={self.n_faces}, g={self.genus})"
        )

    # -------------------------------------------------------- construction

    @classmethod
    def from_arrays(
        cls,
        origin: list[int],
        follower: list[int],
        *,
        n_vertices: int | None = None,
        trusted: bool = False,
        root_face: int | None = None,
    ) -> "Map":
        """Finish a map from its two defining arrays.

        With ``trusted=False`` the arrays are checked: follower must be a
        permutation, every follower orbit must sit at a single vertex, every
        vertex id must be used, and the brin graph must be connected.
        Internal callers that rebuild from already-valid state pass
        ``trusted=True`` to skip the checks.
        """
        nb = len(follower)
        if nb != len(origin) or nb % 2:
            raise CorruptMap("origin/follower arrays must have equal even length")
        if nb == 0:
            raise CorruptMap("empty map")

        prev = [-1] * nb
        if trusted:
            for b, f in enumerate(follower):
                prev[f] = b
        else:
            for b, f in enumerate(follower):
                if not 0 <= f < nb or prev[f] != -1:
                    raise CorruptMap("follower is not a permutation of the brins")
                prev[f] = b

        nv = n_vertices if n_vertices is not None else max(origin) + 1
        vertex_rep = [-1] * nv
        if trusted:
            for b in range(nb):
                v = origin[b]
                if vertex_rep[v] < 0:
                    vertex_rep[v] = b
        else:
            seen = bytearray(nb)
            for b in range(nb):
                if seen[b]:
                    continue
                v = origin[b]
                if not 0 <= v < nv:
                    raise CorruptMap(f"origin {v} out of range")
                if vertex_rep[v] != -1:
                    raise CorruptMap(f"vertex {v} is split across several orbits")
                vertex_rep[v] = b
                c = follower[b]
                while c != b:
                    if origin[c] != v:
                        raise CorruptMap(
                            f"rotation orbit of brin {b} mixes vertices"
                        )
                    seen[c] = 1
                    c = follower[c]
            for v, r in enumerate(vertex_rep):
                if r < 0:
                    raise Disconnected(f"vertex {v} has no incident edge")

        face_of = [-1] * nb
        face_rep: list[int] = []
        nf = 0
        for b in range(nb):
            if face_of[b] >= 0:
                continue
            face_rep.append(b)
            c = b
            while face_of[c] < 0:
                face_of[c] = nf
                c = follower[c] ^ 1
            nf += 1

        if not trusted:
            # brin connectivity: opposite + follower generate the whole map
            reached = bytearray(nb)
            reached[0] = 1
            stack = [0]
            count = 1
            while stack:
                b = stack.pop()
                for c in (b ^ 1, follower[b]):
                    if not reached[c]:
                        reached[c] = 1
                        count += 1
                        stack.append(c)
            if count != nb:
                raise Disconnected("map is not connected")

        ne = nb // 2
        chi = nv - ne + nf
        if chi > 2 or (2 - chi) % 2:
            raise CorruptMap(f"Euler characteristic {chi} is not orientable-closed")
        g = (2 - chi) // 2
        return cls(
            origin,
            follower,
            prev,
            face_of,
            face_rep,
            vertex_rep,
            nv,
            ne,
            nf,
            g,
            root_face,
        )


def build_from_faces(n: int, faces: Sequence[Sequence[int]]) -> Map:
    """Glue oriented face contours into a map.

    Every contour is a cyclic vertex sequence read ccw; each undirected edge
    must appear exactly once per direction across all contours.  The result
    has one facial walk per input contour, in input order.
    """
    directed: dict[tuple[int, int], int] = {}
    for fi, face in enumerate(faces):
        k = len(face)
        if k < 2:
            raise CorruptMap(f"face {fi} has fewer than 2 vertices")
        for i in range(k):
            a = face[i]
            b = face[(i + 1) % k]
            if not (0 <= a < n and 0 <= b < n):
                raise CorruptMap(f"face {fi} uses vertex id outside [0, {n})")
            if a == b:
                raise CorruptMap(f"face {fi} contains a loop at vertex {a}")
            if (a, b) in directed:
                raise NonOrientable(
                    f"directed edge ({a},{b}) appears in faces "
                    f"{directed[(a, b)]} and {fi}"
                )
            directed[(a, b)] = fi
    for (a, b) in directed:
        if (b, a) not in directed:
            raise OpenSurface(f"edge {{{a},{b}}} appears with only one orientation")

    brin_of: dict[tuple[int, int], int] = {}
    m = 0
    for face in faces:
        k = len(face)
        for i in range(k):
            a = face[i]
            b = face[(i + 1) % k]
            rev = brin_of.get((b, a))
            if rev is None:
                brin_of[(a, b)] = 2 * m
                m += 1
            else:
                brin_of[(a, b)] = rev ^ 1

    nb = 2 * m
    origin = [-1] * nb
    follower = [-1] * nb
    for face in faces:
        k = len(face)
        for i in range(k):
            x = face[i - 1]
            y = face[i]
            z = face[(i + 1) % k]
            # contour ... x -> y -> z ... : at y, brin toward x precedes
            # brin toward z clockwise, which makes the contour one phi orbit
            back = brin_of[(y, x)]
            origin[back] = y
            follower[back] = brin_of[(y, z)]

    mp = Map.from_arrays(origin, follower, n_vertices=n)
    if mp.n_faces != len(faces):
        raise CorruptMap("face gluing produced an unexpected face count")
    return mp


def root_roles(m: Map, root_face: int) -> tuple[int, int, int, int, int]:
    """Role assignment induced by a triangular root face.

    Returns ``(b_star, b_theta, v0, v2, v1)``: the walk corner at the
    smallest vertex of the face, its walk successor, and the three role
    vertices.  The walk visits origins in the order (v0, v2, v1), so
    b_star points from v0 to v1.  Anchoring on the smallest vertex keeps
    the split stable under any renumbering that preserves vertex ids, in
    particular a trip through the triangle-list file format.
    """
    if not 0 <= root_face < m.n_faces:
        raise CorruptMap(f"root face {root_face} out of range")
    walk = facial_walk(m, m.face_rep[root_face])
    if len(walk) != 3:
        raise CorruptMap("root face must be a triangle")
    b_star = min(walk, key=lambda b: m.origin[b])
    b_theta = m.phi(b_star)
    return (
        b_star,
        b_theta,
        m.origin[b_star],
        m.origin[b_theta],
        m.origin[m.phi(b_theta)],
    )


def facial_walk(m: Map, b: int) -> list[int]:
    """Brins of the ccw facial walk through b, starting at b."""
    out = [b]
    c = m.follower[b] ^ 1
    while c != b:
        out.append(c)
        c = m.follower[c] ^ 1
    return out


def genus(m: Map) -> int:
    """Genus from the Euler identity (re-derived, not the cached field)."""
    chi = m.n_vertices - m.n_edges + m.n_faces
    if chi > 2 or (2 - chi) % 2:
        raise CorruptMap(f"Euler characteristic {chi} is not orientable-closed")
    return (2 - chi) // 2


def dual(m: Map) -> Map:
    """Dual map on the same brin ids.

    The dual brin of ``b`` is ``b`` itself: the side of the dual edge that
    starts at the face incident to ``b``.  Applying ``dual`` twice returns
    the original map relabeled by ``opposite``, which is how the double-dual
    identity reads on shared ids.
    """
    nb = m.n_brins
    prv = m.prev
    fc = m.face_of
    origin_d = [fc[b] for b in range(nb)]
    follower_d = [prv[b ^ 1] for b in range(nb)]
    return Map.from_arrays(origin_d, follower_d, n_vertices=m.n_faces)


# ------------------------------------------------------------------ validation


class TriangulationCheck:
    """Outcome of validate_triangulation: a verdict plus ordered witnesses."""

    __slots__ = ("violations",)

    def __init__(self, violations: list[tuple[str, tuple[int, ...]]]) -> None:
        self.violations = violations

    @property
    def is_triangulation(self) -> bool:
        return not self.violations

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        if self.is_triangulation:
            return "TriangulationCheck(ok)"
        return f"TriangulationCheck({self.violations!r})"


def validate_triangulation(m: Map) -> TriangulationCheck:
    """Check that m is a simple triangulation.

    Violation kinds, each with the lowest-id witnesses first:
    ``loop`` (edge id), ``multi-edge`` (the two edge ids), and
    ``non-triangle-face`` (face id).  Connectivity and orientability hold by
    construction for any Map, so those kinds never fire on built maps.
    """
    violations: list[tuple[str, tuple[int, ...]]] = []
    for e in range(m.n_edges):
        if m.origin[2 * e] == m.origin[2 * e + 1]:
            violations.append(("loop", (e,)))
    pairs: dict[tuple[int, int], int] = {}
    for e in range(m.n_edges):
        a, b = m.origin[2 * e], m.origin[2 * e + 1]
        key = (a, b) if a <= b else (b, a)
        first = pairs.get(key)
        if first is None:
            pairs[key] = e
        else:
            violations.append(("multi-edge", (first, e)))
    for f, rep in enumerate(m.face_rep):
        if len(facial_walk(m, rep)) != 3:
            violations.append(("non-triangle-face", (f,)))
    order = {"loop": 0, "multi-edge": 1, "non-triangle-face": 2}
    violations.sort(key=lambda kv: (order[kv[0]], kv[1]))
    return TriangulationCheck(violations)


# ----------------------------------------------------------------- isomorphism


def _trace(m: Map, root: int) -> tuple[int, ...]:
    """Canonical relabeling trace of the map anchored at one brin.

    Brins are numbered in BFS discovery order using the fixed neighbor order
    (opposite, follower); the flat number sequence determines the map up to
    isomorphism, so two traces are equal iff an anchored isomorphism exists.
    """
    fol = m.follower
    nb = m.n_brins
    num = [-1] * nb
    num[root] = 0
    order = [root]
    out: list[int] = []
    for b in order:
        for c in (b ^ 1, fol[b]):
            i = num[c]
            if i < 0:
                i = len(order)
                num[c] = i
                order.append(c)
            out.append(i)
    return tuple(out)


def canonical_form(m: Map) -> tuple[int, ...]:
    """Lexicographically minimal anchored trace over all root brins.

    Quadratic in the number of brins; intended for small maps (tests use it
    up to a few hundred brins).
    """
    return min(_trace(m, b) for b in range(m.n_brins))


def anchored_correspondence(
    m1: Map, b1: int, m2: Map, b2: int
) -> list[int] | None:
    """Brin bijection m1 -> m2 extending b1 -> b2, or None.

    The extension is forced: opposite and follower generate all brins, so at
    most one isomorphism maps b1 to b2.  Linear time.
    """
    if m1.n_edges != m2.n_edges or m1.n_vertices != m2.n_vertices:
        return None
    nb = m1.n_brins
    f = [-1] * nb
    g = [-1] * nb
    f[b1] = b2
    g[b2] = b1
    stack = [b1]
    fol1 = m1.follower
    fol2 = m2.follower
    while stack:
        x = stack.pop()
        y = f[x]
        for x2, y2 in ((x ^ 1, y ^ 1), (fol1[x], fol2[y])):
            fx = f[x2]
            if fx < 0:
                if g[y2] >= 0:
                    return None
                f[x2] = y2
                g[y2] = x2
                stack.append(x2)
            elif fx != y2:
                return None
    return f


def maps_isomorphic(m1: Map, m2: Map) -> bool:
    """Isomorphism test trying every anchor in m2 for a fixed m1 anchor."""
    if m1.n_edges != m2.n_edges or m1.n_vertices != m2.n_vertices:
        return False
    if m1.n_faces != m2.n_faces:
        return False
    t1 = _trace(m1, 0)
    return any(_trace(m2, b) == t1 for b in range(m2.n_brins))


def brute_force_isomorphic(m1: Map, m2: Map) -> bool:
    """Independent isomorphism search by direct relation checking."""
    if (m1.n_edges, m1.n_vertices, m1.n_faces) != (
        m2.n_edges,
        m2.n_vertices,
        m2.n_faces,
    ):
        return False
    return any(
        anchored_correspondence(m1, 0, m2, b2) is not None
        for b2 in range(m2.n_brins)
    )


# -------------------------------------------------------------------- file i/o


def to_face_list(m: Map) -> list[tuple[int, ...]]:
    """Faces as ccw vertex contours, one per face id in order."""
    return [
        tuple(m.origin[b] for b in facial_walk(m, rep)) for rep in m.face_rep
    ]


def write_tri(m: Map, out: TextIO) -> None:
    """Plain triangle list: header "n f" then one face per line."""
    faces = to_face_list(m)
    out.write(f"{m.n_vertices} {len(faces)}\n")
    for face in faces:
        if len(face) != 3:
            raise CorruptMap("write_tri requires a triangulation")
        out.write(f"{face[0]} {face[1]} {face[2]}\n")


def read_tri(inp: TextIO) -> Map:
    tokens = inp.read().split()
    if len(tokens) < 2:
        raise CorruptMap("truncated .tri header")
    n, f = int(tokens[0]), int(tokens[1])
    need = 2 + 3 * f
    if len(tokens) < need:
        raise CorruptMap("truncated .tri face list")
    faces = [
        (int(tokens[2 + 3 * i]), int(tokens[3 + 3 * i]), int(tokens[4 + 3 * i]))
        for i in range(f)
    ]
    return build_from_faces(n, faces)


def read_off(inp: TextIO) -> Map:
    """OFF reader; coordinates are ignored, faces must be triangles."""
    tokens = inp.read().split()
    if not tokens or tokens[0].upper() != "OFF":
        raise CorruptMap("missing OFF header")
    if len(tokens) < 4:
        raise CorruptMap("truncated OFF counts")
    nv, nf = int(tokens[1]), int(tokens[2])
    pos = 4 + 3 * nv  # skip the ignored edge count and x y z per vertex
    faces = []
    for _ in range(nf):
        if pos >= len(tokens):
            raise CorruptMap("truncated OFF face list")
        k = int(tokens[pos])
        if k != 3:
            raise CorruptMap("OFF faces must be triangles")
        faces.append(
            (int(tokens[pos + 1]), int(tokens[pos + 2]), int(tokens[pos + 3]))
        )
        pos += 4
    return build_from_faces(nv, faces)


def read_mesh(path: str) -> Map:
    """Dispatch on extension: .off is OFF, anything else is .tri."""
    with open(path, "r", encoding="ascii") as fh:
        if path.lower().endswith(".off"):
            return read_off(fh)
        return read_tri(fh)


_DOT_COLORS = {0: "#d62728", 1: "#1f77b4", 2: "#2ca02c"}


def write_dot(m: Map, out: TextIO, wood=None) -> None:
    """Graphviz export; with a wood attached, edges are colored and directed."""
    if wood is None:
        out.write("graph mesh {\n  node [shape=point];\n")
        for e in range(m.n_edges):
            a, b = m.edge_endpoints(e)
            out.write(f"  v{a} -- v{b};\n")
        out.write("}\n")
        return
    out.write("digraph wood {\n  node [shape=circle];\n")
    special_ids = {s.edge for s in wood.specials}
    for e in range(m.n_edges):
        a, b = m.edge_endpoints(e)
        c = wood.color[e]
        if e in special_ids:
            rec = next(s for s in wood.specials if s.edge == e)
            lbl = f"{rec.side_a.color}/{rec.side_b.color}"
            out.write(
                f"  v{a} -> v{b} [dir=none, style=bold, label=\"{lbl}\"];\n"
            )
        elif c < 0:
            out.write(f"  v{a} -> v{b} [dir=none, style=dashed];\n")
        else:
            t = wood.out[e]
            u, w = m.origin[t], m.origin[t ^ 1]
            out.write(f"  v{u} -> v{w} [color=\"{_DOT_COLORS[c]}\"];\n")
    out.write("}\n")


# ----------------------------------------------------- internal shared surgery


def _insert_parallel_edge(
    origin: list[int],
    follower: list[int],
    prev: list[int],
    face_of: list[int],
    e: int,
    new_face: int,
) -> int:
    """Double edge e in place, adding a parallel copy and a 2-gon between.

    The copy keeping id ``e`` stays on the side of ``face_of(2e)``; the new
    copy flanks the old ``face_of(2e + 1)``.  The 2-gon ``new_face`` sits
    between them and is the facial walk ``(2*new_edge, 2e + 1)``.  Returns
    the new edge id.
    """
    h = 2 * e
    h2 = h + 1
    u = origin[h]
    w = origin[h2]
    k = len(origin)
    k2 = k + 1
    origin.extend((u, w))
    follower.extend((0, 0))
    prev.extend((0, 0))
    face_of.extend((0, 0))
    x = prev[h]
    y = follower[h2]
    follower[x] = k
    prev[k] = x
    follower[k] = h
    prev[h] = k
    follower[h2] = k2
    prev[k2] = h2
    follower[k2] = y
    prev[y] = k2
    face_of[k2] = face_of[h2]
    face_of[h2] = new_face
    face_of[k] = new_face
    return k >> 1
