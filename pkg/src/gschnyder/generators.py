"""Triangulation generators: grids, stacked/flipped spheres, handles, refinement.

All generators are deterministic given their seed and return validated maps.
Higher-genus instances come from ``add_handle`` / ``handle_sum`` which glue
an antiprism tube between two vertex-disjoint faces, raising the genus by
one per tube while keeping the mesh simple.
"""

from __future__ import annotations

import random

from .core_map import Map, build_from_faces, to_face_list
from .errors import NoDisjointFaces, TooSmall

__all__ = [
    "grid_torus",
    "planar_stacked",
    "planar_random",
    "add_handle",
    "handle_sum",
    "refine",
]


def grid_torus(p: int, q: int) -> Map:
    """p-by-q square grid on the torus, each square cut by one diagonal.

    Needs p, q >= 3: smaller wraps create loops or parallel edges.
    """
    if p < 3 or q < 3:
        raise TooSmall("grid_torus needs p >= 3 and q >= 3")

    def v(i: int, j: int) -> int:
        return (i % p) * q + (j % q)

    faces: list[tuple[int, int, int]] = []
    for i in range(p):
        for j in range(q):
            a, b = v(i, j), v(i + 1, j)
            c, d = v(i + 1, j + 1), v(i, j + 1)
            faces.append((a, b, c))
            faces.append((a, c, d))
    return build_from_faces(p * q, faces)


_TETRA = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def planar_stacked(n: int, seed: int = 0) -> Map:
    """Planar triangulation grown by repeated face splits (a stacked sphere)."""
    if n < 4:
        raise TooSmall("planar triangulations need n >= 4")
    rng = random.Random(seed)
    faces: list[tuple[int, int, int]] = list(_TETRA)
    for v in range(4, n):
        r = rng.randrange(len(faces))
        a, b, c = faces[r]
        faces[r] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
    return build_from_faces(n, faces)


def planar_random(n: int, seed: int = 0) -> Map:
    """Stacked sphere churned by random diagonal flips.

    Flips move the sample away from the very skewed stacked degree profile.
    A flip of edge {u,w} with side apexes t, s is valid when t != s and
    {t,s} is not already an edge; that rule alone keeps the mesh simple.
    """
    m = planar_stacked(n, seed)
    rng = random.Random(seed + 0x9E3779B9)
    origin, follower, prev, _ = m.copy_arrays()
    ne = m.n_edges
    wanted = 10 * ne
    done = 0
    for _ in range(50 * ne):
        if done >= wanted:
            break
        e = rng.randrange(ne)
        h = 2 * e
        h2 = h + 1
        pa = follower[h] ^ 1  # walk successor of h: sits at apex t
        pb = follower[h2] ^ 1  # walk successor of h2: sits at apex s
        t = origin[pa]
        s = origin[pb]
        if t == s:
            continue
        # adjacency scan around the smaller-degree apex
        adjacent = False
        b = pa
        while True:
            if origin[b ^ 1] == s:
                adjacent = True
                break
            b = follower[b]
            if b == pa:
                break
        if adjacent:
            continue
        qa = follower[pa]
        qb = follower[pb]
        # unsplice both brins from their current rotations
        follower[prev[h]] = follower[h]
        prev[follower[h]] = prev[h]
        follower[prev[h2]] = follower[h2]
        prev[follower[h2]] = prev[h2]
        # resplice at the apexes, between the two old quad sides
        origin[h] = t
        follower[pa] = h
        prev[h] = pa
        follower[h] = qa
        prev[qa] = h
        origin[h2] = s
        follower[pb] = h2
        prev[h2] = pb
        follower[h2] = qb
        prev[qb] = h2
        done += 1
    return Map.from_arrays(origin, follower, n_vertices=n)


_TUBE = (
    (0, 1, 3),  # (a0, a1, b0) with a = 0,1,2 and b = 3,4,5
    (1, 2, 5),
    (2, 0, 4),
    (3, 4, 0),
    (4, 5, 2),
    (5, 3, 1),
)


def add_handle(m: Map, seed: int = 0) -> Map:
    """Glue a 6-triangle tube between two vertex-disjoint faces (genus + 1).

    The chosen faces must also have no pre-existing edge among the six
    vertex pairs the tube introduces.  Random pairs are tried first, then
    all pairs; NoDisjointFaces if the mesh has no usable pair.
    """
    faces = to_face_list(m)
    nf = len(faces)
    adj = {frozenset(m.edge_endpoints(e)) for e in range(m.n_edges)}

    def tube_ok(i: int, j: int) -> bool:
        fa, fb = faces[i], faces[j]
        if set(fa) & set(fb):
            return False
        ring = fa + fb
        for t in _TUBE:
            for x, y in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                if (x < 3) == (y < 3):
                    continue  # ring edge, exists by design
                if frozenset((ring[x], ring[y])) in adj:
                    return False
        return True

    rng = random.Random(seed)
    pick: tuple[int, int] | None = None
    for _ in range(200):
        i = rng.randrange(nf)
        j = rng.randrange(nf)
        if i != j and tube_ok(i, j):
            pick = (i, j)
            break
    if pick is None:
        for i in range(nf):
            for j in range(i + 1, nf):
                if tube_ok(i, j):
                    pick = (i, j)
                    break
            if pick:
                break
    if pick is None:
        raise NoDisjointFaces("no face pair can host a handle")

    i, j = pick
    ring = faces[i] + faces[j]
    new_faces = [f for k, f in enumerate(faces) if k not in (i, j)]
    for t in _TUBE:
        new_faces.append((ring[t[0]], ring[t[1]], ring[t[2]]))
    return build_from_faces(m.n_vertices, new_faces)


def handle_sum(m: Map, h: int, seed: int = 0) -> Map:
    """Attach h handles one after another."""
    for k in range(h):
        m = add_handle(m, seed + k)
    return m


def refine(m: Map, rounds: int = 1) -> Map:
    """Midpoint subdivision: every triangle becomes four, genus unchanged."""
    for _ in range(rounds):
        nv = m.n_vertices
        faces: list[tuple[int, int, int]] = []
        for rep in m.face_rep:
            b0 = rep
            b1 = m.phi(b0)
            b2 = m.phi(b1)
            a, b, c = m.origin[b0], m.origin[b1], m.origin[b2]
            m_ca = nv + (b0 >> 1)
            m_ab = nv + (b1 >> 1)
            m_bc = nv + (b2 >> 1)
            faces.append((a, m_ab, m_ca))
            faces.append((b, m_bc, m_ab))
            faces.append((c, m_ca, m_bc))
            faces.append((m_ab, m_bc, m_ca))
        m = build_from_faces(nv + m.n_edges, faces)
    return m
