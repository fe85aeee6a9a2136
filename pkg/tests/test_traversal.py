"""Conquest engine: frozen small traces, surgery bookkeeping, corpora."""

from __future__ import annotations

import pytest

from gschnyder import build_from_faces
from gschnyder.core_map import Map, _insert_parallel_edge
from gschnyder.errors import CorruptMap, NotFree, TooSmall
from gschnyder.generators import (
    grid_torus,
    handle_sum,
    planar_random,
    planar_stacked,
    refine,
)
from gschnyder.subcomplex import Region
from gschnyder.traversal import (
    TraversalLog,
    classify_chord,
    compute_schnyder,
    conquer,
    find_bridges,
)

TETRA = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]


def test_tetra_trace_and_labels():
    m = build_from_faces(4, TETRA)
    log = TraversalLog()
    w = compute_schnyder(m, 0, log=log)
    # opening fan at v2 swallows two faces, the closing fan rides over
    # the root edge
    assert log.events == [("conquest", 10, 3, 2), ("conquest", 3, 2, 1)]
    assert w.color == [-1, 1, 0, 2, -1, -1]
    assert w.out == [-1, 3, 4, 6, -1, -1]
    assert w.specials == []
    assert w.from_traversal
    assert w.validate().passed


def test_tetra_alternate_root():
    m = build_from_faces(4, TETRA)
    for root in range(1, 4):
        w = compute_schnyder(m, root)
        rep = w.validate()
        assert rep.passed and rep.g0_cellular and rep.g1_cellular


def test_determinism():
    m = grid_torus(4, 5)
    w1 = compute_schnyder(m)
    w2 = compute_schnyder(m)
    assert w1.color == w2.color
    assert w1.out == w2.out
    assert [(s.edge, s.side_a.color, s.side_b.color) for s in w1.specials] == [
        (s.edge, s.side_a.color, s.side_b.color) for s in w2.specials
    ]


def test_torus_surgery_counts():
    m = grid_torus(3, 3)
    log = TraversalLog()
    w = compute_schnyder(m, 0, check_invariants=True, log=log)
    assert len(w.specials) == 2
    assert log.n_merges == 1
    assert log.n_splits == 1
    kinds = [ev[0] for ev in log.events if ev[0] != "conquest"]
    assert kinds == ["split", "merge"]
    rep = w.validate()
    assert rep.passed and rep.g0_cellular and rep.g1_cellular


def test_torus_sizes():
    for p, q in ((3, 4), (4, 4), (5, 3), (6, 7)):
        m = grid_torus(p, q)
        w = compute_schnyder(m)
        assert len(w.specials) == 2
        assert w.validate().passed


def test_planar_corpora():
    for n in (4, 5, 6, 9, 17, 40):
        w = compute_schnyder(planar_stacked(n, seed=n))
        assert w.specials == []
        assert w.validate().passed
    for n in (6, 12, 25, 60):
        w = compute_schnyder(planar_random(n, seed=n))
        assert w.specials == []
        assert w.validate().passed


def test_higher_genus():
    base = planar_stacked(24, seed=3)
    for g in (1, 2, 3):
        m = handle_sum(base, g, seed=11)
        log = TraversalLog()
        w = compute_schnyder(m, 0, log=log)
        assert m.genus == g
        assert len(w.specials) == 2 * g
        assert log.n_merges == g
        assert log.n_splits == g
        rep = w.validate()
        assert rep.passed and rep.g0_cellular and rep.g1_cellular


def test_refined_torus():
    m = refine(grid_torus(3, 3), rounds=2)
    w = compute_schnyder(m, 0, check_invariants=True)
    assert len(w.specials) == 2
    assert w.validate().passed


def test_special_sides_are_flat_colors():
    m = grid_torus(3, 5)
    w = compute_schnyder(m)
    for sp in w.specials:
        assert sp.side_a.color in (0, 1)
        assert sp.side_b.color in (0, 1)
        assert sp.side_a.out >> 1 == sp.edge
        assert sp.side_b.out >> 1 == sp.edge
        assert w.color[sp.edge] == -1


def test_too_small():
    banana = Map.from_arrays([0, 1, 0, 1], [2, 3, 0, 1])
    with pytest.raises(TooSmall):
        compute_schnyder(banana)


def test_rejects_non_triangulation():
    m = build_from_faces(4, TETRA)
    origin, follower, prev, face_of = m.copy_arrays()
    _insert_parallel_edge(origin, follower, prev, face_of, 0, m.n_faces)
    doubled = Map.from_arrays(origin, follower, n_vertices=4)
    with pytest.raises(CorruptMap):
        compute_schnyder(doubled)


def test_conquer_not_free():
    m = build_from_faces(4, TETRA)
    r = Region(m, 0)
    c2 = [-1] * m.n_edges
    o2 = [-1] * m.n_edges
    # brin 1 sits at v1 on the root edge: excluded.  brin 0 faces the
    # root face itself: not boundary.
    with pytest.raises(NotFree):
        conquer(r, 1, c2, o2)
    with pytest.raises(NotFree):
        conquer(r, 0, c2, o2)


def test_classify_chord_basics():
    m = build_from_faces(4, TETRA)
    r = Region(m, 0)
    assert classify_chord(r, r.e01) == "not-chord"
    assert classify_chord(r, 1) == "not-chord"  # vertex 2 still outside


def test_find_bridges_path_cycle_parallel():
    assert find_bridges(3, [(0, 1), (1, 2)]) == {0, 1}
    assert find_bridges(3, [(0, 1), (1, 2), (2, 0)]) == set()
    assert find_bridges(2, [(0, 1), (0, 1)]) == set()
    assert find_bridges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]) == {3}
    assert find_bridges(4, [(0, 1), (2, 3)]) == {0, 1}


def test_find_bridges_two_cycles_joined():
    # two triangles joined by one edge: only the joint is a bridge
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]
    assert find_bridges(6, edges) == {6}


def test_find_bridges_matches_brute_force():
    import random

    rng = random.Random(7)
    for trial in range(40):
        n = rng.randrange(2, 9)
        k = rng.randrange(1, 14)
        edges = [
            (rng.randrange(n), rng.randrange(n)) for _ in range(k)
        ]
        edges = [(a, b) for a, b in edges if a != b]
        if not edges:
            continue

        def components(skip: int) -> int:
            parent = list(range(n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for i, (a, b) in enumerate(edges):
                if i != skip:
                    parent[find(a)] = find(b)
            return len({find(v) for v in range(n)})

        base = components(-1)
        brute = {i for i in range(len(edges)) if components(i) > base}
        assert find_bridges(n, edges) == brute
