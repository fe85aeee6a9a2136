"""Generators: counts, genus, simplicity, determinism."""

from __future__ import annotations

import pytest

from gschnyder.core_map import canonical_form, validate_triangulation
from gschnyder.errors import NoDisjointFaces, TooSmall
from gschnyder.generators import (
    add_handle,
    grid_torus,
    handle_sum,
    planar_random,
    planar_stacked,
    refine,
)


def is_simple_triangulation(m) -> bool:
    return validate_triangulation(m).is_triangulation


def test_grid_torus_counts():
    m = grid_torus(3, 3)
    assert (m.n_vertices, m.n_edges, m.n_faces, m.genus) == (9, 27, 18, 1)
    assert is_simple_triangulation(m)
    m = grid_torus(4, 5)
    assert (m.n_vertices, m.n_edges, m.n_faces, m.genus) == (20, 60, 40, 1)
    assert all(m.degree(v) == 6 for v in range(20))
    assert is_simple_triangulation(m)


def test_grid_torus_minimum_size():
    with pytest.raises(TooSmall):
        grid_torus(2, 5)
    with pytest.raises(TooSmall):
        grid_torus(3, 2)


def test_stacked_counts():
    m = planar_stacked(50, seed=1)
    assert (m.n_vertices, m.n_edges, m.n_faces) == (50, 144, 96)
    assert m.genus == 0
    assert is_simple_triangulation(m)


def test_stacked_minimum_is_tetra():
    m = planar_stacked(4)
    assert (m.n_vertices, m.n_edges, m.n_faces) == (4, 6, 4)
    with pytest.raises(TooSmall):
        planar_stacked(3)


def test_stacked_deterministic():
    a = planar_stacked(30, seed=7)
    b = planar_stacked(30, seed=7)
    assert a.origin == b.origin and a.follower == b.follower


def test_random_flips_keep_simplicity():
    for n, seed in ((5, 0), (12, 1), (37, 2), (100, 3)):
        m = planar_random(n, seed=seed)
        assert (m.n_vertices, m.n_edges) == (n, 3 * n - 6)
        assert m.genus == 0
        assert is_simple_triangulation(m)


def test_random_actually_flips():
    a = planar_stacked(60, seed=5)
    b = planar_random(60, seed=5)
    assert canonical_form(a) != canonical_form(b)


def test_random_deterministic():
    a = planar_random(40, seed=9)
    b = planar_random(40, seed=9)
    assert a.origin == b.origin and a.follower == b.follower


def test_add_handle_raises_genus():
    m = planar_stacked(20, seed=2)
    h = add_handle(m, seed=0)
    assert h.n_vertices == 20
    assert h.n_edges == m.n_edges + 6
    assert h.n_faces == m.n_faces + 4
    assert h.genus == 1
    assert is_simple_triangulation(h)


def test_add_handle_needs_room():
    with pytest.raises(NoDisjointFaces):
        add_handle(planar_stacked(4))


def test_handle_sum_stacks():
    m = handle_sum(grid_torus(4, 4), 2, seed=1)
    assert m.genus == 3
    assert is_simple_triangulation(m)


def test_refine_counts():
    m = refine(planar_stacked(4))
    assert (m.n_vertices, m.n_edges, m.n_faces, m.genus) == (10, 24, 16, 0)
    assert is_simple_triangulation(m)
    t = refine(grid_torus(3, 3))
    assert (t.n_vertices, t.n_edges, t.n_faces, t.genus) == (36, 108, 72, 1)
    assert is_simple_triangulation(t)


def test_refine_two_rounds():
    m = refine(grid_torus(3, 3), rounds=2)
    assert (m.n_vertices, m.genus) == (144, 1)
    assert is_simple_triangulation(m)
