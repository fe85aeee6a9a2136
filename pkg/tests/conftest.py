"""Shared instance corpus and derived fixtures for the acceptance suite.

The corpus spans planar sizes 4..2000, torus grids with sides 3..30, and
genus 2..4 sums with and without midpoint refinement, topped by one
~10^5-vertex genus-4 instance.  Everything is deterministic: fixed seeds,
fixed size lists.
"""

from __future__ import annotations

from typing import Callable

import pytest

from gschnyder.codec import CodeWords, encode, serialize
from gschnyder.core_map import Map
from gschnyder.generators import (
    grid_torus,
    handle_sum,
    planar_random,
    planar_stacked,
    refine,
)
from gschnyder.traversal import compute_schnyder
from gschnyder.wood import GSchnyderWood

_PLANAR_SIZES = [
    4, 5, 6, 7, 8, 9, 10, 12, 14, 17, 20, 24, 29, 35, 42, 50, 60, 72, 86,
    100, 120, 150, 180, 220, 270, 330, 400, 480, 580, 700, 850, 1000,
    1200, 1500, 1800, 2000,
]
_STACKED_SIZES = [5, 8, 12, 20, 34, 55, 90, 150, 250, 400, 650, 1000, 1600, 2000]
_GRID_SIDES = [3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 18, 22, 26, 30]
_G2_PLANAR = [13, 16, 24, 40, 70, 120, 220, 400, 800]
_G3_PLANAR = [14, 20, 30, 55, 100, 200, 420, 900]
_G4_PLANAR = [16, 22, 34, 60, 110, 240, 500, 1000]


def corpus_specs() -> list[tuple[str, Callable[[], Map]]]:
    specs: list[tuple[str, Callable[[], Map]]] = []
    for n in _PLANAR_SIZES:
        specs.append((f"planar-{n}", lambda n=n: planar_random(n, seed=n)))
    for n in (10, 50, 200, 1000):
        specs.append(
            (f"planar-{n}b", lambda n=n: planar_random(n, seed=n + 1))
        )
    for n in _STACKED_SIZES:
        specs.append((f"stacked-{n}", lambda n=n: planar_stacked(n, seed=n)))
    for i, p in enumerate(_GRID_SIDES):
        for q in _GRID_SIDES[i:]:
            specs.append((f"torus-{p}x{q}", lambda p=p, q=q: grid_torus(p, q)))
    for n in _G2_PLANAR:
        specs.append(
            (f"g2-{n}", lambda n=n: handle_sum(planar_random(n, seed=n), 2, seed=n))
        )
    for p in (4, 5, 6, 8, 10):
        specs.append(
            (f"g2-torus-{p}", lambda p=p: handle_sum(grid_torus(p, p), 1, seed=p))
        )
    for n in _G3_PLANAR:
        specs.append(
            (f"g3-{n}",
             lambda n=n: handle_sum(planar_random(n, seed=n + 1), 3, seed=n))
        )
    for q in (5, 7, 9, 11):
        specs.append(
            (f"g3-torus-4x{q}",
             lambda q=q: handle_sum(grid_torus(4, q), 2, seed=q))
        )
    for n in _G4_PLANAR:
        specs.append(
            (f"g4-{n}",
             lambda n=n: handle_sum(planar_random(n, seed=n + 2), 4, seed=n))
        )
    for q in (4, 6, 8, 10):
        specs.append(
            (f"g4-torus-4x{q}",
             lambda q=q: handle_sum(grid_torus(4, q), 3, seed=q))
        )
    specs += [
        ("refined-planar-30", lambda: refine(planar_random(30, seed=7))),
        ("refined-planar-200", lambda: refine(planar_random(200, seed=9))),
        ("refined-planar-30-r2",
         lambda: refine(planar_random(30, seed=7), rounds=2)),
        ("refined-planar-600", lambda: refine(planar_random(600, seed=11))),
        ("refined-torus-3x3", lambda: refine(grid_torus(3, 3))),
        ("refined-torus-5x6-r2", lambda: refine(grid_torus(5, 6), rounds=2)),
        ("refined-torus-4x4-r3", lambda: refine(grid_torus(4, 4), rounds=3)),
        ("refined-g2-20-r2",
         lambda: refine(handle_sum(planar_random(20, seed=4), 2, seed=0),
                        rounds=2)),
        ("refined-g2-torus-6x6-r3",
         lambda: refine(handle_sum(grid_torus(6, 6), 1, seed=1), rounds=3)),
        ("refined-g3-16-r2",
         lambda: refine(handle_sum(planar_random(16, seed=5), 3, seed=1),
                        rounds=2)),
        ("refined-g4-16-r2",
         lambda: refine(handle_sum(planar_random(16, seed=6), 4, seed=2),
                        rounds=2)),
        ("refined-g4-torus-5x5-r3",
         lambda: refine(handle_sum(grid_torus(5, 5), 3, seed=3), rounds=3)),
        ("big-g4",
         lambda: refine(handle_sum(grid_torus(10, 10), 3, seed=0), rounds=5)),
    ]
    return specs


@pytest.fixture(scope="session")
def corpus() -> list[tuple[str, Map]]:
    return [(name, build()) for name, build in corpus_specs()]


@pytest.fixture(scope="session")
def woods(corpus) -> dict[str, GSchnyderWood]:
    return {name: compute_schnyder(m) for name, m in corpus}


@pytest.fixture(scope="session")
def streams(corpus, woods) -> dict[str, tuple[CodeWords, bytes]]:
    out = {}
    for name, m in corpus:
        code = encode(m, woods[name])
        out[name] = (code, serialize(code))
    return out
