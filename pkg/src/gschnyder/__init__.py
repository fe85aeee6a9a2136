"""Schnyder woods on triangulated orientable surfaces.

Computation by free-corner traversal, validation against the local and
global coloring conditions, and a compact bit-stream codec.
"""

from __future__ import annotations

from . import errors
from .codec import (
    CodeWords,
    SpecialCode,
    decode,
    deserialize,
    encode,
    serialize,
)
from .core_map import (
    Map,
    TriangulationCheck,
    build_from_faces,
    canonical_form,
    dual,
    facial_walk,
    genus,
    maps_isomorphic,
    read_mesh,
    read_off,
    read_tri,
    to_face_list,
    validate_triangulation,
    write_dot,
    write_tri,
)
from .generators import (
    add_handle,
    grid_torus,
    handle_sum,
    planar_random,
    planar_stacked,
    refine,
)
from .traversal import TraversalLog, compute_schnyder, find_bridges
from .wood import (
    GSchnyderWood,
    SpecialSide,
    ValidationReport,
    WoodSpecial,
    color_subgraph,
    cut_subgraph,
    load_gsw,
    save_gsw,
    validate,
    woods_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "Map",
    "TriangulationCheck",
    "build_from_faces",
    "canonical_form",
    "dual",
    "facial_walk",
    "genus",
    "maps_isomorphic",
    "read_mesh",
    "read_off",
    "read_tri",
    "to_face_list",
    "validate_triangulation",
    "write_dot",
    "write_tri",
    "GSchnyderWood",
    "SpecialSide",
    "ValidationReport",
    "WoodSpecial",
    "color_subgraph",
    "cut_subgraph",
    "load_gsw",
    "save_gsw",
    "validate",
    "woods_equivalent",
    "TraversalLog",
    "compute_schnyder",
    "find_bridges",
    "CodeWords",
    "SpecialCode",
    "decode",
    "deserialize",
    "encode",
    "serialize",
    "add_handle",
    "grid_torus",
    "handle_sum",
    "planar_random",
    "planar_stacked",
    "refine",
    "__version__",
]
