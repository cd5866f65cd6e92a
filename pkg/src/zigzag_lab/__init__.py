"""Combinatorial maps of plane graphs and their circuit structure.

The package stores a plane graph as a rotation system on darts, derives
vertices/faces/duals from it, traces the closed left-right and straight-ahead
circuits of the map, and builds the standard parametric families of 3-valent
polyhedra whose faces have at most two sizes.
"""

from .planar_map import (
    EulerError,
    MapError,
    PlanarMap,
    build_map,
    build_map_from_faces,
    from_dart_system,
)

__all__ = [
    "EulerError",
    "MapError",
    "PlanarMap",
    "build_map",
    "build_map_from_faces",
    "from_dart_system",
]

__version__ = "0.1.0"
