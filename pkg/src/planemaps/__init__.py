"""Census of connected maps with few edges on the sphere and in the plane."""

from .canon import (
    CanonicalCode,
    Mode,
    PlaneGraph,
    Rooting,
    automorphism_face_orbits,
    automorphisms,
    canonical_code_plane,
    canonical_code_sphere,
    is_isomorphic,
    map_from_code,
    reflect,
    traversal_code,
)
from .enumeration import (
    Catalog,
    CatalogEntry,
    decomposition_table,
    enumerate_plane,
    enumerate_spherical,
    naive_oracle_spherical,
)
from .maps import CombinatorialMap, MapSummary, faces, genus, is_connected, summary, vertices
from .morse import FlowSummary, flow_structure_count, flow_summary

__version__ = "0.1.0"
