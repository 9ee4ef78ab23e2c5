"""Cospectral regular graphs from replaceable vertices and edges."""
from .bijection import Bijection
from .canon import are_isomorphic, automorphism_orbits, canonical_form
from .compose import (
    CompositionSpec,
    Family,
    FamilyConstructionPlan,
    batch_edge_construction,
    batch_vertex_construction,
    edge_composition,
    vertex_composition,
)
from .graph import Graph, delete_edge, delete_vertices, from_graph6, to_graph6
from .removal import (
    ReplaceableCertificate,
    find_bijections,
    removal_cospectral,
    replaceable_edges,
    replaceable_vertices,
    verify_lemma1,
    verify_lemma2,
)
from .spectrum import CharPoly, char_poly, cospectral, walk_counts, walks_match

__version__ = "0.1.0"

__all__ = [
    "Bijection",
    "are_isomorphic",
    "automorphism_orbits",
    "canonical_form",
    "CompositionSpec",
    "Family",
    "FamilyConstructionPlan",
    "batch_edge_construction",
    "batch_vertex_construction",
    "edge_composition",
    "vertex_composition",
    "Graph",
    "delete_edge",
    "delete_vertices",
    "from_graph6",
    "to_graph6",
    "ReplaceableCertificate",
    "find_bijections",
    "removal_cospectral",
    "replaceable_edges",
    "replaceable_vertices",
    "verify_lemma1",
    "verify_lemma2",
    "CharPoly",
    "char_poly",
    "cospectral",
    "walk_counts",
    "walks_match",
]
