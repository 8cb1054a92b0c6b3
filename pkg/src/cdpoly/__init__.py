"""Exact independence and matching polynomials of graphs, Christoffel-Darboux
type identities between them, and real-rootedness certificates."""

from .gpoly import (GraphPolys, independence_poly, independence_poly_oracle, matching_poly,
                    matching_poly_oracle)
from .graph import Graph, INFINITE, VertexSet
from .identities import IdentityReport, Sign, ms_sign, verify, verify_graph
from .poly import BiPoly, RatPoly, UniPoly
from .roots import SturmCertificate, certify_claw_free, isolate_roots, sturm_count

__all__ = [
    "BiPoly", "Graph", "GraphPolys", "INFINITE", "IdentityReport", "RatPoly", "Sign",
    "SturmCertificate", "UniPoly", "VertexSet", "certify_claw_free", "independence_poly",
    "independence_poly_oracle", "isolate_roots", "matching_poly", "matching_poly_oracle",
    "ms_sign", "sturm_count", "verify", "verify_graph",
]
