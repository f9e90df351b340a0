"""Dimensions of spaces of planar polyhedral splines.

Closed-form Hilbert polynomials from the geometry of a complex, checked
against exact linear algebra.
"""

from .geometry import (
    Complex,
    ComplexError,
    LinForm,
    ProjPoint,
    build_complex,
    dual_graph,
    edge_form,
    face_counts,
    is_hereditary,
    is_simplicial,
    parse_complex,
    star,
    vertex_slope_count,
)
from .hilbert import (
    HilbPoly,
    ResolutionData,
    alfeld_schumaker_dim,
    c_value,
    hp_quotient,
    planar_hp,
    resolution_data,
    sigma_vertex,
)
from .xigraph import CycleData, XiGraph, all_cycles, build_xi_graph, candidate_xi, classify_components

__version__ = "0.1.0"
