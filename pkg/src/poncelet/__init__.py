"""Exact determinantal models of Poncelet curves and surfaces.

Points of P^n are binary n-forms; a system of sections of degree n+k
determines a degree-(k+1) determinantal hypersurface that passes through
every polytope vertex of every member of the span.  Everything is computed
in exact rational arithmetic.
"""

__version__ = "0.1.0"

from .binforms import (
    BinaryForm,
    ParamPoint,
    form_from_roots,
    linear_factor,
    multiply,
    transform_form,
    veronese,
)
from .errors import (
    DegenerateInputError,
    DimensionError,
    InvalidInputError,
    PonceletError,
)
from .incidence import (
    DarbouxReport,
    VertexSet,
    contact_hyperplane,
    darboux_check,
    polytope_vertices,
    section_vanishing_points,
)
from .linalg import kernel_basis, rank_rational_matrix
from .multipoly import MultiPoly, PolyMatrix, det_poly_matrix, proj_equal_poly
from .schwarzenberger import (
    PonceletSystem,
    canonical_matrix,
    contains_subvariety,
    poncelet_hypersurface,
    poncelet_subvariety,
)
from .surfaces import (
    CubicModel,
    DimProbeReport,
    SixPointTensor,
    cubic_from_subspace,
    dim_probe,
    hilbert_function_of_minors,
    quadric_demo,
    quadric_rank,
    six_point_flattening,
)

__all__ = [
    "BinaryForm",
    "CubicModel",
    "DarbouxReport",
    "DegenerateInputError",
    "DimProbeReport",
    "DimensionError",
    "InvalidInputError",
    "MultiPoly",
    "ParamPoint",
    "PolyMatrix",
    "PonceletError",
    "PonceletSystem",
    "SixPointTensor",
    "VertexSet",
    "canonical_matrix",
    "contact_hyperplane",
    "contains_subvariety",
    "cubic_from_subspace",
    "darboux_check",
    "det_poly_matrix",
    "dim_probe",
    "form_from_roots",
    "hilbert_function_of_minors",
    "kernel_basis",
    "linear_factor",
    "multiply",
    "poncelet_hypersurface",
    "poncelet_subvariety",
    "polytope_vertices",
    "proj_equal_poly",
    "quadric_demo",
    "quadric_rank",
    "rank_rational_matrix",
    "section_vanishing_points",
    "six_point_flattening",
    "transform_form",
    "veronese",
]
