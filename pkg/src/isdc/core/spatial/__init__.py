"""API for `isdc.core.spatial`."""
from .grid import BOUNDARY_CONDITIONS, DIRICHLET, PERIODIC, Field2D, Grid2D
from .stencil import (
    STENCIL_A,
    STENCIL_W,
    apply_stencil,
    laplacian_stencil,
    pad,
    stencil_matrix,
    weighting_stencil,
)
from .compact import (
    CompactLaplacian,
    apply_laplacian,
    apply_weighting,
    invert_weighting,
)
from .weno import WENO_JS, WENO_Z, weno5_advection, weno5_divergence
from .export import export_field, load_field

__all__ = [
    "BOUNDARY_CONDITIONS",
    "DIRICHLET",
    "PERIODIC",
    "Field2D",
    "Grid2D",
    "STENCIL_A",
    "STENCIL_W",
    "apply_stencil",
    "laplacian_stencil",
    "pad",
    "stencil_matrix",
    "weighting_stencil",
    "CompactLaplacian",
    "apply_laplacian",
    "apply_weighting",
    "invert_weighting",
    "WENO_JS",
    "WENO_Z",
    "weno5_advection",
    "weno5_divergence",
    "export_field",
    "load_field",
]
