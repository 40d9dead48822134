"""API for `isdc.core.quadrature`."""
from .collocation import (
    GAUSS_LEGENDRE,
    GAUSS_LOBATTO,
    GAUSS_RADAU_RIGHT,
    NODE_RULES,
    CollocationTable,
    Substep,
    lagrange_basis,
    make_nodes,
    make_weights,
)

__all__ = [
    "GAUSS_LEGENDRE",
    "GAUSS_LOBATTO",
    "GAUSS_RADAU_RIGHT",
    "NODE_RULES",
    "CollocationTable",
    "Substep",
    "lagrange_basis",
    "make_nodes",
    "make_weights",
]
