"""Exact characteristic-class computations for K3 families and arithmetic groups."""

from .exactalg import Echelon, Generator, GradedPoly, Ring, span_reduce, substitute
from .genera import (
    GenusSeries,
    atiyah_singer_l,
    l_genus_series,
    l_polynomial,
    multiplicative_sequence,
    ph_component,
    pontryagin_from_chern,
)
from .k3family import FamilyModel, KappaResult, bott_obstruction, kappa, kappa_table, solve_a_values
from .arithgrp import GroupSpec, franke_bound, oracle_unipotent_dim, unipotent_dim, x_class
from .dualcoh import (
    SpDualRing,
    kernel_orthogonality_check,
    matsushima_kernel_sp,
    sl_image,
    sp_dual_ring,
    vdg_basis,
)

__all__ = [
    "Echelon", "Generator", "GradedPoly", "Ring", "span_reduce", "substitute",
    "GenusSeries", "atiyah_singer_l", "l_genus_series", "l_polynomial",
    "multiplicative_sequence", "ph_component", "pontryagin_from_chern",
    "FamilyModel", "KappaResult", "bott_obstruction", "kappa", "kappa_table", "solve_a_values",
    "GroupSpec", "franke_bound", "oracle_unipotent_dim", "unipotent_dim", "x_class",
    "SpDualRing", "kernel_orthogonality_check", "matsushima_kernel_sp", "sl_image",
    "sp_dual_ring", "vdg_basis",
]
