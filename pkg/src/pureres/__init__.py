"""Exact construction of equivariant inclusion matrices over a polynomial
ring and of the pure free resolutions they present, with integral and
mod-p forms, verified by exact linear algebra."""

from .algebra import GF, QQ, ZZ, Polynomial, domain_for_char
from .linalg import ScalarMatrix
from .pieri import (
    matrices_equal_up_to_scalar,
    olver_map,
    path_denominator,
    paths,
    pieri_map,
    tau,
    zform,
)
from .polymatrix import PolyMatrix
from .resolution import (
    BettiTable,
    EquivariantComplex,
    ExactnessReport,
    GradedModule,
    alpha,
    betti_table,
    build_complex,
    coker_character_dims,
    coker_module,
    default_verify_bound,
    herzog_kuhl_check,
    herzog_kuhl_constant,
    maximal_ideal_matrix,
    pure_free,
    verify_exactness,
)
from .schur import apply_shuffle, gl_action, straighten, straighten_vector
from .tableaux import (
    dimension,
    enumerate_ssyt,
    partition,
    pieri_expand,
    weight,
)

__version__ = "1.0.0"

__all__ = [
    "GF",
    "QQ",
    "ZZ",
    "Polynomial",
    "PolyMatrix",
    "ScalarMatrix",
    "BettiTable",
    "EquivariantComplex",
    "ExactnessReport",
    "GradedModule",
    "alpha",
    "apply_shuffle",
    "betti_table",
    "build_complex",
    "coker_character_dims",
    "coker_module",
    "default_verify_bound",
    "dimension",
    "domain_for_char",
    "enumerate_ssyt",
    "gl_action",
    "herzog_kuhl_check",
    "herzog_kuhl_constant",
    "matrices_equal_up_to_scalar",
    "maximal_ideal_matrix",
    "olver_map",
    "partition",
    "path_denominator",
    "paths",
    "pieri_expand",
    "pieri_map",
    "pure_free",
    "straighten",
    "straighten_vector",
    "tau",
    "verify_exactness",
    "weight",
    "zform",
]
