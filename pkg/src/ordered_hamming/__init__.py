"""Exact-arithmetic toolkit for ordered Hamming schemes and their Terwilliger algebras."""

from .exact_linalg import (
    DimensionMismatch,
    EmptyInput,
    MatrixSubspace,
    NotAnAlgebra,
    RatMatrix,
    algebra_closure,
    center_dimension,
    format_rational,
    kron,
    kron_all,
    parse_rational,
    span_basis,
)
from .scheme import (
    AxiomReport,
    AxiomViolation,
    DEFAULT_MAX_POINTS,
    SchemeParams,
    SizeBound,
    compositions,
    enumerate_shapes,
    intersection_numbers,
    iter_points,
    point_index,
    point_sub,
    relation_matrices,
    relation_matrix,
    shape_of,
    verify_axioms,
)
from .spectral import (
    BaseSpectralData,
    DualityReport,
    InternalMismatch,
    SpectralReport,
    adjacency_n,
    base_spectral,
    eigen_n,
    idempotent_n,
    krawchouk_table,
    multiplicity_n,
    valency_n,
    verify_base_duality,
    verify_spectral_n,
)
from .symtensor import (
    lifted_sum,
    lifted_sum_grid,
    multinomial,
    multiset_arrangements,
    sym_product,
    sym_product_spanset,
    symmetrizer_average,
)
from .terwilliger import (
    ComponentDecomposition,
    ComponentInfo,
    LambdaSet,
    Prediction,
    StructureReport,
    TerwBasisSet,
    component_dims,
    dual_idempotent_n,
    lambda_set,
    omega_set,
    primary_subalgebra,
    structure_report,
    terw_basis,
    terwilliger_closure,
    theta_enumerate,
    theta_feasible,
    verify_terw_identities,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomViolation",
    "BaseSpectralData",
    "ComponentDecomposition",
    "ComponentInfo",
    "DEFAULT_MAX_POINTS",
    "DimensionMismatch",
    "DualityReport",
    "EmptyInput",
    "InternalMismatch",
    "LambdaSet",
    "MatrixSubspace",
    "NotAnAlgebra",
    "Prediction",
    "RatMatrix",
    "SchemeParams",
    "SizeBound",
    "SpectralReport",
    "StructureReport",
    "TerwBasisSet",
    "adjacency_n",
    "algebra_closure",
    "base_spectral",
    "center_dimension",
    "component_dims",
    "compositions",
    "dual_idempotent_n",
    "eigen_n",
    "enumerate_shapes",
    "format_rational",
    "idempotent_n",
    "intersection_numbers",
    "iter_points",
    "krawchouk_table",
    "kron",
    "kron_all",
    "lambda_set",
    "lifted_sum",
    "lifted_sum_grid",
    "multinomial",
    "multiplicity_n",
    "multiset_arrangements",
    "omega_set",
    "parse_rational",
    "point_index",
    "point_sub",
    "primary_subalgebra",
    "relation_matrices",
    "relation_matrix",
    "shape_of",
    "span_basis",
    "structure_report",
    "sym_product",
    "sym_product_spanset",
    "symmetrizer_average",
    "terw_basis",
    "terwilliger_closure",
    "theta_enumerate",
    "theta_feasible",
    "valency_n",
    "verify_axioms",
    "verify_base_duality",
    "verify_spectral_n",
    "verify_terw_identities",
]
