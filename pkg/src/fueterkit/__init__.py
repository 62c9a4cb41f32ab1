"""fueterkit: exact construction and verification of monogenic functions.

An exact-rational symbolic engine for Clifford algebras with biaxial
symmetry: Laurent-radial expressions, Dirac and Laplacian operators,
Fueter-type maps with their closed forms, Fischer decomposition, and the
first-order component systems, plus a parser and CLI.
"""

from .bivariate import (
    BiaxialParams,
    BivariateRadial,
    apply_dx_xinv,
    apply_xinv_dx,
    delta2_power,
    double_factorial,
    expansion_coefficient,
    laplacian_expansion,
    multinomial,
    operator_term,
)
from .clifford import Blade, Multivector, blade_product, blade_text, geometric_product, parity_split, vector_embed
from .errors import EngineError, ParseError, PreconditionError, ShapeError, VerificationError
from .formatting import (
    expression_json_object,
    format_bivariate,
    format_components,
    format_expression,
    format_multivector,
)
from .frame import AxisFrame
from .fueter import (
    BiaxialComponents,
    FischerLayer,
    apply_map,
    classical_closed_form,
    extract_components,
    fischer_decompose,
    ft_closed_form,
    ft_general_via_fischer,
    ft_minus,
    ft_mu,
    ft_plus,
    fueter_classical,
    vekua_check,
)
from .parsing import parse_bivariate, parse_expression, parse_seed, parse_vector
from .radial import (
    RadialExpr,
    RadialTerm,
    SCOPE_CR,
    SCOPE_FIRST,
    SCOPE_FULL,
    SCOPE_SECOND,
    canonicalize,
    constant_vector_x,
    constant_vector_y,
    dirac,
    evaluate_numeric,
    evaluate_terms,
    homogeneity_degree,
    inner_x,
    inner_y,
    is_monogenic,
    laplacian,
    laplacian_power,
    nu,
    omega,
    partial_derivative,
    re_mul,
    vector_x,
    vector_y,
)
from .seeds import (
    ComplexBivarPoly,
    ComplexRational,
    SeedFunction,
    build_seed,
    conj_power,
    holo_power,
    laplace2,
    lift_to_radial,
    parity_monomial,
    seed_order,
    seed_times_monomial,
    split_uv,
    times_i,
    wirtinger,
)

__version__ = "0.1.0"

__all__ = [
    "AxisFrame",
    "BiaxialComponents",
    "BiaxialParams",
    "BivariateRadial",
    "Blade",
    "ComplexBivarPoly",
    "ComplexRational",
    "EngineError",
    "FischerLayer",
    "Multivector",
    "ParseError",
    "PreconditionError",
    "RadialExpr",
    "RadialTerm",
    "SCOPE_CR",
    "SCOPE_FIRST",
    "SCOPE_FULL",
    "SCOPE_SECOND",
    "SeedFunction",
    "ShapeError",
    "VerificationError",
    "apply_dx_xinv",
    "apply_map",
    "apply_xinv_dx",
    "blade_product",
    "blade_text",
    "build_seed",
    "canonicalize",
    "classical_closed_form",
    "conj_power",
    "constant_vector_x",
    "constant_vector_y",
    "delta2_power",
    "dirac",
    "double_factorial",
    "evaluate_numeric",
    "evaluate_terms",
    "expansion_coefficient",
    "expression_json_object",
    "extract_components",
    "fischer_decompose",
    "format_bivariate",
    "format_components",
    "format_expression",
    "format_multivector",
    "ft_closed_form",
    "ft_general_via_fischer",
    "ft_minus",
    "ft_mu",
    "ft_plus",
    "fueter_classical",
    "geometric_product",
    "holo_power",
    "homogeneity_degree",
    "inner_x",
    "inner_y",
    "is_monogenic",
    "laplace2",
    "laplacian",
    "laplacian_expansion",
    "laplacian_power",
    "lift_to_radial",
    "multinomial",
    "nu",
    "omega",
    "operator_term",
    "parity_monomial",
    "parity_split",
    "parse_bivariate",
    "parse_expression",
    "parse_seed",
    "parse_vector",
    "partial_derivative",
    "re_mul",
    "seed_order",
    "seed_times_monomial",
    "split_uv",
    "times_i",
    "vector_embed",
    "vector_x",
    "vector_y",
    "vekua_check",
    "wirtinger",
]
